# -*- coding: utf-8 -*-
# vim:set shiftwidth=4 softtabstop=4 expandtab textwidth=79:
"""
The ospfmbt.commands package holds the subcommands of ``ospfmbt``.

A command is a class derived from :class:`.Command` that implements
:meth:`.Command.execute` and is instantiated once at the bottom of its
module; instantiating it registers it.  Its arguments are parsed by an
:class:`.ArgumentParser`.  The module docstring, in reStructuredText, is
the command's help text and is also rendered into the user guide.

Example:

::

    \"\"\"
    SUMMARY
    -------

    Print hello world
    \"\"\"

    import argparse

    from ospfmbt.commands import Command, ArgumentParser

    class HelloWorld(Command):
        \"\"\"print hello world\"\"\"
        def __init__(self) -> None:
            super().__init__('helloworld', ArgumentParser(prog='helloworld'))

        def execute(self, args: argparse.Namespace) -> int:
            print("hello world")
            return 0

    HelloWorld()
"""

from typing import Any, Dict, List, Optional

import argparse
import os
import sys

from ospfmbt.exceptions import ArgumentTypeError, OspfMbtError
from ospfmbt.model import ModelError
from ospfmbt.mutant import MutantSpecError, UnknownDeviationError
from ospfmbt.sut import AdapterError
from ospfmbt.symbolic import SymbolicError
from ospfmbt.testgen import GenerationError
from ospfmbt.topology import TopologyError
from ospfmbt.wire import WireError

EXIT_OK = 0
EXIT_ERROR = 3

# Errors that describe a problem with the input or the environment rather
# than a bug in the tool
TOOL_ERRORS = (OspfMbtError, ModelError, MutantSpecError,
               UnknownDeviationError, AdapterError, SymbolicError,
               GenerationError, TopologyError, WireError, OSError)

class CommandError(RuntimeError):
    """An error occured while executing this command"""

class CommandLineError(RuntimeError):
    """An error occured while handling the command line for this command"""

class ArgumentParser(argparse.ArgumentParser):
    """
    A simple extension to :class:`argparse.ArgumentParser` that:

    - Requires a command name be set
    - Loads help text from the generated documentation when available
    - Handles errors by raising :obj:`.CommandLineError`
    """
    def __init__(self, *args: Any, **kwargs: Any) -> None:
        super().__init__(*args, **kwargs)

        if not self.prog:
            raise CommandError("Cannot build command with no name")

    def error(self, message: str) -> Any:
        raise CommandLineError(message)

    def format_help(self) -> str:
        """
        The help text in ``$OSPFMBT_HELP/commands/<prog>.txt`` if that
        exists, else the generic argparse help
        """
        try:
            path = os.path.join(os.environ['OSPFMBT_HELP'], 'commands',
                                f"{self.prog}.txt")
            with open(path) as f:
                return f.read()
        except (KeyError, FileNotFoundError):
            return super().format_help()

class Command:
    """
    The starting point for implementing a command.

    Args:
        name: The name the command is invoked by
        parser: The parser for its arguments; one accepting nothing is
            used when not given

    Raises:
        ArgumentTypeError: The parser is not derived from
            :class:`.ArgumentParser`.
    """
    _commands: Dict[str, 'Command'] = dict()

    def __init__(self, name: str,
                 parser: Optional[ArgumentParser] = None) -> None:
        self.name = name
        if parser is None:
            parser = ArgumentParser(prog=self.name)
        elif not isinstance(parser, ArgumentParser):
            raise ArgumentTypeError('parser', parser, ArgumentParser)

        self._parser = parser
        self._commands[self.name] = self

    @classmethod
    def lookup(cls, name: str) -> 'Command':
        try:
            return cls._commands[name]
        except KeyError:
            raise CommandError(f"No such command `{name}'") from None

    def summary(self) -> str:
        doc = self.__doc__.strip() if self.__doc__ else ""
        return doc or "no help text provided"

    def format_help(self) -> str:
        """
        The module docstring followed by the usage line, or the parser's
        help when the module has no docstring
        """
        doc = sys.modules[type(self).__module__].__doc__
        if doc:
            return doc.strip() + "\n\n" + self._parser.format_usage()
        return self._parser.format_help()

    def invoke_uncaught(self, argv: List[str]) -> int:
        """
        Parse ``argv`` and run the command without translating errors.
        Used by the tests.
        """
        args = self._parser.parse_args(argv)
        return self.execute(args)

    def invoke(self, argv: List[str]) -> int:
        """
        Run the command, printing errors as ``<command>: <message>``.

        Returns:
            :obj:`int`: The exit status; 3 when the command failed
        """
        try:
            return self.invoke_uncaught(argv)
        except CommandError as e:
            print(f"{self.name}: {str(e)}", file=sys.stderr)
        except CommandLineError as e:
            print(f"{self.name}: {str(e)}", file=sys.stderr)
            self._parser.print_usage(sys.stderr)
        except TOOL_ERRORS as e:
            print(f"{self.name}: {str(e)}", file=sys.stderr)
        except KeyboardInterrupt:
            print(f"{self.name}: interrupted", file=sys.stderr)
        except SystemExit as e:
            # argparse exits after printing --help
            return e.code if isinstance(e.code, int) else EXIT_OK
        return EXIT_ERROR

    def execute(self, args: argparse.Namespace) -> int:
        """
        Implement the command.

        Args:
            args: The arguments, already parsed by the command's parser

        Returns:
            :obj:`int`: The exit status
        """
        raise NotImplementedError("Command should not be called directly")
