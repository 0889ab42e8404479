# -*- coding: utf-8 -*-
# vim:set shiftwidth=4 softtabstop=4 expandtab textwidth=79:
"""
SUMMARY
-------

Display help for ospfmbt commands

::

  help [command ...]

DESCRIPTION
-----------

This command displays help text for ospfmbt commands.  When used alone,
it provides a list of commands.  When an argument is specified, the help
text for that command will be printed.
"""

import argparse

from ospfmbt.commands import Command, ArgumentParser

class HelpCommand(Command):
    """this command"""

    def __init__(self) -> None:
        parser = ArgumentParser(prog="help")
        parser.add_argument('args', nargs=argparse.REMAINDER)
        super().__init__('help', parser)

    def execute(self, args: argparse.Namespace) -> int:
        if not args.args:
            print("Available commands:")
            for name in sorted(self._commands):
                print("{:<15} - {}".format(name,
                                           self._commands[name].summary()))
            return 0

        for name in args.args:
            print(self.lookup(name).format_help().strip())
        return 0

HelpCommand()
