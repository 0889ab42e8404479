# -*- coding: utf-8 -*-
# vim:set shiftwidth=4 softtabstop=4 expandtab textwidth=79:

from typing import List

import logging
import sys

from ospfmbt.infra import autoload_submodules
from ospfmbt.commands import Command, CommandError, EXIT_ERROR

LOG_FORMAT = "%(levelname)s %(name)s: %(message)s"

class Session:
    """
    ospfmbt.Session drives one invocation of the tool.

    The Session sets up logging and loads every command module, which
    registers the commands.

    Args:
        verbose (optional, default=False): Log progress
        debug (optional, default=False): Log everything, including every
            message the model processes
    """
    def __init__(self, verbose: bool = False, debug: bool = False) -> None:
        level = logging.WARNING
        if verbose:
            level = logging.INFO
        if debug:
            level = logging.DEBUG
        logging.basicConfig(level=level, format=LOG_FORMAT,
                            stream=sys.stderr)
        logging.getLogger().setLevel(level)
        self.commands = autoload_submodules('ospfmbt.commands')

    def run(self, name: str, argv: List[str]) -> int:
        """
        Run a command.

        Returns:
            :obj:`int`: The command's exit status
        """
        try:
            command = Command.lookup(name)
        except CommandError as e:
            print(f"ospfmbt: {str(e)}; try `ospfmbt help'", file=sys.stderr)
            return EXIT_ERROR
        return command.invoke(argv)
