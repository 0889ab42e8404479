# -*- coding: utf-8 -*-
# vim:set shiftwidth=4 softtabstop=4 expandtab textwidth=79:
"""
SUMMARY
-------

Extend a suite to a greater depth

::

  extend SUITE --to-depth K -o DIR

DESCRIPTION
-----------

This command writes a suite holding the tests of SUITE and those of
further systematic-extension iterations, up to K messages per test.

Test files do not record how the model reached their final states, so
the generation is repeated from the configuration in SUITE's manifest
with the greater depth.  Generation is deterministic: the tests SUITE
already holds come out again unchanged, with the same ids.  Only suites
generated in ``merge`` mode can be extended.

EXAMPLES
--------

::

  ospfmbt extend suites/five-d1 --to-depth 2 -o suites/five-d2
"""

import argparse

from ospfmbt.commands import Command, CommandError, ArgumentParser
from ospfmbt.commands.generate import write_generated
from ospfmbt.config import RunConfig, MERGE
from ospfmbt.testgen.testfile import read_manifest

class ExtendCommand(Command):
    """extend a suite by more iterations"""

    def __init__(self) -> None:
        parser = ArgumentParser(prog="extend")
        parser.add_argument('suite')
        parser.add_argument('--to-depth', type=int, required=True)
        parser.add_argument('-o', '--output', required=True)
        super().__init__('extend', parser)

    def execute(self, args: argparse.Namespace) -> int:
        manifest = read_manifest(args.suite)
        config = RunConfig.from_dict(manifest.config)
        if config.mode != MERGE:
            raise CommandError(f"{args.suite} was generated in "
                               f"`{config.mode}' mode; only `{MERGE}' "
                               "suites can be extended")
        if args.to_depth <= config.depth:
            raise CommandError(f"{args.suite} already has depth "
                               f"{config.depth}")
        config.depth = args.to_depth
        return write_generated(args.output, config.validate())

ExtendCommand()
