# -*- coding: utf-8 -*-
# vim:set shiftwidth=4 softtabstop=4 expandtab textwidth=79:
"""
SUMMARY
-------

Find out which deviations a suite detects

::

  matrix SUITE [SUITE ...] [--mutants all | MUTANT ...] [--adapter-seed N]
         [--timeout SECONDS] [--normalization top|minimal] [-o FILE]

DESCRIPTION
-----------

This command runs the tests of every SUITE against the in-process system
under test, once with the reference behavior and once for every mutant,
and prints a table with the number of failing and inconclusive tests per
mutant and the first test that failed.  The same data is written to FILE
(``matrix.json`` by default).

A mutant is a list of deviation ids joined by ``+``, optionally limited
to some routers, e.g. ``D2+D5@R0,R1``.  ``all`` stands for every single
deviation:

  D1  no InitialSeqNum origination after a MaxSeqNum flush
  D2  MaxSeqNum flush carries the router's own links
  D3  LSDB keyed by type and LSID only
  D4  fight-back against an older LSA with LSID != AR
  D5  neighbor re-sends a false LSA after each fight-back
  D6  MaxAge fight-back loop for MaxSeqNum-1 with LSID != AR
  D7  re-flooding of an LSA unicast by the DR
  Q1  flooding before the self-origination check

The reference row should show no failures; the exit status is 1 if it
does, else 0.

EXAMPLES
--------

::

  ospfmbt matrix suites/five-d1 suites/five-d2
  ospfmbt matrix suites/five-d1 --mutants D3 D2+D7
"""

from typing import List

import argparse

from ospfmbt.commands import Command, ArgumentParser
from ospfmbt.commands.run import add_run_options
from ospfmbt.mutant.catalog import MutantConfig, deviation_catalog
from ospfmbt.mutant.catalog import parse_mutant_spec
from ospfmbt.mutant.matrix import detection_matrix, render_matrix
from ospfmbt.testgen.testfile import TestFile, FORMAT_VERSION, dump_json
from ospfmbt.testgen.testfile import read_suite

MATRIX_FORMAT = "ospf-mbt-matrix"

class MatrixCommand(Command):
    """run a suite against every mutant"""

    def __init__(self) -> None:
        parser = ArgumentParser(prog="matrix")
        parser.add_argument('suites', nargs='+')
        parser.add_argument('--mutants', nargs='+', default=['all'])
        add_run_options(parser)
        parser.add_argument('-o', '--output', default="matrix.json")
        super().__init__('matrix', parser)

    def execute(self, args: argparse.Namespace) -> int:
        tests: List[TestFile] = list()
        for suite in args.suites:
            tests += read_suite(suite)[1]
        configs: List[MutantConfig] = list()
        for spec in args.mutants:
            if spec.lower() == "all":
                configs += deviation_catalog()
            else:
                configs.append(parse_mutant_spec(spec))

        rows = detection_matrix(tests, configs, args.normalization,
                                args.adapter_seed, args.timeout)
        print(render_matrix(rows, len(tests)), end="")
        dump_json(args.output, {
            'format': MATRIX_FORMAT,
            'version': FORMAT_VERSION,
            'suites': list(args.suites),
            'tests': len(tests),
            'rows': [row.to_dict() for row in rows],
        })
        return 1 if rows[0].failed else 0

MatrixCommand()
