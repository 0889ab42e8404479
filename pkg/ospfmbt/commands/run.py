# -*- coding: utf-8 -*-
# vim:set shiftwidth=4 softtabstop=4 expandtab textwidth=79:
"""
SUMMARY
-------

Run a test suite against a system under test

::

  run SUITE [--adapter SPEC] [--adapter-seed N] [--timeout SECONDS]
      [--normalization top|minimal] [--resume] -o REPORT_DIR

DESCRIPTION
-----------

This command runs every test of SUITE and writes a verdict per test to
REPORT_DIR as soon as it is known, then ``summary.json`` and
``report.txt``.  The report is also printed.

A test passes when every router's LSDB matches the model's.  It fails
when any LSA is missing, extra, or differs in sequence number, age or
links; the report lists the differences and shows the model's and the
system's messages side by side.  It is inconclusive when the routers
could not be brought into the test's start state or did not settle.
Routing tables are compared too, but only reported.

SPEC selects the system under test:

``in-process[:MUTANT]``
    The model itself over the full sequence-number range, optionally
    with deviations enabled, e.g. ``in-process:D3`` or
    ``in-process:D2+D5@R1``.  ``--adapter-seed`` picks its arbitrary
    initial sequence numbers.

``external:NAME[:OPTIONS]``
    A registered adapter for real routers.

``--normalization minimal`` moves sequence numbers as little as possible
instead of up to MaxSeqNum; tests that reach MaxSeqNum are not
meaningful then.

``--resume`` keeps the verdicts already in REPORT_DIR and runs only the
remaining tests.

The exit status is 0 when every test passed, 1 when any failed, 2 when
none failed but some were inconclusive, and 3 on errors.

EXAMPLES
--------

::

  ospfmbt run suites/five-d1 -o reports/pristine
  ospfmbt run suites/five-d1 --adapter in-process:D3 -o reports/d3
"""

import argparse
import os
import shutil

from ospfmbt.commands import Command, ArgumentParser
from ospfmbt.config import RunConfig
from ospfmbt.sut.adapter import get_adapter
from ospfmbt.sut.normalize import MODES
from ospfmbt.sut.report import VERDICT_DIR, write_verdict, read_verdicts
from ospfmbt.sut.report import write_report, exit_status
from ospfmbt.sut.runner import run_suite
from ospfmbt.testgen.testfile import read_suite

def add_run_options(parser: ArgumentParser) -> None:
    defaults = RunConfig()
    parser.add_argument('--adapter-seed', type=int,
                        default=defaults.adapter_seed)
    parser.add_argument('--timeout', type=float,
                        default=defaults.stability_timeout)
    parser.add_argument('--normalization', choices=MODES,
                        default=defaults.normalization)

class RunCommand(Command):
    """run a suite against a system under test"""

    def __init__(self) -> None:
        parser = ArgumentParser(prog="run")
        parser.add_argument('suite')
        parser.add_argument('--adapter', default=RunConfig().adapter)
        add_run_options(parser)
        parser.add_argument('--resume', action='store_true')
        parser.add_argument('-o', '--output', required=True)
        super().__init__('run', parser)

    def execute(self, args: argparse.Namespace) -> int:
        (_, tests) = read_suite(args.suite)
        adapter = get_adapter(args.adapter, args.adapter_seed)
        done = dict()
        if args.resume:
            done = read_verdicts(args.output)
        else:
            shutil.rmtree(os.path.join(args.output, VERDICT_DIR),
                          ignore_errors=True)

        try:
            fresh = run_suite(adapter, tests, args.normalization,
                              args.timeout, skip=done,
                              on_verdict=lambda v: write_verdict(args.output,
                                                                 v))
        finally:
            adapter.close()
        for verdict in fresh:
            done[verdict.test_id] = verdict
        verdicts = [done[test.id] for test in tests if test.id in done]
        print(write_report(args.output, verdicts, adapter.describe()),
              end="")
        return exit_status(verdicts)

RunCommand()
