# -*- coding: utf-8 -*-
# vim:set shiftwidth=4 softtabstop=4 expandtab textwidth=79:
"""
SUMMARY
-------

Generate a test suite from the model

::

  generate [-t TOPOLOGY | --symbolic N,M] [--depth K]
           [--mode naive|merge|prefix] [--prefix-len L] [--prefixes P]
           [--per-prefix T] [--seed S] [--seeds SEED ...] [--budget B]
           [--max-paths P] [--step-budget S] [--resend-rounds R] -o DIR
  generate --from-manifest FILE -o DIR

DESCRIPTION
-----------

This command explores the reference model with symbolic LSAs sent by
router 0 and writes one test per explored path to DIR, together with a
``manifest.json`` describing the run.

In ``merge`` mode (the default) tests are extended one message at a
time: the final states of one depth are merged and every state not seen
before is probed once more.  ``naive`` explores all DEPTH messages
together from the initial state.  ``prefix`` sends PREFIX-LEN random
messages and then explores one symbolic message; ``--seed`` fixes the
random choices.  Prefixes ending in a state already explored are
skipped, and at most PER-PREFIX tests come from one prefix state.

``--seeds`` adds catalogue start states to the first iteration of
``merge`` mode, e.g. ``maxseq-remnant:1``.  ``--budget`` keeps only the
first B tests.

The topology is either a built-in name (``line2``, ``line3``, ``lan2``,
``lan3``, ``diamond``, ``five``), a topology file, or with ``--symbolic``
every valid topology of N routers and M networks.

``--from-manifest`` repeats the generation recorded in a manifest; the
test files come out byte for byte identical.

If an exploration finds more than MAX-PATHS paths, the tests found so far
are written and the command exits with status 3.

EXAMPLES
--------

::

  ospfmbt generate -t five --depth 1 -o suites/five-d1
  ospfmbt generate -t line2 --depth 2 --seeds maxseq-remnant:1 -o d2
  ospfmbt generate --symbolic 2,1 -o sym21
"""

from typing import List, Optional, Tuple

import argparse
import logging
import time

from ospfmbt.commands import Command, CommandError, ArgumentParser
from ospfmbt.commands import EXIT_ERROR
from ospfmbt.config import RunConfig, MODES, NAIVE, MERGE
from ospfmbt.testgen import GenerationLimitError
from ospfmbt.testgen.generate import Generator, unique_states
from ospfmbt.testgen.testfile import Manifest, TestFile, load_json
from ospfmbt.testgen.testfile import write_suite, MANIFEST_FORMAT
from ospfmbt.topology.named import load_topology

logger = logging.getLogger(__name__)

def build_suite(config: RunConfig) -> Tuple[List[TestFile], Manifest,
                                            Optional[GenerationLimitError]]:
    """
    Generate the tests a configuration describes.

    Returns:
        (:obj:`list`, :obj:`.Manifest`, :obj:`.GenerationLimitError`):
        The tests, their manifest, and the error that cut generation
        short if one did
    """
    began = time.monotonic()
    if config.symbolic is not None:
        generator = Generator(symbolic=config.symbolic,
                              max_paths=config.max_paths,
                              step_budget=config.step_budget,
                              resend_rounds=config.resend_rounds)
    else:
        generator = Generator(load_topology(config.topology),
                              max_paths=config.max_paths,
                              step_budget=config.step_budget,
                              resend_rounds=config.resend_rounds)
    iterations: List[int] = list()
    error = None
    try:
        if config.mode == NAIVE:
            tests = generator.naive_exploration(config.depth)
        elif config.mode == MERGE:
            result = generator.systematic_extension(config.depth,
                                                    config.seeds)
            (tests, iterations) = (result.tests, result.iterations)
        else:
            tests = generator.arbitrary_prefix(config.prefix_len,
                                               config.seed, config.prefixes,
                                               config.budget,
                                               config.per_prefix)
    except GenerationLimitError as e:
        (tests, error) = (e.tests, e)
    if config.budget is not None:
        tests = tests[:config.budget]
    manifest = Manifest([], config.to_dict(), config.config_hash(),
                        unique_states(tests), iterations, config.seed,
                        time.monotonic() - began)
    return (tests, manifest, error)

def write_generated(directory: str, config: RunConfig) -> int:
    """Generate, write and summarize a suite; returns the exit status"""
    (tests, manifest, error) = build_suite(config)
    write_suite(directory, tests, manifest)
    print(f"{len(tests)} tests, {manifest.unique_states} unique final "
          f"states, written to {directory}")
    if manifest.iterations:
        print("states explored per iteration: " +
              " ".join(str(i) for i in manifest.iterations))
    if error is not None:
        print(f"generation stopped: {error}")
        return EXIT_ERROR
    return 0

def _symbolic(text: str) -> Tuple[int, int]:
    try:
        (n, m) = text.split(",")
        return (int(n), int(m))
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"`{text}' is not N,M") from None

def add_generation_options(parser: ArgumentParser) -> None:
    defaults = RunConfig()
    group = parser.add_mutually_exclusive_group()
    group.add_argument('-t', '--topology', default=defaults.topology)
    group.add_argument('--symbolic', type=_symbolic, metavar='N,M')
    parser.add_argument('--depth', type=int, default=defaults.depth)
    parser.add_argument('--mode', choices=MODES, default=defaults.mode)
    parser.add_argument('--prefix-len', type=int,
                        default=defaults.prefix_len)
    parser.add_argument('--prefixes', type=int, default=defaults.prefixes)
    parser.add_argument('--per-prefix', type=int,
                        default=defaults.per_prefix)
    parser.add_argument('--seed', type=int, default=defaults.seed)
    parser.add_argument('--seeds', nargs='+', default=[])
    parser.add_argument('--budget', type=int)
    parser.add_argument('--max-paths', type=int,
                        default=defaults.max_paths)
    parser.add_argument('--step-budget', type=int,
                        default=defaults.step_budget)
    parser.add_argument('--resend-rounds', type=int,
                        default=defaults.resend_rounds)

def config_from_args(args: argparse.Namespace) -> RunConfig:
    return RunConfig(topology=args.topology, symbolic=args.symbolic,
                     depth=args.depth, mode=args.mode,
                     prefix_len=args.prefix_len, prefixes=args.prefixes,
                     per_prefix=args.per_prefix,
                     seed=args.seed, seeds=list(args.seeds),
                     budget=args.budget, max_paths=args.max_paths,
                     step_budget=args.step_budget,
                     resend_rounds=args.resend_rounds).validate()

class GenerateCommand(Command):
    """generate a test suite"""

    def __init__(self) -> None:
        parser = ArgumentParser(prog="generate")
        add_generation_options(parser)
        parser.add_argument('--from-manifest', metavar='FILE')
        parser.add_argument('-o', '--output', required=True)
        super().__init__('generate', parser)

    def execute(self, args: argparse.Namespace) -> int:
        if args.from_manifest:
            data = load_json(args.from_manifest, MANIFEST_FORMAT)
            try:
                config = RunConfig.from_dict(data['config'])
            except KeyError:
                raise CommandError(f"{args.from_manifest} holds no "
                                   "configuration") from None
        else:
            config = config_from_args(args)
        logger.info("generating with configuration %s",
                    config.config_hash()[:12])
        return write_generated(args.output, config)

GenerateCommand()
