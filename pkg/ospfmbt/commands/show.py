# -*- coding: utf-8 -*-
# vim:set shiftwidth=4 softtabstop=4 expandtab textwidth=79:
"""
SUMMARY
-------

Pretty-print a test, verdict, manifest, summary or topology

::

  show PATH

DESCRIPTION
-----------

This command prints the file at PATH in readable form.  JSON files are
recognized by their ``format`` field: a test shows its topology, the
messages it sends and the LSDBs it expects; a verdict shows its outcome,
differences and traces; a manifest or summary shows its counts.  A suite
or report directory shows its manifest or summary.  Any other file is
read as a topology file.

EXAMPLES
--------

::

  ospfmbt show suites/five-d1/t0003.json
  ospfmbt show reports/d3/verdicts/t0003.json
  ospfmbt show suites/five-d1
"""

from typing import Any, Callable, Dict, List

import argparse
import json
import os

from ospfmbt.commands import Command, CommandError, ArgumentParser
from ospfmbt.exceptions import CorruptedFileError
from ospfmbt.sut.report import VERDICT_FORMAT, SUMMARY_FORMAT, SUMMARY_NAME
from ospfmbt.sut.report import side_by_side
from ospfmbt.sut.runner import Verdict
from ospfmbt.testgen.testfile import TEST_FORMAT, MANIFEST_FORMAT
from ospfmbt.testgen.testfile import MANIFEST_NAME, Manifest, TestFile
from ospfmbt.testgen.testfile import StateRecord, check_header
from ospfmbt.topology.concrete import format_topology, parse_topology

def _state_lines(state: StateRecord) -> List[str]:
    lines = list()
    for router in sorted(state):
        lines.append(f"  R{router}:")
        lines += [f"    {lsa.describe()}" for lsa in state[router]]
    return lines

def show_test(test: TestFile) -> List[str]:
    lines = [f"test {test.id}, depth {test.depth}"]
    if test.seed:
        lines.append(f"seed: {test.seed}")
    lines += ["topology:"]
    lines += ["  " + l for l in format_topology(test.topology).splitlines()]
    lines.append("initial sequence numbers: " +
                 " ".join(f"R{r}={v}"
                          for r, v in sorted(test.initial_seqs.items())))
    if test.setup_msgs:
        lines.append("setup:")
        lines += [f"  M{i} {m.describe()}"
                  for i, m in enumerate(test.setup_msgs)]
    if test.start_state is not None:
        lines.append("start state:")
        lines += _state_lines(test.start_state)
    offset = len(test.setup_msgs)
    lines.append("probes:")
    lines += [f"  M{offset + i} {m.describe()}"
              for i, m in enumerate(test.probe_msgs)]
    if test.path_constraint:
        lines.append("path constraint:")
        lines += [f"  {c}" for c in test.path_constraint]
    lines.append("expected trace:")
    lines += [f"  {m.describe()}" for m in test.expected_trace]
    lines.append("expected final state:")
    lines += _state_lines(test.expected_final)
    return lines

def show_verdict(verdict: Verdict) -> List[str]:
    lines = [f"{verdict.test_id}: {verdict.outcome.value}"]
    if verdict.reason:
        lines.append(f"  {verdict.reason}")
    lines += [f"  {diff.describe()}" for diff in verdict.diffs]
    if verdict.route_diffs:
        lines.append("routing (advisory):")
        lines += [f"  {diff.describe()}" for diff in verdict.route_diffs]
    if verdict.model_trace or verdict.sut_trace:
        lines += side_by_side(verdict.model_trace, verdict.sut_trace)
    return lines

def show_manifest(manifest: Manifest) -> List[str]:
    lines = [f"{len(manifest.tests)} tests, {manifest.unique_states} "
             f"unique final states, generated in {manifest.wall_time:.1f}s",
             f"configuration {manifest.config_hash[:12]}:"]
    lines += [f"  {key}: {value}"
              for key, value in sorted(manifest.config.items())]
    if manifest.iterations:
        lines.append("states explored per iteration: " +
                     " ".join(str(i) for i in manifest.iterations))
    return lines

def show_summary(data: Dict[str, Any]) -> List[str]:
    lines = [f"adapter: {data['adapter']}",
             ", ".join(f"{n} {o}" for o, n in data['counts'].items())]
    for key in ('failed', 'inconclusive'):
        if data[key]:
            lines.append(f"{key}: " + " ".join(data[key]))
    return lines

_RENDERERS: Dict[str, Callable[[Dict[str, Any]], List[str]]] = {
    TEST_FORMAT: lambda d: show_test(TestFile.from_dict(d)),
    VERDICT_FORMAT: lambda d: show_verdict(Verdict.from_dict(d)),
    MANIFEST_FORMAT: lambda d: show_manifest(Manifest.from_dict(d)),
    SUMMARY_FORMAT: show_summary,
}

def show_file(path: str) -> List[str]:
    """
    Render a file written by the tool, or a topology file.

    Raises:
        :obj:`.CorruptedFileError`: The file is neither.
    """
    with open(path) as f:
        text = f.read()
    try:
        data = json.loads(text)
    except json.JSONDecodeError:
        return format_topology(parse_topology(text)).splitlines()
    fmt = data.get('format') if isinstance(data, dict) else None
    if fmt not in _RENDERERS:
        raise CorruptedFileError(path, f"unknown format `{fmt}'")
    check_header(path, data, fmt)
    try:
        return _RENDERERS[fmt](data)
    except (KeyError, ValueError, TypeError) as e:
        raise CorruptedFileError(path, f"{type(e).__name__}: {e}") from e

class ShowCommand(Command):
    """pretty-print a file written by ospfmbt"""

    def __init__(self) -> None:
        parser = ArgumentParser(prog="show")
        parser.add_argument('path')
        super().__init__('show', parser)

    def execute(self, args: argparse.Namespace) -> int:
        path = args.path
        if os.path.isdir(path):
            for name in (MANIFEST_NAME, SUMMARY_NAME):
                if os.path.exists(os.path.join(path, name)):
                    path = os.path.join(path, name)
                    break
            else:
                raise CommandError(f"{path} holds neither a manifest nor "
                                   "a summary")
        print("\n".join(show_file(path)))
        return 0

ShowCommand()
