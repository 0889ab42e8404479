# -*- coding: utf-8 -*-
# vim:set shiftwidth=4 softtabstop=4 expandtab textwidth=79:
"""
Verdicts on disk and the human-readable report.

A report directory holds ``verdicts/<id>.json`` for every test run,
written as soon as the verdict is known so that an interrupted run can
be resumed, plus ``summary.json`` and ``report.txt`` once the run is
over.
"""

from typing import Any, Dict, Iterable, List

from itertools import zip_longest

import os

from ospfmbt.exceptions import CorruptedFileError
from ospfmbt.sut.runner import Outcome, Verdict
from ospfmbt.testgen.testfile import FORMAT_VERSION, dump_json, load_json

VERDICT_FORMAT = "ospf-mbt-verdict"
SUMMARY_FORMAT = "ospf-mbt-summary"
VERDICT_DIR = "verdicts"
SUMMARY_NAME = "summary.json"
REPORT_NAME = "report.txt"

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_INCONCLUSIVE = 2
EXIT_ERROR = 3

_COLUMN = 58

def write_verdict(directory: str, verdict: Verdict) -> None:
    path = os.path.join(directory, VERDICT_DIR)
    os.makedirs(path, exist_ok=True)
    data = {'format': VERDICT_FORMAT, 'version': FORMAT_VERSION}
    data.update(verdict.to_dict())
    dump_json(os.path.join(path, f"{verdict.test_id}.json"), data)

def read_verdicts(directory: str) -> Dict[str, Verdict]:
    """
    Read every verdict written to a report directory.

    Returns:
        :obj:`dict`: Test id to :obj:`.Verdict`; empty when nothing was
        written yet
    """
    path = os.path.join(directory, VERDICT_DIR)
    if not os.path.isdir(path):
        return dict()
    verdicts = dict()
    for name in sorted(os.listdir(path)):
        if not name.endswith(".json"):
            continue
        filename = os.path.join(path, name)
        data = load_json(filename, VERDICT_FORMAT)
        try:
            verdict = Verdict.from_dict(data)
        except (KeyError, ValueError, TypeError) as e:
            raise CorruptedFileError(filename,
                                     f"{type(e).__name__}: {e}") from e
        verdicts[verdict.test_id] = verdict
    return verdicts

def counts(verdicts: Iterable[Verdict]) -> Dict[Outcome, int]:
    result = {outcome: 0 for outcome in Outcome}
    for verdict in verdicts:
        result[verdict.outcome] += 1
    return result

def exit_status(verdicts: Iterable[Verdict]) -> int:
    """0 when every test passed, 1 on any Fail, else 2 on any
    Inconclusive"""
    total = counts(verdicts)
    if total[Outcome.FAIL]:
        return EXIT_FAIL
    if total[Outcome.INCONCLUSIVE]:
        return EXIT_INCONCLUSIVE
    return EXIT_PASS

def side_by_side(left: List[str], right: List[str]) -> List[str]:
    """Two traces in columns, rows that differ marked with ``|``"""
    lines = [f"{'model':<{_COLUMN}}   system under test"]
    for (a, b) in zip_longest(left, right, fillvalue=""):
        mark = " " if a == b else "|"
        lines.append(f"{a:<{_COLUMN}} {mark} {b}")
    return lines

def render_report(verdicts: List[Verdict], title: str = "") -> str:
    """
    Render a report: the totals, then every Fail and Inconclusive with
    its differences, and the traces of every Fail side by side.
    """
    total = counts(verdicts)
    lines: List[str] = list()
    if title:
        lines += [title, ""]
    lines.append(f"{len(verdicts)} tests: " +
                 ", ".join(f"{total[o]} {o.value}" for o in Outcome))
    for verdict in verdicts:
        if verdict.outcome == Outcome.PASS and not verdict.route_diffs:
            continue
        lines += ["", f"{verdict.test_id}: {verdict.outcome.value.upper()}"]
        if verdict.reason:
            lines.append(f"  {verdict.reason}")
        lines += [f"  {diff.describe()}" for diff in verdict.diffs]
        if verdict.route_diffs:
            lines.append("  routing (advisory):")
            lines += [f"    {diff.describe()}"
                      for diff in verdict.route_diffs]
        if verdict.outcome == Outcome.FAIL:
            lines += ["  " + line for line in
                      side_by_side(verdict.model_trace, verdict.sut_trace)]
    return "\n".join(lines) + "\n"

def summary(verdicts: List[Verdict], adapter: str) -> Dict[str, Any]:
    total = counts(verdicts)
    return {
        'format': SUMMARY_FORMAT,
        'version': FORMAT_VERSION,
        'adapter': adapter,
        'counts': {o.value: total[o] for o in Outcome},
        'failed': [v.test_id for v in verdicts
                   if v.outcome == Outcome.FAIL],
        'inconclusive': [v.test_id for v in verdicts
                         if v.outcome == Outcome.INCONCLUSIVE],
    }

def write_report(directory: str, verdicts: List[Verdict],
                 adapter: str) -> str:
    """
    Write ``summary.json`` and ``report.txt``.

    Returns:
        :obj:`str`: The text of the report
    """
    os.makedirs(directory, exist_ok=True)
    dump_json(os.path.join(directory, SUMMARY_NAME),
              summary(verdicts, adapter))
    text = render_report(verdicts, f"adapter: {adapter}")
    with open(os.path.join(directory, REPORT_NAME), "w") as f:
        f.write(text)
    return text
