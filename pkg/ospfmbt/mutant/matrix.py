# -*- coding: utf-8 -*-
# vim:set shiftwidth=4 softtabstop=4 expandtab textwidth=79:
"""
Which tests detect which deviation.

Every configuration runs the whole suite on the in-process system under
test.  The reference configuration comes first; any Fail in its row
means the suite and the model disagree, not that a deviation was found.
"""

from typing import Any, Dict, List, NamedTuple, Optional, Sequence

import logging

from ospfmbt.mutant.catalog import MutantConfig, PRISTINE
from ospfmbt.mutant.catalog import format_mutant_spec
from ospfmbt.sut.inprocess import InProcessAdapter
from ospfmbt.sut.normalize import TOP
from ospfmbt.sut.runner import Outcome, Verdict, run_suite
from ospfmbt.testgen.testfile import TestFile

logger = logging.getLogger(__name__)

class MatrixRow(NamedTuple):
    config: MutantConfig
    failed: List[str]
    inconclusive: List[str]

    @property
    def detected(self) -> bool:
        return bool(self.failed)

    @property
    def first_failure(self) -> Optional[str]:
        return self.failed[0] if self.failed else None

    def to_dict(self) -> Dict[str, Any]:
        return {'mutant': format_mutant_spec(self.config),
                'failed': list(self.failed),
                'inconclusive': list(self.inconclusive)}

def run_row(config: MutantConfig, tests: Sequence[TestFile],
            mode: str = TOP, seed: int = 0,
            timeout: float = 10.0) -> MatrixRow:
    adapter = InProcessAdapter(format_mutant_spec(config), seed)
    verdicts: List[Verdict] = run_suite(adapter, tests, mode, timeout)
    row = MatrixRow(config,
                    [v.test_id for v in verdicts
                     if v.outcome == Outcome.FAIL],
                    [v.test_id for v in verdicts
                     if v.outcome == Outcome.INCONCLUSIVE])
    logger.info("%s: %d of %d tests fail", format_mutant_spec(config),
                len(row.failed), len(tests))
    return row

def detection_matrix(tests: Sequence[TestFile],
                     configs: Sequence[MutantConfig], mode: str = TOP,
                     seed: int = 0, timeout: float = 10.0
                     ) -> List[MatrixRow]:
    """
    Run a suite against the reference and every configuration.

    Args:
        tests: The suite
        configs: The mutants; the reference is added in front
        mode: The normalization mode
        seed: The in-process adapter seed
        timeout: Passed to the runner

    Returns:
        :obj:`list` of :obj:`MatrixRow`: The reference row, then one row
        per configuration in the order given
    """
    rows = [run_row(PRISTINE, tests, mode, seed, timeout)]
    rows += [run_row(config, tests, mode, seed, timeout)
             for config in configs if not config.pristine]
    return rows

def render_matrix(rows: Sequence[MatrixRow], total: int) -> str:
    """The matrix as a text table, one row per configuration"""
    header = ("mutant", "fail", "inconcl.", "detected", "first failing test")
    table = [header]
    for row in rows:
        table.append((format_mutant_spec(row.config), str(len(row.failed)),
                      str(len(row.inconclusive)),
                      "yes" if row.detected else "no",
                      row.first_failure or "-"))
    widths = [max(len(line[i]) for line in table)
              for i in range(len(header))]
    lines = [f"{total} tests"]
    for line in table:
        lines.append("  ".join(cell.ljust(width)
                               for cell, width in zip(line, widths)).rstrip())
    return "\n".join(lines) + "\n"
