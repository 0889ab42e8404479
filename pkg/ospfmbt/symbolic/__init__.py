# -*- coding: utf-8 -*-
# vim:set shiftwidth=4 softtabstop=4 expandtab textwidth=79:
"""
The ospfmbt.symbolic package provides the concolic machinery the model
runs under: symbolic expressions, values that carry them, a solver for
bounded integer constraints, and depth-first path exploration.
"""


from typing import Any, List, Sequence, Tuple

class SymbolicError(RuntimeError):
    """Base class for errors of the concolic machinery"""

class UnboundVariableError(SymbolicError, KeyError):
    """An expression was evaluated without a value for every variable"""
    _fmt = "unassigned variables: {}"
    def __init__(self, names: Sequence[str]) -> None:
        super().__init__(self._fmt.format(", ".join(names)))
        self.names = list(names)

    def __str__(self) -> str:
        return self.args[0]

class ImprecisePathError(SymbolicError):
    """A solved input did not follow the path it was solved for"""
    _fmt = "input for position {} of {} diverged: {}"
    def __init__(self, position: int, expected: Tuple, found: Tuple) -> None:
        msg = self._fmt.format(position, list(expected[:position + 1]),
                               list(found[:position + 1]))
        super().__init__(msg)
        self.position = position

class ExplorationLimitError(SymbolicError):
    """Exploration found more paths than it was allowed to"""
    _fmt = "more than {} paths"
    def __init__(self, limit: int, paths: List[Any]) -> None:
        super().__init__(self._fmt.format(limit))
        self.limit = limit
        self.paths = paths

from ospfmbt.symbolic.expr import SymVar, SymExpr, VarRole, Assignment
from ospfmbt.symbolic.expr import Const, Var, TRUE, FALSE, affine
from ospfmbt.symbolic.expr import add, eq, lt, not_, and_, or_, ite
from ospfmbt.symbolic.values import SymInt, SymBool, PathConstraint
from ospfmbt.symbolic.values import Tracer, ConcolicInputs
from ospfmbt.symbolic.values import branch, pin, tracing, paused
from ospfmbt.symbolic.solver import solve, satisfies, enumerate_assignments
from ospfmbt.symbolic.explore import ExploredPath
from ospfmbt.symbolic.explore import concolic_run, explore, exhaustive_paths
