# -*- coding: utf-8 -*-
# vim:set shiftwidth=4 softtabstop=4 expandtab textwidth=79:
"""
Path exploration by depth-first negation of recorded branch conditions.

Every explored path is run concretely.  A path is identified by its
branch-trace class, the sequence of ``(site, outcome)`` pairs it
recorded, and each class is produced exactly once.
"""

from typing import Any, Callable, Dict, Iterable, List, Optional, Sequence
from typing import Tuple

import logging

import ospfmbt.symbolic

from ospfmbt.symbolic.expr import SymExpr, SymVar, Assignment, not_
from ospfmbt.symbolic.values import ConcolicInputs, PathConstraint, tracing
from ospfmbt.symbolic.solver import solve, enumerate_assignments

logger = logging.getLogger(__name__)

TraceClass = Tuple[Tuple[str, int], ...]
Program = Callable[[ConcolicInputs], Any]

class ExploredPath:
    """
    One concrete run of a program.

    Attributes:
        assignment (:obj:`dict`): The input values
        result: Whatever the program returned
        path (:obj:`.PathConstraint`): The conditions recorded
    """
    def __init__(self, assignment: Assignment, result: Any,
                 path: PathConstraint) -> None:
        self.assignment = assignment
        self.result = result
        self.path = path

    @property
    def trace_class(self) -> TraceClass:
        return self.path.trace_class()

    @property
    def conjuncts(self) -> List[SymExpr]:
        return self.path.conjuncts

    def __len__(self) -> int:
        return len(self.path)

def concolic_run(program: Program, assignment: Assignment) -> ExploredPath:
    """
    Run a program once with recording enabled.

    Args:
        program: A callable taking :obj:`.ConcolicInputs`
        assignment: A value for every variable the program reads

    Returns:
        :obj:`ExploredPath`: The run
    """
    with tracing() as tracer:
        result = program(ConcolicInputs(assignment))
    return ExploredPath(assignment, result, tracer.path)

def explore(program: Program, variables: Sequence[SymVar],
            axioms: Iterable[SymExpr] = (),
            max_paths: Optional[int] = None,
            on_path: Optional[Callable[[ExploredPath], None]] = None) \
        -> List[ExploredPath]:
    """
    Enumerate the feasible paths of a program.

    The first run uses the smallest assignment satisfying ``axioms``.
    After that, the last undecided position of the current path is
    negated first: the solver is asked for an input that agrees with the
    path up to that position and differs from every outcome already seen
    there.

    Args:
        program: The program to explore
        variables: Every variable the program reads
        axioms: Constraints every input must satisfy
        max_paths: The most paths to accept
        on_path: Called with each path as it is found

    Returns:
        :obj:`list` of :obj:`ExploredPath`: The paths in discovery order

    Raises:
        :obj:`.ImprecisePathError`: An input diverged from its target
            path.
        :obj:`.ExplorationLimitError`: The program has more than
            ``max_paths`` paths.  The error carries the first
            ``max_paths`` of them.
    """
    axioms = list(axioms)
    start = solve(axioms, variables)
    if start is None:
        logger.info("axioms are unsatisfiable; nothing to explore")
        return []

    paths: List[ExploredPath] = list()
    classes: Dict[TraceClass, ExploredPath] = dict()
    siblings: Dict[TraceClass, List[SymExpr]] = dict()

    def accept(found: ExploredPath, first_new: int) -> None:
        tc = found.trace_class
        if tc in classes:
            raise ospfmbt.symbolic.ImprecisePathError(
                first_new, classes[tc].trace_class, tc)
        if max_paths is not None and len(paths) >= max_paths:
            raise ospfmbt.symbolic.ExplorationLimitError(max_paths, paths)
        classes[tc] = found
        for j in range(first_new, len(found)):
            siblings.setdefault(tc[:j], []).append(found.conjuncts[j])
        paths.append(found)
        if on_path is not None:
            on_path(found)
        if len(paths) % 1000 == 0:
            logger.debug("%d paths so far", len(paths))

    first = concolic_run(program, start)
    accept(first, 0)

    # (path, position to negate next, lowest position owned by this path)
    stack: List[Tuple[ExploredPath, int, int]] = [(first, len(first) - 1, 0)]
    while stack:
        (path, position, bound) = stack.pop()
        if position < bound:
            continue
        node = path.trace_class[:position]
        query = axioms + path.conjuncts[:position]
        query += [not_(c) for c in siblings[node]]
        solution = solve(query, variables)
        if solution is None:
            stack.append((path, position - 1, bound))
            continue

        found = concolic_run(program, solution)
        if found.trace_class[:position] != node or len(found) <= position:
            raise ospfmbt.symbolic.ImprecisePathError(
                position, path.trace_class, found.trace_class)
        accept(found, position)
        stack.append((path, position, bound))
        stack.append((found, len(found) - 1, position + 1))

    logger.info("explored %d paths", len(paths))
    return paths

def exhaustive_paths(program: Program, variables: Sequence[SymVar],
                     axioms: Iterable[SymExpr] = ()) \
        -> Dict[TraceClass, ExploredPath]:
    """
    Run a program on every input satisfying the axioms and group the
    runs by branch-trace class.  Only feasible for small domains; used
    to check :func:`explore` for completeness.

    Args:
        program: The program to run
        variables: Every variable the program reads
        axioms: Constraints every input must satisfy

    Returns:
        :obj:`dict`: The first run of each class, keyed by class
    """
    result: Dict[TraceClass, ExploredPath] = dict()
    for assignment in enumerate_assignments(variables, axioms):
        run = concolic_run(program, assignment)
        result.setdefault(run.trace_class, run)
    return result
