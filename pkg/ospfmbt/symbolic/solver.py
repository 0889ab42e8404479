# -*- coding: utf-8 -*-
# vim:set shiftwidth=4 softtabstop=4 expandtab textwidth=79:
"""
A backtracking solver over bounded integer variables.

Solutions are deterministic: variables are assigned in id order and each
takes the lowest value that keeps every constraint satisfiable, so the
first solution found is the lexicographically smallest one.
Independent groups of variables are solved separately.
"""

from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

import itertools
import logging

from ospfmbt.symbolic.expr import SymExpr, SymVar, Assignment
from ospfmbt.symbolic.expr import And, Eq, affine

logger = logging.getLogger(__name__)

def _flatten(constraints: Iterable[SymExpr]) -> List[SymExpr]:
    result: List[SymExpr] = list()
    for c in constraints:
        if isinstance(c, And):
            result.extend(_flatten(c.terms))
        else:
            result.append(c)
    return result

def _components(variables: Iterable[SymVar],
                constraints: Sequence[SymExpr]) -> List[Tuple[List[SymVar],
                                                           List[SymExpr]]]:
    parent: Dict[SymVar, SymVar] = {v: v for v in variables}

    def find(v: SymVar) -> SymVar:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for c in constraints:
        cvars = sorted(c.variables())
        for v in cvars:
            parent.setdefault(v, v)
        for a, b in zip(cvars, cvars[1:]):
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)

    groups: Dict[SymVar, List[SymVar]] = dict()
    for v in sorted(parent):
        groups.setdefault(find(v), []).append(v)
    owned: Dict[SymVar, List[SymExpr]] = {root: [] for root in groups}
    for c in constraints:
        cvars = c.variables()
        if cvars:
            owned[find(min(cvars))].append(c)
    return [(groups[root], owned[root]) for root in sorted(groups)]

class _Component:
    def __init__(self, variables: List[SymVar],
                 constraints: List[SymExpr]) -> None:
        self.variables = variables
        position = {v: i for i, v in enumerate(variables)}
        self.checks: List[List[SymExpr]] = [[] for _ in variables]
        self.forcing: List[List[Tuple[SymExpr, int]]] = \
            [[] for _ in variables]

        for c in constraints:
            last = max(position[v] for v in c.variables())
            self.checks[last].append(c)
            if isinstance(c, Eq):
                self._add_forcing(c.left, c.right, position)
                self._add_forcing(c.right, c.left, position)

    def _add_forcing(self, side: SymExpr, other: SymExpr,
                     position: Dict[SymVar, int]) -> None:
        decomposed = affine(side)
        if decomposed is None:
            return
        var, offset = decomposed
        index = position[var]
        if all(position[v] < index for v in other.variables()):
            self.forcing[index].append((other, offset))

    def candidates(self, index: int, assignment: Assignment) -> Iterator[int]:
        var = self.variables[index]
        forced: Optional[int] = None
        for other, offset in self.forcing[index]:
            value = other.evaluate(assignment) - offset
            if forced is not None and forced != value:
                return
            forced = value
        if forced is not None:
            if var.lo <= forced <= var.hi:
                yield forced
            return
        yield from var.domain()

    def consistent(self, index: int, assignment: Assignment) -> bool:
        for c in self.checks[index]:
            if not c.evaluate(assignment):
                return False
        return True

    def solve(self, assignment: Assignment) -> bool:
        return self._solve(0, assignment)

    def _solve(self, index: int, assignment: Assignment) -> bool:
        if index == len(self.variables):
            return True
        var = self.variables[index]
        for value in self.candidates(index, assignment):
            assignment[var] = value
            if self.consistent(index, assignment) and \
               self._solve(index + 1, assignment):
                return True
        assignment.pop(var, None)
        return False

def solve(constraints: Iterable[SymExpr],
          variables: Iterable[SymVar] = ()) -> Optional[Assignment]:
    """
    Find the smallest assignment satisfying every constraint.

    Args:
        constraints: Boolean expressions that must all evaluate to 1
        variables: Variables to include in the assignment even if no
            constraint mentions them.  They take their lowest value.

    Returns:
        :obj:`dict`: A mapping from every variable to its value, or
        :obj:`None` if the constraints are unsatisfiable
    """
    flat = _flatten(constraints)
    for c in flat:
        if not c.variables() and not c.evaluate({}):
            return None

    assignment: Assignment = dict()
    for group, owned in _components(variables, flat):
        if not owned:
            for v in group:
                assignment[v] = v.lo
            continue
        partial: Assignment = dict()
        if not _Component(group, owned).solve(partial):
            logger.debug("unsatisfiable group: %s",
                         ", ".join(v.name for v in group))
            return None
        assignment.update(partial)
    return assignment

def satisfies(assignment: Assignment, constraints: Iterable[SymExpr]) -> bool:
    return all(c.evaluate(assignment) for c in constraints)

def enumerate_assignments(variables: Sequence[SymVar],
                          constraints: Iterable[SymExpr] = ()) \
        -> Iterator[Assignment]:
    """
    Enumerate every assignment over the variables' domains, in
    lexicographic id order, that satisfies the constraints.

    Args:
        variables: The variables to enumerate
        constraints: Constraints the assignments must satisfy

    Yields:
        :obj:`dict`: Each satisfying assignment
    """
    ordered = sorted(variables)
    flat = _flatten(constraints)
    for values in itertools.product(*(v.domain() for v in ordered)):
        assignment = dict(zip(ordered, values))
        if satisfies(assignment, flat):
            yield assignment
