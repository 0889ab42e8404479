# -*- coding: utf-8 -*-
# vim:set shiftwidth=4 softtabstop=4 expandtab textwidth=79:
"""
Concolic values: a concrete value paired with the symbolic expression it
was computed from.

Model code never compares concolic values with Python operators.  It
builds a :class:`SymBool` with :meth:`SymInt.lt` and friends and hands it
to :func:`branch`, which returns the concrete outcome and, while a
:class:`Tracer` is active, records the condition that held.
"""

from typing import Any, Dict, Iterator, List, Optional, Tuple, Union

import contextlib
import contextvars

from ospfmbt.symbolic.expr import SymExpr, SymVar, Const, Var, Assignment
from ospfmbt.symbolic.expr import add, eq, lt, not_, and_, or_, affine

IntLike = Union['SymInt', int]

class SymBool:
    __slots__ = ('value', 'expr')

    def __init__(self, value: bool, expr: Optional[SymExpr] = None) -> None:
        self.value = bool(value)
        if expr is not None and isinstance(expr, Const):
            expr = None
        self.expr = expr

    @property
    def symbolic(self) -> bool:
        return self.expr is not None

    def condition(self) -> SymExpr:
        """The expression that holds given the concrete outcome"""
        if self.expr is None:
            return Const(int(self.value))
        return self.expr if self.value else not_(self.expr)

    def __invert__(self) -> 'SymBool':
        expr = not_(self.expr) if self.expr is not None else None
        return SymBool(not self.value, expr)

    def __and__(self, other: 'SymBool') -> 'SymBool':
        return SymBool(self.value and other.value,
                       _combine(and_, self, other))

    def __or__(self, other: 'SymBool') -> 'SymBool':
        return SymBool(self.value or other.value,
                       _combine(or_, self, other))

    def __bool__(self) -> bool:
        raise TypeError("concolic booleans must be decided with branch()")

    def __repr__(self) -> str:
        return f"SymBool({self.value}, {self.expr})"

def _combine(fn: Any, a: SymBool, b: SymBool) -> Optional[SymExpr]:
    if a.expr is None and b.expr is None:
        return None
    return fn([a.expr if a.expr is not None else Const(int(a.value)),
               b.expr if b.expr is not None else Const(int(b.value))])

class SymInt:
    """
    An integer with an optional symbolic shadow.

    Equality and hashing are structural: two values are equal when both
    the concrete value and the expression match.  Ordering is only
    available through the methods that return :class:`SymBool`.
    """
    __slots__ = ('value', 'expr')

    def __init__(self, value: int, expr: Optional[SymExpr] = None) -> None:
        self.value = int(value)
        if expr is not None and isinstance(expr, Const):
            expr = None
        self.expr = expr

    @classmethod
    def of(cls, value: IntLike) -> 'SymInt':
        if isinstance(value, SymInt):
            return value
        return cls(value)

    @property
    def symbolic(self) -> bool:
        return self.expr is not None

    def term(self) -> SymExpr:
        return self.expr if self.expr is not None else Const(self.value)

    def affine(self) -> Optional[Tuple[SymVar, int]]:
        if self.expr is None:
            return None
        return affine(self.expr)

    def __add__(self, other: int) -> 'SymInt':
        if isinstance(other, SymInt):
            return SymInt(self.value + other.value,
                          add(self.term(), other.term()))
        return SymInt(self.value + other,
                      add(self.term(), Const(other))
                      if self.expr is not None else None)

    def __sub__(self, other: int) -> 'SymInt':
        return self + (-other)

    def _cmp(self, other: IntLike, fn: Any, value: bool) -> SymBool:
        other = SymInt.of(other)
        if self.expr is None and other.expr is None:
            return SymBool(value)
        return SymBool(value, fn(self.term(), other.term()))

    def eq(self, other: IntLike) -> SymBool:
        other = SymInt.of(other)
        return self._cmp(other, eq, self.value == other.value)

    def ne(self, other: IntLike) -> SymBool:
        return ~self.eq(other)

    def lt(self, other: IntLike) -> SymBool:
        other = SymInt.of(other)
        return self._cmp(other, lt, self.value < other.value)

    def ge(self, other: IntLike) -> SymBool:
        return ~self.lt(other)

    def gt(self, other: IntLike) -> SymBool:
        return SymInt.of(other).lt(self)

    def le(self, other: IntLike) -> SymBool:
        return ~self.gt(other)

    def __eq__(self, other: Any) -> bool:
        if isinstance(other, SymInt):
            return self.value == other.value and self.expr == other.expr
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.value, self.expr))

    def __int__(self) -> int:
        return self.value

    def __index__(self) -> int:
        raise TypeError("concolic integers must be pinned before indexing")

    def __repr__(self) -> str:
        if self.expr is None:
            return f"SymInt({self.value})"
        return f"SymInt({self.value}, {self.expr})"

    def __str__(self) -> str:
        if self.expr is None:
            return str(self.value)
        return f"{self.value}<{self.expr}>"

class PathConstraint:
    """
    The ordered conditions and branch outcomes recorded during one run.

    ``trace`` holds one ``(site, outcome)`` pair per recorded condition;
    it is the path's branch-trace class.
    """
    def __init__(self) -> None:
        self.conjuncts: List[SymExpr] = list()
        self.trace: List[Tuple[str, int]] = list()
        self._seen: Dict[Tuple[str, int, SymExpr], int] = dict()

    def record(self, site: str, outcome: int, conjunct: SymExpr) -> None:
        key = (site, outcome, conjunct)
        if key in self._seen:
            return
        self._seen[key] = len(self.conjuncts)
        self.conjuncts.append(conjunct)
        self.trace.append((site, outcome))

    def trace_class(self) -> Tuple[Tuple[str, int], ...]:
        return tuple(self.trace)

    def __len__(self) -> int:
        return len(self.conjuncts)

    def render(self) -> List[str]:
        return [str(c) for c in self.conjuncts]

class Tracer:
    """Collects the path constraint of the active run"""
    def __init__(self) -> None:
        self.path = PathConstraint()
        self.recording = True

_current: 'contextvars.ContextVar[Optional[Tracer]]' = \
    contextvars.ContextVar('ospfmbt_tracer', default=None)

@contextlib.contextmanager
def tracing(tracer: Optional[Tracer] = None) -> Iterator[Tracer]:
    """
    Install a tracer for the duration of a ``with`` block.

    Args:
        tracer: The tracer to install; a fresh one by default

    Yields:
        :obj:`Tracer`: The active tracer
    """
    if tracer is None:
        tracer = Tracer()
    token = _current.set(tracer)
    try:
        yield tracer
    finally:
        _current.reset(token)

@contextlib.contextmanager
def paused() -> Iterator[None]:
    """Suspend recording in the active tracer, if any"""
    tracer = _current.get()
    if tracer is None:
        yield
        return
    previous = tracer.recording
    tracer.recording = False
    try:
        yield
    finally:
        tracer.recording = previous

def _record(site: str, outcome: int, conjunct: SymExpr) -> None:
    tracer = _current.get()
    if tracer is not None and tracer.recording:
        tracer.path.record(site, outcome, conjunct)

def branch(cond: Union[SymBool, bool], site: str) -> bool:
    """
    Decide a condition and record it.

    Args:
        cond: The condition to decide
        site: A stable name for the decision point

    Returns:
        :obj:`bool`: The concrete outcome
    """
    if isinstance(cond, bool):
        return cond
    if cond.expr is not None:
        _record(site, int(cond.value), cond.condition())
    return cond.value

def pin(value: IntLike, site: str) -> int:
    """
    Fix a concolic integer to its concrete value, recording the
    equality so that other values are explored as separate paths.

    Args:
        value: The value to pin
        site: A stable name for the decision point

    Returns:
        :obj:`int`: The concrete value
    """
    if isinstance(value, int):
        return value
    if value.expr is not None:
        _record(site, value.value, eq(value.expr, Const(value.value)))
    return value.value

class ConcolicInputs:
    """
    The inputs of one concolic run: each variable's concrete value from
    ``assignment`` with the variable itself as the shadow.
    """
    def __init__(self, assignment: Assignment) -> None:
        self.assignment = dict(assignment)

    def sym(self, var: SymVar) -> SymInt:
        return SymInt(self.assignment[var], Var(var))

    def concrete(self, var: SymVar) -> int:
        return self.assignment[var]
