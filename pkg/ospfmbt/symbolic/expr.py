# -*- coding: utf-8 -*-
# vim:set shiftwidth=4 softtabstop=4 expandtab textwidth=79:
"""
Symbolic integer and boolean expressions.

Booleans are integers restricted to 0 and 1.  Expressions are immutable
and compare structurally, so identical conditions recorded twice are
recognized as duplicates.  The constructor functions (:func:`add`,
:func:`eq`, :func:`lt`, ...) fold constants and trivially decided
comparisons; a comparison of an expression with itself never reaches
the path constraint.
"""

from typing import Dict, FrozenSet, Optional, Tuple, Any, Iterable

from enum import Enum

import ospfmbt.symbolic

class VarRole(Enum):
    INIT_SEQ = "init"
    MSG_SEQ = "seq"
    MSG_DEST = "dest"
    MSG_AR = "ar"
    MSG_LSID = "lsid"
    TOPO_P2P = "p2p"
    TOPO_MEMBER = "member"

class SymVar:
    """
    A symbolic input with an inclusive integer domain.

    Variables are ordered and hashed by ``id`` alone; the solver assigns
    lower ids first.
    """
    __slots__ = ('id', 'role', 'args', 'lo', 'hi')

    def __init__(self, id: int, role: VarRole, args: Tuple[int, ...],
                 lo: int, hi: int) -> None:
        # pylint: disable=redefined-builtin
        self.id = id
        self.role = role
        self.args = args
        self.lo = lo
        self.hi = hi

    @property
    def name(self) -> str:
        if self.role == VarRole.INIT_SEQ:
            return f"init_R{self.args[0]}"
        if self.role == VarRole.TOPO_P2P:
            return f"p2p_{self.args[0]}_{self.args[1]}"
        if self.role == VarRole.TOPO_MEMBER:
            return f"member_{self.args[0]}_N{self.args[1]}"
        return f"{self.role.value}_M{self.args[0]}"

    def domain(self) -> range:
        return range(self.lo, self.hi + 1)

    def __eq__(self, other: Any) -> bool:
        return isinstance(other, SymVar) and other.id == self.id

    def __hash__(self) -> int:
        return hash(self.id)

    def __lt__(self, other: 'SymVar') -> bool:
        return self.id < other.id

    def __repr__(self) -> str:
        return f"SymVar({self.name}:{self.lo}..{self.hi})"

Assignment = Dict[SymVar, int]

class SymExpr:
    """Base class for expression nodes"""
    __slots__ = ('_hash',)

    def _key(self) -> Tuple:
        raise NotImplementedError("_key is not implemented")

    def partial(self, assignment: Assignment) -> Optional[int]:
        """
        Evaluate the expression under a possibly incomplete assignment.

        Args:
            assignment: Values for some of the variables

        Returns:
            :obj:`int`: The value, or :obj:`None` if it depends on an
            unassigned variable
        """
        raise NotImplementedError("partial is not implemented")

    def evaluate(self, assignment: Assignment) -> int:
        value = self.partial(assignment)
        if value is None:
            missing = sorted(v.name for v in self.variables()
                             if v not in assignment)
            raise ospfmbt.symbolic.UnboundVariableError(missing)
        return value

    def variables(self) -> FrozenSet[SymVar]:
        raise NotImplementedError("variables is not implemented")

    def substitute(self, mapping: Dict[SymVar, 'SymExpr']) -> 'SymExpr':
        raise NotImplementedError("substitute is not implemented")

    def __eq__(self, other: Any) -> bool:
        return (type(self) is type(other) and
                self._key() == other._key()) # pylint: disable=protected-access

    def __hash__(self) -> int:
        try:
            return self._hash
        except AttributeError:
            self._hash = hash((type(self).__name__,) + self._key())
            return self._hash

    def __repr__(self) -> str:
        return str(self)

class Const(SymExpr):
    __slots__ = ('value',)

    def __init__(self, value: int) -> None:
        self.value = int(value)

    def _key(self) -> Tuple:
        return (self.value,)

    def partial(self, assignment: Assignment) -> Optional[int]:
        return self.value

    def variables(self) -> FrozenSet[SymVar]:
        return frozenset()

    def substitute(self, mapping: Dict[SymVar, SymExpr]) -> SymExpr:
        return self

    def __str__(self) -> str:
        return str(self.value)

TRUE = Const(1)
FALSE = Const(0)

class Var(SymExpr):
    __slots__ = ('var',)

    def __init__(self, var: SymVar) -> None:
        self.var = var

    def _key(self) -> Tuple:
        return (self.var.id,)

    def partial(self, assignment: Assignment) -> Optional[int]:
        return assignment.get(self.var)

    def variables(self) -> FrozenSet[SymVar]:
        return frozenset([self.var])

    def substitute(self, mapping: Dict[SymVar, SymExpr]) -> SymExpr:
        return mapping.get(self.var, self)

    def __str__(self) -> str:
        return self.var.name

class _Binary(SymExpr):
    __slots__ = ('left', 'right')
    _op = "?"

    def __init__(self, left: SymExpr, right: SymExpr) -> None:
        self.left = left
        self.right = right

    def _key(self) -> Tuple:
        return (self.left, self.right)

    def _apply(self, a: int, b: int) -> int:
        raise NotImplementedError("_apply is not implemented")

    def partial(self, assignment: Assignment) -> Optional[int]:
        a = self.left.partial(assignment)
        if a is None:
            return None
        b = self.right.partial(assignment)
        if b is None:
            return None
        return self._apply(a, b)

    def variables(self) -> FrozenSet[SymVar]:
        return self.left.variables() | self.right.variables()

    def __str__(self) -> str:
        return f"{self.left} {self._op} {self.right}"

class Add(_Binary):
    __slots__ = ()
    _op = "+"

    def _apply(self, a: int, b: int) -> int:
        return a + b

    def substitute(self, mapping: Dict[SymVar, SymExpr]) -> SymExpr:
        return add(self.left.substitute(mapping),
                   self.right.substitute(mapping))

class Eq(_Binary):
    __slots__ = ()
    _op = "=="

    def _apply(self, a: int, b: int) -> int:
        return int(a == b)

    def substitute(self, mapping: Dict[SymVar, SymExpr]) -> SymExpr:
        return eq(self.left.substitute(mapping),
                  self.right.substitute(mapping))

class Lt(_Binary):
    __slots__ = ()
    _op = "<"

    def _apply(self, a: int, b: int) -> int:
        return int(a < b)

    def substitute(self, mapping: Dict[SymVar, SymExpr]) -> SymExpr:
        return lt(self.left.substitute(mapping),
                  self.right.substitute(mapping))

class Not(SymExpr):
    __slots__ = ('term',)

    def __init__(self, term: SymExpr) -> None:
        self.term = term

    def _key(self) -> Tuple:
        return (self.term,)

    def partial(self, assignment: Assignment) -> Optional[int]:
        value = self.term.partial(assignment)
        if value is None:
            return None
        return int(not value)

    def variables(self) -> FrozenSet[SymVar]:
        return self.term.variables()

    def substitute(self, mapping: Dict[SymVar, SymExpr]) -> SymExpr:
        return not_(self.term.substitute(mapping))

    def __str__(self) -> str:
        if isinstance(self.term, Eq):
            return f"{self.term.left} != {self.term.right}"
        if isinstance(self.term, Lt):
            return f"{self.term.left} >= {self.term.right}"
        return f"!({self.term})"

class _Nary(SymExpr):
    __slots__ = ('terms',)
    _op = "?"

    def __init__(self, terms: Tuple[SymExpr, ...]) -> None:
        self.terms = terms

    def _key(self) -> Tuple:
        return self.terms

    def variables(self) -> FrozenSet[SymVar]:
        result: FrozenSet[SymVar] = frozenset()
        for term in self.terms:
            result = result | term.variables()
        return result

    def __str__(self) -> str:
        return "(" + f" {self._op} ".join(str(t) for t in self.terms) + ")"

class And(_Nary):
    __slots__ = ()
    _op = "&&"

    def partial(self, assignment: Assignment) -> Optional[int]:
        result: Optional[int] = 1
        for term in self.terms:
            value = term.partial(assignment)
            if value == 0:
                return 0
            if value is None:
                result = None
        return result

    def substitute(self, mapping: Dict[SymVar, SymExpr]) -> SymExpr:
        return and_(t.substitute(mapping) for t in self.terms)

class Or(_Nary):
    __slots__ = ()
    _op = "||"

    def partial(self, assignment: Assignment) -> Optional[int]:
        result: Optional[int] = 0
        for term in self.terms:
            value = term.partial(assignment)
            if value:
                return 1
            if value is None:
                result = None
        return result

    def substitute(self, mapping: Dict[SymVar, SymExpr]) -> SymExpr:
        return or_(t.substitute(mapping) for t in self.terms)

class Ite(SymExpr):
    __slots__ = ('cond', 'then', 'orelse')

    def __init__(self, cond: SymExpr, then: SymExpr,
                 orelse: SymExpr) -> None:
        self.cond = cond
        self.then = then
        self.orelse = orelse

    def _key(self) -> Tuple:
        return (self.cond, self.then, self.orelse)

    def partial(self, assignment: Assignment) -> Optional[int]:
        cond = self.cond.partial(assignment)
        if cond is None:
            then = self.then.partial(assignment)
            if then is not None and then == self.orelse.partial(assignment):
                return then
            return None
        if cond:
            return self.then.partial(assignment)
        return self.orelse.partial(assignment)

    def variables(self) -> FrozenSet[SymVar]:
        return (self.cond.variables() | self.then.variables() |
                self.orelse.variables())

    def substitute(self, mapping: Dict[SymVar, SymExpr]) -> SymExpr:
        return ite(self.cond.substitute(mapping),
                   self.then.substitute(mapping),
                   self.orelse.substitute(mapping))

    def __str__(self) -> str:
        return f"({self.cond} ? {self.then} : {self.orelse})"

def const(value: int) -> Const:
    return Const(value)

def affine(expr: SymExpr) -> Optional[Tuple[SymVar, int]]:
    """
    Decompose an expression of the form ``var + offset``.

    Args:
        expr: The expression to decompose

    Returns:
        (:obj:`SymVar`, :obj:`int`): The variable and offset, or
        :obj:`None` if the expression is not affine in one variable
    """
    if isinstance(expr, Var):
        return (expr.var, 0)
    if isinstance(expr, Add) and isinstance(expr.right, Const):
        inner = affine(expr.left)
        if inner is not None:
            return (inner[0], inner[1] + expr.right.value)
    return None

def _split(expr: SymExpr) -> Tuple[SymExpr, int]:
    if isinstance(expr, Add) and isinstance(expr.right, Const):
        return (expr.left, expr.right.value)
    return (expr, 0)

def add(left: SymExpr, right: SymExpr) -> SymExpr:
    if isinstance(left, Const) and isinstance(right, Const):
        return Const(left.value + right.value)
    if isinstance(left, Const):
        left, right = right, left
    if isinstance(right, Const):
        if right.value == 0:
            return left
        base, offset = _split(left)
        if offset + right.value == 0:
            return base
        return Add(base, Const(offset + right.value))
    return Add(left, right)

def eq(left: SymExpr, right: SymExpr) -> SymExpr:
    lbase, loff = _split(left)
    rbase, roff = _split(right)
    if lbase == rbase:
        return TRUE if loff == roff else FALSE
    if isinstance(left, Const) and isinstance(right, Const):
        return TRUE if left.value == right.value else FALSE
    return Eq(left, right)

def lt(left: SymExpr, right: SymExpr) -> SymExpr:
    lbase, loff = _split(left)
    rbase, roff = _split(right)
    if lbase == rbase:
        return TRUE if loff < roff else FALSE
    if isinstance(left, Const) and isinstance(right, Const):
        return TRUE if left.value < right.value else FALSE
    return Lt(left, right)

def not_(term: SymExpr) -> SymExpr:
    if isinstance(term, Const):
        return FALSE if term.value else TRUE
    if isinstance(term, Not):
        return term.term
    return Not(term)

def and_(terms: Iterable[SymExpr]) -> SymExpr:
    kept = []
    for term in terms:
        if isinstance(term, Const):
            if not term.value:
                return FALSE
            continue
        if isinstance(term, And):
            kept.extend(term.terms)
        else:
            kept.append(term)
    if not kept:
        return TRUE
    if len(kept) == 1:
        return kept[0]
    return And(tuple(kept))

def or_(terms: Iterable[SymExpr]) -> SymExpr:
    kept = []
    for term in terms:
        if isinstance(term, Const):
            if term.value:
                return TRUE
            continue
        if isinstance(term, Or):
            kept.extend(term.terms)
        else:
            kept.append(term)
    if not kept:
        return FALSE
    if len(kept) == 1:
        return kept[0]
    return Or(tuple(kept))

def ite(cond: SymExpr, then: SymExpr, orelse: SymExpr) -> SymExpr:
    if isinstance(cond, Const):
        return then if cond.value else orelse
    if then == orelse:
        return then
    return Ite(cond, then, orelse)
