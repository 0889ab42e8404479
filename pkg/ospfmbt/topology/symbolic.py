# -*- coding: utf-8 -*-
# vim:set shiftwidth=4 softtabstop=4 expandtab textwidth=79:

from typing import Dict, Iterator, List, Optional, Tuple

import itertools

import ospfmbt.topology
from ospfmbt.topology.concrete import ConcreteTopology
from ospfmbt.symbolic.expr import SymExpr, SymVar, VarRole, Var, Assignment
from ospfmbt.symbolic.expr import and_, or_
from ospfmbt.symbolic.solver import enumerate_assignments

ENUMERATION_GUARD = (4, 2)

class SymbolicTopology:
    """
    Every topology of ``n`` routers and ``m`` multi-access networks.

    One boolean variable per router pair says whether a p2p link exists
    (``n(n-1)/2`` variables) and one per (router, network) pair says
    whether the router is attached (``n*m`` variables).

    Args:
        n: The number of routers
        m: The number of multi-access networks
        first_id: The id of the first variable; the rest follow in order
    """
    def __init__(self, n: int, m: int, first_id: int = 0) -> None:
        self.n = n
        self.m = m
        self.p2p_vars: Dict[Tuple[int, int], SymVar] = dict()
        self.member_vars: Dict[Tuple[int, int], SymVar] = dict()
        next_id = first_id
        for (i, j) in itertools.combinations(range(n), 2):
            self.p2p_vars[(i, j)] = SymVar(next_id, VarRole.TOPO_P2P,
                                           (i, j), 0, 1)
            next_id += 1
        for net in range(m):
            for i in range(n):
                self.member_vars[(i, net)] = SymVar(next_id,
                                                    VarRole.TOPO_MEMBER,
                                                    (i, net), 0, 1)
                next_id += 1
        self.next_id = next_id

    def variables(self) -> List[SymVar]:
        return list(self.p2p_vars.values()) + list(self.member_vars.values())

    def assignment_of(self, topo: ConcreteTopology) -> Assignment:
        """The variable values that describe ``topo``"""
        if topo.n != self.n or topo.m != self.m:
            raise ospfmbt.topology.TopologyError(
                f"topology has shape ({topo.n}, {topo.m}), "
                f"expected ({self.n}, {self.m})")
        assignment: Assignment = dict()
        for (i, j), var in self.p2p_vars.items():
            assignment[var] = int(topo.has_p2p(i, j))
        for (i, net), var in self.member_vars.items():
            assignment[var] = int(i in topo.members[net])
        return assignment

def validity_axioms(sym: SymbolicTopology) -> List[SymExpr]:
    """
    Constraints that hold exactly for the usable assignments: every
    network has at least two members and every set of routers not
    containing router 0 is joined to the rest by a p2p link or a shared
    network.

    Args:
        sym: The symbolic topology

    Returns:
        :obj:`list` of :obj:`.SymExpr`: The constraints
    """
    axioms: List[SymExpr] = list()
    for net in range(sym.m):
        axioms.append(or_(and_([Var(sym.member_vars[(i, net)]),
                                Var(sym.member_vars[(j, net)])])
                          for (i, j) in itertools.combinations(range(sym.n),
                                                               2)))

    others = range(1, sym.n)
    for size in range(1, sym.n):
        for subset in itertools.combinations(others, size):
            inside = set(subset)
            outside = [r for r in range(sym.n) if r not in inside]
            crossing: List[SymExpr] = list()
            for i in subset:
                for j in outside:
                    crossing.append(Var(sym.p2p_vars[(min(i, j),
                                                      max(i, j))]))
                    for net in range(sym.m):
                        crossing.append(and_([
                            Var(sym.member_vars[(i, net)]),
                            Var(sym.member_vars[(j, net)])]))
            axioms.append(or_(crossing))
    return axioms

def concretize(sym: SymbolicTopology,
               assignment: Assignment) -> Optional[ConcreteTopology]:
    """
    Build the concrete topology an assignment describes.

    Args:
        sym: The symbolic topology
        assignment: A value for every topology variable

    Returns:
        :obj:`.ConcreteTopology`: The topology, or :obj:`None` if it is
        disconnected or has a network with fewer than two members
    """
    links = [pair for pair, var in sym.p2p_vars.items() if assignment[var]]
    nets = [[i for i in range(sym.n) if assignment[sym.member_vars[(i, net)]]]
            for net in range(sym.m)]
    topo = ConcreteTopology(sym.n, links, nets)
    if not topo.is_valid():
        return None
    return topo

def enumerate_valid(sym: SymbolicTopology) -> Iterator[ConcreteTopology]:
    """
    Yield every usable concrete topology of the symbolic one, once per
    variable assignment.

    Raises:
        :obj:`.TopologyGuardError`: ``n`` or ``m`` is too large to
            enumerate.
    """
    (max_n, max_m) = ENUMERATION_GUARD
    if sym.n > max_n or sym.m > max_m:
        raise ospfmbt.topology.TopologyGuardError(sym.n, sym.m, max_n, max_m)
    for assignment in enumerate_assignments(sym.variables()):
        topo = concretize(sym, assignment)
        if topo is not None:
            yield topo
