# -*- coding: utf-8 -*-
# vim:set shiftwidth=4 softtabstop=4 expandtab textwidth=79:

from typing import Deque, Dict, List, Tuple

from collections import deque

from ospfmbt.model.lsa import Lsa, LsaKey, LsaMessage
from ospfmbt.topology.concrete import ConcreteTopology

class RouterState:
    """
    One router's LSDB and incoming queue.

    The LSDB is keyed by whatever the active behavior's ``lsdb_key``
    returns, normally the (type, lsid, ar) triple.
    """
    def __init__(self, index: int) -> None:
        self.index = index
        self.lsdb: Dict[LsaKey, Lsa] = dict()
        self.queue: Deque[LsaMessage] = deque()

    def copy(self) -> 'RouterState':
        new = RouterState(self.index)
        new.lsdb = dict(self.lsdb)
        new.queue = deque(self.queue)
        return new

    def entries(self) -> List[Lsa]:
        """The installed LSAs ordered by their (type, lsid, ar) triple"""
        return sorted(self.lsdb.values(), key=lambda lsa: lsa.key)

class NetworkState:
    """
    The state of every router in a topology.

    Besides the LSDBs and queues it tracks protocol bookkeeping that has
    to survive between steps: originations deferred until a MaxAge flush
    has stabilized, the MaxSeqNum instances kept by routers that never
    completed a wrap, and per-(router, key) resend counters.

    Operations on :class:`.OspfModel` copy the state they are given, so
    callers may treat instances as immutable snapshots.
    """
    def __init__(self, topology: ConcreteTopology) -> None:
        self.topology = topology
        self.routers = [RouterState(r) for r in topology.routers]
        self.deferred: Dict[Tuple[int, LsaKey], Lsa] = dict()
        self.remnants: Dict[int, Lsa] = dict()
        self.resends: Dict[Tuple[int, LsaKey, int], int] = dict()

    def copy(self) -> 'NetworkState':
        new = NetworkState.__new__(NetworkState)
        new.topology = self.topology
        new.routers = [router.copy() for router in self.routers]
        new.deferred = dict(self.deferred)
        new.remnants = dict(self.remnants)
        new.resends = dict(self.resends)
        return new

    def is_stable(self) -> bool:
        return not any(router.queue for router in self.routers)

    def lsdb(self, router: int) -> List[Lsa]:
        return self.routers[router].entries()

    def same_lsdbs(self, other: 'NetworkState') -> bool:
        return all(a.entries() == b.entries()
                   for a, b in zip(self.routers, other.routers))

    def describe(self) -> str:
        lines = []
        for router in self.routers:
            lines.append(f"R{router.index}:")
            lines += [f"  {lsa.describe()}" for lsa in router.entries()]
        return "\n".join(lines)
