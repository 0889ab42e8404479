# -*- coding: utf-8 -*-
# vim:set shiftwidth=4 softtabstop=4 expandtab textwidth=79:
"""
The router procedure and the round-robin scheduler.

Every comparison involving a sequence number goes through
:func:`.branch` so that a concolic run records the conditions it took.
"""

from typing import Callable, Iterable, List, Mapping, Optional, Tuple

import logging

import ospfmbt.model
import ospfmbt.wire.mapping
from ospfmbt.model.lsa import Lsa, Link, LinkKind, LsType, LsaKey
from ospfmbt.model.lsa import LsaMessage, Ordering, SeqSpace, sort_links
from ospfmbt.model.state import NetworkState
from ospfmbt.model.behavior import Behavior, REFERENCE
from ospfmbt.symbolic.values import SymInt, IntLike, branch
from ospfmbt.topology.concrete import ConcreteTopology, Interface
from ospfmbt.topology.concrete import IFACE_P2P, IFACE_TRANSIT
from ospfmbt.topology.concrete import resolve_route

logger = logging.getLogger(__name__)

DEFAULT_STEP_BUDGET = 100000
DEFAULT_RESEND_ROUNDS = 3

Trace = List[LsaMessage]
Scheduler = Callable[[List[int]], int]

class OspfModel:
    """
    The router procedure over a fixed topology.

    Args:
        topology: The topology the routers live on
        space: The sequence-number domain
        behavior: The router behavior; the standard one by default
        step_budget: The most messages a single run may process
        resend_rounds: How often a router sends the same key back to the
            same neighbor within one run
        scheduler: Picks the next router to step among those with a
            non-empty queue.  Round-robin by index when not given.
    """
    def __init__(self, topology: ConcreteTopology,
                 space: Optional[SeqSpace] = None,
                 behavior: Optional[Behavior] = None,
                 step_budget: int = DEFAULT_STEP_BUDGET,
                 resend_rounds: int = DEFAULT_RESEND_ROUNDS,
                 scheduler: Optional[Scheduler] = None) -> None:
        self.topology = topology
        self.space = space if space is not None else ospfmbt.model.MODEL_SPACE
        self.behavior = behavior if behavior is not None else REFERENCE
        self.step_budget = step_budget
        self.resend_rounds = resend_rounds
        self.scheduler = scheduler

    # LSA construction

    def own_links(self, router: int) -> Tuple[Link, ...]:
        links = [Link(LinkKind.POINT_TO_POINT, nb)
                 for nb in self.topology.p2p_neighbors(router)]
        links += [Link(LinkKind.TRANSIT, j)
                  for j in self.topology.nets_of(router)]
        return sort_links(links)

    def router_lsa(self, router: int, seq: IntLike,
                   absolute: bool = False) -> Lsa:
        return Lsa(LsType.ROUTER, router, router, SymInt.of(seq), False,
                   self.own_links(router), absolute)

    def network_lsa(self, net: int, seq: IntLike) -> Lsa:
        links = sort_links(Link(LinkKind.ATTACHED, r)
                           for r in self.topology.members[net])
        return Lsa(LsType.NETWORK, net, self.topology.dr[net],
                   SymInt.of(seq), False, links)

    def own_key(self, router: int) -> LsaKey:
        return self.behavior.lsdb_key(self.router_lsa(router, 0))

    def standard_initial_state(self, init_seqs: Mapping[int, IntLike],
                               net_seqs: Optional[Mapping[int, IntLike]]
                               = None) -> NetworkState:
        """
        Build the stable state in which every router holds every
        Router-LSA and the Network-LSA of every network.

        Args:
            init_seqs: The sequence number of each router's own LSA
            net_seqs: The sequence number of each Network-LSA, 0 for any
                network not listed

        Returns:
            :obj:`.NetworkState`: The state

        Raises:
            :obj:`.DisconnectedTopologyError`: The topology is
                disconnected or has a network with fewer than two members.
        """
        self.topology.check_valid()
        lsas = [self.router_lsa(r, init_seqs[r])
                for r in self.topology.routers]
        for j in range(self.topology.m):
            seq = net_seqs.get(j, 0) if net_seqs else 0
            lsas.append(self.network_lsa(j, seq))
        state = NetworkState(self.topology)
        for router in state.routers:
            for lsa in lsas:
                router.lsdb[self.behavior.lsdb_key(lsa)] = lsa
        return state

    # Newness

    def is_newer(self, a: Lsa, b: Lsa) -> Ordering:
        """
        Order two instances of the same LSA: by sequence number, then by
        the checksum of their canonical encodings, then MaxAge first.
        """
        if branch(a.seq.gt(b.seq), "newer.seq_greater"):
            return Ordering.NEWER
        if branch(a.seq.lt(b.seq), "newer.seq_less"):
            return Ordering.OLDER
        at_max = branch(a.seq.eq(self.space.max), "newer.at_max")
        drs = self.topology.dr
        ca = ospfmbt.wire.mapping.canonical_checksum(a, at_max, drs)
        cb = ospfmbt.wire.mapping.canonical_checksum(b, at_max, drs)
        if ca != cb:
            return Ordering.NEWER if ca > cb else Ordering.OLDER
        if a.max_age != b.max_age:
            return Ordering.NEWER if a.max_age else Ordering.OLDER
        return Ordering.SAME

    # Sending

    def _enqueue(self, state: NetworkState, msg: LsaMessage) -> None:
        state.routers[msg.dest].queue.append(msg)

    def arrival(self, router: int, msg: LsaMessage) -> Optional[Interface]:
        if msg.net is not None:
            return Interface(IFACE_TRANSIT, msg.net)
        if msg.src != router and self.topology.has_p2p(msg.src, router):
            return Interface(IFACE_P2P, msg.src)
        return None

    def flood(self, state: NetworkState, router: int, lsa: Lsa,
              msg: Optional[LsaMessage] = None) -> None:
        """
        Enqueue ``lsa`` to the router's neighbors.

        Non-DRs flood onto a network by sending to its DR; the DR relays
        to every other member.  Nothing goes back over the p2p link the
        LSA arrived on, and an LSA that arrived from a network's DR stays
        off that network unless the behavior says otherwise.

        Args:
            state: The state to modify
            router: The flooding router
            lsa: The LSA to flood
            msg: The message ``lsa`` arrived in, :obj:`None` when the
                router originated it
        """
        arrival = self.arrival(router, msg) if msg is not None else None
        src = msg.src if msg is not None else None
        for iface in self.topology.interfaces(router):
            if iface.kind == IFACE_P2P:
                if iface == arrival:
                    continue
                self._enqueue(state, LsaMessage(router, iface.target, lsa,
                                                None, True))
                continue

            net = iface.target
            dr = self.topology.dr[net]
            if router == dr:
                targets = [r for r in self.topology.members[net]
                           if r not in (router, src if iface == arrival
                                        else None)]
            else:
                if iface == arrival and src == dr and msg is not None and \
                   self.behavior.suppress_reflood(router, msg):
                    continue
                targets = [dr]
            for dest in targets:
                self._enqueue(state, LsaMessage(router, dest, lsa, net, True))

    def send_back(self, state: NetworkState, router: int, msg: LsaMessage,
                  lsa: Lsa) -> bool:
        """
        Send ``lsa`` to the router ``msg`` came from, at most
        ``resend_rounds`` times per key and neighbor within a run.

        Returns:
            :obj:`bool`: Whether the LSA was sent
        """
        if msg.src == router:
            return False
        counter = (router, self.behavior.lsdb_key(lsa), msg.src)
        sent = state.resends.get(counter, 0)
        if sent >= self.resend_rounds:
            return False
        state.resends[counter] = sent + 1
        self._enqueue(state, LsaMessage(router, msg.src, lsa, msg.net, True))
        return True

    def install(self, state: NetworkState, router: int, lsa: Lsa) -> None:
        state.routers[router].lsdb[self.behavior.lsdb_key(lsa)] = lsa

    def originate(self, state: NetworkState, router: int, lsa: Lsa) -> None:
        self.install(state, router, lsa)
        self.flood(state, router, lsa)

    # Self-originated LSAs

    def fight_back(self, state: NetworkState, router: int,
                   false_lsa: Lsa) -> None:
        """
        Answer a newer instance of the router's own LSA.

        Below MaxSeqNum - 1 the router originates its correct LSA one past
        the false instance.  Otherwise it flushes the key with a MaxAge
        instance at MaxSeqNum and originates afresh at InitialSeqNum once
        the flush has stabilized.  A fight-back that reaches MaxSeqNum
        flushes the router's own links; a false instance already at
        MaxSeqNum is flushed with the links the behavior picks.
        """
        absolute = false_lsa.absolute
        if branch(false_lsa.seq.lt(self.space.max - 1),
                  "fight_back.room_left"):
            lsa = self.router_lsa(router, false_lsa.seq + 1, absolute)
            logger.debug("R%d fights back at %s", router, lsa.seq)
            self.originate(state, router, lsa)
            return

        if branch(false_lsa.seq.lt(self.space.max), "fight_back.reaches_max"):
            seq = false_lsa.seq + 1
            links = self.router_lsa(router, seq, absolute).links
        else:
            seq = false_lsa.seq
            links = self.behavior.flush_links(self, router, false_lsa)
        flush = self.router_lsa(router, seq, absolute)._replace(max_age=True,
                                                                links=links)
        logger.debug("R%d flushes its LSA at MaxSeqNum", router)
        self.originate(state, router, flush)
        if self.behavior.originate_after_flush(router):
            fresh = self.router_lsa(router, self.space.initial, True)
            state.deferred[(router, self.own_key(router))] = fresh
        else:
            state.remnants[router] = self.router_lsa(router, seq, absolute)

    def premature_flush(self, state: NetworkState, router: int,
                        lsa: Lsa) -> None:
        """Flush an LSA the router did not originate under its own name"""
        self.originate(state, router, lsa._replace(max_age=True))

    # The router procedure

    def receive(self, state: NetworkState, router: int,
                msg: LsaMessage) -> None:
        """Process one message in place"""
        lsa = msg.lsa
        behavior = self.behavior
        db = state.routers[router].lsdb
        installed = db.get(behavior.lsdb_key(lsa))

        if installed is None:
            if lsa.max_age:
                return
            order = Ordering.NEWER
        else:
            order = behavior.compare(self, lsa, installed)

        self_originated = lsa.ls_type == LsType.ROUTER and lsa.ar == router
        if order is not Ordering.NEWER:
            assert installed is not None
            if self_originated:
                behavior.on_repeat_fight_back(self, state, router, msg,
                                              installed, order)
            else:
                behavior.on_older_received(self, state, router, msg,
                                           installed, order)
            if order is Ordering.OLDER and msg.flooded:
                self.send_back(state, router, msg, installed)
            return

        if lsa.max_age and installed is not None and \
           not behavior.on_flush_received(self, state, router, msg,
                                          installed):
            return

        if behavior.flood_first(router):
            self.flood(state, router, lsa, msg)
            if self_originated:
                self._self_originated(state, router, msg)
            else:
                self.install(state, router, lsa)
            return

        if self_originated:
            self._self_originated(state, router, msg)
            return
        self.install(state, router, lsa)
        self.flood(state, router, lsa, msg)

    def _self_originated(self, state: NetworkState, router: int,
                         msg: LsaMessage) -> None:
        lsa = msg.lsa
        if lsa.lsid == router:
            self.fight_back(state, router, lsa)
            return
        own = state.routers[router].lsdb.get(self.own_key(router))
        if own is not None and \
           branch(lsa.seq.lt(own.seq), "stale_self.older_than_own"):
            logger.debug("R%d got a stale LSA older than its own", router)
        if branch(lsa.seq.eq(self.space.max - 1), "stale_self.max_minus_one"):
            logger.debug("R%d got a stale LSA one below MaxSeqNum", router)
        self.behavior.on_stale_self_originated(self, state, router, msg)

    def receive_lsa(self, state: NetworkState, router: int,
                    msg: LsaMessage) -> NetworkState:
        """
        Process one message on a copy of ``state``.

        Returns:
            :obj:`.NetworkState`: The state after the router's step
        """
        new = state.copy()
        self.receive(new, router, msg)
        return new

    # Running

    def budget(self, state: NetworkState) -> int:
        """
        The step budget of a run from ``state``: the termination bound
        routers x keys x sequence values x interfaces, doubled for MaxAge
        instances, plus the resend allowance, capped by ``step_budget``.
        """
        n = self.topology.n
        keys = len({key for router in state.routers
                    for key in router.lsdb}) + n + 1
        ifaces = max(1, sum(len(self.topology.interfaces(r))
                            for r in self.topology.routers))
        values = self.space.max - self.space.initial + 2
        bound = 2 * n * keys * values * ifaces
        bound += n * keys * self.resend_rounds * ifaces + 1
        return min(bound, self.step_budget)

    def _settle(self, state: NetworkState) -> None:
        for router in state.routers:
            for key in [k for k, lsa in router.lsdb.items() if lsa.max_age]:
                del router.lsdb[key]
            remnant = state.remnants.get(router.index)
            if remnant is not None:
                router.lsdb.setdefault(self.behavior.lsdb_key(remnant),
                                       remnant)

    def _next_router(self, state: NetworkState, last: int) -> Optional[int]:
        ready = [r.index for r in state.routers if r.queue]
        if not ready:
            return None
        if self.scheduler is not None:
            return self.scheduler(ready)
        for r in ready:
            if r > last:
                return r
        return ready[0]

    def run_to_stable(self, state: NetworkState, injected: LsaMessage
                      ) -> Tuple[NetworkState, Trace]:
        """
        Deliver one message and step routers until the network is stable.

        Routers take turns in index order, each processing one message
        per turn.  When every queue is empty, MaxAge instances are
        removed and deferred originations are flooded; the run ends when
        nothing is left to do.

        Args:
            state: A stable state; it is not modified
            injected: The message to deliver

        Returns:
            (:obj:`.NetworkState`, :obj:`list` of :obj:`.LsaMessage`): The
            stable state and every message processed, in order

        Raises:
            :obj:`.NonTerminationError`: The run exceeded its step budget.
        """
        new = state.copy()
        new.resends.clear()
        self._enqueue(new, injected)
        budget = self.budget(new)
        trace: Trace = list()
        last = -1
        while True:
            router = self._next_router(new, last)
            if router is not None:
                if len(trace) >= budget:
                    raise ospfmbt.model.NonTerminationError(len(trace), trace)
                msg = new.routers[router].queue.popleft()
                trace.append(msg)
                self.receive(new, router, msg)
                last = router
                continue

            self._settle(new)
            if not new.deferred:
                break
            pending = sorted(new.deferred.items(), key=lambda item: item[0])
            new.deferred.clear()
            for ((origin, _), lsa) in pending:
                logger.debug("R%d originates %s", origin, lsa.describe())
                self.originate(new, origin, lsa)
            last = -1
        return (new, trace)

    def replay(self, state: NetworkState, messages: Iterable[LsaMessage]
               ) -> Tuple[NetworkState, Trace]:
        """Run each message to a stable state in turn"""
        trace: Trace = list()
        for msg in messages:
            (state, steps) = self.run_to_stable(state, msg)
            trace += steps
        return (state, trace)

    def render_lsdb(self, state: NetworkState, router: int) -> List[Lsa]:
        return state.lsdb(router)

def standard_initial_state(topology: ConcreteTopology,
                           init_seqs: Mapping[int, IntLike]) -> NetworkState:
    return OspfModel(topology).standard_initial_state(init_seqs)

def make_probe(topology: ConcreteTopology, dest: int, lsa: Lsa,
               attacker: int = 0) -> LsaMessage:
    """
    Build the message the attacker's unicast LSA arrives in.

    Args:
        topology: The topology
        dest: The router the LSA is addressed to
        lsa: The LSA
        attacker: The sending router

    Returns:
        :obj:`.LsaMessage`: The message as ``dest`` receives it
    """
    src = resolve_route(topology, attacker, dest)
    iface = topology.arrival_interface(src, dest)
    net = iface.target if iface is not None and \
        iface.kind == IFACE_TRANSIT else None
    return LsaMessage(src, dest, lsa, net, False)
