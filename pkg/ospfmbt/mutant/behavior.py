# -*- coding: utf-8 -*-
# vim:set shiftwidth=4 softtabstop=4 expandtab textwidth=79:

from typing import Optional, Tuple, TYPE_CHECKING

import logging

from ospfmbt.model.behavior import Behavior
from ospfmbt.model.lsa import Lsa, Link, LsaKey, LsaMessage, LsType, Ordering
from ospfmbt.mutant.catalog import DeviationId, MutantConfig
from ospfmbt.symbolic.values import SymInt, branch

if TYPE_CHECKING:
    from ospfmbt.model.engine import OspfModel
    from ospfmbt.model.state import NetworkState

logger = logging.getLogger(__name__)

D1 = DeviationId.D1
D2 = DeviationId.D2
D3 = DeviationId.D3
D4 = DeviationId.D4
D5 = DeviationId.D5
D6 = DeviationId.D6
D7 = DeviationId.D7
Q1 = DeviationId.Q1

def _foreign_false(lsa: Lsa) -> bool:
    return lsa.ls_type == LsType.ROUTER and lsa.lsid != lsa.ar

class MutantBehavior(Behavior):
    """
    A router behavior with the deviations of ``config`` enabled.

    Args:
        config: The deviations and the routers they apply to
    """
    def __init__(self, config: MutantConfig) -> None:
        self.config = config
        self.name = str(config)

    def _has(self, deviation: DeviationId, router: int) -> bool:
        return self.config.has(deviation, router)

    def _own(self, model: 'OspfModel', state: 'NetworkState',
             router: int) -> Optional[Lsa]:
        return state.routers[router].lsdb.get(model.own_key(router))

    def lsdb_key(self, lsa: Lsa) -> LsaKey:
        # the advertising router is not part of the key on any router
        if D3 in self.config.enabled:
            return (int(lsa.ls_type), lsa.lsid, -1)
        return lsa.key

    def flood_first(self, router: int) -> bool:
        return self._has(Q1, router)

    def suppress_reflood(self, router: int, msg: LsaMessage) -> bool:
        if self._has(D7, router):
            return msg.flooded
        return True

    def flush_links(self, model: 'OspfModel', router: int,
                    false_lsa: Lsa) -> Tuple[Link, ...]:
        if self._has(D2, router) or self._has(Q1, router):
            return model.own_links(router)
        return false_lsa.links

    def originate_after_flush(self, router: int) -> bool:
        return not self._has(D1, router)

    def on_stale_self_originated(self, model: 'OspfModel',
                                 state: 'NetworkState', router: int,
                                 msg: LsaMessage) -> None:
        lsa = msg.lsa
        if self._has(D6, router) and \
           branch(lsa.seq.eq(model.space.max - 1), "d6.max_minus_one"):
            logger.debug("R%d answers with a MaxAge instance at MaxSeqNum",
                         router)
            model.originate(state, router,
                            lsa._replace(seq=lsa.seq + 1, max_age=True))
            fresh = lsa._replace(seq=SymInt(model.space.initial),
                                 links=model.own_links(router),
                                 absolute=True)
            state.deferred[(router, self.lsdb_key(fresh))] = fresh
            return

        own = self._own(model, state, router)
        if self._has(D4, router) and own is not None and \
           branch(lsa.seq.lt(own.seq), "d4.older_than_own"):
            logger.debug("R%d fights back against an older LSA", router)
            model.fight_back(state, router, own)
            return
        super().on_stale_self_originated(model, state, router, msg)

    def on_flush_received(self, model: 'OspfModel', state: 'NetworkState',
                          router: int, msg: LsaMessage,
                          installed: Lsa) -> bool:
        remnant = state.remnants.get(router)
        if self._has(D1, router) and remnant is not None and \
           self.lsdb_key(msg.lsa) != model.own_key(router):
            # the origination suppressed at the wrap happens now
            del state.remnants[router]
            fresh = model.router_lsa(router, model.space.initial, True)
            state.deferred[(router, model.own_key(router))] = fresh

        resends = self._has(D5, router) or self._has(D6, router)
        if resends and _foreign_false(installed) and \
           not installed.max_age and msg.src == msg.lsa.ar and \
           model.send_back(state, router, msg, installed):
            logger.debug("R%d re-sends the false LSA to R%d", router,
                         msg.src)
            return False
        return True

    def on_repeat_fight_back(self, model: 'OspfModel', state: 'NetworkState',
                             router: int, msg: LsaMessage, installed: Lsa,
                             order: Ordering) -> None:
        if not self._has(D5, router) or msg.lsa.lsid == router or \
           not installed.max_age:
            return
        own = self._own(model, state, router)
        if own is not None:
            model.fight_back(state, router, own)

def make_mutant(config: MutantConfig) -> Behavior:
    """The behavior of a mutant; with no deviation enabled it behaves
    exactly like the reference"""
    return MutantBehavior(config)
