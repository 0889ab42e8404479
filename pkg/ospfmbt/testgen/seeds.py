# -*- coding: utf-8 -*-
# vim:set shiftwidth=4 softtabstop=4 expandtab textwidth=79:
"""
Catalogue start states.

A seed is a stable state the reference model never reaches but a
deviating implementation does.  Each seed comes with the messages that
produce it on such an implementation; the runner sends them and checks
the state it ends up in before probing.

``maxseq-remnant:<R>``
    R keeps its own LSA at MaxSeqNum and every other router lacks it,
    as after a wrap whose InitialSeqNum origination never happened.
    Setup: a MaxSeqNum instance of R's own LSA sent to R.

``spoofed-empty:<R>``
    Every router holds R's Router-LSA with no links, one past R's
    initial sequence number, as after a spoofed LSA that was never
    fought back.  Setup: that LSA sent to R's lowest-numbered neighbor.
"""

from typing import Callable, Dict, List, Mapping, Tuple, TYPE_CHECKING

import ospfmbt.testgen
from ospfmbt.model.lsa import Lsa, LsaMessage, LsType
from ospfmbt.model.engine import make_probe
from ospfmbt.model.state import NetworkState
from ospfmbt.symbolic.values import IntLike, SymInt

if TYPE_CHECKING:
    from ospfmbt.model.engine import OspfModel

SeedBuilder = Callable[['OspfModel', Mapping[int, IntLike], int],
                       Tuple[NetworkState, List[LsaMessage]]]

def _maxseq_remnant(model: 'OspfModel', init: Mapping[int, IntLike],
                    router: int) -> Tuple[NetworkState, List[LsaMessage]]:
    state = model.standard_initial_state(init)
    key = model.own_key(router)
    for other in state.routers:
        del other.lsdb[key]
    remnant = model.router_lsa(router, model.space.max)
    state.routers[router].lsdb[key] = remnant
    false_lsa = Lsa(LsType.ROUTER, router, router, SymInt(model.space.max))
    return (state, [make_probe(model.topology, router, false_lsa)])

def _spoofed_empty(model: 'OspfModel', init: Mapping[int, IntLike],
                   router: int) -> Tuple[NetworkState, List[LsaMessage]]:
    state = model.standard_initial_state(init)
    spoofed = Lsa(LsType.ROUTER, router, router,
                  SymInt.of(init[router]) + 1)
    key = model.own_key(router)
    for other in state.routers:
        other.lsdb[key] = spoofed
    neighbor = min(model.topology.neighbors(router))
    return (state, [make_probe(model.topology, neighbor, spoofed)])

SEED_KINDS: Dict[str, SeedBuilder] = {
    'maxseq-remnant': _maxseq_remnant,
    'spoofed-empty': _spoofed_empty,
}

def parse_seed(name: str) -> Tuple[str, int]:
    """
    Split a seed name into its kind and router.

    Args:
        name: A seed name such as ``maxseq-remnant:1`` or
            ``spoofed-empty:R2``

    Returns:
        (:obj:`str`, :obj:`int`): The kind and the router index

    Raises:
        :obj:`.UnknownSeedError`: The name does not describe a seed.
    """
    (kind, _, router) = name.partition(":")
    if kind not in SEED_KINDS or not router:
        raise ospfmbt.testgen.UnknownSeedError(name, sorted(SEED_KINDS))
    router = router[1:] if router[:1] in "Rr" else router
    try:
        return (kind, int(router))
    except ValueError:
        raise ospfmbt.testgen.UnknownSeedError(name,
                                               sorted(SEED_KINDS)) from None

def build_seed(name: str, model: 'OspfModel', init: Mapping[int, IntLike]
               ) -> Tuple[NetworkState, List[LsaMessage]]:
    """
    Build a seed state.

    Args:
        name: The seed name
        model: The model whose topology and LSAs the state uses
        init: Every router's initial sequence number

    Returns:
        (:obj:`.NetworkState`, :obj:`list` of :obj:`.LsaMessage`): The
        state and the messages that produce it on a deviating router
    """
    (kind, router) = parse_seed(name)
    if router not in model.topology.routers:
        raise ospfmbt.testgen.UnknownSeedError(name, sorted(SEED_KINDS))
    return SEED_KINDS[kind](model, init, router)

def seed_length(name: str) -> int:
    parse_seed(name)
    return 1
