# -*- coding: utf-8 -*-
# vim:set shiftwidth=4 softtabstop=4 expandtab textwidth=79:
"""
Translation between model LSAs and their wire form.

Router indexes become router IDs with :func:`.router_ip` and network
indexes become the DR's interface address on that network, so a
Router-LSA's transit links need the DR of every network.  The caller
supplies the wire sequence number; the model only knows its own frame.
"""

from typing import Sequence, Tuple

import functools

from ospfmbt.wire import INITIAL_SEQ_NUM, MAX_SEQ_NUM, MAX_AGE
from ospfmbt.wire import ROUTER_LSA, NETWORK_LSA
from ospfmbt.wire import LINK_POINT_TO_POINT, LINK_TRANSIT
from ospfmbt.wire import WireError
from ospfmbt.wire.lsa import WireLsa, RouterBody, RouterLinkEntry
from ospfmbt.wire.lsa import NetworkBody, finalize_lsa
from ospfmbt.topology.concrete import router_ip, router_index
from ospfmbt.topology.concrete import network_ip, network_index
from ospfmbt.model.lsa import Lsa, Link, LinkKind, LsType, sort_links
from ospfmbt.symbolic.values import SymInt

def _router_entry(router: int, link: Link,
                  drs: Sequence[int]) -> RouterLinkEntry:
    if link.kind == LinkKind.POINT_TO_POINT:
        return RouterLinkEntry(router_ip(link.target), router_ip(router),
                               LINK_POINT_TO_POINT, link.cost)
    if link.kind == LinkKind.TRANSIT:
        dr = drs[link.target]
        return RouterLinkEntry(network_ip(link.target, dr),
                               network_ip(link.target, router),
                               LINK_TRANSIT, link.cost)
    raise WireError(f"link kind {link.kind.name} cannot appear "
                    "in a Router-LSA")

def lsa_to_wire(lsa: Lsa, seq: int, drs: Sequence[int]) -> WireLsa:
    """
    Build the finalized wire form of a model LSA.

    Args:
        lsa: The model LSA
        seq: The unsigned wire sequence number to use
        drs: The Designated Router of every network of the topology

    Returns:
        :obj:`.WireLsa`: The LSA with length and checksum filled in
    """
    age = MAX_AGE if lsa.max_age else 0
    if lsa.ls_type == LsType.ROUTER:
        body = RouterBody(tuple(_router_entry(lsa.ar, link, drs)
                                for link in lsa.links))
        wire = WireLsa(ROUTER_LSA, router_ip(lsa.lsid), router_ip(lsa.ar),
                       seq, body, age)
    else:
        attached = tuple(router_ip(link.target) for link in lsa.links)
        wire = WireLsa(NETWORK_LSA, network_ip(lsa.lsid, lsa.ar),
                       router_ip(lsa.ar), seq, NetworkBody(attached), age)
    return finalize_lsa(wire)

def wire_to_lsa(wire: WireLsa, seq: int) -> Lsa:
    """
    Interpret a decoded wire LSA in model terms.

    Args:
        wire: The decoded LSA
        seq: The model sequence number the caller mapped the wire value to

    Returns:
        :obj:`.Lsa`: The model LSA

    Raises:
        :obj:`.WireError`: The LSA is not a Router-LSA or Network-LSA, or
            carries addresses outside the tool's address plan.
    """
    try:
        ar = router_index(wire.adv_router)
        if wire.ls_type == ROUTER_LSA and isinstance(wire.body, RouterBody):
            links = []
            for entry in wire.body.links:
                if entry.link_type == LINK_POINT_TO_POINT:
                    links.append(Link(LinkKind.POINT_TO_POINT,
                                      router_index(entry.link_id),
                                      entry.metric))
                elif entry.link_type == LINK_TRANSIT:
                    (net, _) = network_index(entry.link_id)
                    links.append(Link(LinkKind.TRANSIT, net, entry.metric))
                else:
                    raise WireError(f"unsupported link type {entry.link_type}")
            return Lsa(LsType.ROUTER, router_index(wire.lsid), ar,
                       SymInt(seq), wire.age >= MAX_AGE, sort_links(links))
        if wire.ls_type == NETWORK_LSA and isinstance(wire.body, NetworkBody):
            (net, _) = network_index(wire.lsid)
            links = [Link(LinkKind.ATTACHED, router_index(addr), 1)
                     for addr in wire.body.attached]
            return Lsa(LsType.NETWORK, net, ar, SymInt(seq),
                       wire.age >= MAX_AGE, sort_links(links))
    except ValueError as e:
        raise WireError(str(e)) from e
    raise WireError(f"LS type {wire.ls_type} has no model counterpart")

@functools.lru_cache(maxsize=4096)
def _canonical(ls_type: LsType, lsid: int, ar: int, links: Tuple[Link, ...],
               at_max: bool, drs: Tuple[int, ...]) -> int:
    lsa = Lsa(ls_type, lsid, ar, SymInt(0), False, links)
    seq = MAX_SEQ_NUM if at_max else INITIAL_SEQ_NUM
    return lsa_to_wire(lsa, seq, drs).checksum

def canonical_checksum(lsa: Lsa, at_max: bool, drs: Sequence[int]) -> int:
    """
    The LS checksum of the canonical encoding used to order two instances
    with equal sequence numbers.

    The encoding has LS age 0 and the sequence number field set to
    MaxSeqNum when ``at_max`` is set, else InitialSeqNum, so the result
    is the same in every sequence frame.

    Args:
        lsa: The LSA
        at_max: Whether the instances being compared are at MaxSeqNum
        drs: The Designated Router of every network

    Returns:
        :obj:`int`: The 16-bit checksum
    """
    return _canonical(lsa.ls_type, lsa.lsid, lsa.ar, lsa.links, at_max,
                      tuple(drs))
