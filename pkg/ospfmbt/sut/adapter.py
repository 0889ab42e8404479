# -*- coding: utf-8 -*-
# vim:set shiftwidth=4 softtabstop=4 expandtab textwidth=79:

from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple, Type

import ospfmbt.sut
import ospfmbt.wire.mapping
from ospfmbt.model.lsa import Lsa, Link, LsaKey, LsType
from ospfmbt.model.routing import Route
from ospfmbt.topology.concrete import ConcreteTopology, router_ip
from ospfmbt.wire import MAX_AGE
from ospfmbt.wire.lsa import WireLsa
from ospfmbt.wire.packet import encode_lsu_packet

class ObservedLsa(NamedTuple):
    """
    An LSA read back from a system under test.

    The identifiers are translated to router and network indexes; the
    sequence number stays the unsigned value found on the wire.
    """
    ls_type: LsType
    lsid: int
    ar: int
    seq: int
    age: int
    links: Tuple[Link, ...]
    checksum: int = 0

    @classmethod
    def from_wire(cls, wire: WireLsa) -> 'ObservedLsa':
        """
        Raises:
            :obj:`.WireError`: The LSA has no model counterpart.
        """
        lsa = ospfmbt.wire.mapping.wire_to_lsa(wire, 0)
        return cls(lsa.ls_type, lsa.lsid, lsa.ar, wire.seq, wire.age,
                   lsa.links, wire.checksum)

    @property
    def key(self) -> LsaKey:
        return (int(self.ls_type), self.lsid, self.ar)

    @property
    def max_age(self) -> bool:
        return self.age >= MAX_AGE

def message_packet(src: int, lsa: Lsa, wire_seq: int,
                   drs: Sequence[int]) -> bytes:
    """
    Encode the LS Update a neighbor sends with one LSA.

    Args:
        src: The sending router; its router ID goes in the OSPF header
        lsa: The LSA
        wire_seq: The unsigned wire sequence number
        drs: The Designated Router of every network

    Returns:
        :obj:`bytes`: The packet
    """
    wire = ospfmbt.wire.mapping.lsa_to_wire(lsa, wire_seq, drs)
    return encode_lsu_packet(router_ip(src), [wire])

class SutAdapter:
    """
    The base class of every system under test.

    Subclasses implement the methods below and are registered with
    :func:`register_adapter` under their ``ident`` and ``aliases``.

    Args:
        options: Whatever followed the adapter name in its description
        seed: Seeds any randomness the adapter uses
    """
    ident = "base-class"
    aliases: List[str] = list()

    def __init__(self, options: str = "", seed: int = 0) -> None:
        self.options = options
        self.seed = seed
        self.topology: Optional[ConcreteTopology] = None

    def reset_all(self, topology: ConcreteTopology) -> None:
        """
        Bring every router to a freshly converged state on ``topology``.
        Sequence numbers may start anywhere.
        """
        raise NotImplementedError("reset_all is not implemented")

    def inject(self, packet: bytes, ingress: int) -> None:
        """
        Deliver an LS Update to router ``ingress``.  The sender is the
        router whose ID is in the packet's OSPF header.
        """
        raise NotImplementedError("inject is not implemented")

    def await_stable(self, timeout: float) -> None:
        """
        Wait until every router is done processing.

        Raises:
            :obj:`.StabilityTimeoutError`: The routers were still busy
                after ``timeout`` seconds.
        """
        raise NotImplementedError("await_stable is not implemented")

    def read_lsdb(self, router: int) -> List[ObservedLsa]:
        raise NotImplementedError("read_lsdb is not implemented")

    def read_routing_table(self, router: int) -> Dict[int, Route]:
        raise NotImplementedError("read_routing_table is not implemented")

    def message_log(self) -> List[str]:
        """The messages the routers exchanged, if the adapter sees them"""
        return list()

    def close(self) -> None:
        pass

    def describe(self) -> str:
        if self.options:
            return f"{self.ident}:{self.options}"
        return self.ident

adapters: Dict[str, Type[SutAdapter]] = dict()

def register_adapter(adapter: Type[SutAdapter]) -> None:
    adapters[adapter.ident] = adapter
    for ident in adapter.aliases:
        adapters[ident] = adapter

def get_adapter(spec: str, seed: int = 0) -> SutAdapter:
    """
    Create an adapter from its description.

    Args:
        spec: ``<name>[:<options>]``, e.g. ``in-process``,
            ``in-process:D2+D5`` or ``external:remote-cli:lab.cfg``
        seed: Passed to the adapter

    Returns:
        :obj:`SutAdapter`: The adapter

    Raises:
        :obj:`.UnknownAdapterError`: No adapter has that name.
    """
    (name, _, options) = spec.strip().partition(":")
    if name == "external":
        (name, _, options) = options.partition(":")
    try:
        cls = adapters[name]
    except KeyError:
        raise ospfmbt.sut.UnknownAdapterError(name,
                                              sorted(adapters)) from None
    return cls(options, seed)
