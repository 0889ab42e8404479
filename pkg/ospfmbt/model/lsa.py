# -*- coding: utf-8 -*-
# vim:set shiftwidth=4 softtabstop=4 expandtab textwidth=79:

from typing import Iterable, NamedTuple, Optional, Tuple

from enum import Enum, IntEnum

from ospfmbt.symbolic.values import SymInt

class LsType(IntEnum):
    ROUTER = 1
    NETWORK = 2

class LinkKind(IntEnum):
    POINT_TO_POINT = 1
    TRANSIT = 2
    # A router listed in a Network-LSA
    ATTACHED = 3

class Ordering(Enum):
    NEWER = 1
    SAME = 0
    OLDER = -1

LsaKey = Tuple[int, int, int]

class Link(NamedTuple):
    kind: LinkKind
    target: int
    cost: int = 1

    def __str__(self) -> str:
        if self.kind == LinkKind.POINT_TO_POINT:
            return f"p2p:R{self.target}"
        if self.kind == LinkKind.TRANSIT:
            return f"transit:N{self.target}"
        return f"attached:R{self.target}"

def sort_links(links: Iterable[Link]) -> Tuple[Link, ...]:
    return tuple(sorted(set(links)))

class Lsa(NamedTuple):
    """
    A link state advertisement as the model sees it.

    ``lsid`` is a router index for Router-LSAs and a network index for
    Network-LSAs.  ``absolute`` marks a sequence number counted from
    InitialSeqNum after a wrap rather than from the normalized base.
    """
    ls_type: LsType
    lsid: int
    ar: int
    seq: SymInt
    max_age: bool = False
    links: Tuple[Link, ...] = ()
    absolute: bool = False

    @property
    def key(self) -> LsaKey:
        return (int(self.ls_type), self.lsid, self.ar)

    def describe(self) -> str:
        kind = "router" if self.ls_type == LsType.ROUTER else "network"
        age = " maxage" if self.max_age else ""
        links = ", ".join(str(link) for link in self.links)
        return (f"{kind} lsid={self.lsid} ar=R{self.ar} seq={self.seq.value}"
                f"{age} [{links}]")

class LsaMessage(NamedTuple):
    """
    An LSA travelling from ``src`` to ``dest``.

    ``net`` is the multi-access network the message travelled on, if
    any; ``flooded`` distinguishes flooding traffic from unicast
    injections.
    """
    src: int
    dest: int
    lsa: Lsa
    net: Optional[int] = None
    flooded: bool = False

    def describe(self) -> str:
        via = f" via N{self.net}" if self.net is not None else ""
        how = "flood" if self.flooded else "unicast"
        return (f"R{self.src} -> R{self.dest}{via} ({how}): "
                f"{self.lsa.describe()}")

class SeqSpace(NamedTuple):
    """The sequence-number domain a model instance runs in"""
    initial: int
    max: int
