# -*- coding: utf-8 -*-
# vim:set shiftwidth=4 softtabstop=4 expandtab textwidth=79:

from typing import FrozenSet, List, Optional

from dataclasses import dataclass
from enum import Enum

import ospfmbt.mutant

class DeviationId(Enum):
    """
    The known deviations.  The value is the id used on the command line,
    the description says what the deviating router does.
    """
    D1 = ("D1", "no InitialSeqNum origination after a MaxSeqNum flush")
    D2 = ("D2", "MaxSeqNum flush carries the router's own links")
    D3 = ("D3", "LSDB keyed by type and LSID only")
    D4 = ("D4", "fight-back against an older LSA with LSID != AR")
    D5 = ("D5", "neighbor re-sends a false LSA after each fight-back")
    D6 = ("D6", "MaxAge fight-back loop for MaxSeqNum-1 with LSID != AR")
    D7 = ("D7", "re-flooding of an LSA unicast by the DR")
    Q1 = ("Q1", "flooding before the self-origination check")

    def __init__(self, ident: str, description: str) -> None:
        self.ident = ident
        self.description = description

    @classmethod
    def lookup(cls, name: str) -> 'DeviationId':
        try:
            return cls[name.strip().upper()]
        except KeyError:
            raise ospfmbt.mutant.UnknownDeviationError(
                name, [d.ident for d in cls]) from None

@dataclass(frozen=True)
class MutantConfig:
    """
    The deviations a mutant enables.

    Attributes:
        enabled: The deviations; empty for the reference behavior
        affected: The routers that deviate; every router when
            :obj:`None`
    """
    enabled: FrozenSet[DeviationId] = frozenset()
    affected: Optional[FrozenSet[int]] = None

    def has(self, deviation: DeviationId, router: int) -> bool:
        return deviation in self.enabled and \
            (self.affected is None or router in self.affected)

    @property
    def pristine(self) -> bool:
        return not self.enabled

    def __str__(self) -> str:
        return format_mutant_spec(self)

PRISTINE = MutantConfig()

_PRISTINE_NAMES = ("", "none", "pristine")

def parse_mutant_spec(spec: str) -> MutantConfig:
    """
    Parse a mutant description.

    Args:
        spec: Deviation ids joined by ``+``, optionally followed by
            ``@`` and a comma-separated router list, e.g. ``D2+D5`` or
            ``d1@R0,R1``.  ``none`` and ``pristine`` stand for no
            deviation.

    Returns:
        :obj:`MutantConfig`: The configuration

    Raises:
        :obj:`.UnknownDeviationError`: A deviation id is not known.
        :obj:`.MutantSpecError`: The router list is malformed.
    """
    (ids, _, routers) = spec.strip().partition("@")
    enabled: FrozenSet[DeviationId] = frozenset()
    if ids.strip().lower() not in _PRISTINE_NAMES:
        enabled = frozenset(DeviationId.lookup(name)
                            for name in ids.split("+"))
    affected = None
    if routers:
        indexes = set()
        for name in routers.split(","):
            name = name.strip()
            if name[:1] in ("R", "r"):
                name = name[1:]
            if not name.isdigit():
                raise ospfmbt.mutant.MutantSpecError(
                    spec, f"`{routers}' is not a router list")
            indexes.add(int(name))
        affected = frozenset(indexes)
    return MutantConfig(enabled, affected)

def format_mutant_spec(config: MutantConfig) -> str:
    if config.pristine:
        return "pristine"
    order = list(DeviationId)
    spec = "+".join(d.ident for d in sorted(config.enabled, key=order.index))
    if config.affected is not None:
        spec += "@" + ",".join(f"R{r}" for r in sorted(config.affected))
    return spec

def deviation_catalog() -> List[MutantConfig]:
    """Every single-deviation configuration, in id order"""
    return [MutantConfig(frozenset([d])) for d in DeviationId]
