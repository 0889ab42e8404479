# -*- coding: utf-8 -*-
# vim:set shiftwidth=4 softtabstop=4 expandtab textwidth=79:
"""
Sequence-number normalization and the mapping of test terms onto the
wire.

The model counts sequence numbers from 0 and wraps at a small MaxSeq.
Before a test, every router is made to originate its own LSA at
``base + m_r``, where ``m_r`` is its initial sequence number in the
test: an empty instance of the LSA at one less is sent to the router,
which fights back one higher.

``top`` puts the base so that the model's MaxSeq lands on MaxSeqNum and
the wrap happens where the model expects it.  ``minimal`` uses the
smallest base that still makes every router fight back; tests that
reach MaxSeq are not meaningful in that mode.
"""

from typing import Dict, List, Mapping, NamedTuple, Optional

import logging

import ospfmbt.sut
from ospfmbt.exceptions import ConfigError
from ospfmbt.model import MAX_SEQ
from ospfmbt.model.lsa import Lsa, LsType
from ospfmbt.symbolic.values import SymInt
from ospfmbt.testgen.terms import ABS, MSG, NET
from ospfmbt.testgen.testfile import LsaRecord
from ospfmbt.topology.concrete import ConcreteTopology, resolve_route
from ospfmbt.sut.adapter import SutAdapter, message_packet
from ospfmbt.wire import INITIAL_SEQ_NUM, MAX_SEQ_NUM
from ospfmbt.wire.seq import model_to_wire_seq, to_signed, to_unsigned

logger = logging.getLogger(__name__)

TOP = "top"
MINIMAL = "minimal"
MODES = (TOP, MINIMAL)

class WireBases(NamedTuple):
    """
    Where a test's sequence numbers sit on the wire.

    Attributes:
        mode: The normalization mode
        base: The unsigned wire value of model sequence number 0
        max_seq: The model's MaxSeq
        nets: The sequence number of every Network-LSA after
            normalization, by network
    """
    mode: str
    base: int
    max_seq: int
    nets: Dict[int, int]

    def target(self, initial: int) -> int:
        return to_unsigned(to_signed(self.base) + initial)

def _seq_of(adapter: SutAdapter, router: int, key: tuple) -> Optional[int]:
    for lsa in adapter.read_lsdb(router):
        if lsa.key == key and not lsa.max_age:
            return lsa.seq
    return None

def choose_base(mode: str, current: Mapping[int, int],
                initial_seqs: Mapping[int, int], max_seq: int) -> int:
    """
    The signed wire value model sequence number 0 is moved to.  ``current``
    holds the wire sequence numbers the routers' own LSAs have now.
    """
    if mode == TOP:
        return to_signed(MAX_SEQ_NUM) - max_seq
    if mode == MINIMAL:
        return max(to_signed(current[r]) + 2 - initial_seqs[r]
                   for r in current)
    raise ConfigError("normalization", f"`{mode}' is not one of "
                      f"{', '.join(MODES)}")

def normalize_sequence_numbers(adapter: SutAdapter,
                               topology: ConcreteTopology,
                               initial_seqs: Mapping[int, int],
                               mode: str = TOP, timeout: float = 10.0,
                               attacker: int = 0,
                               max_seq: int = MAX_SEQ) -> WireBases:
    """
    Move every router's own LSA to ``base + initial_seqs[r]``.

    Args:
        adapter: The system under test, freshly reset on ``topology``
        topology: The topology
        initial_seqs: The model initial sequence number of every router
        mode: ``top`` or ``minimal``
        timeout: Passed to :meth:`.SutAdapter.await_stable`
        attacker: The router the injections are routed from
        max_seq: The model's MaxSeq

    Returns:
        :obj:`WireBases`: The base and the Network-LSA snapshot

    Raises:
        :obj:`.NormalizationError`: Some router does not hold the
            expected instance afterwards.
        :obj:`.ConfigError`: ``mode`` is not known.
    """
    current = dict()
    for r in topology.routers:
        seq = _seq_of(adapter, r, (int(LsType.ROUTER), r, r))
        if seq is None:
            raise ospfmbt.sut.NormalizationError(r, r, 0, "nothing")
        current[r] = seq
    base = choose_base(mode, current, initial_seqs, max_seq)
    targets = {r: base + initial_seqs[r] for r in topology.routers}

    for r in topology.routers:
        if targets[r] - 1 <= to_signed(current[r]):
            raise ospfmbt.sut.NormalizationError(
                r, r, to_unsigned(targets[r]), f"{current[r]:#010x}")
        lsa = Lsa(LsType.ROUTER, r, r, SymInt(0))
        src = resolve_route(topology, attacker, r)
        packet = message_packet(src, lsa, to_unsigned(targets[r] - 1),
                                topology.dr)
        adapter.inject(packet, r)
        adapter.await_stable(timeout)

    for router in topology.routers:
        for r in topology.routers:
            seq = _seq_of(adapter, router, (int(LsType.ROUTER), r, r))
            if seq is None or to_signed(seq) != targets[r]:
                found = "nothing" if seq is None else f"{seq:#010x}"
                raise ospfmbt.sut.NormalizationError(
                    router, r, to_unsigned(targets[r]), found)

    nets = dict()
    for j in range(topology.m):
        dr = topology.dr[j]
        seq = _seq_of(adapter, dr, (int(LsType.NETWORK), j, dr))
        if seq is None:
            raise ospfmbt.sut.NormalizationError(dr, dr, 0,
                                                 f"no LSA for N{j}")
        nets[j] = seq
    bases = WireBases(mode, to_unsigned(base), max_seq, nets)
    logger.debug("normalized (%s): base %#010x", mode, bases.base)
    return bases

class SeqEvaluator:
    """
    Evaluate the sequence-number terms of a test on the wire.

    Message terms refer to the sequence numbers actually injected, which
    are appended to :attr:`injected` as the runner sends them.

    Args:
        bases: The result of normalization
    """
    def __init__(self, bases: WireBases) -> None:
        self.bases = bases
        self.injected: List[int] = list()

    def model_value(self, value: int) -> int:
        top = self.bases.mode == TOP
        return model_to_wire_seq(value, 0, self.bases.base,
                                 self.bases.max_seq if top else None)

    def wire(self, record: LsaRecord, message: Optional[int] = None) -> int:
        """
        The wire sequence number of an LSA record.

        Args:
            record: The record
            message: The index of the message the record is sent in, if
                it is being injected; a term naming that same message
                falls back to the model value

        Returns:
            :obj:`int`: The unsigned wire sequence number
        """
        term = record.seq
        if term.kind == MSG and term.index != message and \
           term.index is not None and term.index < len(self.injected):
            sent = self.injected[term.index]
            return to_unsigned(to_signed(sent) + term.offset)
        if term.kind == NET and term.index in self.bases.nets:
            snapshot = self.bases.nets[term.index]
            return to_unsigned(to_signed(snapshot) + term.offset)
        if term.kind == ABS or record.absolute:
            return to_unsigned(to_signed(INITIAL_SEQ_NUM) + term.value)
        return self.model_value(term.value)
