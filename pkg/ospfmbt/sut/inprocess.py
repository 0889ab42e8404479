# -*- coding: utf-8 -*-
# vim:set shiftwidth=4 softtabstop=4 expandtab textwidth=79:
"""
A system under test that runs inside the tool.

The routers are the reference model over the full sequence-number range,
optionally with deviations enabled, so every test can be run and every
deviation checked without a lab.  Packets still go through the wire
codec in both directions.
"""

from typing import Dict, List, Optional

import logging
import random

import ospfmbt.sut
import ospfmbt.wire.mapping
from ospfmbt.model import SUT_SPACE, NonTerminationError
from ospfmbt.model.engine import OspfModel
from ospfmbt.model.lsa import LsaMessage
from ospfmbt.model.routing import Route, compute_routing_table
from ospfmbt.model.state import NetworkState
from ospfmbt.mutant.behavior import make_mutant
from ospfmbt.mutant.catalog import parse_mutant_spec
from ospfmbt.sut.adapter import SutAdapter, ObservedLsa, register_adapter
from ospfmbt.sut.compare import format_trace_entry
from ospfmbt.topology import TopologyError
from ospfmbt.topology.concrete import ConcreteTopology, IFACE_TRANSIT
from ospfmbt.topology.concrete import router_index
from ospfmbt.wire import INITIAL_SEQ_NUM, WireError
from ospfmbt.wire.lsa import encode_lsa, decode_lsa
from ospfmbt.wire.packet import decode_lsu_packet
from ospfmbt.wire.seq import to_signed, to_unsigned

logger = logging.getLogger(__name__)

# Initial sequence numbers are drawn from InitialSeqNum + [0, SPREAD]
SPREAD = 0xff

def sut_to_wire(value: int) -> int:
    return to_unsigned(to_signed(INITIAL_SEQ_NUM) + value)

def wire_to_sut(seq: int) -> int:
    return to_signed(seq) - to_signed(INITIAL_SEQ_NUM)

class InProcessAdapter(SutAdapter):
    """
    The model as a system under test.

    Args:
        options: A mutant description such as ``D2+D5@R1``; the
            reference behavior when empty
        seed: Seeds the initial sequence numbers drawn on every reset
    """
    ident = "in-process"
    aliases = ["inprocess", "model"]

    def __init__(self, options: str = "", seed: int = 0) -> None:
        super().__init__(options, seed)
        self.config = parse_mutant_spec(options)
        self.model: Optional[OspfModel] = None
        self.state: Optional[NetworkState] = None
        self.pending: List[LsaMessage] = list()
        self.log: List[LsaMessage] = list()

    def _require(self) -> NetworkState:
        if self.state is None:
            raise ospfmbt.sut.AdapterError("the routers were never reset")
        return self.state

    def reset_all(self, topology: ConcreteTopology) -> None:
        rng = random.Random(self.seed)
        init = {r: rng.randint(0, SPREAD) for r in topology.routers}
        nets = {j: rng.randint(0, SPREAD) for j in range(topology.m)}
        self.topology = topology
        self.model = OspfModel(topology, SUT_SPACE,
                               make_mutant(self.config))
        self.state = self.model.standard_initial_state(init, nets)
        self.pending = list()
        self.log = list()
        logger.debug("reset %s: initial sequence numbers %s",
                     self.describe(), {r: hex(sut_to_wire(v))
                                       for r, v in init.items()})

    def inject(self, packet: bytes, ingress: int) -> None:
        self._require()
        assert self.topology is not None
        try:
            lsu = decode_lsu_packet(packet)
            src = router_index(lsu.router_id)
            iface = self.topology.arrival_interface(src, ingress)
            lsas = [ospfmbt.wire.mapping.wire_to_lsa(w, wire_to_sut(w.seq))
                    for w in lsu.lsas]
        except (WireError, ValueError) as e:
            raise ospfmbt.sut.UndecodablePacketError(str(e)) from e
        except TopologyError as e:
            raise ospfmbt.sut.AdapterError(str(e)) from e
        net = iface.target if iface is not None and \
            iface.kind == IFACE_TRANSIT else None
        for lsa in lsas:
            self.pending.append(LsaMessage(src, ingress, lsa, net, False))

    def await_stable(self, timeout: float = 0.0) -> None:
        state = self._require()
        assert self.model is not None
        while self.pending:
            msg = self.pending.pop(0)
            try:
                (state, trace) = self.model.run_to_stable(state, msg)
            except NonTerminationError as e:
                self.log += e.trace
                self.pending = list()
                raise ospfmbt.sut.StabilityTimeoutError(timeout) from e
            self.log += trace
        self.state = state

    def read_lsdb(self, router: int) -> List[ObservedLsa]:
        state = self._require()
        drs = state.topology.dr
        result = list()
        for lsa in state.lsdb(router):
            try:
                wire = ospfmbt.wire.mapping.lsa_to_wire(
                    lsa, sut_to_wire(lsa.seq.value), drs)
                (decoded, _) = decode_lsa(encode_lsa(wire))
                result.append(ObservedLsa.from_wire(decoded))
            except WireError as e:
                raise ospfmbt.sut.UndecodablePacketError(str(e)) from e
        return result

    def read_routing_table(self, router: int) -> Dict[int, Route]:
        return compute_routing_table(self._require(), router)

    def message_log(self) -> List[str]:
        return [format_trace_entry(msg.src, msg.dest, msg.lsa,
                                   sut_to_wire(msg.lsa.seq.value))
                for msg in self.log]

register_adapter(InProcessAdapter)
