# -*- coding: utf-8 -*-
# vim:set shiftwidth=4 softtabstop=4 expandtab textwidth=79:
"""
The ospfmbt.sut package runs generated tests against an OSPF
implementation.

A :class:`.SutAdapter` is the only way the runner touches the system
under test: reset it, inject LS Update packets, wait for it to settle
and read back LSDBs and routing tables.  Before a test the runner moves
every router's sequence number to a known base so the model's relative
sequence numbers can be mapped onto the wire, then compares what the
routers hold with what the test expects.
"""

from typing import Sequence

class AdapterError(RuntimeError):
    """Base class for errors talking to a system under test"""

class StabilityTimeoutError(AdapterError):
    """The system under test did not settle in time"""
    _fmt = "no stable state within {} seconds"
    def __init__(self, timeout: float) -> None:
        super().__init__(self._fmt.format(timeout))
        self.timeout = timeout

class NormalizationError(AdapterError):
    """A router's sequence number did not land where normalization put it"""
    _fmt = "R{}: expected {:#010x} for the LSA of R{}, found {}"
    def __init__(self, router: int, owner: int, expected: int,
                 found: str) -> None:
        super().__init__(self._fmt.format(router, expected, owner, found))
        self.router = router
        self.owner = owner

class UndecodablePacketError(AdapterError):
    """Something read from or sent to the system under test did not parse"""

class UnknownAdapterError(AdapterError):
    """An adapter name was not recognized"""
    _fmt = "unknown adapter `{}' (known adapters: {})"
    def __init__(self, name: str, known: Sequence[str]) -> None:
        super().__init__(self._fmt.format(name, ", ".join(known)))
        self.name = name

from ospfmbt.sut.adapter import SutAdapter, ObservedLsa, message_packet
from ospfmbt.sut.adapter import register_adapter, get_adapter, adapters
from ospfmbt.sut.inprocess import InProcessAdapter
from ospfmbt.sut.remote import RemoteCliAdapter
from ospfmbt.sut.normalize import WireBases, SeqEvaluator, TOP, MINIMAL
from ospfmbt.sut.normalize import normalize_sequence_numbers
from ospfmbt.sut.compare import Diff, compare_states, compare_routes
from ospfmbt.sut.compare import format_trace_entry
from ospfmbt.sut.runner import Outcome, Verdict, run_test, run_suite
from ospfmbt.sut.report import write_verdict, read_verdicts, render_report
from ospfmbt.sut.report import write_report, exit_status
