# -*- coding: utf-8 -*-
# vim:set shiftwidth=4 softtabstop=4 expandtab textwidth=79:
"""
Running one test against a system under test.

A test is run in five steps: reset the routers, normalize their sequence
numbers, send the setup messages and check that the routers reached the
test's start state, send the probes, and compare every router's LSDB
with the expected final state.  Routing tables are compared as well but
only reported; they do not decide the outcome.
"""

from typing import Any, Callable, Collection, Dict, Iterable, List, Optional

from dataclasses import dataclass, field
from enum import Enum

import logging

import ospfmbt.sut
from ospfmbt.model.routing import Route, compute_routing_table
from ospfmbt.model.state import NetworkState
from ospfmbt.sut.adapter import SutAdapter, ObservedLsa, message_packet
from ospfmbt.sut.compare import Diff, compare_states, compare_routes
from ospfmbt.sut.compare import format_trace_entry
from ospfmbt.sut.normalize import SeqEvaluator, TOP
from ospfmbt.sut.normalize import normalize_sequence_numbers
from ospfmbt.testgen.testfile import TestFile, StateRecord, MessageRecord
from ospfmbt.topology.concrete import ConcreteTopology
from ospfmbt.wire import WireError

logger = logging.getLogger(__name__)

class Outcome(Enum):
    PASS = "pass"
    FAIL = "fail"
    INCONCLUSIVE = "inconclusive"

@dataclass
class Verdict:
    """
    The result of one test.

    ``model_trace`` and ``sut_trace`` list the messages exchanged after
    the probes were sent, in the form of :func:`.format_trace_entry`.
    """
    test_id: str
    outcome: Outcome
    diffs: List[Diff] = field(default_factory=list)
    route_diffs: List[Diff] = field(default_factory=list)
    model_trace: List[str] = field(default_factory=list)
    sut_trace: List[str] = field(default_factory=list)
    reason: str = ""

    def to_dict(self) -> Dict[str, Any]:
        return {
            'test_id': self.test_id,
            'outcome': self.outcome.value,
            'reason': self.reason,
            'diffs': [d.to_dict() for d in self.diffs],
            'route_diffs': [d.to_dict() for d in self.route_diffs],
            'model_trace': list(self.model_trace),
            'sut_trace': list(self.sut_trace),
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'Verdict':
        return cls(data['test_id'], Outcome(data['outcome']),
                   [Diff.from_dict(d) for d in data['diffs']],
                   [Diff.from_dict(d) for d in data['route_diffs']],
                   list(data['model_trace']), list(data['sut_trace']),
                   data.get('reason', ""))

def observe(adapter: SutAdapter,
            topology: ConcreteTopology) -> Dict[int, List[ObservedLsa]]:
    return {r: adapter.read_lsdb(r) for r in topology.routers}

def expected_routes(topology: ConcreteTopology,
                    expected: StateRecord) -> Dict[int, Dict[int, Route]]:
    """The routing tables the expected LSDBs produce"""
    state = NetworkState(topology)
    for (r, records) in expected.items():
        for rec in records:
            state.routers[r].lsdb[rec.key] = rec.to_lsa()
    return {r: compute_routing_table(state, r) for r in topology.routers}

def _send(adapter: SutAdapter, evaluator: SeqEvaluator, index: int,
          msg: MessageRecord, topology: ConcreteTopology,
          timeout: float) -> None:
    seq = evaluator.wire(msg.lsa, index)
    adapter.inject(message_packet(msg.src, msg.lsa.to_lsa(), seq,
                                  topology.dr), msg.dest)
    evaluator.injected.append(seq)
    adapter.await_stable(timeout)

def run_test(adapter: SutAdapter, test: TestFile, mode: str = TOP,
             timeout: float = 10.0) -> Verdict:
    """
    Run a test.

    Args:
        adapter: The system under test
        test: The test
        mode: The normalization mode
        timeout: How long to wait for the routers to settle after each
            message

    Returns:
        :obj:`Verdict`: Pass when every LSDB matches; Inconclusive when
        normalization failed, the routers did not settle, or the setup did
        not reach the start state; Fail otherwise
    """
    topology = test.topology
    inconclusive = Outcome.INCONCLUSIVE
    try:
        adapter.reset_all(topology)
        bases = normalize_sequence_numbers(adapter, topology,
                                           test.initial_seqs, mode, timeout)
        evaluator = SeqEvaluator(bases)
        for (j, msg) in enumerate(test.setup_msgs):
            _send(adapter, evaluator, j, msg, topology, timeout)
        if test.start_state is not None:
            diffs = compare_states(test.start_state,
                                   observe(adapter, topology), evaluator)
            if diffs:
                return Verdict(test.id, inconclusive,
                               reason="the setup did not reach the "
                               "start state: " +
                               "; ".join(d.describe() for d in diffs))
    except (ospfmbt.sut.AdapterError, WireError) as e:
        logger.info("%s: %s", test.id, e)
        return Verdict(test.id, inconclusive, reason=str(e))

    log_start = len(adapter.message_log())
    first = len(test.setup_msgs)
    try:
        for (j, msg) in enumerate(test.probe_msgs, first):
            _send(adapter, evaluator, j, msg, topology, timeout)
    except (ospfmbt.sut.AdapterError, WireError) as e:
        logger.info("%s: %s", test.id, e)
        return Verdict(test.id, inconclusive, reason=str(e))

    observed = observe(adapter, topology)
    diffs = compare_states(test.expected_final, observed, evaluator)
    routes = compare_routes(expected_routes(topology, test.expected_final),
                            {r: adapter.read_routing_table(r)
                             for r in topology.routers})
    model_trace = [format_trace_entry(m.src, m.dest, m.lsa,
                                      evaluator.wire(m.lsa))
                   for m in test.expected_trace]
    outcome = Outcome.FAIL if diffs else Outcome.PASS
    return Verdict(test.id, outcome, diffs, routes, model_trace,
                   adapter.message_log()[log_start:])

def run_suite(adapter: SutAdapter, tests: Iterable[TestFile],
              mode: str = TOP, timeout: float = 10.0,
              skip: Collection[str] = (),
              on_verdict: Optional[Callable[[Verdict], None]] = None
              ) -> List[Verdict]:
    """
    Run tests in order.

    Args:
        adapter: The system under test
        tests: The tests
        mode: The normalization mode
        timeout: Passed to :func:`run_test`
        skip: Ids of tests that already have a verdict
        on_verdict: Called with each verdict as soon as it is known

    Returns:
        :obj:`list` of :obj:`Verdict`: The verdicts of the tests run
    """
    verdicts = list()
    for test in tests:
        if test.id in skip:
            continue
        verdict = run_test(adapter, test, mode, timeout)
        logger.info("%s: %s", test.id, verdict.outcome.value)
        if on_verdict is not None:
            on_verdict(verdict)
        verdicts.append(verdict)
    return verdicts
