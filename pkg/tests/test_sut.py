# -*- coding: utf-8 -*-
# vim:set shiftwidth=4 softtabstop=4 expandtab textwidth=79:

import json
import os
import tempfile
import unittest

from ospfmbt.exceptions import ConfigError
from ospfmbt.model.lsa import Link, LinkKind, LsType
from ospfmbt.model.routing import Route
from ospfmbt.mutant import MutantSpecError, UnknownDeviationError
from ospfmbt.sut import AdapterError, NormalizationError
from ospfmbt.sut import StabilityTimeoutError, UnknownAdapterError
from ospfmbt.sut.adapter import SutAdapter, ObservedLsa, get_adapter
from ospfmbt.sut.compare import Diff, MISSING, EXTRA, MISMATCH
from ospfmbt.sut.compare import compare_states, compare_routes
from ospfmbt.sut.inprocess import InProcessAdapter, sut_to_wire
from ospfmbt.sut.normalize import WireBases, SeqEvaluator, TOP, MINIMAL
from ospfmbt.sut.normalize import normalize_sequence_numbers, choose_base
from ospfmbt.sut.remote import RemoteCliAdapter
from ospfmbt.sut.report import write_verdict, read_verdicts, exit_status
from ospfmbt.sut.report import render_report, write_report, SUMMARY_NAME
from ospfmbt.sut.runner import Outcome, Verdict, run_test, run_suite
from ospfmbt.testgen.generate import Generator
from ospfmbt.testgen.terms import SeqTerm, INIT, MSG, NET, ABS, VALUE
from ospfmbt.testgen.testfile import LsaRecord
from ospfmbt.topology.named import named_topology
from ospfmbt.wire import INITIAL_SEQ_NUM, MAX_SEQ_NUM
from ospfmbt.wire.seq import to_signed, to_unsigned

TOP_BASE = to_unsigned(to_signed(MAX_SEQ_NUM) - 4)

def record(term, links=(), max_age=False, lsid=1, ar=1):
    return LsaRecord(LsType.ROUTER, lsid, ar, term, max_age, tuple(links),
                     term.kind == ABS)

def observed(seq, links=(), age=0, lsid=1, ar=1):
    return ObservedLsa(LsType.ROUTER, lsid, ar, seq, age, tuple(links))

class TestAdapterRegistry(unittest.TestCase):
    def test_names(self):
        self.assertIsInstance(get_adapter("in-process"), InProcessAdapter)
        adapter = get_adapter("model:D1+D5@R1", seed=4)
        self.assertIsInstance(adapter, InProcessAdapter)
        self.assertEqual(adapter.seed, 4)
        self.assertEqual(adapter.describe(), "in-process:D1+D5@R1")
        remote = get_adapter("external:remote-cli:lab.cfg")
        self.assertIsInstance(remote, RemoteCliAdapter)
        self.assertEqual(remote.lab, "lab.cfg")

    def test_errors(self):
        with self.assertRaises(UnknownAdapterError):
            get_adapter("nope")
        with self.assertRaises(UnknownDeviationError):
            get_adapter("in-process:D9")
        with self.assertRaises(MutantSpecError):
            get_adapter("in-process:D1@R1,x")

    def test_unreset(self):
        with self.assertRaises(AdapterError):
            InProcessAdapter().read_lsdb(0)

class TestNormalization(unittest.TestCase):
    def setUp(self):
        self.topology = named_topology("lan3")
        self.adapter = InProcessAdapter(seed=3)
        self.adapter.reset_all(self.topology)
        self.init = {0: 1, 1: 2, 2: 0}

    def own_seqs(self, router):
        return {lsa.ar: lsa.seq for lsa in self.adapter.read_lsdb(router)
                if lsa.ls_type == LsType.ROUTER}

    def test_top(self):
        bases = normalize_sequence_numbers(self.adapter, self.topology,
                                           self.init, TOP)
        self.assertEqual(bases.base, TOP_BASE)
        for router in self.topology.routers:
            self.assertEqual(self.own_seqs(router),
                             {0: TOP_BASE + 1, 1: TOP_BASE + 2, 2: TOP_BASE})
        self.assertEqual(set(bases.nets), {0})
        # the Network-LSA is left where the reset put it
        (net,) = [lsa for lsa in self.adapter.read_lsdb(0)
                  if lsa.ls_type == LsType.NETWORK]
        self.assertEqual(bases.nets[0], net.seq)
        self.assertLess(to_signed(net.seq),
                        to_signed(sut_to_wire(0x100)))

    def test_minimal(self):
        before = self.own_seqs(0)
        bases = normalize_sequence_numbers(self.adapter, self.topology,
                                           self.init, MINIMAL)
        self.assertLess(to_signed(bases.base), to_signed(TOP_BASE))
        for router in self.topology.routers:
            for r, seq in self.own_seqs(router).items():
                self.assertEqual(seq, bases.target(self.init[r]))
                self.assertGreater(to_signed(seq), to_signed(before[r]))

    def test_minimal_base_arithmetic(self):
        current = {0: 0x80000005, 1: 0x8000000f}
        base = choose_base(MINIMAL, current, {0: 2, 1: 0}, 4)
        # the injected instances land one above the injection
        self.assertEqual(to_unsigned(base + 2 - 1), 0x80000012)
        self.assertEqual(to_unsigned(base + 0 - 1), 0x80000010)
        self.assertEqual(to_unsigned(base + 2), 0x80000013)
        self.assertEqual(to_unsigned(base), 0x80000011)

    def test_unknown_mode(self):
        with self.assertRaises(ConfigError):
            normalize_sequence_numbers(self.adapter, self.topology,
                                       self.init, "middle")

    def test_missing_lsa(self):
        del self.adapter.state.routers[1].lsdb[(1, 1, 1)]
        with self.assertRaises(NormalizationError):
            normalize_sequence_numbers(self.adapter, self.topology,
                                       self.init)

class TestSeqEvaluator(unittest.TestCase):
    def setUp(self):
        self.evaluator = SeqEvaluator(WireBases(TOP, TOP_BASE, 4,
                                                {0: 0x80000010}))

    def test_model_values(self):
        wire = self.evaluator.wire
        self.assertEqual(wire(record(SeqTerm(VALUE, None, 4, 4))),
                         MAX_SEQ_NUM)
        self.assertEqual(wire(record(SeqTerm(VALUE, None, 1, 1))),
                         TOP_BASE + 1)
        self.assertEqual(wire(record(SeqTerm(INIT, 1, 1, 3))), TOP_BASE + 3)

    def test_snapshots(self):
        wire = self.evaluator.wire
        self.assertEqual(wire(record(SeqTerm(ABS, None, 0, 0))),
                         INITIAL_SEQ_NUM)
        self.assertEqual(wire(record(SeqTerm(NET, 0, 1, 1))), 0x80000011)

    def test_message_terms(self):
        term = SeqTerm(MSG, 0, 1, 3)
        self.evaluator.injected.append(TOP_BASE + 1)
        self.assertEqual(self.evaluator.wire(record(term)), TOP_BASE + 2)
        # a term naming the message being built uses its model value
        self.assertEqual(self.evaluator.wire(record(term), 0), TOP_BASE + 3)
        self.assertEqual(self.evaluator.wire(record(SeqTerm(MSG, 1, 0, 2))),
                         TOP_BASE + 2)

class TestCompare(unittest.TestCase):
    def setUp(self):
        self.evaluator = SeqEvaluator(WireBases(TOP, TOP_BASE, 4, {}))
        self.link = Link(LinkKind.POINT_TO_POINT, 0)

    def test_equal(self):
        expected = {0: [record(SeqTerm(VALUE, None, 1, 1), [self.link])]}
        have = {0: [observed(TOP_BASE + 1, [self.link])]}
        self.assertEqual(compare_states(expected, have, self.evaluator), [])

    def test_differences(self):
        expected = {0: [record(SeqTerm(VALUE, None, 1, 1), [self.link]),
                        record(SeqTerm(VALUE, None, 0, 0), lsid=0, ar=0)]}
        have = {0: [observed(TOP_BASE + 2, [], age=3600),
                    observed(TOP_BASE, lsid=2, ar=2)]}
        diffs = compare_states(expected, have, self.evaluator)
        self.assertEqual([(d.field, d.kind) for d in diffs],
                         [("lsa", MISSING), ("seq", MISMATCH),
                          ("max_age", MISMATCH), ("links", MISMATCH),
                          ("lsa", EXTRA)])
        self.assertTrue(all(d.router == 0 for d in diffs))
        self.assertEqual(Diff.from_dict(diffs[1].to_dict()), diffs[1])

    def test_routes(self):
        diffs = compare_routes({0: {1: Route(1, 1), 2: Route(1, 2)}},
                               {0: {1: Route(1, 1)}})
        (diff,) = diffs
        self.assertEqual(diff.key, "R2")
        self.assertEqual(diff.observed, "unreachable")

class BrokenAdapter(SutAdapter):
    ident = "broken"

    def reset_all(self, topology):
        raise AdapterError("the lab is down")

class TestRunner(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.generator = Generator(named_topology("line2"))
        cls.tests = cls.generator.generate_depth1()

    def test_pristine_passes(self):
        verdicts = run_suite(InProcessAdapter(seed=1), self.tests)
        self.assertEqual([v.outcome for v in verdicts],
                         [Outcome.PASS] * len(self.tests))
        self.assertEqual(exit_status(verdicts), 0)

    def test_missing_origination_fails(self):
        verdicts = run_suite(InProcessAdapter("D1"), self.tests)
        failed = [v for v in verdicts if v.outcome == Outcome.FAIL]
        self.assertTrue(failed)
        self.assertEqual(exit_status(verdicts), 1)
        for verdict in failed:
            self.assertTrue(verdict.diffs)
            self.assertTrue(verdict.model_trace)

    def test_skip_and_callback(self):
        seen = list()
        verdicts = run_suite(InProcessAdapter(), self.tests,
                             skip={self.tests[0].id},
                             on_verdict=seen.append)
        self.assertEqual(len(verdicts), len(self.tests) - 1)
        self.assertEqual(seen, verdicts)

    def test_adapter_errors_are_inconclusive(self):
        verdict = run_test(BrokenAdapter(), self.tests[0])
        self.assertEqual(verdict.outcome, Outcome.INCONCLUSIVE)
        self.assertEqual(verdict.reason, "the lab is down")
        self.assertEqual(exit_status([verdict]), 2)

    def test_unreachable_start_state(self):
        result = self.generator.systematic_extension(1, ["maxseq-remnant:1"])
        seeded = next(t for t in result.tests if t.seed is not None)
        verdict = run_test(InProcessAdapter(), seeded)
        self.assertEqual(verdict.outcome, Outcome.INCONCLUSIVE)
        self.assertTrue(verdict.reason.startswith(
            "the setup did not reach the start state"))
        # a router that skips the origination after a wrap gets there
        verdict = run_test(InProcessAdapter("D1"), seeded)
        self.assertNotEqual(verdict.outcome, Outcome.INCONCLUSIVE)

class ScriptedRemote(RemoteCliAdapter):
    poll_interval = 0.0

    def __init__(self, seqs):
        super().__init__("scripted")
        self.topology = named_topology("line2")
        self.seqs = seqs
        self.polls = 0

    def read_lsdb(self, router):
        if router == 0:
            self.polls += 1
        seq = self.seqs[min(self.polls, len(self.seqs)) - 1]
        return [observed(seq, lsid=router, ar=router)]

class TestRemotePolling(unittest.TestCase):
    def test_settles(self):
        adapter = ScriptedRemote([1, 2, 2, 3])
        adapter.await_stable(5.0)
        self.assertEqual(adapter.polls, 3)

    def test_times_out(self):
        adapter = ScriptedRemote(list(range(100)))
        with self.assertRaises(StabilityTimeoutError):
            adapter.await_stable(0.0)

    def test_device_specific(self):
        with self.assertRaises(NotImplementedError):
            RemoteCliAdapter("lab").reset_all(named_topology("line2"))

class TestReport(unittest.TestCase):
    def setUp(self):
        diff = Diff(1, "router lsid=1 ar=R1", "seq", "0x7ffffffc",
                    "0x7ffffffd", MISMATCH)
        self.verdicts = [
            Verdict("t1-00000", Outcome.PASS),
            Verdict("t1-00001", Outcome.FAIL, [diff],
                    model_trace=["R0->R1 a"], sut_trace=["R0->R1 b"]),
            Verdict("t1-00002", Outcome.INCONCLUSIVE, reason="timeout"),
        ]

    def test_exit_status(self):
        self.assertEqual(exit_status([]), 0)
        self.assertEqual(exit_status(self.verdicts[:1]), 0)
        self.assertEqual(exit_status([self.verdicts[0], self.verdicts[2]]),
                         2)
        self.assertEqual(exit_status(self.verdicts), 1)

    def test_render(self):
        text = render_report(self.verdicts, "adapter: in-process")
        self.assertIn("3 tests: 1 pass, 1 fail, 1 inconclusive", text)
        self.assertIn("t1-00001: FAIL", text)
        self.assertIn("t1-00002: INCONCLUSIVE", text)
        self.assertNotIn("t1-00000", text)
        self.assertIn("|", text)

    def test_files(self):
        with tempfile.TemporaryDirectory() as tmp:
            for verdict in self.verdicts:
                write_verdict(tmp, verdict)
            self.assertEqual(read_verdicts(tmp),
                             {v.test_id: v for v in self.verdicts})
            write_report(tmp, self.verdicts, "in-process")
            with open(os.path.join(tmp, SUMMARY_NAME)) as f:
                data = json.load(f)
            self.assertEqual(data['counts'],
                             {"pass": 1, "fail": 1, "inconclusive": 1})
            self.assertEqual(data['failed'], ["t1-00001"])
        self.assertEqual(read_verdicts("/nonexistent"), dict())
