# -*- coding: utf-8 -*-
# vim:set shiftwidth=4 softtabstop=4 expandtab textwidth=79:

import os
import random
import tempfile
import unittest

from ospfmbt.model import MAX_SEQ
from ospfmbt.model.engine import OspfModel
from ospfmbt.model.lsa import Lsa, LsType
from ospfmbt.symbolic.expr import SymVar, VarRole, Var
from ospfmbt.symbolic.values import SymInt
from ospfmbt.testgen import GenerationError, GenerationLimitError
from ospfmbt.testgen import UnknownSeedError
from ospfmbt.testgen.canonical import canonicalize, key_digest
from ospfmbt.testgen.generate import Generator, extract_reachable_states
from ospfmbt.testgen.generate import unique_states, is_explored
from ospfmbt.testgen.program import replay_messages
from ospfmbt.testgen.seeds import parse_seed, build_seed
from ospfmbt.testgen.terms import SeqTerm, parse_term, seq_term
from ospfmbt.testgen.terms import INIT, MSG, NET, ABS, VALUE
from ospfmbt.testgen.testfile import Manifest, write_suite, read_suite
from ospfmbt.topology import DisconnectedTopologyError
from ospfmbt.topology.concrete import ConcreteTopology
from ospfmbt.topology.named import named_topology

def init_var(router):
    return SymVar(router, VarRole.INIT_SEQ, (router,), 0, 2)

def observed(lsas):
    return [(lsa.key, lsa.seq.value, lsa.max_age, lsa.links, lsa.absolute)
            for lsa in lsas]

class TestTerms(unittest.TestCase):
    def test_parse(self):
        self.assertEqual(parse_term("init:R1+1", 3), SeqTerm(INIT, 1, 1, 3))
        self.assertEqual(parse_term("msg:M2-1", 1), SeqTerm(MSG, 2, -1, 1))
        self.assertEqual(parse_term("net:N0+0", 0), SeqTerm(NET, 0, 0, 0))
        self.assertEqual(parse_term("abs+2", 2), SeqTerm(ABS, None, 2, 2))
        self.assertEqual(parse_term(" 4 ", 4), SeqTerm(VALUE, None, 4, 4))
        with self.assertRaises(ValueError):
            parse_term("init:1+1", 0)

    def test_str(self):
        self.assertEqual(str(SeqTerm(INIT, 1, 1, 3)), "init:R1+1")
        self.assertEqual(str(SeqTerm(MSG, 0, 0, 2)), "msg:M0+0")
        self.assertEqual(str(SeqTerm(ABS, None, 0, 0)), "abs+0")
        self.assertEqual(str(SeqTerm(VALUE, None, 3, 3)), "3")

    def test_seq_term(self):
        lsa = Lsa(LsType.ROUTER, 1, 1, SymInt(1, Var(init_var(1))) + 1)
        self.assertEqual(seq_term(lsa), SeqTerm(INIT, 1, 1, 2))
        self.assertEqual(seq_term(lsa._replace(absolute=True)),
                         SeqTerm(ABS, None, 2, 2))
        self.assertEqual(seq_term(lsa._replace(seq=SymInt(3))),
                         SeqTerm(VALUE, None, 3, 3))
        net = Lsa(LsType.NETWORK, 0, 1, SymInt(1))
        self.assertEqual(seq_term(net), SeqTerm(NET, 0, 1, 1))

class TestSeeds(unittest.TestCase):
    def setUp(self):
        self.model = OspfModel(named_topology("line3"))
        self.init = {0: 0, 1: 1, 2: 0}

    def test_parse(self):
        self.assertEqual(parse_seed("maxseq-remnant:1"),
                         ("maxseq-remnant", 1))
        self.assertEqual(parse_seed("spoofed-empty:R2"), ("spoofed-empty", 2))
        for bad in ("bogus:1", "spoofed-empty:", "spoofed-empty:x",
                    "maxseq-remnant"):
            with self.assertRaises(UnknownSeedError):
                parse_seed(bad)

    def test_maxseq_remnant(self):
        (state, setup) = build_seed("maxseq-remnant:1", self.model,
                                    self.init)
        self.assertEqual(state.routers[1].lsdb[(1, 1, 1)].seq.value, MAX_SEQ)
        for r in (0, 2):
            self.assertNotIn((1, 1, 1), state.routers[r].lsdb)
        (msg,) = setup
        self.assertEqual(msg.dest, 1)
        self.assertEqual(msg.lsa.seq.value, MAX_SEQ)

    def test_spoofed_empty(self):
        (state, setup) = build_seed("spoofed-empty:1", self.model, self.init)
        for router in state.routers:
            lsa = router.lsdb[(1, 1, 1)]
            self.assertEqual(lsa.seq.value, 2)
            self.assertEqual(lsa.links, ())
        self.assertEqual(setup[0].dest, 0)

    def test_router_out_of_range(self):
        with self.assertRaises(UnknownSeedError):
            build_seed("spoofed-empty:7", self.model, self.init)

class TestCanonicalize(unittest.TestCase):
    def setUp(self):
        self.model = OspfModel(named_topology("line2"))

    def test_concrete_values_matter(self):
        a = self.model.standard_initial_state({0: 0, 1: 0})
        b = self.model.standard_initial_state({0: 0, 1: 1})
        self.assertNotEqual(canonicalize(a), canonicalize(b))
        self.assertEqual(canonicalize(a),
                         canonicalize(self.model.standard_initial_state(
                             {0: 0, 1: 0})))

    def test_symbolic_keys_ignore_the_valuation(self):
        a = self.model.standard_initial_state(
            {r: SymInt(0, Var(init_var(r))) for r in range(2)})
        b = self.model.standard_initial_state(
            {r: SymInt(2, Var(init_var(r))) for r in range(2)})
        self.assertEqual(canonicalize(a), canonicalize(b))

    def test_message_symbols(self):
        state = self.model.standard_initial_state({0: 0, 1: 0})
        var = SymVar(2, VarRole.MSG_SEQ, (0,), 0, MAX_SEQ)
        lsa = self.model.router_lsa(1, SymInt(3, Var(var)))
        state.routers[0].lsdb[lsa.key] = lsa
        self.assertIn("rel3", canonicalize(state))
        self.assertIn("msg0+0", canonicalize(state, messages=True))

class TestGenerator(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.topology = named_topology("line2")
        cls.generator = Generator(cls.topology)
        cls.tests = cls.generator.generate_depth1()

    def test_ids_and_depth(self):
        self.assertGreater(len(self.tests), 1)
        self.assertEqual([t.id for t in self.tests],
                         [f"t1-{i:05d}" for i in range(len(self.tests))])
        for test in self.tests:
            self.assertEqual(test.depth, 1)
            self.assertEqual(len(test.probe_msgs), 1)
            self.assertEqual(test.setup_msgs, [])
            self.assertIsNone(test.start_state)

    def test_wrap_is_covered(self):
        self.assertTrue(any(lsa.absolute
                            for test in self.tests
                            for lsa in test.expected_final[1]))

    def test_tests_agree_with_a_concrete_run(self):
        model = OspfModel(self.topology)
        for test in self.tests:
            probes = [m.to_message() for m in test.probe_msgs]
            (_, final, trace) = replay_messages(model, test.initial_seqs,
                                                None, [], probes)
            for r in self.topology.routers:
                self.assertEqual(observed(test.expected_final[r]),
                                 observed(final.lsdb(r)), test.id)
            self.assertEqual(len(trace), len(test.expected_trace), test.id)

    def test_unique_states(self):
        count = unique_states(self.tests)
        self.assertGreaterEqual(count, 2)
        self.assertLessEqual(count, len(self.tests))
        self.assertEqual(unique_states(self.tests, budget=1), 1)
        reached = extract_reachable_states(self.tests)
        self.assertGreaterEqual(len(reached), count)
        digests = {key_digest(state.key) for state in reached.values()}
        self.assertLessEqual({t.final_key for t in self.tests}, digests)

    def test_every_admitted_sequence_number_is_reached(self):
        reached = extract_reachable_states(self.tests)
        keys = [state.key for state in reached.values()]
        # R0's own LSA, faked at 2 and fought back at 3; the tests alone
        # only fight back from the smallest value the path admits
        self.assertTrue(any("1,0,0 rel3" in key for key in keys))
        self.assertFalse(any(test.final_key == key_digest(key)
                             for test in self.tests for key in keys
                             if "1,0,0 rel3" in key))
        for (identity, state) in reached.items():
            self.assertEqual(identity, state.identity)
            self.assertTrue(state.witness.startswith("t1-"))

    def test_conditions_tell_states_apart(self):
        standard = self.generator.standard()
        restricted = standard._replace(condition=("R0.init >= 1",))
        explored = {standard.key: {restricted.condition}}
        self.assertFalse(is_explored(standard, explored))
        self.assertTrue(is_explored(restricted, explored))
        explored[standard.key].add(())
        self.assertTrue(is_explored(standard, explored))
        self.assertNotEqual(standard.identity, restricted.identity)

    def test_symbolic_topology(self):
        tests = Generator(symbolic=(2, 0)).generate_depth1()
        self.assertEqual(len(tests), len(self.tests))
        for test in tests:
            self.assertEqual(test.topology, self.topology)

    def test_extension(self):
        result = self.generator.systematic_extension(2)
        self.assertEqual(result.iterations[0], 1)
        depth1 = [t for t in result.tests if t.depth == 1]
        depth2 = [t for t in result.tests if t.depth == 2]
        self.assertEqual(len(depth1), len(self.tests))
        # states reached at depth 1, less the one extension started from
        standard = self.generator.standard().key
        reached = [state for state in extract_reachable_states(depth1).values()
                   if state.key != standard]
        self.assertEqual(result.iterations[1], len(reached))
        self.assertTrue(depth2)
        for test in depth2:
            self.assertTrue(test.id.startswith("t2-"))
            self.assertEqual(len(test.setup_msgs), 1)
            self.assertIsNotNone(test.start_state)

    def test_extension_from_a_seed(self):
        result = self.generator.systematic_extension(1,
                                                     ["maxseq-remnant:1"])
        self.assertEqual(result.iterations, [2])
        seeded = [t for t in result.tests if t.seed is not None]
        self.assertTrue(seeded)
        for test in seeded:
            self.assertEqual(test.depth, 2)
            self.assertEqual(len(test.setup_msgs), 1)

    def test_arbitrary_prefix_is_reproducible(self):
        a = self.generator.arbitrary_prefix(2, seed=7, prefixes=2)
        b = self.generator.arbitrary_prefix(2, seed=7, prefixes=2)
        self.assertEqual(a, b)
        for test in a:
            self.assertEqual(test.depth, 3)
            self.assertEqual(len(test.setup_msgs), 2)
        limited = self.generator.arbitrary_prefix(2, seed=7, prefixes=2,
                                                  max_tests=3)
        self.assertEqual(limited, a[:3])

    def test_prefix_states_are_built_once(self):
        start = self.generator.random_prefix(random.Random(3), 2)
        self.assertIsNotNone(start.snapshot)
        self.assertEqual(start.depth, 2)
        self.assertEqual(len(start.setup), 2)
        self.assertEqual(len(start.snapshot.setup), 2)
        self.assertEqual(start.key, canonicalize(start.snapshot.state))
        self.assertEqual(
            self.generator.random_prefix(random.Random(3), 0).key,
            self.generator.standard().key)

    def test_arbitrary_prefix_caps_and_replays(self):
        tests = self.generator.arbitrary_prefix(2, seed=11, prefixes=4,
                                                per_prefix=2)
        self.assertTrue(tests)
        per_setup = dict()
        for test in tests:
            setup = repr(test.setup_msgs)
            per_setup[setup] = per_setup.get(setup, 0) + 1
        self.assertLessEqual(max(per_setup.values()), 2)
        model = OspfModel(self.topology)
        for test in tests:
            setup = [m.to_message() for m in test.setup_msgs]
            probes = [m.to_message() for m in test.probe_msgs]
            (begin, final, trace) = replay_messages(model, test.initial_seqs,
                                                    None, setup, probes)
            for r in self.topology.routers:
                self.assertEqual(observed(test.start_state[r]),
                                 observed(begin.lsdb(r)), test.id)
                self.assertEqual(observed(test.expected_final[r]),
                                 observed(final.lsdb(r)), test.id)
            self.assertEqual(len(trace), len(test.expected_trace), test.id)
        self.assertEqual(self.generator.arbitrary_prefix(0, seed=1,
                                                         max_tests=3),
                         self.tests[:3])

    def test_path_limit(self):
        with self.assertRaises(GenerationLimitError) as cm:
            Generator(self.topology, max_paths=1).generate_depth1()
        self.assertEqual(cm.exception.limit, 1)

    def test_bad_arguments(self):
        with self.assertRaises(ValueError):
            Generator()
        with self.assertRaises(DisconnectedTopologyError):
            Generator(ConcreteTopology(3, [(0, 1)]))
        with self.assertRaises(ValueError):
            self.generator.systematic_extension(0)

    def test_suite_on_disk(self):
        manifest = Manifest([], {"topology": "line2"}, "0" * 64,
                            unique_states(self.tests))
        with tempfile.TemporaryDirectory() as tmp:
            write_suite(tmp, self.tests, manifest)
            self.assertTrue(os.path.exists(os.path.join(tmp,
                                                        "t1-00000.json")))
            (read, tests) = read_suite(tmp)
            self.assertEqual(read.tests, [t.id for t in self.tests])
            self.assertEqual(tests, self.tests)
            with self.assertRaises(GenerationError):
                extract_reachable_states(tests)
