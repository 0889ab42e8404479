# -*- coding: utf-8 -*-
# vim:set shiftwidth=4 softtabstop=4 expandtab textwidth=79:

import random
import unittest

from hypothesis import assume, given, settings
from hypothesis import strategies as st

from ospfmbt.model import MAX_SEQ, K_INIT, NonTerminationError
from ospfmbt.model.engine import OspfModel, make_probe
from ospfmbt.model.lsa import Lsa, Link, LinkKind, LsType, Ordering
from ospfmbt.model.lsa import LsaMessage
from ospfmbt.model.routing import Route, compute_routing_table
from ospfmbt.symbolic.values import SymInt
from ospfmbt.topology.named import named_topology

def false_router_lsa(lsid, ar, seq):
    return Lsa(LsType.ROUTER, lsid, ar, SymInt(seq))

class TestInitialState(unittest.TestCase):
    def test_every_router_holds_every_lsa(self):
        topo = named_topology("five")
        model = OspfModel(topo)
        state = model.standard_initial_state({r: r % 3 for r in range(5)})
        for r in topo.routers:
            keys = [lsa.key for lsa in state.lsdb(r)]
            self.assertEqual(keys, [(1, i, i) for i in range(5)] +
                             [(2, 0, 1)])
        self.assertTrue(state.is_stable())
        own = state.lsdb(1)[1]
        self.assertEqual(own.links, (Link(LinkKind.POINT_TO_POINT, 0),
                                     Link(LinkKind.POINT_TO_POINT, 2),
                                     Link(LinkKind.TRANSIT, 0)))

    def test_states_are_copied(self):
        topo = named_topology("line2")
        model = OspfModel(topo)
        state = model.standard_initial_state({0: 0, 1: 0})
        msg = make_probe(topo, 1, false_router_lsa(1, 1, 2))
        model.run_to_stable(state, msg)
        self.assertEqual(state.lsdb(0)[1].seq.value, 0)

class TestNewness(unittest.TestCase):
    def setUp(self):
        self.model = OspfModel(named_topology("line2"))

    def test_sequence_decides(self):
        a = self.model.router_lsa(0, 2)
        b = self.model.router_lsa(0, 1)
        self.assertEqual(self.model.is_newer(a, b), Ordering.NEWER)
        self.assertEqual(self.model.is_newer(b, a), Ordering.OLDER)

    def test_max_age_wins_a_tie(self):
        a = self.model.router_lsa(0, 1)
        self.assertEqual(self.model.is_newer(a._replace(max_age=True), a),
                         Ordering.NEWER)
        self.assertEqual(self.model.is_newer(a, a), Ordering.SAME)

    def test_checksum_breaks_ties(self):
        a = self.model.router_lsa(0, 1)
        b = false_router_lsa(0, 0, 1)
        forward = self.model.is_newer(a, b)
        self.assertNotEqual(forward, Ordering.SAME)
        self.assertEqual(self.model.is_newer(b, a).value, -forward.value)

class TestRouterProcedure(unittest.TestCase):
    def setUp(self):
        self.topo = named_topology("line2")
        self.model = OspfModel(self.topo)

    def run_probe(self, init, dest, lsa):
        state = self.model.standard_initial_state(init)
        return self.model.run_to_stable(state,
                                        make_probe(self.topo, dest, lsa))

    def test_fight_back(self):
        (final, trace) = self.run_probe({0: 0, 1: 0}, 1,
                                        false_router_lsa(1, 1, 2))
        for r in self.topo.routers:
            lsa = final.lsdb(r)[1]
            self.assertEqual(lsa.seq.value, 3)
            self.assertEqual(lsa.links, (Link(LinkKind.POINT_TO_POINT, 0),))
        self.assertEqual(len(trace), 2)
        self.assertFalse(trace[0].flooded)
        self.assertEqual((trace[1].src, trace[1].dest), (1, 0))

    def test_wrap_at_max_seq(self):
        (final, trace) = self.run_probe({0: 0, 1: 0}, 1,
                                        false_router_lsa(1, 1, MAX_SEQ))
        for r in self.topo.routers:
            lsa = final.lsdb(r)[1]
            self.assertEqual(lsa.seq.value, 0)
            self.assertTrue(lsa.absolute)
            self.assertFalse(lsa.max_age)
            self.assertEqual(lsa.links, (Link(LinkKind.POINT_TO_POINT, 0),))
        # the injection, the MaxAge flush and the fresh origination
        self.assertEqual(len(trace), 3)
        self.assertTrue(trace[1].lsa.max_age)

    def test_fight_back_reaching_max_seq_wraps(self):
        (final, trace) = self.run_probe({0: 0, 1: 0}, 1,
                                        false_router_lsa(1, 1, MAX_SEQ - 1))
        for r in self.topo.routers:
            lsa = final.lsdb(r)[1]
            self.assertEqual(lsa.seq.value, 0)
            self.assertTrue(lsa.absolute)
            self.assertFalse(lsa.max_age)
            self.assertEqual(lsa.links, (Link(LinkKind.POINT_TO_POINT, 0),))
        self.assertEqual(len(trace), 3)
        flush = trace[1].lsa
        self.assertTrue(flush.max_age)
        self.assertEqual(flush.seq.value, MAX_SEQ)
        self.assertEqual(flush.links, (Link(LinkKind.POINT_TO_POINT, 0),))

    def test_older_lsa_is_ignored(self):
        init = {0: 2, 1: 0}
        (final, trace) = self.run_probe(init, 1, false_router_lsa(0, 0, 1))
        expected = self.model.standard_initial_state(init)
        self.assertTrue(final.same_lsdbs(expected))
        self.assertEqual(len(trace), 1)

    def test_foreign_lsid_is_flushed(self):
        init = {0: 0, 1: 0}
        (final, _) = self.run_probe(init, 1, false_router_lsa(0, 1, 1))
        expected = self.model.standard_initial_state(init)
        self.assertTrue(final.same_lsdbs(expected))

    def test_newer_foreign_lsa_is_flooded(self):
        topo = named_topology("line3")
        model = OspfModel(topo)
        state = model.standard_initial_state({0: 0, 1: 0, 2: 0})
        # R2's LSA as sent by R0 to R1; R1 installs and floods it to R2,
        # which fights back
        msg = make_probe(topo, 1, false_router_lsa(2, 2, 1))
        (final, _) = model.run_to_stable(state, msg)
        for r in topo.routers:
            lsa = final.lsdb(r)[2]
            self.assertEqual(lsa.seq.value, 2)
            self.assertEqual(lsa.links, (Link(LinkKind.POINT_TO_POINT, 1),))

    def test_send_back_counts_per_neighbor(self):
        model = OspfModel(named_topology("line3"), resend_rounds=2)
        state = model.standard_initial_state({0: 0, 1: 0, 2: 0})
        installed = state.routers[1].lsdb[(1, 2, 2)]
        for src in (0, 2):
            msg = LsaMessage(src, 1, false_router_lsa(2, 2, 0), None, True)
            self.assertTrue(model.send_back(state, 1, msg, installed))
            self.assertTrue(model.send_back(state, 1, msg, installed))
            self.assertFalse(model.send_back(state, 1, msg, installed))
        self.assertEqual(state.resends, {(1, (1, 2, 2), 0): 2,
                                         (1, (1, 2, 2), 2): 2})
        self.assertEqual(len(state.routers[1].queue), 0)
        self.assertEqual([m.dest for r in (0, 2)
                          for m in state.routers[r].queue], [0, 0, 2, 2])

    def test_step_budget(self):
        model = OspfModel(self.topo, step_budget=1)
        state = model.standard_initial_state({0: 0, 1: 0})
        msg = make_probe(self.topo, 1, false_router_lsa(1, 1, 2))
        with self.assertRaises(NonTerminationError) as cm:
            model.run_to_stable(state, msg)
        self.assertEqual(cm.exception.steps, 1)

    def test_replay(self):
        state = self.model.standard_initial_state({0: 0, 1: 0})
        msgs = [make_probe(self.topo, 1, false_router_lsa(1, 1, 1)),
                make_probe(self.topo, 1, false_router_lsa(1, 1, 3))]
        (final, trace) = self.model.replay(state, msgs)
        # the second message reaches MaxSeqNum and wraps
        self.assertEqual(final.lsdb(0)[1].seq.value, 0)
        self.assertTrue(final.lsdb(0)[1].absolute)
        self.assertEqual(len(trace), 5)

    @settings(max_examples=1000, deadline=None)
    @given(st.lists(st.integers(0, K_INIT), min_size=5, max_size=5),
           st.integers(0, 4), st.integers(0, 4), st.integers(0, 4),
           st.integers(0, MAX_SEQ))
    def test_runs_settle(self, init, dest, ar, lsid, seq):
        topo = named_topology("five")
        model = OspfModel(topo)
        state = model.standard_initial_state(dict(enumerate(init)))
        msg = make_probe(topo, dest, false_router_lsa(lsid, ar, seq))
        (final, _) = model.run_to_stable(state, msg)
        self.assertTrue(final.is_stable())
        for r in topo.routers:
            self.assertFalse(any(lsa.max_age for lsa in final.lsdb(r)))
            own = final.routers[r].lsdb[(1, r, r)]
            self.assertEqual(own.links, model.own_links(r))

FIVE = named_topology("five")

def lsdbs(state):
    return [[(lsa.key, lsa.seq.value, lsa.max_age, lsa.links, lsa.absolute)
             for lsa in state.lsdb(r)] for r in state.topology.routers]

scenarios = st.tuples(
    st.lists(st.integers(0, K_INIT), min_size=5, max_size=5).map(
        lambda init: dict(enumerate(init))),
    st.integers(0, 4), st.integers(0, 4), st.integers(0, 4),
    st.integers(0, MAX_SEQ))

class TestSingleMessageInvariants(unittest.TestCase):
    def run_scenario(self, scenario, model=None):
        (init, dest, ar, lsid, seq) = scenario
        model = model or OspfModel(FIVE)
        state = model.standard_initial_state(init)
        msg = make_probe(FIVE, dest, false_router_lsa(lsid, ar, seq))
        return (model, state) + model.run_to_stable(state, msg)

    @settings(max_examples=1000, deadline=None)
    @given(scenarios)
    def test_runs_stay_within_the_bound(self, scenario):
        (model, start, _, trace) = self.run_scenario(scenario)
        self.assertLessEqual(len(trace), model.budget(start))

    @settings(max_examples=1000, deadline=None)
    @given(scenarios)
    def test_flooding_converges(self, scenario):
        (_, _, final, _) = self.run_scenario(scenario)
        self.assertTrue(final.is_stable())
        views = lsdbs(final)
        for view in views[1:]:
            self.assertEqual(view, views[0])

    @settings(max_examples=1000, deadline=None)
    @given(scenarios, st.data())
    def test_fight_back_is_one_past_the_false_lsa(self, scenario, data):
        (init, _, ar, _, _) = scenario
        assume(init[ar] < MAX_SEQ - 2)
        seq = data.draw(st.integers(init[ar] + 1, MAX_SEQ - 2))
        (model, _, final, _) = self.run_scenario(scenario[:3] + (ar, seq))
        for r in FIVE.routers:
            own = final.routers[r].lsdb[model.own_key(ar)]
            self.assertEqual(own.seq.value, seq + 1)
            self.assertEqual(own.links, model.own_links(ar))
            self.assertFalse(own.absolute)

    @settings(max_examples=1000, deadline=None)
    @given(scenarios, st.sampled_from([MAX_SEQ - 1, MAX_SEQ]))
    def test_max_seq_purges_and_restarts(self, scenario, seq):
        ar = scenario[2]
        (model, _, final, _) = self.run_scenario(scenario[:3] + (ar, seq))
        for r in FIVE.routers:
            own = final.routers[r].lsdb[model.own_key(ar)]
            self.assertEqual(own.seq.value, 0)
            self.assertTrue(own.absolute)
            self.assertFalse(own.max_age)
            self.assertEqual(own.links, model.own_links(ar))

    @settings(max_examples=1000, deadline=None)
    @given(scenarios)
    def test_delivery_order_does_not_matter(self, scenario):
        (_, _, final, _) = self.run_scenario(scenario)
        for seed in range(3):
            rng = random.Random(seed)
            model = OspfModel(FIVE,
                              scheduler=lambda ready: rng.choice(ready))
            (_, _, shuffled, _) = self.run_scenario(scenario, model)
            self.assertEqual(lsdbs(shuffled), lsdbs(final), seed)

    @settings(max_examples=1000, deadline=None)
    @given(scenarios)
    def test_installed_instances_change_nothing(self, scenario):
        (_, dest, ar, _, _) = scenario
        (model, _, final, _) = self.run_scenario(scenario)
        installed = final.routers[dest].lsdb[model.own_key(ar)]
        (again, trace) = model.run_to_stable(
            final, make_probe(FIVE, dest, installed))
        self.assertEqual(lsdbs(again), lsdbs(final))
        self.assertEqual(len(trace), 1)

class TestRouting(unittest.TestCase):
    def setUp(self):
        self.topo = named_topology("five")
        self.model = OspfModel(self.topo)
        self.state = self.model.standard_initial_state({r: 0 for r
                                                        in range(5)})

    def test_standard_state(self):
        table = compute_routing_table(self.state, 0)
        self.assertEqual(table[1], Route(1, 1))
        self.assertEqual(table[2], Route(2, 1))
        # across the network from R1; leaving it costs nothing
        self.assertEqual(table[3], Route(1, 2))
        self.assertEqual(set(table), {1, 2, 3, 4})

    def test_empty_lsa_cuts_links(self):
        self.state.routers[0].lsdb[(1, 1, 1)] = false_router_lsa(1, 1, 1)
        table = compute_routing_table(self.state, 0)
        self.assertNotIn(1, table)
        self.assertEqual(table[3], Route(2, 3))
