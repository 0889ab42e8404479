# -*- coding: utf-8 -*-
# vim:set shiftwidth=4 softtabstop=4 expandtab textwidth=79:

import os
import tempfile
import unittest

from ospfmbt.symbolic.solver import enumerate_assignments, satisfies
from ospfmbt.topology import TopologyError, DisconnectedTopologyError
from ospfmbt.topology import TopologyFormatError, TopologyGuardError
from ospfmbt.topology.concrete import ConcreteTopology, Interface
from ospfmbt.topology.concrete import IFACE_P2P, IFACE_TRANSIT
from ospfmbt.topology.concrete import router_ip, router_index, network_ip
from ospfmbt.topology.concrete import network_index, format_ip
from ospfmbt.topology.concrete import resolve_route, parse_topology
from ospfmbt.topology.concrete import format_topology
from ospfmbt.topology.named import named_topology, load_topology
from ospfmbt.topology.named import NAMED_TOPOLOGIES, SEARCH_PATH_VAR
from ospfmbt.topology.symbolic import SymbolicTopology, validity_axioms
from ospfmbt.topology.symbolic import concretize, enumerate_valid

class TestAddresses(unittest.TestCase):
    def test_router_ids(self):
        self.assertEqual(format_ip(router_ip(0)), "10.0.0.1")
        self.assertEqual(router_index(router_ip(7)), 7)
        with self.assertRaises(ValueError):
            router_index(0x0a000000)

    def test_network_addresses(self):
        self.assertEqual(format_ip(network_ip(2, 3)), "172.16.2.4")
        self.assertEqual(network_index(network_ip(2, 3)), (2, 3))
        with self.assertRaises(ValueError):
            network_index(router_ip(1))

class TestConcreteTopology(unittest.TestCase):
    def setUp(self):
        self.five = named_topology("five")

    def test_named_topologies_are_valid(self):
        for name in NAMED_TOPOLOGIES:
            self.assertTrue(named_topology(name).is_valid(), name)

    def test_five(self):
        self.assertEqual(self.five.n, 5)
        self.assertEqual(self.five.dr, (1,))
        self.assertEqual(self.five.neighbors(3), [1, 4])
        self.assertEqual(self.five.interfaces(1),
                         [Interface(IFACE_P2P, 0), Interface(IFACE_P2P, 2),
                          Interface(IFACE_TRANSIT, 0)])

    def test_resolve_route(self):
        self.assertEqual(resolve_route(self.five, 0, 0), 0)
        self.assertEqual(resolve_route(self.five, 0, 2), 0)
        # both R1 and R2 are one hop from R0; the lower one is used
        self.assertEqual(resolve_route(self.five, 0, 4), 1)
        self.assertEqual(resolve_route(self.five, 0, 3), 1)

    def test_arrival_interface(self):
        self.assertIsNone(self.five.arrival_interface(2, 2))
        self.assertEqual(self.five.arrival_interface(0, 1),
                         Interface(IFACE_P2P, 0))
        self.assertEqual(self.five.arrival_interface(1, 4),
                         Interface(IFACE_TRANSIT, 0))
        with self.assertRaises(TopologyError):
            self.five.arrival_interface(0, 3)

    def test_disconnected(self):
        topo = ConcreteTopology(3, [(0, 1)])
        self.assertFalse(topo.is_valid())
        with self.assertRaises(DisconnectedTopologyError):
            topo.check_valid()

    def test_single_member_network(self):
        topo = ConcreteTopology(2, [(0, 1)], [[1]])
        self.assertEqual(len(topo.problems()), 1)

    def test_invalid_construction(self):
        with self.assertRaises(TopologyError):
            ConcreteTopology(2, [(1, 1)])
        with self.assertRaises(TopologyError):
            ConcreteTopology(3, nets=[[0, 1]], dr=[2])
        with self.assertRaises(TopologyError):
            ConcreteTopology(0)

    def test_equality(self):
        self.assertEqual(ConcreteTopology(2, [(1, 0)]),
                         ConcreteTopology(2, [(0, 1)]))
        self.assertNotEqual(ConcreteTopology(3, nets=[[0, 1, 2]]),
                            ConcreteTopology(3, nets=[[0, 1, 2]], dr=[2]))

class TestTopologyText(unittest.TestCase):
    def test_parse(self):
        topo = parse_topology("""
            # the usual example
            routers 5
            nets 1
            p2p 0-1 0-2 1-2 2-4
            net 0 members 1 3 4 dr 1
        """)
        self.assertEqual(topo, named_topology("five"))

    def test_format_parses_back(self):
        for name in NAMED_TOPOLOGIES:
            topo = named_topology(name)
            self.assertEqual(parse_topology(format_topology(topo)), topo)

    def test_errors(self):
        with self.assertRaises(TopologyFormatError):
            parse_topology("nets 0\n")
        with self.assertRaises(TopologyFormatError):
            parse_topology("routers two\n")
        with self.assertRaises(TopologyFormatError):
            parse_topology("routers 2\np2p 0:1\n")
        with self.assertRaises(TopologyFormatError):
            parse_topology("routers 2\nnets 2\nnet 0 members 0 1\n")
        with self.assertRaises(TopologyFormatError):
            parse_topology("routers 2\nlink 0 1\n")

    def test_load(self):
        self.assertEqual(load_topology("lan3"), named_topology("lan3"))
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "topo.txt")
            with open(path, "w") as f:
                f.write("routers 2\nnets 0\np2p 0-1\n")
            self.assertEqual(load_topology(path), named_topology("line2"))
            old = os.environ.get(SEARCH_PATH_VAR)
            os.environ[SEARCH_PATH_VAR] = tmp
            try:
                self.assertEqual(load_topology("topo.txt"),
                                 named_topology("line2"))
            finally:
                if old is None:
                    del os.environ[SEARCH_PATH_VAR]
                else:
                    os.environ[SEARCH_PATH_VAR] = old
        with self.assertRaises(TopologyError):
            load_topology("no-such-topology")

class TestSymbolicTopology(unittest.TestCase):
    def test_counts(self):
        self.assertEqual(len(list(enumerate_valid(SymbolicTopology(2, 0)))),
                         1)
        self.assertEqual(len(list(enumerate_valid(SymbolicTopology(2, 1)))),
                         2)
        # the connected graphs on three labelled nodes
        self.assertEqual(len(list(enumerate_valid(SymbolicTopology(3, 0)))),
                         4)

    def test_guard(self):
        with self.assertRaises(TopologyGuardError):
            list(enumerate_valid(SymbolicTopology(5, 0)))

    def test_axioms_match_validity(self):
        sym = SymbolicTopology(3, 1)
        axioms = validity_axioms(sym)
        for assignment in enumerate_assignments(sym.variables()):
            self.assertEqual(satisfies(assignment, axioms),
                             concretize(sym, assignment) is not None)

    def test_assignment_of(self):
        sym = SymbolicTopology(3, 1)
        topo = named_topology("lan3")
        self.assertEqual(concretize(sym, sym.assignment_of(topo)), topo)
        with self.assertRaises(TopologyError):
            sym.assignment_of(named_topology("line2"))

    def test_variable_ids(self):
        sym = SymbolicTopology(3, 1, first_id=10)
        ids = [v.id for v in sym.variables()]
        self.assertEqual(ids, list(range(10, 16)))
        self.assertEqual(sym.next_id, 16)
