# -*- coding: utf-8 -*-
# vim:set shiftwidth=4 softtabstop=4 expandtab textwidth=79:
"""
The ospfmbt.topology package describes the networks the model runs on.

Routers are numbered ``0..n-1``; router 0 is the compromised router the
attacker sends from.  Routers connect through point-to-point links (at
most one per pair) and multi-access networks numbered ``0..m-1``.  Each
network's Designated Router is fixed when the topology is built.
"""

from typing import Any

class TopologyError(RuntimeError):
    """Base class for topology errors"""

class DisconnectedTopologyError(TopologyError):
    """The topology cannot host a standard initial state"""
    _fmt = "topology is not usable: {}"
    def __init__(self, reason: str) -> None:
        super().__init__(self._fmt.format(reason))
        self.reason = reason

class UnreachableRouterError(TopologyError):
    """No path leads from one router to another"""
    _fmt = "router {} is unreachable from router {}"
    def __init__(self, source: int, dest: int) -> None:
        super().__init__(self._fmt.format(dest, source))
        self.source = source
        self.dest = dest

class TopologyGuardError(TopologyError):
    """A symbolic topology is too large to enumerate"""
    _fmt = "symbolic topology ({}, {}) exceeds the enumeration guard ({}, {})"
    def __init__(self, n: int, m: int, max_n: int, max_m: int) -> None:
        super().__init__(self._fmt.format(n, m, max_n, max_m))

class TopologyFormatError(TopologyError):
    """A topology description could not be parsed"""
    _fmt = "line {}: {}"
    def __init__(self, lineno: Any, message: str) -> None:
        super().__init__(self._fmt.format(lineno, message))
        self.lineno = lineno

from ospfmbt.topology.concrete import ConcreteTopology, Interface
from ospfmbt.topology.concrete import IFACE_P2P, IFACE_TRANSIT
from ospfmbt.topology.concrete import router_ip, network_ip
from ospfmbt.topology.concrete import router_index, network_index
from ospfmbt.topology.concrete import topology_graph, resolve_route
from ospfmbt.topology.concrete import parse_topology, format_topology
from ospfmbt.topology.symbolic import SymbolicTopology, validity_axioms
from ospfmbt.topology.symbolic import concretize, enumerate_valid
from ospfmbt.topology.named import named_topology, NAMED_TOPOLOGIES
from ospfmbt.topology.named import load_topology
