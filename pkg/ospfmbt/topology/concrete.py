# -*- coding: utf-8 -*-
# vim:set shiftwidth=4 softtabstop=4 expandtab textwidth=79:

from typing import Any, Dict, FrozenSet, Iterable, List, NamedTuple
from typing import Optional, Sequence, Tuple

import networkx as nx

import ospfmbt.topology

IFACE_P2P = "p2p"
IFACE_TRANSIT = "transit"

_ROUTER_IP_BASE = (10 << 24) + 1
_NETWORK_IP_BASE = (172 << 24) | (16 << 16)

class Interface(NamedTuple):
    """A router interface: a p2p link to ``target`` or attachment to net"""
    kind: str
    target: int

def router_ip(index: int) -> int:
    """
    The router ID used on the wire for a router index: 10.0.0.(index+1).

    Args:
        index: The router index

    Returns:
        :obj:`int`: The router ID as a 32-bit integer
    """
    if not 0 <= index < 254:
        raise ValueError(f"router index {index} has no address")
    return _ROUTER_IP_BASE + index

def router_index(address: int) -> int:
    index = address - _ROUTER_IP_BASE
    if not 0 <= index < 254:
        raise ValueError(f"{format_ip(address)} is not a router ID")
    return index

def network_ip(net: int, router: int) -> int:
    """
    The interface address of a router on a multi-access network:
    172.16.net.(router+1).  The network's LSA is identified by its DR's
    interface address.

    Args:
        net: The network index
        router: The router index

    Returns:
        :obj:`int`: The address as a 32-bit integer
    """
    if not 0 <= net < 256 or not 0 <= router < 254:
        raise ValueError(f"network {net}, router {router} has no address")
    return _NETWORK_IP_BASE | (net << 8) | (router + 1)

def network_index(address: int) -> Tuple[int, int]:
    if address & 0xffff0000 != _NETWORK_IP_BASE or not address & 0xff:
        raise ValueError(f"{format_ip(address)} is not a network address")
    return ((address >> 8) & 0xff, (address & 0xff) - 1)

def format_ip(address: int) -> str:
    return ".".join(str((address >> shift) & 0xff)
                    for shift in (24, 16, 8, 0))

class ConcreteTopology:
    """
    A fixed network of ``n`` routers and ``m`` multi-access networks.

    Args:
        n: The number of routers
        p2p: Point-to-point links as router index pairs
        nets: The members of each multi-access network
        dr: The Designated Router of each network.  Defaults to the
            lowest-index member.

    Raises:
        :obj:`.TopologyError`: An index is out of range, a link is a
            self-loop, or a DR is not a member of its network.
    """
    def __init__(self, n: int, p2p: Iterable[Tuple[int, int]] = (),
                 nets: Sequence[Iterable[int]] = (),
                 dr: Optional[Sequence[int]] = None) -> None:
        if n < 1:
            raise ospfmbt.topology.TopologyError("need at least one router")
        self.n = n

        links = set()
        for (a, b) in p2p:
            if a == b or not (0 <= a < n and 0 <= b < n):
                raise ospfmbt.topology.TopologyError(
                    f"invalid point-to-point link {a}-{b}")
            links.add((min(a, b), max(a, b)))
        self.p2p: FrozenSet[Tuple[int, int]] = frozenset(links)

        members = []
        for net in nets:
            routers = tuple(sorted(set(net)))
            for r in routers:
                if not 0 <= r < n:
                    raise ospfmbt.topology.TopologyError(
                        f"invalid network member {r}")
            members.append(routers)
        self.members: Tuple[Tuple[int, ...], ...] = tuple(members)
        self.m = len(self.members)

        if dr is None:
            self.dr = tuple(net[0] if net else -1 for net in self.members)
        else:
            if len(dr) != self.m:
                raise ospfmbt.topology.TopologyError(
                    f"{len(dr)} DRs given for {self.m} networks")
            for j, router in enumerate(dr):
                if router not in self.members[j]:
                    raise ospfmbt.topology.TopologyError(
                        f"DR {router} is not a member of net {j}")
            self.dr = tuple(dr)

    def _key(self) -> Tuple:
        return (self.n, tuple(sorted(self.p2p)), self.members, self.dr)

    def __eq__(self, other: Any) -> bool:
        # pylint: disable=protected-access
        return isinstance(other, ConcreteTopology) and \
               self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __repr__(self) -> str:
        return f"ConcreteTopology({format_topology(self)!r})"

    @property
    def routers(self) -> range:
        return range(self.n)

    def has_p2p(self, a: int, b: int) -> bool:
        return (min(a, b), max(a, b)) in self.p2p

    def p2p_neighbors(self, router: int) -> List[int]:
        return sorted(b if a == router else a
                      for (a, b) in self.p2p if router in (a, b))

    def nets_of(self, router: int) -> List[int]:
        return [j for j, net in enumerate(self.members) if router in net]

    def shared_nets(self, a: int, b: int) -> List[int]:
        return [j for j, net in enumerate(self.members)
                if a in net and b in net]

    def neighbors(self, router: int) -> List[int]:
        result = set(self.p2p_neighbors(router))
        for j in self.nets_of(router):
            result.update(self.members[j])
        result.discard(router)
        return sorted(result)

    def interfaces(self, router: int) -> List[Interface]:
        """
        The router's interfaces: one per p2p neighbor, then one per
        attached network, each in index order.
        """
        ifaces = [Interface(IFACE_P2P, nb)
                  for nb in self.p2p_neighbors(router)]
        ifaces += [Interface(IFACE_TRANSIT, j) for j in self.nets_of(router)]
        return ifaces

    def arrival_interface(self, src: int, dest: int) -> Optional[Interface]:
        """
        The interface of ``dest`` a message sent directly by ``src``
        arrives on: the p2p link when there is one, else the lowest
        shared network.  A router sending to itself uses no interface.
        """
        if src == dest:
            return None
        if self.has_p2p(src, dest):
            return Interface(IFACE_P2P, src)
        shared = self.shared_nets(src, dest)
        if shared:
            return Interface(IFACE_TRANSIT, shared[0])
        raise ospfmbt.topology.TopologyError(
            f"routers {src} and {dest} are not adjacent")

    def problems(self) -> List[str]:
        """Reasons this topology cannot host a standard initial state"""
        result = []
        for j, net in enumerate(self.members):
            if len(net) < 2:
                result.append(f"net {j} has fewer than two members")
        graph = topology_graph(self)
        if not nx.is_connected(graph):
            reached = nx.node_connected_component(graph, 0)
            missing = sorted(set(self.routers) - reached)
            result.append("routers " + ", ".join(str(r) for r in missing) +
                          " are disconnected from router 0")
        return result

    def is_valid(self) -> bool:
        return not self.problems()

    def check_valid(self) -> None:
        problems = self.problems()
        if problems:
            raise ospfmbt.topology.DisconnectedTopologyError(
                "; ".join(problems))

def topology_graph(topo: ConcreteTopology) -> nx.Graph:
    """
    Build the router adjacency graph: an edge for every p2p link and
    between every pair of routers sharing a network.

    Args:
        topo: The topology

    Returns:
        :obj:`networkx.Graph`: Routers as nodes
    """
    graph = nx.Graph()
    graph.add_nodes_from(topo.routers)
    graph.add_edges_from(topo.p2p)
    for net in topo.members:
        graph.add_edges_from((a, b) for i, a in enumerate(net)
                             for b in net[i + 1:])
    return graph

def resolve_route(topo: ConcreteTopology, attacker: int, dest: int) -> int:
    """
    Find the neighbor of ``dest`` through which a unicast message from
    the attacker arrives.

    Among the neighbors of ``dest`` lying on a shortest path from the
    attacker, the lowest-index one is chosen.  A message addressed to
    the attacker itself comes from the attacker.

    Args:
        topo: The topology
        attacker: The sending router
        dest: The destination router

    Returns:
        :obj:`int`: The neighbor the message arrives from

    Raises:
        :obj:`.UnreachableRouterError`: ``dest`` cannot be reached.
    """
    if dest == attacker:
        return attacker
    graph = topology_graph(topo)
    distance = nx.single_source_shortest_path_length(graph, attacker)
    if dest not in distance:
        raise ospfmbt.topology.UnreachableRouterError(attacker, dest)
    return min(nb for nb in graph.neighbors(dest)
               if distance.get(nb) == distance[dest] - 1)

def format_topology(topo: ConcreteTopology) -> str:
    """
    Render a topology in the text format read by :func:`parse_topology`.
    """
    lines = [f"routers {topo.n}", f"nets {topo.m}"]
    if topo.p2p:
        lines.append("p2p " + " ".join(f"{a}-{b}" for (a, b)
                                       in sorted(topo.p2p)))
    for j, net in enumerate(topo.members):
        members = " ".join(str(r) for r in net)
        lines.append(f"net {j} members {members} dr {topo.dr[j]}")
    return "\n".join(lines) + "\n"

def _int(lineno: int, token: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise ospfmbt.topology.TopologyFormatError(
            lineno, f"expected an integer, found `{token}'") from None

def parse_topology(text: str) -> ConcreteTopology:
    """
    Parse the topology text format::

        routers 5
        nets 1
        p2p 0-1 0-2 1-2 2-4
        net 0 members 1 3 4 dr 1

    Blank lines and ``#`` comments are ignored; ``dr`` is optional.

    Args:
        text: The topology description

    Returns:
        :obj:`ConcreteTopology`: The topology

    Raises:
        :obj:`.TopologyFormatError`: The text is malformed.
    """
    n: Optional[int] = None
    m = 0
    p2p: List[Tuple[int, int]] = list()
    nets: Dict[int, Tuple[List[int], Optional[int]]] = dict()

    for lineno, raw in enumerate(text.splitlines(), 1):
        words = raw.split("#", 1)[0].split()
        if not words:
            continue
        keyword = words[0]
        if keyword == "routers" and len(words) == 2:
            n = _int(lineno, words[1])
        elif keyword == "nets" and len(words) == 2:
            m = _int(lineno, words[1])
        elif keyword == "p2p":
            for pair in words[1:]:
                ends = pair.split("-")
                if len(ends) != 2:
                    raise ospfmbt.topology.TopologyFormatError(
                        lineno, f"expected a link like 0-1, found `{pair}'")
                p2p.append((_int(lineno, ends[0]), _int(lineno, ends[1])))
        elif keyword == "net" and len(words) >= 3 and words[2] == "members":
            net = _int(lineno, words[1])
            rest = words[3:]
            dr: Optional[int] = None
            if "dr" in rest:
                at = rest.index("dr")
                if at != len(rest) - 2:
                    raise ospfmbt.topology.TopologyFormatError(
                        lineno, "`dr' takes exactly one router")
                dr = _int(lineno, rest[-1])
                rest = rest[:at]
            nets[net] = ([_int(lineno, w) for w in rest], dr)
        else:
            raise ospfmbt.topology.TopologyFormatError(
                lineno, f"unrecognized line `{raw.strip()}'")

    if n is None:
        raise ospfmbt.topology.TopologyFormatError("-", "missing `routers'")
    if sorted(nets) != list(range(m)):
        raise ospfmbt.topology.TopologyFormatError(
            "-", f"expected nets 0..{m - 1}, found {sorted(nets)}")

    members = [nets[j][0] for j in range(m)]
    drs = [nets[j][1] for j in range(m)]
    if all(d is None for d in drs):
        return ConcreteTopology(n, p2p, members)
    chosen = [d if d is not None else min(members[j])
              for j, d in enumerate(drs)]
    return ConcreteTopology(n, p2p, members, chosen)
