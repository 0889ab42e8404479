# -*- coding: utf-8 -*-
# vim:set shiftwidth=4 softtabstop=4 expandtab textwidth=79:

from typing import Dict, NamedTuple

import networkx as nx

from ospfmbt.model.lsa import LinkKind, LsType
from ospfmbt.model.state import NetworkState

class Route(NamedTuple):
    next_hop: int
    cost: int

def lsdb_graph(state: NetworkState, router: int) -> nx.DiGraph:
    """
    Build the shortest-path graph described by one router's LSDB.

    Routers are nodes ``("R", i)`` and networks are nodes ``("N", j)``.
    A p2p link is used only when both ends advertise it, and a transit
    link only when the network's LSA lists the router.  Links from a
    network back to its members cost nothing.

    Args:
        state: The network state
        router: The router whose LSDB is read

    Returns:
        :obj:`networkx.DiGraph`: Edges carry a ``weight`` attribute
    """
    graph = nx.DiGraph()
    routers: Dict[int, set] = dict()
    networks: Dict[int, set] = dict()
    for lsa in state.lsdb(router):
        if lsa.max_age:
            continue
        if lsa.ls_type == LsType.ROUTER and lsa.lsid == lsa.ar:
            routers[lsa.ar] = set(lsa.links)
            graph.add_node(("R", lsa.ar))
        elif lsa.ls_type == LsType.NETWORK:
            networks[lsa.lsid] = {link.target for link in lsa.links}

    for r, links in routers.items():
        for link in links:
            if link.kind == LinkKind.POINT_TO_POINT:
                peer = routers.get(link.target, set())
                if any(back.kind == LinkKind.POINT_TO_POINT and
                       back.target == r for back in peer):
                    graph.add_edge(("R", r), ("R", link.target),
                                   weight=link.cost)
            elif link.kind == LinkKind.TRANSIT:
                if r in networks.get(link.target, set()):
                    graph.add_edge(("R", r), ("N", link.target),
                                   weight=link.cost)
                    graph.add_edge(("N", link.target), ("R", r), weight=0)
    return graph

def compute_routing_table(state: NetworkState,
                          router: int) -> Dict[int, Route]:
    """
    Compute a router's routes to every other router it can reach
    through its LSDB.

    Args:
        state: The network state
        router: The router whose table is computed

    Returns:
        :obj:`dict`: Router index to :obj:`Route`; unreachable routers
        are absent
    """
    graph = lsdb_graph(state, router)
    source = ("R", router)
    if source not in graph:
        return dict()
    (costs, paths) = nx.single_source_dijkstra(graph, source)
    table: Dict[int, Route] = dict()
    for node, path in sorted(paths.items()):
        (kind, index) = node
        if kind != "R" or index == router:
            continue
        hops = [n for n in path[1:] if n[0] == "R"]
        table[index] = Route(hops[0][1], int(costs[node]))
    return table
