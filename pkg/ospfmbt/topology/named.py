# -*- coding: utf-8 -*-
# vim:set shiftwidth=4 softtabstop=4 expandtab textwidth=79:

from typing import Callable, Dict

import os

import ospfmbt.topology
from ospfmbt.topology.concrete import ConcreteTopology, parse_topology

NAMED_TOPOLOGIES: Dict[str, Callable[[], ConcreteTopology]] = {
    'line2': lambda: ConcreteTopology(2, [(0, 1)]),
    'line3': lambda: ConcreteTopology(3, [(0, 1), (1, 2)]),
    'lan2': lambda: ConcreteTopology(2, nets=[[0, 1]]),
    'lan3': lambda: ConcreteTopology(3, nets=[[0, 1, 2]]),
    'diamond': lambda: ConcreteTopology(4, [(0, 1), (0, 2), (1, 3), (2, 3)]),
    # R3 is only reachable over the network whose DR is R1
    'five': lambda: ConcreteTopology(5, [(0, 1), (0, 2), (1, 2), (2, 4)],
                                     [[1, 3, 4]], [1]),
}

def named_topology(name: str) -> ConcreteTopology:
    try:
        return NAMED_TOPOLOGIES[name]()
    except KeyError:
        raise ospfmbt.topology.TopologyError(
            f"no topology named `{name}' (known: "
            f"{', '.join(sorted(NAMED_TOPOLOGIES))})") from None

SEARCH_PATH_VAR = "OSPFMBT_TOPOLOGY_PATH"

def load_topology(spec: str) -> ConcreteTopology:
    """
    Resolve a topology given on the command line.

    Relative file names are also looked up in the directories listed in
    ``$OSPFMBT_TOPOLOGY_PATH``.

    Args:
        spec: A built-in topology name or the path of a topology file

    Returns:
        :obj:`.ConcreteTopology`: The topology
    """
    if spec in NAMED_TOPOLOGIES:
        return named_topology(spec)
    candidates = [spec]
    if not os.path.isabs(spec):
        search = os.environ.get(SEARCH_PATH_VAR, "")
        candidates += [os.path.join(d, spec)
                       for d in search.split(os.pathsep) if d]
    for path in candidates:
        if os.path.isfile(path):
            with open(path) as f:
                return parse_topology(f.read())
    return named_topology(spec)
