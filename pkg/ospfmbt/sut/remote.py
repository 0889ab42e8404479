# -*- coding: utf-8 -*-
# vim:set shiftwidth=4 softtabstop=4 expandtab textwidth=79:
"""
The starting point for driving real routers.

A lab needs three things the tool cannot provide: a way to restart the
routers, a raw socket on a link to each router to send LS Updates from,
and a way to dump a router's LSDB and routing table.  Subclass
:class:`RemoteCliAdapter`, fill in the device-specific methods and
register the class; stability detection is already done here by polling
the LSDBs.
"""

from typing import Dict, List, Optional, Tuple

import logging
import time

import ospfmbt.sut
from ospfmbt.model.routing import Route
from ospfmbt.sut.adapter import SutAdapter, ObservedLsa, register_adapter
from ospfmbt.topology.concrete import ConcreteTopology

logger = logging.getLogger(__name__)

Snapshot = Dict[int, Tuple[ObservedLsa, ...]]

class RemoteCliAdapter(SutAdapter):
    """
    Routers reached through their management interface.

    Args:
        options: Names the lab the subclass connects to
        seed: Unused
    """
    ident = "remote-cli"
    aliases = ["remote"]

    # Seconds between two LSDB polls, and how many identical polls in a
    # row count as stable
    poll_interval = 1.0
    quiet_polls = 2

    lsdb_command = "show ip ospf database router"
    route_command = "show ip route ospf"

    def __init__(self, options: str = "", seed: int = 0) -> None:
        super().__init__(options, seed)
        self.lab = options

    def open_session(self, router: int) -> None:
        raise NotImplementedError(f"connecting to R{router} is device "
                                  "specific")

    def run_command(self, router: int, command: str) -> str:
        """Run a CLI command on a router and return its output"""
        raise NotImplementedError(f"running `{command}' on R{router} is "
                                  "device specific")

    def reset_all(self, topology: ConcreteTopology) -> None:
        raise NotImplementedError(f"restarting the routers of `{self.lab}' "
                                  "is device specific")

    def inject(self, packet: bytes, ingress: int) -> None:
        raise NotImplementedError("sending on the link to R{} is device "
                                  "specific".format(ingress))

    def read_lsdb(self, router: int) -> List[ObservedLsa]:
        raise NotImplementedError(f"parsing `{self.lsdb_command}' is device "
                                  "specific")

    def read_routing_table(self, router: int) -> Dict[int, Route]:
        raise NotImplementedError(f"parsing `{self.route_command}' is "
                                  "device specific")

    def snapshot(self) -> Snapshot:
        assert self.topology is not None
        return {r: tuple(sorted(self.read_lsdb(r)))
                for r in self.topology.routers}

    def await_stable(self, timeout: float) -> None:
        """
        Poll every LSDB until it stops changing.

        Raises:
            :obj:`.StabilityTimeoutError`: The LSDBs were still changing
                after ``timeout`` seconds.
        """
        deadline = time.monotonic() + timeout
        last: Optional[Snapshot] = None
        same = 0
        while True:
            current = self.snapshot()
            same = same + 1 if current == last else 0
            if same >= self.quiet_polls - 1 and last is not None:
                logger.debug("%s: stable", self.lab)
                return
            last = current
            if time.monotonic() >= deadline:
                raise ospfmbt.sut.StabilityTimeoutError(timeout)
            time.sleep(self.poll_interval)

register_adapter(RemoteCliAdapter)
