# -*- coding: utf-8 -*-
# vim:set shiftwidth=4 softtabstop=4 expandtab textwidth=79:
"""
The ospfmbt.model package is the executable OSPF reference model.

A :class:`.NetworkState` holds every router's LSDB and incoming queue.
:class:`.OspfModel` runs the router procedure over it: newness checks,
flooding, fight-back and the MaxSeqNum wrap, stepping routers round-robin
until every queue is empty.  Sequence numbers are :class:`.SymInt` values
so the same code runs concretely, concolically, and as the in-process
system under test with a full-width sequence space.

Behavior that implementations are known to get wrong is routed through
the hooks of :class:`.Behavior`; the reference behavior implements the
standard and mutants override individual hooks.
"""

from typing import List

from ospfmbt.model.lsa import SeqSpace

# The model's MaxSeqNum and the largest initial sequence number
MAX_SEQ = 4
K_INIT = 2

MODEL_SPACE = SeqSpace(0, MAX_SEQ)
# The wire range with InitialSeqNum at 0
SUT_SPACE = SeqSpace(0, 0xFFFFFFFE)

class ModelError(RuntimeError):
    """Base class for model errors"""

class NonTerminationError(ModelError):
    """A run exceeded its step budget"""
    _fmt = "no stable state after {} steps"
    def __init__(self, steps: int, trace: List) -> None:
        super().__init__(self._fmt.format(steps))
        self.steps = steps
        self.trace = trace

from ospfmbt.model.lsa import Lsa, Link, LinkKind, LsType, LsaKey
from ospfmbt.model.lsa import LsaMessage, Ordering, sort_links
from ospfmbt.model.state import RouterState, NetworkState
from ospfmbt.model.behavior import Behavior, REFERENCE
from ospfmbt.model.engine import OspfModel, DEFAULT_STEP_BUDGET
from ospfmbt.model.engine import standard_initial_state, make_probe
from ospfmbt.model.routing import Route, compute_routing_table
