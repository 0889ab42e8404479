# -*- coding: utf-8 -*-
# vim:set shiftwidth=4 softtabstop=4 expandtab textwidth=79:
"""
The program explored during test generation: build a start state,
replay the messages that lead to it, then deliver symbolic probes.

Variables are numbered so that the same message keeps the same
variables at every depth: router i's initial sequence number is
variable ``i`` and message j owns ``n + 4j`` (dest), ``n + 4j + 1`` (ar),
``n + 4j + 2`` (lsid) and ``n + 4j + 3`` (seq).  Topology variables
follow the last message.  A path constraint recorded at one depth
therefore still names the right variables when its probe becomes a
setup message at the next depth.
"""

from typing import Callable, Dict, List, Mapping, NamedTuple, Optional, Tuple

from ospfmbt.model import K_INIT, MAX_SEQ
from ospfmbt.model.engine import OspfModel, Trace, make_probe
from ospfmbt.model.lsa import Lsa, LsaMessage, LsType
from ospfmbt.model.state import NetworkState
from ospfmbt.symbolic.expr import SymExpr, SymVar, VarRole, Assignment
from ospfmbt.symbolic.values import ConcolicInputs, SymInt, IntLike
from ospfmbt.symbolic.values import paused, pin
from ospfmbt.testgen.seeds import build_seed, seed_length
from ospfmbt.topology.concrete import ConcreteTopology
from ospfmbt.topology.symbolic import SymbolicTopology, concretize

ModelFactory = Callable[[ConcreteTopology], OspfModel]

FIELDS = (VarRole.MSG_DEST, VarRole.MSG_AR, VarRole.MSG_LSID, VarRole.MSG_SEQ)

class Snapshot(NamedTuple):
    """A start state built once, with the messages that led to it"""
    state: NetworkState
    setup: Tuple[LsaMessage, ...]

class ReachableState(NamedTuple):
    """
    A stable state together with one way of getting there.

    Attributes:
        key: The canonical key of the state
        topology: The topology, :obj:`None` for the standard state of a
            symbolic topology
        setup: The concrete messages the model replays to reach the
            state, after the seed if there is one
        constraint: Conditions on the initial and setup variables under
            which replaying ``setup`` reaches this state
        seed: The catalogue start state the messages are replayed from
        depth: The number of messages that lead here, seed included
        witness: The id of the test that first reached the state
        condition: What the constraint still requires of the initial
            sequence numbers once every message is fixed, as sorted
            strings
        snapshot: The state itself, when ``constraint`` pins every
            variable it depends on; programs then start from it instead
            of replaying ``setup``
    """
    key: str
    topology: Optional[ConcreteTopology]
    setup: Tuple[LsaMessage, ...] = ()
    constraint: Tuple[SymExpr, ...] = ()
    seed: Optional[str] = None
    depth: int = 0
    witness: Optional[str] = None
    condition: Tuple[str, ...] = ()
    snapshot: Optional[Snapshot] = None

    @property
    def identity(self) -> str:
        """The key, qualified by :attr:`condition`; states with equal
        identities extend alike"""
        return "\n".join((self.key,) + self.condition)

    @property
    def seed_messages(self) -> int:
        return seed_length(self.seed) if self.seed is not None else 0

class VariableLayout:
    """
    The symbolic inputs of one program.

    Args:
        n: The number of routers
        setup: The number of setup messages, seed messages included
        probes: The number of symbolic probes
        seed_messages: How many of the setup messages a seed supplies;
            those get no variables
        symbolic: ``(n, m)`` of a symbolic topology, if any
        k_init: The largest initial sequence number
        max_seq: The largest sequence number
    """
    # pylint: disable=too-many-arguments
    def __init__(self, n: int, setup: int, probes: int,
                 seed_messages: int = 0,
                 symbolic: Optional[Tuple[int, int]] = None,
                 k_init: int = K_INIT, max_seq: int = MAX_SEQ) -> None:
        self.n = n
        self.setup = setup
        self.probes = probes
        self.init_vars = [SymVar(r, VarRole.INIT_SEQ, (r,), 0, k_init)
                          for r in range(n)]
        self.message_vars: Dict[int, Dict[VarRole, SymVar]] = dict()
        for j in range(seed_messages, setup + probes):
            bounds = {VarRole.MSG_DEST: n - 1, VarRole.MSG_AR: n - 1,
                      VarRole.MSG_LSID: n - 1, VarRole.MSG_SEQ: max_seq}
            fields = FIELDS if j >= setup else (VarRole.MSG_SEQ,)
            self.message_vars[j] = {
                role: SymVar(n + 4 * j + FIELDS.index(role), role, (j,), 0,
                             bounds[role])
                for role in fields}
        self.topology: Optional[SymbolicTopology] = None
        if symbolic is not None:
            self.topology = SymbolicTopology(symbolic[0], symbolic[1],
                                             n + 4 * (setup + probes))

    def var(self, message: int, role: VarRole) -> SymVar:
        return self.message_vars[message][role]

    def variables(self) -> List[SymVar]:
        result = list(self.init_vars)
        for j in sorted(self.message_vars):
            result += self.message_vars[j].values()
        if self.topology is not None:
            result += self.topology.variables()
        return sorted(result)

    def initial_seqs(self, assignment: Assignment) -> Dict[int, int]:
        return {var.args[0]: assignment[var] for var in self.init_vars}

class ModelRun(NamedTuple):
    """Everything one run of a :class:`ProbeProgram` observed"""
    topology: ConcreteTopology
    initial_seqs: Dict[int, int]
    setup: Tuple[LsaMessage, ...]
    start: NetworkState
    probes: Tuple[LsaMessage, ...]
    final: NetworkState
    trace: Trace

def probe_lsa(model: OspfModel, state: NetworkState, dest: int, ar: int,
              lsid: int, seq: IntLike) -> Lsa:
    """
    Build the Router-LSA an attacker sends: no links, not MaxAge, in the
    sequence frame of the instance ``dest`` holds for the same key, else
    of ``ar``'s own LSA there.
    """
    lsa = Lsa(LsType.ROUTER, lsid, ar, SymInt.of(seq))
    db = state.routers[dest].lsdb
    installed = db.get(model.behavior.lsdb_key(lsa))
    if installed is None:
        installed = db.get(model.own_key(ar))
    return lsa._replace(absolute=installed is not None and installed.absolute)

def start_state(model: OspfModel, init: Mapping[int, IntLike],
                seed: Optional[str]) -> Tuple[NetworkState,
                                              List[LsaMessage]]:
    """The state a run begins in and the messages a seed stands for"""
    if seed is None:
        return (model.standard_initial_state(init), [])
    return build_seed(seed, model, init)

class ProbeProgram:
    """
    Build the start state, replay the setup and deliver symbolic probes.

    Setup replay is not recorded; the start's constraint, passed to
    exploration as axioms, keeps it on the same path.  A start with a
    snapshot is not replayed at all.

    Args:
        layout: The variables
        start: Where the probes are delivered
        model_factory: Builds the model for a concrete topology
    """
    def __init__(self, layout: VariableLayout, start: ReachableState,
                 model_factory: ModelFactory) -> None:
        self.layout = layout
        self.start = start
        self.model_factory = model_factory

    def _topology(self, inputs: ConcolicInputs) -> ConcreteTopology:
        if self.start.topology is not None:
            return self.start.topology
        sym = self.layout.topology
        assert sym is not None
        assignment = {var: pin(inputs.sym(var), f"topo.{var.name}")
                      for var in sym.variables()}
        topo = concretize(sym, assignment)
        # validity axioms exclude unusable topologies
        assert topo is not None
        return topo

    def _replay(self, model: OspfModel, state: NetworkState,
                inputs: ConcolicInputs, first: int) -> Tuple[NetworkState,
                                                            List[LsaMessage]]:
        replayed = list()
        for (i, msg) in enumerate(self.start.setup):
            var = self.layout.var(first + i, VarRole.MSG_SEQ)
            msg = msg._replace(lsa=msg.lsa._replace(seq=inputs.sym(var)))
            (state, _) = model.run_to_stable(state, msg)
            replayed.append(msg)
        return (state, replayed)

    def __call__(self, inputs: ConcolicInputs) -> ModelRun:
        topology = self._topology(inputs)
        model = self.model_factory(topology)
        snapshot = self.start.snapshot
        if snapshot is not None:
            (state, setup) = (snapshot.state, list(snapshot.setup))
        else:
            init = {var.args[0]: inputs.sym(var)
                    for var in self.layout.init_vars}
            (state, setup) = start_state(model, init, self.start.seed)
            with paused():
                (state, replayed) = self._replay(model, state, inputs,
                                                 len(setup))
            setup += replayed
        begin = state

        probes = list()
        trace: Trace = list()
        for j in range(self.layout.setup,
                       self.layout.setup + self.layout.probes):
            dest = pin(inputs.sym(self.layout.var(j, VarRole.MSG_DEST)),
                       "probe.dest")
            ar = pin(inputs.sym(self.layout.var(j, VarRole.MSG_AR)),
                     "probe.ar")
            lsid = pin(inputs.sym(self.layout.var(j, VarRole.MSG_LSID)),
                       "probe.lsid")
            seq = inputs.sym(self.layout.var(j, VarRole.MSG_SEQ))
            msg = make_probe(topology, dest,
                             probe_lsa(model, state, dest, ar, lsid, seq))
            (state, steps) = model.run_to_stable(state, msg)
            probes.append(msg)
            trace += steps

        return ModelRun(topology, self.layout.initial_seqs(inputs.assignment),
                        tuple(setup), begin, tuple(probes), state, trace)

def replay_messages(model: OspfModel, init: Mapping[int, int],
                    seed: Optional[str], setup: List[LsaMessage],
                    probes: List[LsaMessage]) -> Tuple[NetworkState,
                                                       NetworkState, Trace]:
    """
    Replay a test concretely on ``model``.

    The first messages of ``setup`` stand for the seed, if there is one,
    and are not replayed; the seed state is built directly.

    Returns:
        (:obj:`.NetworkState`, :obj:`.NetworkState`, :obj:`list`): The
        state after the setup, the final state and the probes' trace
    """
    (state, seeded) = start_state(model, init, seed)
    (state, _) = model.replay(state, setup[len(seeded):])
    begin = state
    (state, trace) = model.replay(state, probes)
    return (begin, state, trace)
