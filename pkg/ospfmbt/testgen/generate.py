# -*- coding: utf-8 -*-
# vim:set shiftwidth=4 softtabstop=4 expandtab textwidth=79:
"""
Test generation.

Depth-1 tests deliver one symbolic message to the standard initial
state.  Deeper tests come from systematic extension: the final states of
one depth are canonicalized and merged, and each state not explored
before gets one more symbolic message, replayed from a single witness.
Arbitrary-prefix generation starts from states reached by random
concrete messages instead.
"""

from typing import Dict, Iterable, Iterator, List, Mapping, NamedTuple
from typing import Optional, Sequence, Set, Tuple

import itertools
import logging
import random

import ospfmbt.testgen
from ospfmbt.model import K_INIT, MAX_SEQ, MODEL_SPACE
from ospfmbt.model.behavior import REFERENCE
from ospfmbt.model.engine import OspfModel, DEFAULT_STEP_BUDGET
from ospfmbt.model.engine import DEFAULT_RESEND_ROUNDS, make_probe
from ospfmbt.model.lsa import LsaMessage
from ospfmbt.symbolic import ExplorationLimitError
from ospfmbt.symbolic.explore import ExploredPath, explore, concolic_run
from ospfmbt.symbolic.expr import SymExpr, SymVar, VarRole, Const, Var, eq
from ospfmbt.symbolic.expr import Assignment, TRUE
from ospfmbt.symbolic.solver import solve
from ospfmbt.symbolic.values import ConcolicInputs, SymInt
from ospfmbt.testgen.canonical import canonicalize, key_digest
from ospfmbt.testgen.program import ReachableState, VariableLayout
from ospfmbt.testgen.program import ProbeProgram, ModelRun, probe_lsa
from ospfmbt.testgen.program import Snapshot, start_state
from ospfmbt.testgen.testfile import TestFile, MessageRecord, render_state
from ospfmbt.topology.concrete import ConcreteTopology
from ospfmbt.topology.symbolic import validity_axioms

logger = logging.getLogger(__name__)

Numbering = Dict[int, int]

DEFAULT_PREFIXES = 200
DEFAULT_PER_PREFIX = 4

class ExtensionResult(NamedTuple):
    """The tests of a systematic extension and the size of every RIS"""
    tests: List[TestFile]
    iterations: List[int]

def concrete_message(msg: LsaMessage) -> LsaMessage:
    """Drop the symbolic shadow of a message's sequence number"""
    return msg._replace(lsa=msg.lsa._replace(seq=SymInt(msg.lsa.seq.value)))

class ReachedStates:
    """
    The final states one explored path stands for.

    The path fixes every message field but the probes' sequence numbers.
    Each value of those that keeps the path's conditions satisfiable is
    run once more and yields a state of its own; the run the test was
    built from comes first.  Nothing is run before :meth:`states` is
    first called.
    """
    # pylint: disable=too-many-arguments
    def __init__(self, generator: 'Generator', layout: VariableLayout,
                 program: ProbeProgram, axioms: Sequence[SymExpr],
                 start: ReachableState, path: ExploredPath,
                 test_id: str) -> None:
        self.generator = generator
        self.layout = layout
        self.program = program
        self.axioms = list(axioms)
        self.start = start
        self.path = path
        self.test_id = test_id
        self._states: Optional[List[ReachableState]] = None

    def _variants(self) -> Iterator[ExploredPath]:
        yield self.path
        layout = self.layout
        probes = range(layout.setup, layout.setup + layout.probes)
        seq_vars = [layout.var(j, VarRole.MSG_SEQ) for j in probes]
        chosen = tuple(self.path.assignment[var] for var in seq_vars)
        base = self.axioms + list(self.path.conjuncts)
        for values in itertools.product(*(v.domain() for v in seq_vars)):
            if values == chosen:
                continue
            pins = [eq(Var(var), Const(value))
                    for var, value in zip(seq_vars, values)]
            solution = solve(base + pins, layout.variables())
            if solution is None:
                continue
            variant = concolic_run(self.program, solution)
            if variant.trace_class != self.path.trace_class:
                logger.debug("%s: sequence numbers %s leave the path",
                             self.test_id, values)
                continue
            yield variant

    def states(self) -> List[ReachableState]:
        if self._states is None:
            found: Dict[str, ReachableState] = dict()
            for variant in self._variants():
                state = self.generator.reached_state(self.layout, self.start,
                                                     variant, self.test_id)
                found.setdefault(state.identity, state)
            self._states = list(found.values())
        return self._states

def extract_reachable_states(tests: Iterable[TestFile]
                             ) -> Dict[str, ReachableState]:
    """
    Merge tests by final state.

    Every test contributes each state its path reaches under any of the
    probe sequence numbers the path admits, not just the final state of
    the run it was built from.

    Args:
        tests: Generated tests, in generation order

    Returns:
        :obj:`dict`: One :obj:`.ReachableState` per distinct
        :attr:`.ReachableState.identity`, keyed by it and witnessed by
        the first test that reached it

    Raises:
        :obj:`.GenerationError`: A test was read from disk and carries
            no record of how it was generated.
    """
    states: Dict[str, ReachableState] = dict()
    for test in tests:
        reached = test.reached
        if not isinstance(reached, ReachedStates):
            raise ospfmbt.testgen.GenerationError(
                f"test {test.id} has no generation record")
        for state in reached.states():
            states.setdefault(state.identity, state)
    return states

def is_explored(state: ReachableState,
                explored: Mapping[str, Set[Tuple[str, ...]]]) -> bool:
    """
    Whether exploring from ``state`` is already covered by a state with
    the same key: one with no condition, or with exactly this one.

    Args:
        state: The candidate
        explored: The conditions explored so far, per key
    """
    conditions = explored.get(state.key, set())
    return () in conditions or state.condition in conditions

def unique_states(tests: Sequence[TestFile],
                  budget: Optional[int] = None) -> int:
    """The number of distinct final states among the first ``budget`` tests"""
    chosen = tests if budget is None else tests[:budget]
    return len({test.final_key for test in chosen})

class Generator:
    """
    Generate tests for one topology against the reference model.

    Args:
        topology: A concrete topology, or :obj:`None` with ``symbolic``
        symbolic: ``(n, m)`` to generate over every topology of ``n``
            routers and ``m`` networks
        max_paths: The most paths a single exploration may produce
        step_budget: The step budget of every model run
        resend_rounds: The model's resend allowance
    """
    # pylint: disable=too-many-arguments
    def __init__(self, topology: Optional[ConcreteTopology] = None,
                 symbolic: Optional[Tuple[int, int]] = None,
                 max_paths: Optional[int] = None,
                 step_budget: int = DEFAULT_STEP_BUDGET,
                 resend_rounds: int = DEFAULT_RESEND_ROUNDS) -> None:
        if (topology is None) == (symbolic is None):
            raise ValueError("exactly one of topology and symbolic is needed")
        if topology is not None:
            topology.check_valid()
        self.topology = topology
        self.symbolic = symbolic
        self.max_paths = max_paths
        self.step_budget = step_budget
        self.resend_rounds = resend_rounds

    @property
    def n(self) -> int:
        if self.topology is not None:
            return self.topology.n
        assert self.symbolic is not None
        return self.symbolic[0]

    def model(self, topology: ConcreteTopology) -> OspfModel:
        return OspfModel(topology, MODEL_SPACE, REFERENCE, self.step_budget,
                         self.resend_rounds)

    def _symbolic_init(self) -> Dict[int, SymInt]:
        layout = VariableLayout(self.n, 0, 0)
        return {var.args[0]: SymInt(0, Var(var))
                for var in layout.init_vars}

    def standard(self) -> ReachableState:
        """The standard initial state"""
        if self.topology is None:
            return ReachableState("", None)
        model = self.model(self.topology)
        state = model.standard_initial_state(self._symbolic_init())
        return ReachableState(canonicalize(state), self.topology)

    def seed_state(self, name: str) -> ReachableState:
        """A catalogue start state; see :mod:`ospfmbt.testgen.seeds`"""
        if self.topology is None:
            raise ospfmbt.testgen.GenerationError(
                "seed states need a concrete topology")
        model = self.model(self.topology)
        (state, setup) = start_state(model, self._symbolic_init(), name)
        return ReachableState(canonicalize(state), self.topology, seed=name,
                              depth=len(setup))

    # Exploration

    def _project(self, layout: VariableLayout, start: ReachableState,
                 path: ExploredPath) -> Tuple[SymExpr, ...]:
        fixed: Dict[SymVar, SymExpr] = dict()
        if layout.topology is not None:
            for var in layout.topology.variables():
                fixed[var] = Const(path.assignment[var])
        probes = range(layout.setup, layout.setup + layout.probes)
        for j in probes:
            for role in (VarRole.MSG_DEST, VarRole.MSG_AR, VarRole.MSG_LSID):
                var = layout.var(j, role)
                fixed[var] = Const(path.assignment[var])
        projected = list(start.constraint)
        for conjunct in path.conjuncts:
            conjunct = conjunct.substitute(fixed)
            if conjunct != TRUE and conjunct not in projected:
                projected.append(conjunct)
        for j in probes:
            var = layout.var(j, VarRole.MSG_SEQ)
            projected.append(eq(Var(var), Const(path.assignment[var])))
        return tuple(projected)

    @staticmethod
    def _condition(layout: VariableLayout, constraint: Sequence[SymExpr],
                   assignment: Assignment) -> Tuple[str, ...]:
        fixed: Dict[SymVar, SymExpr] = {
            var: Const(assignment[var])
            for roles in layout.message_vars.values()
            for var in roles.values()}
        residual = {str(c) for c in
                    (c.substitute(fixed) for c in constraint) if c != TRUE}
        return tuple(sorted(residual))

    def reached_state(self, layout: VariableLayout, start: ReachableState,
                      path: ExploredPath, test_id: str) -> ReachableState:
        """The final state of one run, with the way to reach it again"""
        run: ModelRun = path.result
        replayed = run.setup[start.seed_messages:] + run.probes
        constraint = self._project(layout, start, path)
        return ReachableState(canonicalize(run.final), run.topology,
                              tuple(concrete_message(m) for m in replayed),
                              constraint, start.seed,
                              len(run.setup) + len(run.probes), test_id,
                              self._condition(layout, constraint,
                                              path.assignment))

    # pylint: disable=too-many-arguments
    def _test_file(self, test_id: str, layout: VariableLayout,
                   program: ProbeProgram, axioms: Sequence[SymExpr],
                   start: ReachableState, path: ExploredPath) -> TestFile:
        run: ModelRun = path.result
        key = canonicalize(run.final)
        depth = len(run.setup) + len(run.probes)
        return TestFile(
            id=test_id,
            depth=depth,
            topology=run.topology,
            initial_seqs=run.initial_seqs,
            setup_msgs=[MessageRecord.of(m) for m in run.setup],
            probe_msgs=[MessageRecord.of(m) for m in run.probes],
            expected_final=render_state(run.final),
            expected_trace=[MessageRecord.of(m) for m in run.trace],
            start_state=render_state(run.start) if run.setup else None,
            seed=start.seed,
            path_constraint=[str(c) for c in start.constraint] +
            [str(c) for c in path.conjuncts],
            final_key=key_digest(key),
            reached=ReachedStates(self, layout, program, axioms, start, path,
                                  test_id))

    def generate_from_state(self, start: ReachableState, probes: int = 1,
                            numbering: Optional[Numbering] = None,
                            limit: Optional[int] = None) -> List[TestFile]:
        """
        Explore ``probes`` symbolic messages from a start state.

        Args:
            start: The start state
            probes: The number of symbolic messages
            numbering: The next test index per depth; updated in place
            limit: Stop quietly after this many tests when it is below
                ``max_paths``

        Returns:
            :obj:`list` of :obj:`.TestFile`: One test per explored path

        Raises:
            :obj:`.GenerationLimitError`: Exploration found more than
                ``max_paths`` paths.  The error carries the tests of the
                paths found.
        """
        if numbering is None:
            numbering = dict()
        symbolic = self.symbolic if start.topology is None else None
        layout = VariableLayout(self.n, start.depth, probes,
                                start.seed_messages, symbolic)
        program = ProbeProgram(layout, start, self.model)
        axioms = list(start.constraint)
        if layout.topology is not None:
            axioms += validity_axioms(layout.topology)

        depth = start.depth + probes
        tests: List[TestFile] = list()

        def emit(path: ExploredPath) -> None:
            index = numbering.get(depth, 0)
            numbering[depth] = index + 1
            tests.append(self._test_file(f"t{depth}-{index:05d}", layout,
                                         program, axioms, start, path))

        capped = limit is not None and \
            (self.max_paths is None or limit < self.max_paths)
        try:
            explore(program, layout.variables(), axioms,
                    limit if capped else self.max_paths, on_path=emit)
        except ExplorationLimitError as e:
            if not capped:
                raise ospfmbt.testgen.GenerationLimitError(e.limit,
                                                           tests) from e
        logger.debug("%d tests from state %s", len(tests),
                     start.witness or "standard")
        return tests

    def generate_depth1(self) -> List[TestFile]:
        return self.generate_from_state(self.standard())

    def naive_exploration(self, messages: int) -> List[TestFile]:
        """Explore ``messages`` symbolic messages jointly from the
        standard initial state"""
        return self.generate_from_state(self.standard(), probes=messages)

    def systematic_extension(self, max_depth: int,
                             seeds: Sequence[str] = ()) -> ExtensionResult:
        """
        Generate tests up to ``max_depth`` messages deep by merging
        intermediate states.

        Iteration k explores one symbolic message from every state in
        RIS, the reachable states not explored yet.  RIS starts as the
        standard state plus any seed states; after each iteration the
        distinct final states that were never in RIS before become the
        next RIS.  A final state is told apart by its key and by what its
        path still requires of the initial sequence numbers; one reached
        with no such requirement covers every other with its key.

        Args:
            max_depth: The number of iterations
            seeds: Catalogue start states to explore from in the first
                iteration

        Returns:
            :obj:`ExtensionResult`: The tests in generation order and
            the size of RIS at every iteration

        Raises:
            :obj:`.GenerationLimitError`: An exploration exceeded
                ``max_paths``.  The error carries every test generated
                so far.
        """
        if max_depth < 1:
            raise ValueError(f"max_depth must be at least 1, not {max_depth}")
        ris = [self.standard()] + [self.seed_state(s) for s in seeds]
        ers: Dict[str, Set[Tuple[str, ...]]] = dict()
        tests: List[TestFile] = list()
        iterations: List[int] = list()
        numbering: Numbering = dict()
        for k in range(1, max_depth + 1):
            iterations.append(len(ris))
            logger.info("iteration %d: exploring %d states", k, len(ris))
            generated: List[TestFile] = list()
            for start in ris:
                try:
                    generated += self.generate_from_state(
                        start, numbering=numbering)
                except ospfmbt.testgen.GenerationLimitError as e:
                    raise ospfmbt.testgen.GenerationLimitError(
                        e.limit, tests + generated + e.tests) from e
            tests += generated
            if k == max_depth:
                break
            reached = extract_reachable_states(generated)
            for start in ris:
                ers.setdefault(start.key, set()).add(start.condition)
            ris = [state for state in reached.values()
                   if not is_explored(state, ers)]
            logger.info("iteration %d: %d tests, %d new states", k,
                        len(generated), len(ris))
        return ExtensionResult(tests, iterations)

    # Arbitrary prefixes

    def random_prefix(self, rng: random.Random,
                      length: int) -> ReachableState:
        """
        Reach a state with ``length`` random concrete messages.

        The initial sequence numbers and every message field are drawn
        uniformly from the domains of the symbolic inputs.  The prefix is
        run once; the returned state carries the result as a snapshot and
        its constraint pins the initial and message sequence numbers to
        the values drawn.
        """
        if self.topology is None:
            raise ospfmbt.testgen.GenerationError(
                "arbitrary prefixes need a concrete topology")
        if length == 0:
            return self.standard()
        topology = self.topology
        model = self.model(topology)
        n = topology.n
        layout = VariableLayout(n, length, 0)
        assignment: Assignment = {var: rng.randint(0, K_INIT)
                                  for var in layout.init_vars}
        fields: List[Tuple[int, int, int]] = list()
        for j in range(length):
            (dest, ar, lsid) = (rng.randrange(n), rng.randrange(n),
                                rng.randrange(n))
            assignment[layout.var(j, VarRole.MSG_SEQ)] = \
                rng.randint(0, MAX_SEQ)
            fields.append((dest, ar, lsid))

        inputs = ConcolicInputs(assignment)
        init = {var.args[0]: inputs.sym(var) for var in layout.init_vars}
        state = model.standard_initial_state(init)
        sent: List[LsaMessage] = list()
        for (j, (dest, ar, lsid)) in enumerate(fields):
            seq = inputs.sym(layout.var(j, VarRole.MSG_SEQ))
            msg = make_probe(topology, dest,
                             probe_lsa(model, state, dest, ar, lsid, seq))
            (state, _) = model.run_to_stable(state, msg)
            sent.append(msg)

        constraint = tuple(eq(Var(var), Const(value))
                           for (var, value) in sorted(assignment.items()))
        return ReachableState(canonicalize(state), topology,
                              tuple(concrete_message(m) for m in sent),
                              constraint, depth=length,
                              snapshot=Snapshot(state, tuple(sent)))

    # pylint: disable=too-many-arguments
    def arbitrary_prefix(self, prefix_len: int, seed: int,
                         prefixes: int = DEFAULT_PREFIXES,
                         max_tests: Optional[int] = None,
                         per_prefix: int = DEFAULT_PER_PREFIX
                         ) -> List[TestFile]:
        """
        Explore one symbolic message from states reached by random
        prefixes.

        Prefixes that end in a state already explored from are skipped.
        At most ``per_prefix`` tests come from one prefix state.

        Args:
            prefix_len: The number of random messages before the probe
            seed: Seeds the random generator
            prefixes: The number of random prefixes drawn
            max_tests: Stop once this many tests exist
            per_prefix: The most tests explored from one prefix state

        Returns:
            :obj:`list` of :obj:`.TestFile`: The tests; each carries its
            prefix as setup messages
        """
        if prefix_len < 0:
            raise ValueError(f"prefix_len must not be negative: {prefix_len}")
        if per_prefix < 1:
            raise ValueError(f"per_prefix must be positive: {per_prefix}")
        if prefix_len == 0:
            return self.generate_from_state(self.standard(),
                                            limit=max_tests)
        rng = random.Random(seed)
        tests: List[TestFile] = list()
        numbering: Numbering = dict()
        explored: Set[str] = set()
        for _ in range(prefixes):
            start = self.random_prefix(rng, prefix_len)
            if start.key in explored:
                continue
            explored.add(start.key)
            limit = per_prefix
            if max_tests is not None:
                limit = min(limit, max_tests - len(tests))
            tests += self.generate_from_state(start, numbering=numbering,
                                              limit=limit)
            if max_tests is not None and len(tests) >= max_tests:
                break
        logger.debug("%d tests from %d prefix states", len(tests),
                     len(explored))
        return tests
