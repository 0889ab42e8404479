# -*- coding: utf-8 -*-
# vim:set shiftwidth=4 softtabstop=4 expandtab textwidth=79:
"""
The ospfmbt.testgen package turns explored model paths into test files:
depth-1 generation, systematic extension by merging intermediate states,
arbitrary-prefix generation and the on-disk suite format.
"""

from typing import Any, List, Sequence

class GenerationError(RuntimeError):
    """Base class for test generation errors"""

class GenerationLimitError(GenerationError):
    """Generation was cut short by the path limit"""
    _fmt = "an exploration found more than {} paths; {} tests were kept"
    def __init__(self, limit: int, tests: List[Any]) -> None:
        super().__init__(self._fmt.format(limit, len(tests)))
        self.limit = limit
        self.tests = tests

class UnknownSeedError(GenerationError):
    """A seed state name was not recognized"""
    _fmt = "unknown seed state `{}' (known kinds: {})"
    def __init__(self, name: str, kinds: Sequence[str]) -> None:
        super().__init__(self._fmt.format(name, ", ".join(kinds)))
        self.name = name

from ospfmbt.testgen.terms import SeqTerm, seq_term, parse_term
from ospfmbt.testgen.canonical import canonicalize, key_digest
from ospfmbt.testgen.seeds import SEED_KINDS, build_seed, parse_seed
from ospfmbt.testgen.testfile import TestFile, LsaRecord, MessageRecord
from ospfmbt.testgen.testfile import Manifest, render_state
from ospfmbt.testgen.testfile import write_suite, read_suite, read_test
from ospfmbt.testgen.testfile import read_manifest
from ospfmbt.testgen.program import ReachableState, VariableLayout
from ospfmbt.testgen.program import ProbeProgram, ModelRun, replay_messages
from ospfmbt.testgen.generate import Generator, ExtensionResult
from ospfmbt.testgen.generate import extract_reachable_states, unique_states
