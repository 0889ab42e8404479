# -*- coding: utf-8 -*-
# vim:set shiftwidth=4 softtabstop=4 expandtab textwidth=79:
"""
The settings of a generation or test run.

A :class:`RunConfig` is written into every suite manifest; reading it
back and generating again reproduces the suite.
"""

from typing import Any, Dict, List, Optional, Tuple

from dataclasses import dataclass, field, fields

import hashlib
import json

from ospfmbt.exceptions import ConfigError
from ospfmbt.model.engine import DEFAULT_RESEND_ROUNDS, DEFAULT_STEP_BUDGET
from ospfmbt.sut.normalize import MODES as NORMALIZATION_MODES
from ospfmbt.testgen import UnknownSeedError
from ospfmbt.testgen.generate import DEFAULT_PER_PREFIX, DEFAULT_PREFIXES
from ospfmbt.testgen.seeds import parse_seed

NAIVE = "naive"
MERGE = "merge"
PREFIX = "prefix"
MODES = (NAIVE, MERGE, PREFIX)

DEFAULT_MAX_PATHS = 100000

@dataclass
class RunConfig:
    """
    Attributes:
        topology: A built-in topology name or a topology file
        symbolic: ``(n, m)`` to generate over every topology of that size
            instead
        depth: The number of messages per test
        mode: ``naive`` explores all messages jointly, ``merge`` uses
            systematic extension, ``prefix`` explores one message after
            random prefixes
        prefix_len: The random prefix length in ``prefix`` mode
        prefixes: The number of random prefixes drawn in ``prefix`` mode
        per_prefix: The most tests explored from one prefix state
        seed: Seeds the random prefixes
        seeds: Catalogue start states to extend from in ``merge`` mode
        budget: Keep at most this many tests
        max_paths: The most paths one exploration may produce
        step_budget: The most messages one model run may process
        resend_rounds: The model's resend allowance
        adapter: The system under test
        adapter_seed: Seeds the adapter
        stability_timeout: Seconds to wait for the routers to settle
        normalization: ``top`` or ``minimal``
    """
    # pylint: disable=too-many-instance-attributes
    topology: str = "five"
    symbolic: Optional[Tuple[int, int]] = None
    depth: int = 1
    mode: str = MERGE
    prefix_len: int = 3
    prefixes: int = DEFAULT_PREFIXES
    per_prefix: int = DEFAULT_PER_PREFIX
    seed: int = 0
    seeds: List[str] = field(default_factory=list)
    budget: Optional[int] = None
    max_paths: int = DEFAULT_MAX_PATHS
    step_budget: int = DEFAULT_STEP_BUDGET
    resend_rounds: int = DEFAULT_RESEND_ROUNDS
    adapter: str = "in-process"
    adapter_seed: int = 0
    stability_timeout: float = 10.0
    normalization: str = "top"

    def validate(self) -> 'RunConfig':
        """
        Raises:
            :obj:`.ConfigError`: A value is out of range.
        """
        for name in ("depth", "max_paths", "step_budget", "resend_rounds",
                     "prefixes", "per_prefix"):
            if getattr(self, name) < 1:
                raise ConfigError(name, "must be positive")
        if self.stability_timeout <= 0:
            raise ConfigError("stability_timeout", "must be positive")
        if self.budget is not None and self.budget < 1:
            raise ConfigError("budget", "must be positive")
        if self.prefix_len < 0:
            raise ConfigError("prefix_len", "must not be negative")
        if self.mode not in MODES:
            raise ConfigError("mode", f"must be one of {', '.join(MODES)}")
        if self.normalization not in NORMALIZATION_MODES:
            raise ConfigError("normalization", "must be one of " +
                              ", ".join(NORMALIZATION_MODES))
        if self.symbolic is not None:
            (n, m) = self.symbolic
            if n < 1 or m < 0:
                raise ConfigError("symbolic", f"no topology has {n} routers "
                                  f"and {m} networks")
            if self.seeds or self.mode == PREFIX:
                raise ConfigError("symbolic", "seed states and prefixes "
                                  "need a concrete topology")
        for name in self.seeds:
            try:
                parse_seed(name)
            except UnknownSeedError as e:
                raise ConfigError("seeds", str(e)) from e
        return self

    def to_dict(self) -> Dict[str, Any]:
        data = {f.name: getattr(self, f.name) for f in fields(self)}
        data['symbolic'] = list(self.symbolic) if self.symbolic else None
        data['seeds'] = list(self.seeds)
        return data

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'RunConfig':
        """
        Raises:
            :obj:`.ConfigError`: A key is unknown or a value is invalid.
        """
        known = {f.name for f in fields(cls)}
        for name in data:
            if name not in known:
                raise ConfigError(name, "unknown setting")
        values = dict(data)
        if values.get('symbolic') is not None:
            (n, m) = values['symbolic']
            values['symbolic'] = (int(n), int(m))
        values['seeds'] = list(values.get('seeds') or [])
        return cls(**values).validate()

    def config_hash(self) -> str:
        """The SHA-256 of the canonical JSON form"""
        text = json.dumps(self.to_dict(), sort_keys=True,
                          separators=(",", ":"))
        return hashlib.sha256(text.encode()).hexdigest()
