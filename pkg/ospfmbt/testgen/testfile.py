# -*- coding: utf-8 -*-
# vim:set shiftwidth=4 softtabstop=4 expandtab textwidth=79:
"""
Test files and suites on disk.

A suite is a directory holding one ``<id>.json`` per test and a
``manifest.json``.  Every file starts with a ``format`` and ``version``
field.  Test files carry no timestamps and are written with a fixed
key order, so regenerating a suite reproduces them byte for byte.
"""

from typing import Any, Dict, List, NamedTuple, Optional, Tuple

from dataclasses import dataclass, field

import json
import os

from ospfmbt.exceptions import CorruptedFileError, FormatVersionError
from ospfmbt.model.lsa import Lsa, Link, LinkKind, LsType, LsaKey
from ospfmbt.model.lsa import LsaMessage, sort_links
from ospfmbt.model.state import NetworkState
from ospfmbt.symbolic.values import SymInt
from ospfmbt.testgen.terms import SeqTerm, seq_term, parse_term
from ospfmbt.topology import TopologyError
from ospfmbt.topology.concrete import ConcreteTopology, format_topology
from ospfmbt.topology.concrete import parse_topology

TEST_FORMAT = "ospf-mbt-test"
MANIFEST_FORMAT = "ospf-mbt-manifest"
FORMAT_VERSION = 1
MANIFEST_NAME = "manifest.json"

_LINK_PREFIXES = {"p2p": LinkKind.POINT_TO_POINT,
                  "transit": LinkKind.TRANSIT,
                  "attached": LinkKind.ATTACHED}

def parse_link(text: str) -> Link:
    (prefix, target) = text.split(":", 1)
    return Link(_LINK_PREFIXES[prefix], int(target[1:]))

class LsaRecord(NamedTuple):
    """An LSA as a test file states it, with its sequence number as a term"""
    ls_type: LsType
    lsid: int
    ar: int
    seq: SeqTerm
    max_age: bool
    links: Tuple[Link, ...]
    absolute: bool

    @classmethod
    def of(cls, lsa: Lsa) -> 'LsaRecord':
        return cls(lsa.ls_type, lsa.lsid, lsa.ar, seq_term(lsa), lsa.max_age,
                   lsa.links, lsa.absolute)

    @property
    def key(self) -> LsaKey:
        return (int(self.ls_type), self.lsid, self.ar)

    def to_lsa(self) -> Lsa:
        return Lsa(self.ls_type, self.lsid, self.ar, SymInt(self.seq.value),
                   self.max_age, self.links, self.absolute)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'type': self.ls_type.name.lower(),
            'lsid': self.lsid,
            'ar': self.ar,
            'seq': str(self.seq),
            'value': self.seq.value,
            'max_age': self.max_age,
            'absolute': self.absolute,
            'links': [str(link) for link in self.links],
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'LsaRecord':
        return cls(LsType[data['type'].upper()], int(data['lsid']),
                   int(data['ar']), parse_term(data['seq'], data['value']),
                   bool(data['max_age']),
                   sort_links(parse_link(l) for l in data['links']),
                   bool(data.get('absolute', False)))

    def describe(self) -> str:
        kind = "router" if self.ls_type == LsType.ROUTER else "network"
        age = " maxage" if self.max_age else ""
        links = ", ".join(str(link) for link in self.links)
        return (f"{kind} lsid={self.lsid} ar=R{self.ar} seq={self.seq}"
                f"({self.seq.value}){age} [{links}]")

class MessageRecord(NamedTuple):
    src: int
    dest: int
    net: Optional[int]
    flooded: bool
    lsa: LsaRecord

    @classmethod
    def of(cls, msg: LsaMessage) -> 'MessageRecord':
        return cls(msg.src, msg.dest, msg.net, msg.flooded,
                   LsaRecord.of(msg.lsa))

    def to_message(self) -> LsaMessage:
        return LsaMessage(self.src, self.dest, self.lsa.to_lsa(), self.net,
                          self.flooded)

    def to_dict(self) -> Dict[str, Any]:
        return {'src': self.src, 'dest': self.dest, 'net': self.net,
                'flooded': self.flooded, 'lsa': self.lsa.to_dict()}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'MessageRecord':
        return cls(int(data['src']), int(data['dest']), data['net'],
                   bool(data['flooded']), LsaRecord.from_dict(data['lsa']))

    def describe(self) -> str:
        via = f" via N{self.net}" if self.net is not None else ""
        return f"R{self.src} -> R{self.dest}{via}: {self.lsa.describe()}"

StateRecord = Dict[int, List[LsaRecord]]

def render_state(state: NetworkState) -> StateRecord:
    """The observable LSDBs of a state, as records"""
    return {router.index: [LsaRecord.of(lsa) for lsa in router.entries()]
            for router in state.routers}

def _state_to_dict(state: StateRecord) -> Dict[str, Any]:
    return {f"R{r}": [lsa.to_dict() for lsa in lsas]
            for r, lsas in sorted(state.items())}

def _state_from_dict(data: Dict[str, Any]) -> StateRecord:
    return {int(name[1:]): [LsaRecord.from_dict(lsa) for lsa in lsas]
            for name, lsas in data.items()}

@dataclass
class TestFile:
    """
    One generated test: where to start, what to send, and what every
    router's LSDB must look like afterwards.

    ``reached`` keeps what extension needs to continue from the final
    states of this test's path; it is not written to disk.
    """
    # pylint: disable=too-many-instance-attributes
    id: str
    depth: int
    topology: ConcreteTopology
    initial_seqs: Dict[int, int]
    setup_msgs: List[MessageRecord]
    probe_msgs: List[MessageRecord]
    expected_final: StateRecord
    expected_trace: List[MessageRecord]
    start_state: Optional[StateRecord] = None
    seed: Optional[str] = None
    path_constraint: List[str] = field(default_factory=list)
    final_key: str = ""
    reached: Any = field(default=None, compare=False, repr=False)

    __test__ = False

    def messages(self) -> List[MessageRecord]:
        return self.setup_msgs + self.probe_msgs

    def to_dict(self) -> Dict[str, Any]:
        return {
            'format': TEST_FORMAT,
            'version': FORMAT_VERSION,
            'id': self.id,
            'depth': self.depth,
            'seed': self.seed,
            'topology': format_topology(self.topology),
            'initial_seqs': {f"R{r}": v
                             for r, v in sorted(self.initial_seqs.items())},
            'setup_msgs': [m.to_dict() for m in self.setup_msgs],
            'probe_msgs': [m.to_dict() for m in self.probe_msgs],
            'start_state': (_state_to_dict(self.start_state)
                            if self.start_state is not None else None),
            'expected_final': _state_to_dict(self.expected_final),
            'expected_trace': [m.to_dict() for m in self.expected_trace],
            'path_constraint': list(self.path_constraint),
            'final_key': self.final_key,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'TestFile':
        start = data.get('start_state')
        return cls(
            id=data['id'],
            depth=int(data['depth']),
            topology=parse_topology(data['topology']),
            initial_seqs={int(name[1:]): int(v)
                          for name, v in data['initial_seqs'].items()},
            setup_msgs=[MessageRecord.from_dict(m)
                        for m in data['setup_msgs']],
            probe_msgs=[MessageRecord.from_dict(m)
                        for m in data['probe_msgs']],
            expected_final=_state_from_dict(data['expected_final']),
            expected_trace=[MessageRecord.from_dict(m)
                            for m in data['expected_trace']],
            start_state=(_state_from_dict(start)
                         if start is not None else None),
            seed=data.get('seed'),
            path_constraint=list(data.get('path_constraint', [])),
            final_key=data.get('final_key', ""))

@dataclass
class Manifest:
    """What a suite holds and how it was generated"""
    tests: List[str]
    config: Dict[str, Any]
    config_hash: str
    unique_states: int
    iterations: List[int] = field(default_factory=list)
    seed: Optional[int] = None
    wall_time: float = 0.0

    def to_dict(self) -> Dict[str, Any]:
        return {
            'format': MANIFEST_FORMAT,
            'version': FORMAT_VERSION,
            'test_count': len(self.tests),
            'unique_states': self.unique_states,
            'iterations': list(self.iterations),
            'seed': self.seed,
            'wall_time': round(self.wall_time, 3),
            'config_hash': self.config_hash,
            'config': self.config,
            'tests': list(self.tests),
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'Manifest':
        return cls(tests=list(data['tests']), config=dict(data['config']),
                   config_hash=data['config_hash'],
                   unique_states=int(data['unique_states']),
                   iterations=list(data.get('iterations', [])),
                   seed=data.get('seed'),
                   wall_time=float(data.get('wall_time', 0.0)))

def check_header(path: str, data: Any, expected: str) -> None:
    """
    Verify the format header of a loaded file.

    Raises:
        :obj:`.CorruptedFileError`: The file is not a JSON object.
        :obj:`.FormatVersionError`: The header names another format or
            version.
    """
    if not isinstance(data, dict):
        raise CorruptedFileError(path, "expected a JSON object")
    if data.get('format') != expected or \
       data.get('version') != FORMAT_VERSION:
        raise FormatVersionError(path, expected, FORMAT_VERSION,
                                 data.get('format'), data.get('version'))

def load_json(path: str, expected: str) -> Dict[str, Any]:
    try:
        with open(path) as f:
            data = json.load(f)
    except json.JSONDecodeError as e:
        raise CorruptedFileError(path, str(e)) from e
    check_header(path, data, expected)
    return data

def dump_json(path: str, data: Dict[str, Any]) -> None:
    with open(path, "w") as f:
        json.dump(data, f, indent=1)
        f.write("\n")

def write_test(path: str, test: TestFile) -> None:
    dump_json(path, test.to_dict())

def read_test(path: str) -> TestFile:
    data = load_json(path, TEST_FORMAT)
    try:
        return TestFile.from_dict(data)
    except (KeyError, ValueError, TypeError, TopologyError) as e:
        raise CorruptedFileError(path, f"{type(e).__name__}: {e}") from e

def write_suite(directory: str, tests: List[TestFile],
                manifest: Manifest) -> None:
    """
    Write a suite directory.

    Args:
        directory: The directory; created if missing
        tests: The tests, in generation order
        manifest: The manifest; its test list is replaced by the ids of
            ``tests``
    """
    os.makedirs(directory, exist_ok=True)
    for test in tests:
        write_test(os.path.join(directory, f"{test.id}.json"), test)
    manifest.tests = [test.id for test in tests]
    dump_json(os.path.join(directory, MANIFEST_NAME), manifest.to_dict())

def read_manifest(directory: str) -> Manifest:
    path = os.path.join(directory, MANIFEST_NAME)
    data = load_json(path, MANIFEST_FORMAT)
    try:
        return Manifest.from_dict(data)
    except (KeyError, ValueError, TypeError) as e:
        raise CorruptedFileError(path, f"{type(e).__name__}: {e}") from e

def read_suite(directory: str) -> Tuple[Manifest, List[TestFile]]:
    """
    Read a suite directory.

    Returns:
        (:obj:`Manifest`, :obj:`list` of :obj:`TestFile`): The manifest
        and the tests in manifest order
    """
    manifest = read_manifest(directory)
    tests = [read_test(os.path.join(directory, f"{test_id}.json"))
             for test_id in manifest.tests]
    return (manifest, tests)
