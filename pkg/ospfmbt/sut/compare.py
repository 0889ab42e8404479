# -*- coding: utf-8 -*-
# vim:set shiftwidth=4 softtabstop=4 expandtab textwidth=79:

from typing import Any, Dict, List, Mapping, NamedTuple, Optional, Sequence

from ospfmbt.model.lsa import LsaKey, LsType
from ospfmbt.model.routing import Route
from ospfmbt.sut.adapter import ObservedLsa
from ospfmbt.sut.normalize import SeqEvaluator
from ospfmbt.testgen.testfile import StateRecord

MISSING = "missing"
EXTRA = "extra"
MISMATCH = "mismatch"
ROUTE = "route"

class Diff(NamedTuple):
    """One way a router differs from what the test expects"""
    router: int
    key: str
    field: str
    expected: str
    observed: str
    kind: str

    def describe(self) -> str:
        return (f"R{self.router} {self.key}: {self.field} expected "
                f"{self.expected}, observed {self.observed}")

    def to_dict(self) -> Dict[str, Any]:
        return dict(self._asdict())

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'Diff':
        return cls(int(data['router']), data['key'], data['field'],
                   data['expected'], data['observed'], data['kind'])

def format_key(key: LsaKey) -> str:
    (ls_type, lsid, ar) = key
    kind = "router" if ls_type == LsType.ROUTER else "network"
    return f"{kind} lsid={lsid} ar=R{ar}"

def format_trace_entry(src: int, dest: int, lsa: Any, wire_seq: int) -> str:
    """
    One line of a message trace, in the same form for the model's and
    the system's traces.  ``lsa`` is anything with the LSA identifying
    fields and ``max_age``.
    """
    age = " maxage" if lsa.max_age else ""
    key = format_key((int(lsa.ls_type), lsa.lsid, lsa.ar))
    return f"R{src}->R{dest} {key} seq={wire_seq:#010x}{age}"

def _links(links: Sequence[Any]) -> str:
    return "[" + ", ".join(str(link) for link in sorted(links)) + "]"

def compare_states(expected: StateRecord,
                   observed: Mapping[int, List[ObservedLsa]],
                   evaluator: SeqEvaluator) -> List[Diff]:
    """
    Compare the LSDBs a test expects with those read from the routers.

    Sequence numbers are compared after evaluating the expected terms on
    the wire; links are compared as sets.

    Args:
        expected: The expected LSDB of every router
        observed: The LSDB read from every router
        evaluator: Maps expected sequence terms to wire values

    Returns:
        :obj:`list` of :obj:`Diff`: Every difference, by router and key;
        empty when the states agree
    """
    diffs: List[Diff] = list()
    for router in sorted(set(expected) | set(observed)):
        want = {rec.key: rec for rec in expected.get(router, [])}
        have = {lsa.key: lsa for lsa in observed.get(router, [])}
        for key in sorted(set(want) | set(have)):
            name = format_key(key)
            rec = want.get(key)
            lsa = have.get(key)
            if lsa is None:
                diffs.append(Diff(router, name, "lsa", rec.describe(),
                                  "nothing", MISSING))
                continue
            if rec is None:
                diffs.append(Diff(router, name, "lsa", "nothing",
                                  f"seq={lsa.seq:#010x}", EXTRA))
                continue
            seq = evaluator.wire(rec)
            if seq != lsa.seq:
                diffs.append(Diff(router, name, "seq",
                                  f"{seq:#010x} ({rec.seq})",
                                  f"{lsa.seq:#010x}", MISMATCH))
            if rec.max_age != lsa.max_age:
                diffs.append(Diff(router, name, "max_age", str(rec.max_age),
                                  str(lsa.max_age), MISMATCH))
            if set(rec.links) != set(lsa.links):
                diffs.append(Diff(router, name, "links", _links(rec.links),
                                  _links(lsa.links), MISMATCH))
    return diffs

def _route(route: Optional[Route]) -> str:
    if route is None:
        return "unreachable"
    return f"via R{route.next_hop} cost {route.cost}"

def compare_routes(expected: Mapping[int, Dict[int, Route]],
                   observed: Mapping[int, Dict[int, Route]]) -> List[Diff]:
    """Compare routing tables router by router"""
    diffs: List[Diff] = list()
    for router in sorted(set(expected) | set(observed)):
        want = expected.get(router, dict())
        have = observed.get(router, dict())
        for dest in sorted(set(want) | set(have)):
            if want.get(dest) != have.get(dest):
                diffs.append(Diff(router, f"R{dest}", "route",
                                  _route(want.get(dest)),
                                  _route(have.get(dest)), ROUTE))
    return diffs
