# -*- coding: utf-8 -*-
# vim:set shiftwidth=4 softtabstop=4 expandtab textwidth=79:
"""
Sequence-number terms.

A generated test cannot know the sequence numbers a system under test
will use, so expected values are written relative to something the
runner observes:

- ``init:R<i>+<k>``: router i's initial sequence number plus k
- ``msg:M<j>+<k>``: the sequence number injected with message j plus k
- ``net:N<j>+<k>``: net j's Network-LSA sequence number before the test
  plus k
- ``abs+<k>``: InitialSeqNum plus k, for instances originated after a
  MaxSeqNum wrap
- a bare model value, mapped through the common sequence base

Every term also carries the model value it stood for.
"""

from typing import NamedTuple, Optional

import re

from ospfmbt.model.lsa import Lsa, LsType
from ospfmbt.symbolic.expr import VarRole

INIT = "init"
MSG = "msg"
NET = "net"
ABS = "abs"
VALUE = "value"

_TERM = re.compile(r"^(?:(init):R(\d+)|(msg):M(\d+)|(net):N(\d+)|(abs))"
                   r"([+-]\d+)$")

class SeqTerm(NamedTuple):
    kind: str
    index: Optional[int]
    offset: int
    value: int

    def __str__(self) -> str:
        if self.kind == VALUE:
            return str(self.offset)
        if self.kind == ABS:
            return f"abs{self.offset:+d}"
        prefix = {INIT: "R", MSG: "M", NET: "N"}[self.kind]
        return f"{self.kind}:{prefix}{self.index}{self.offset:+d}"

def parse_term(text: str, value: int) -> SeqTerm:
    """
    Parse the string form of a term.

    Args:
        text: The term, e.g. ``init:R1+1``
        value: The model value it stands for

    Returns:
        :obj:`SeqTerm`: The term

    Raises:
        :obj:`ValueError`: The text is not a term.
    """
    text = text.strip()
    if re.match(r"^-?\d+$", text):
        return SeqTerm(VALUE, None, int(text), value)
    match = _TERM.match(text)
    if match is None:
        raise ValueError(f"`{text}' is not a sequence term")
    groups = match.groups()
    offset = int(groups[7])
    for kind, index in ((groups[0], groups[1]), (groups[2], groups[3]),
                        (groups[4], groups[5])):
        if kind is not None:
            return SeqTerm(kind, int(index), offset, value)
    return SeqTerm(ABS, None, offset, value)

def seq_term(lsa: Lsa) -> SeqTerm:
    """Describe an LSA's sequence number as a term"""
    value = lsa.seq.value
    if lsa.absolute:
        return SeqTerm(ABS, None, value, value)
    shape = lsa.seq.affine()
    if shape is not None:
        (var, offset) = shape
        if var.role == VarRole.INIT_SEQ:
            return SeqTerm(INIT, var.args[0], offset, value)
        if var.role == VarRole.MSG_SEQ:
            return SeqTerm(MSG, var.args[0], offset, value)
    if lsa.ls_type == LsType.NETWORK:
        # Network-LSAs start at model value 0
        return SeqTerm(NET, lsa.lsid, value, value)
    return SeqTerm(VALUE, None, value, value)
