# -*- coding: utf-8 -*-
# vim:set shiftwidth=4 softtabstop=4 expandtab textwidth=79:

import hashlib

from ospfmbt.model.lsa import Lsa
from ospfmbt.model.state import NetworkState
from ospfmbt.symbolic.expr import VarRole
from ospfmbt.topology.concrete import format_topology

def _seq(lsa: Lsa, messages: bool) -> str:
    shape = lsa.seq.affine()
    if shape is not None:
        (var, offset) = shape
        if var.role == VarRole.INIT_SEQ:
            return f"init{var.args[0]}{offset:+d}"
        if messages and var.role == VarRole.MSG_SEQ:
            return f"msg{var.args[0]}{offset:+d}"
    frame = "abs" if lsa.absolute else "rel"
    return f"{frame}{lsa.seq.value}"

def _entry(lsa: Lsa, messages: bool) -> str:
    links = " ".join(str(link) for link in lsa.links)
    age = " maxage" if lsa.max_age else ""
    return (f"{int(lsa.ls_type)},{lsa.lsid},{lsa.ar} {_seq(lsa, messages)}"
            f"{age} [{links}]")

def canonicalize(state: NetworkState, messages: bool = False) -> str:
    """
    Encode a stable state so that equal states get equal keys.

    Routers appear in index order and LSDB entries in key order.  A
    sequence number that is an initial-sequence symbol plus an offset is
    written as that symbol and offset, any other as its model value, so
    two states agreeing under one valuation but not symbolically get
    different keys.  The topology is part of the key.

    Args:
        state: A stable state
        messages: Also write sequence numbers taken from an injected
            message as that message's symbol plus an offset.  Keys built
            this way are equal for every input of one explored path.

    Returns:
        :obj:`str`: The key
    """
    lines = [format_topology(state.topology).strip()]
    for router in state.routers:
        lines.append(f"R{router.index}")
        lines += ["  " + _entry(lsa, messages) for lsa in router.entries()]
        remnant = state.remnants.get(router.index)
        if remnant is not None:
            lines.append("  remnant " + _entry(remnant, messages))
    return "\n".join(lines)

def key_digest(key: str) -> str:
    return hashlib.sha256(key.encode()).hexdigest()[:16]
