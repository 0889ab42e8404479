# -*- coding: utf-8 -*-
# vim:set shiftwidth=4 softtabstop=4 expandtab textwidth=79:

from typing import Optional

import ospfmbt.wire
from ospfmbt.wire import INITIAL_SEQ_NUM, MAX_SEQ_NUM

def to_signed(value: int) -> int:
    value &= 0xffffffff
    if value & 0x80000000:
        return value - 0x100000000
    return value

def to_unsigned(value: int) -> int:
    return value & 0xffffffff

def seq_compare(a: int, b: int) -> int:
    """
    Order two wire sequence numbers.

    Args:
        a: A 32-bit sequence number as stored on the wire
        b: A 32-bit sequence number as stored on the wire

    Returns:
        :obj:`int`: -1, 0, or 1 as ``a`` is older, equal, or newer
    """
    sa = to_signed(a)
    sb = to_signed(b)
    if sa < sb:
        return -1
    if sa > sb:
        return 1
    return 0

def model_to_wire_seq(model_seq: int, model_base: int, wire_base: int,
                      model_max: Optional[int] = None) -> int:
    """
    Map a model sequence number to the wire.

    ``model_base`` is the model value the SUT's ``wire_base`` corresponds
    to; the mapping is the uniform shift between them.  When ``model_max``
    is given, that value always maps to MaxSeqNum.  Every other value must
    land in [InitialSeqNum, MaxSeqNum - 1] since MaxSeqNum belongs to the
    model's MaxSeq.

    Args:
        model_seq: The model sequence number
        model_base: The model sequence number matching ``wire_base``
        wire_base: A wire sequence number observed on the SUT
        model_max: The model's MaxSeq, if it should map to MaxSeqNum

    Returns:
        :obj:`int`: The wire sequence number, as an unsigned value

    Raises:
        :obj:`.SequenceOverflowError`: The result would fall outside
            [InitialSeqNum, MaxSeqNum - 1].
    """
    if model_max is not None and model_seq == model_max:
        return MAX_SEQ_NUM
    value = to_signed(wire_base) + (model_seq - model_base)
    if value < to_signed(INITIAL_SEQ_NUM) or value >= to_signed(MAX_SEQ_NUM):
        raise ospfmbt.wire.SequenceOverflowError(value, INITIAL_SEQ_NUM,
                                                 MAX_SEQ_NUM - 1)
    return to_unsigned(value)

def wire_to_model_seq(wire_seq: int, model_base: int, wire_base: int) -> int:
    """
    Map a wire sequence number back into the model frame given by
    ``model_base`` and ``wire_base``.  The inverse of
    :func:`model_to_wire_seq` without the MaxSeq special case.

    Args:
        wire_seq: The wire sequence number
        model_base: The model sequence number matching ``wire_base``
        wire_base: A wire sequence number observed on the SUT

    Returns:
        :obj:`int`: The model sequence number
    """
    return model_base + to_signed(wire_seq) - to_signed(wire_base)
