# -*- coding: utf-8 -*-
# vim:set shiftwidth=4 softtabstop=4 expandtab textwidth=79:
"""
The ospfmbt.wire package implements the OSPF version 2 byte layouts used
to talk to a system under test: the 20-byte LSA header, Router-LSA and
Network-LSA bodies, the LS Update packet, and both checksums.

Sequence numbers are carried as unsigned 32-bit values (``0x80000001`` is
InitialSeqNum, ``0x7FFFFFFF`` is MaxSeqNum); :func:`.seq_compare` orders
them as the signed values the protocol defines.
"""

INITIAL_SEQ_NUM = 0x80000001
MAX_SEQ_NUM = 0x7FFFFFFF
MAX_AGE = 3600

LSA_HEADER_LEN = 20
OSPF_HEADER_LEN = 24
OSPF_VERSION = 2
LS_UPDATE = 4

ROUTER_LSA = 1
NETWORK_LSA = 2

# LS types registered for OSPFv2.  Anything else is rejected when decoding.
KNOWN_LS_TYPES = frozenset([1, 2, 3, 4, 5, 7, 9, 10, 11])

LINK_POINT_TO_POINT = 1
LINK_TRANSIT = 2
LINK_STUB = 3
LINK_VIRTUAL = 4

DEFAULT_OPTIONS = 0x02

class WireError(RuntimeError):
    """Base class for encoding and decoding errors"""

class ShortBufferError(WireError):
    """The buffer is shorter than the structure it should contain"""
    _fmt = "{} needs {} bytes, buffer has {}"
    def __init__(self, what: str, needed: int, available: int) -> None:
        super().__init__(self._fmt.format(what, needed, available))
        self.needed = needed
        self.available = available

class LengthError(WireError):
    """A length field is inconsistent with the data"""

class ChecksumError(WireError):
    """A checksum did not verify"""
    _fmt = "{} checksum mismatch: stored {:#06x}, computed {:#06x}"
    def __init__(self, what: str, stored: int, computed: int) -> None:
        super().__init__(self._fmt.format(what, stored, computed))
        self.stored = stored
        self.computed = computed

class UnknownLsTypeError(WireError):
    """The LS type is not one defined for OSPFv2"""
    _fmt = "unknown LS type {}"
    def __init__(self, ls_type: int) -> None:
        super().__init__(self._fmt.format(ls_type))
        self.ls_type = ls_type

class SequenceOverflowError(WireError):
    """A mapped sequence number falls outside the usable wire range"""
    _fmt = "sequence number {:#010x} is outside [{:#010x}, {:#010x}]"
    def __init__(self, value: int, low: int, high: int) -> None:
        super().__init__(self._fmt.format(value & 0xffffffff, low, high))
        self.value = value

from ospfmbt.wire.checksum import fletcher_checksum, fletcher_verify
from ospfmbt.wire.checksum import lsa_checksum, lsa_checksum_ok
from ospfmbt.wire.checksum import internet_checksum
from ospfmbt.wire.seq import model_to_wire_seq, wire_to_model_seq
from ospfmbt.wire.seq import seq_compare, to_signed, to_unsigned
from ospfmbt.wire.lsa import WireLsa, RouterLinkEntry, RouterBody
from ospfmbt.wire.lsa import NetworkBody, OpaqueBody
from ospfmbt.wire.lsa import encode_lsa, decode_lsa, finalize_lsa
from ospfmbt.wire.packet import LsuPacket, encode_lsu_packet
from ospfmbt.wire.packet import decode_lsu_packet
