# -*- coding: utf-8 -*-
# vim:set shiftwidth=4 softtabstop=4 expandtab textwidth=79:

from typing import NamedTuple, List, Tuple, Union

import struct

import ospfmbt.wire
from ospfmbt.wire import LSA_HEADER_LEN, ROUTER_LSA, NETWORK_LSA
from ospfmbt.wire import KNOWN_LS_TYPES, DEFAULT_OPTIONS
from ospfmbt.wire.checksum import lsa_checksum, lsa_checksum_ok

# age, options, type, link state id, advertising router, seq, checksum, length
_HEADER = struct.Struct("!HBBIIIHH")
_ROUTER_BODY = struct.Struct("!BBH")
_ROUTER_LINK = struct.Struct("!IIBBH")
_MASK = struct.Struct("!I")
_ADDR = struct.Struct("!I")

class RouterLinkEntry(NamedTuple):
    link_id: int
    link_data: int
    link_type: int
    metric: int = 1
    tos_count: int = 0

class RouterBody(NamedTuple):
    links: Tuple[RouterLinkEntry, ...] = ()
    flags: int = 0

    def encode(self) -> bytes:
        data = _ROUTER_BODY.pack(self.flags, 0, len(self.links))
        for link in self.links:
            data += _ROUTER_LINK.pack(link.link_id, link.link_data,
                                      link.link_type, link.tos_count,
                                      link.metric)
        return data

    @classmethod
    def decode(cls, data: bytes) -> 'RouterBody':
        if len(data) < _ROUTER_BODY.size:
            raise ospfmbt.wire.ShortBufferError("router-LSA body",
                                                _ROUTER_BODY.size, len(data))
        (flags, _, count) = _ROUTER_BODY.unpack_from(data)
        offset = _ROUTER_BODY.size
        links: List[RouterLinkEntry] = []
        for _ in range(count):
            if len(data) < offset + _ROUTER_LINK.size:
                raise ospfmbt.wire.LengthError(
                    f"router-LSA declares {count} links but body holds "
                    f"{(len(data) - _ROUTER_BODY.size) // _ROUTER_LINK.size}")
            (link_id, link_data, link_type,
             tos_count, metric) = _ROUTER_LINK.unpack_from(data, offset)
            links.append(RouterLinkEntry(link_id, link_data, link_type,
                                         metric, tos_count))
            # TOS entries are 4 bytes each and are skipped
            offset += _ROUTER_LINK.size + 4 * tos_count
        return cls(tuple(links), flags)

class NetworkBody(NamedTuple):
    attached: Tuple[int, ...] = ()
    mask: int = 0xffffff00

    def encode(self) -> bytes:
        data = _MASK.pack(self.mask)
        for router in self.attached:
            data += _ADDR.pack(router)
        return data

    @classmethod
    def decode(cls, data: bytes) -> 'NetworkBody':
        if len(data) < _MASK.size:
            raise ospfmbt.wire.ShortBufferError("network-LSA body",
                                                _MASK.size, len(data))
        if (len(data) - _MASK.size) % _ADDR.size:
            raise ospfmbt.wire.LengthError(
                "network-LSA body is not a whole number of addresses")
        (mask,) = _MASK.unpack_from(data)
        attached = tuple(_ADDR.unpack_from(data, off)[0]
                         for off in range(_MASK.size, len(data), _ADDR.size))
        return cls(attached, mask)

class OpaqueBody(NamedTuple):
    """The body of an LSA type this tool does not interpret"""
    data: bytes = b""

    def encode(self) -> bytes:
        return self.data

LsaBody = Union[RouterBody, NetworkBody, OpaqueBody]

class WireLsa(NamedTuple):
    """
    An OSPFv2 LSA as it appears on the wire.

    Addresses are 32-bit integers and ``seq`` is the unsigned sequence
    number field.  ``checksum`` and ``length`` hold whatever the header
    says; :func:`finalize_lsa` recomputes them.
    """
    ls_type: int
    lsid: int
    adv_router: int
    seq: int
    body: LsaBody
    age: int = 0
    options: int = DEFAULT_OPTIONS
    checksum: int = 0
    length: int = 0

    @property
    def key(self) -> Tuple[int, int, int]:
        return (self.ls_type, self.lsid, self.adv_router)

def _encode(lsa: WireLsa, checksum: int, length: int) -> bytes:
    return _HEADER.pack(lsa.age, lsa.options, lsa.ls_type, lsa.lsid,
                        lsa.adv_router, lsa.seq & 0xffffffff, checksum,
                        length) + lsa.body.encode()

def finalize_lsa(lsa: WireLsa) -> WireLsa:
    """
    Fill in the length and LS checksum fields of an LSA.

    Args:
        lsa: The LSA to finalize

    Returns:
        :obj:`WireLsa`: A copy with ``length`` and ``checksum`` set
    """
    length = LSA_HEADER_LEN + len(lsa.body.encode())
    data = _encode(lsa, 0, length)
    return lsa._replace(length=length, checksum=lsa_checksum(data))

def encode_lsa(lsa: WireLsa, finalize: bool = True) -> bytes:
    """
    Encode an LSA.

    Args:
        lsa: The LSA to encode
        finalize: Whether to compute the length and checksum fields.
            When :obj:`False` the header fields are written as given,
            which is how deliberately malformed LSAs are built.

    Returns:
        :obj:`bytes`: The encoded LSA
    """
    if finalize:
        lsa = finalize_lsa(lsa)
    return _encode(lsa, lsa.checksum, lsa.length)

def decode_lsa(data: bytes, offset: int = 0) -> Tuple[WireLsa, int]:
    """
    Decode one LSA.

    Args:
        data: The buffer containing the LSA
        offset: Where the LSA begins within ``data``

    Returns:
        (:obj:`WireLsa`, :obj:`int`): The LSA and the number of bytes
        it occupied

    Raises:
        :obj:`.ShortBufferError`: Fewer than 20 bytes remain.
        :obj:`.LengthError`: The length field is smaller than a header
            or larger than the buffer.
        :obj:`.ChecksumError`: The LS checksum does not verify.
        :obj:`.UnknownLsTypeError`: The LS type is not an OSPFv2 type.
    """
    available = len(data) - offset
    if available < LSA_HEADER_LEN:
        raise ospfmbt.wire.ShortBufferError("LSA header", LSA_HEADER_LEN,
                                            available)
    (age, options, ls_type, lsid, adv_router,
     seq, checksum, length) = _HEADER.unpack_from(data, offset)
    if length < LSA_HEADER_LEN or length > available:
        raise ospfmbt.wire.LengthError(
            f"LSA length {length} is outside [{LSA_HEADER_LEN}, {available}]")

    raw = bytes(data[offset:offset + length])
    if not lsa_checksum_ok(raw):
        raise ospfmbt.wire.ChecksumError("LS", checksum, lsa_checksum(raw))

    if ls_type not in KNOWN_LS_TYPES:
        raise ospfmbt.wire.UnknownLsTypeError(ls_type)

    payload = raw[LSA_HEADER_LEN:]
    body: LsaBody
    if ls_type == ROUTER_LSA:
        body = RouterBody.decode(payload)
    elif ls_type == NETWORK_LSA:
        body = NetworkBody.decode(payload)
    else:
        body = OpaqueBody(payload)

    lsa = WireLsa(ls_type, lsid, adv_router, seq, body, age, options,
                  checksum, length)
    return (lsa, length)
