# -*- coding: utf-8 -*-
# vim:set shiftwidth=4 softtabstop=4 expandtab textwidth=79:

from typing import NamedTuple, Tuple, Iterable

import struct

import ospfmbt.wire
from ospfmbt.wire import OSPF_HEADER_LEN, OSPF_VERSION, LS_UPDATE
from ospfmbt.wire.checksum import internet_checksum
from ospfmbt.wire.lsa import WireLsa, encode_lsa, decode_lsa

# version, type, length, router id, area id, checksum, autype, authentication
_OSPF_HEADER = struct.Struct("!BBHIIHHQ")
_COUNT = struct.Struct("!I")

# The authentication field is excluded from the packet checksum
_AUTH_OFFSET = 16

class LsuPacket(NamedTuple):
    router_id: int
    lsas: Tuple[WireLsa, ...]
    area_id: int = 0

def _packet_checksum(header: bytes, body: bytes) -> int:
    data = header[:12] + b"\x00\x00" + header[14:_AUTH_OFFSET] + body
    return internet_checksum(data)

def encode_lsu_packet(router_id: int, lsas: Iterable[WireLsa],
                      area_id: int = 0, finalize: bool = True) -> bytes:
    """
    Build an OSPFv2 Link State Update packet.

    Args:
        router_id: The router ID placed in the OSPF header.  When
            injecting, this is the neighbor the message claims to come
            from.
        lsas: The LSAs to carry
        area_id: The area ID, backbone by default
        finalize: Whether each LSA's length and checksum are computed

    Returns:
        :obj:`bytes`: The encoded packet
    """
    body = b""
    count = 0
    for lsa in lsas:
        body += encode_lsa(lsa, finalize)
        count += 1
    body = _COUNT.pack(count) + body
    length = OSPF_HEADER_LEN + len(body)
    header = _OSPF_HEADER.pack(OSPF_VERSION, LS_UPDATE, length, router_id,
                               area_id, 0, 0, 0)
    checksum = _packet_checksum(header, body)
    header = _OSPF_HEADER.pack(OSPF_VERSION, LS_UPDATE, length, router_id,
                               area_id, checksum, 0, 0)
    return header + body

def decode_lsu_packet(data: bytes) -> LsuPacket:
    """
    Decode an OSPFv2 Link State Update packet.

    Args:
        data: The packet, starting with the OSPF header

    Returns:
        :obj:`LsuPacket`: The decoded packet

    Raises:
        :obj:`.WireError`: The packet or one of its LSAs is malformed.
    """
    if len(data) < OSPF_HEADER_LEN + _COUNT.size:
        raise ospfmbt.wire.ShortBufferError("LS update packet",
                                            OSPF_HEADER_LEN + _COUNT.size,
                                            len(data))
    (version, ptype, length, router_id, area_id,
     checksum, _, _) = _OSPF_HEADER.unpack_from(data)
    if version != OSPF_VERSION or ptype != LS_UPDATE:
        raise ospfmbt.wire.WireError(
            f"not an OSPFv2 LS update (version {version}, type {ptype})")
    if length < OSPF_HEADER_LEN + _COUNT.size or length > len(data):
        raise ospfmbt.wire.LengthError(
            f"packet length {length} does not match buffer of {len(data)}")

    header = bytes(data[:OSPF_HEADER_LEN])
    body = bytes(data[OSPF_HEADER_LEN:length])
    computed = _packet_checksum(header, body)
    if computed != checksum:
        raise ospfmbt.wire.ChecksumError("packet", checksum, computed)

    (count,) = _COUNT.unpack_from(body)
    offset = _COUNT.size
    lsas = []
    for _ in range(count):
        (lsa, used) = decode_lsa(body, offset)
        lsas.append(lsa)
        offset += used
    if offset != len(body):
        raise ospfmbt.wire.LengthError(
            f"{len(body) - offset} trailing bytes after {count} LSAs")
    return LsuPacket(router_id, tuple(lsas), area_id)
