# -*- coding: utf-8 -*-
# vim:set shiftwidth=4 softtabstop=4 expandtab textwidth=79:

from typing import Tuple

import array
import sys

import ospfmbt.wire

LSA_CHECKSUM_OFFSET = 16

def _fletcher_sums(data: bytes) -> Tuple[int, int]:
    c0 = c1 = 0
    for byte in data:
        c0 += byte
        c1 += c0
    return c0 % 255, c1 % 255

def fletcher_checksum(data: bytes, offset: int) -> int:
    """
    Compute the ISO 8473 Fletcher checksum of a buffer whose 16-bit
    checksum field sits at ``offset``.

    The checksum field is treated as zero.  The returned value, stored
    big-endian at ``offset``, makes both running sums zero modulo 255.

    Args:
        data: The buffer to checksum
        offset: The byte offset of the checksum field within ``data``

    Returns:
        :obj:`int`: The 16-bit checksum value

    Raises:
        :obj:`.ShortBufferError`: The buffer does not contain the
            checksum field.
    """
    if len(data) < offset + 2:
        raise ospfmbt.wire.ShortBufferError("checksummed buffer",
                                            offset + 2, len(data))
    data = data[:offset] + b"\x00\x00" + data[offset + 2:]
    c0, c1 = _fletcher_sums(data)

    x = ((len(data) - offset - 1) * c0 - c1) % 255
    if x <= 0:
        x += 255
    y = 510 - c0 - x
    if y > 255:
        y -= 255
    return (x << 8) | y

def fletcher_verify(data: bytes) -> bool:
    c0, c1 = _fletcher_sums(data)
    return c0 == 0 and c1 == 0

def lsa_checksum(lsa: bytes) -> int:
    """
    Compute the LS checksum of an encoded LSA.  The LS age field is not
    covered by the checksum.

    Args:
        lsa: The encoded LSA, header included

    Returns:
        :obj:`int`: The 16-bit LS checksum
    """
    return fletcher_checksum(lsa[2:], LSA_CHECKSUM_OFFSET - 2)

def lsa_checksum_ok(lsa: bytes) -> bool:
    return fletcher_verify(lsa[2:])

def internet_checksum(data: bytes) -> int:
    """
    Compute the 16-bit one's complement checksum used by the OSPF packet
    header.

    Args:
        data: The bytes to sum, with the checksum field zeroed

    Returns:
        :obj:`int`: The checksum in network byte order as an integer
    """
    if len(data) % 2 == 1:
        data += b"\x00"
    words = array.array("H", data)
    if sys.byteorder == "little":
        words.byteswap()
    s = sum(words)
    s = (s >> 16) + (s & 0xffff)
    s += s >> 16
    return ~s & 0xffff
