# -*- coding: utf-8 -*-
# vim:set shiftwidth=4 softtabstop=4 expandtab textwidth=79:

import unittest

from hypothesis import given, settings
from hypothesis import strategies as st

from ospfmbt.model.engine import OspfModel
from ospfmbt.model.lsa import Lsa, Link, LinkKind, LsType
from ospfmbt.symbolic.values import SymInt
from ospfmbt.topology.concrete import router_ip, network_ip
from ospfmbt.topology.named import named_topology
from ospfmbt.wire import INITIAL_SEQ_NUM, MAX_SEQ_NUM, MAX_AGE
from ospfmbt.wire import WireError, ChecksumError, ShortBufferError
from ospfmbt.wire import LengthError, SequenceOverflowError
from ospfmbt.wire import UnknownLsTypeError, ROUTER_LSA, NETWORK_LSA
from ospfmbt.wire import LINK_TRANSIT
from ospfmbt.wire.checksum import lsa_checksum, lsa_checksum_ok
from ospfmbt.wire.checksum import internet_checksum
from ospfmbt.wire.lsa import WireLsa, OpaqueBody, encode_lsa, decode_lsa
from ospfmbt.wire.lsa import RouterBody, RouterLinkEntry, NetworkBody
from ospfmbt.wire.lsa import finalize_lsa
from ospfmbt.wire.mapping import lsa_to_wire, wire_to_lsa, canonical_checksum
from ospfmbt.wire.packet import encode_lsu_packet, decode_lsu_packet
from ospfmbt.wire.seq import to_signed, to_unsigned, seq_compare
from ospfmbt.wire.seq import model_to_wire_seq, wire_to_model_seq

class TestSequenceNumbers(unittest.TestCase):
    def test_signed_range(self):
        self.assertEqual(to_signed(INITIAL_SEQ_NUM), -0x7fffffff)
        self.assertEqual(to_signed(MAX_SEQ_NUM), 0x7fffffff)
        self.assertEqual(to_unsigned(-0x7fffffff), INITIAL_SEQ_NUM)

    def test_compare_is_signed(self):
        self.assertEqual(seq_compare(INITIAL_SEQ_NUM, MAX_SEQ_NUM), -1)
        self.assertEqual(seq_compare(MAX_SEQ_NUM, INITIAL_SEQ_NUM), 1)
        self.assertEqual(seq_compare(0x80000005, 0x80000005), 0)
        self.assertEqual(seq_compare(0xfffffffe, 0x00000001), -1)

    def test_model_max_maps_to_max_seq_num(self):
        base = to_unsigned(to_signed(MAX_SEQ_NUM) - 4)
        self.assertEqual(model_to_wire_seq(4, 0, base, model_max=4),
                         MAX_SEQ_NUM)
        self.assertEqual(model_to_wire_seq(1, 0, base, model_max=4),
                         to_unsigned(to_signed(MAX_SEQ_NUM) - 3))

    def test_shift(self):
        self.assertEqual(model_to_wire_seq(3, 1, 0x80000005), 0x80000007)
        self.assertEqual(wire_to_model_seq(0x80000007, 1, 0x80000005), 3)

    def test_overflow(self):
        with self.assertRaises(SequenceOverflowError):
            model_to_wire_seq(1, 0, MAX_SEQ_NUM)
        with self.assertRaises(SequenceOverflowError):
            model_to_wire_seq(-1, 0, INITIAL_SEQ_NUM)

    def test_max_seq_num_is_reserved(self):
        base = to_unsigned(to_signed(MAX_SEQ_NUM) - 1)
        with self.assertRaises(SequenceOverflowError):
            model_to_wire_seq(1, 0, base)
        self.assertEqual(model_to_wire_seq(0, 0, base), base)
        self.assertEqual(model_to_wire_seq(1, 0, base, model_max=1),
                         MAX_SEQ_NUM)

    @given(st.integers(min_value=0, max_value=1000),
           st.integers(min_value=to_signed(INITIAL_SEQ_NUM),
                       max_value=to_signed(MAX_SEQ_NUM) - 1001))
    def test_wire_to_model_inverts(self, value, base):
        wire = model_to_wire_seq(value, 0, to_unsigned(base))
        self.assertEqual(wire_to_model_seq(wire, 0, to_unsigned(base)),
                         value)

class TestChecksums(unittest.TestCase):
    @given(st.binary(min_size=20, max_size=200))
    def test_lsa_checksum_verifies(self, data):
        checksum = lsa_checksum(data)
        fixed = data[:16] + checksum.to_bytes(2, "big") + data[18:]
        self.assertTrue(lsa_checksum_ok(fixed))

    def test_age_is_not_covered(self):
        topo = named_topology("line2")
        lsa = OspfModel(topo).router_lsa(0, 0)
        data = encode_lsa(lsa_to_wire(lsa, INITIAL_SEQ_NUM, topo.dr))
        aged = b"\x0e\x10" + data[2:]
        self.assertTrue(lsa_checksum_ok(aged))

    def test_internet_checksum_of_zeroes(self):
        self.assertEqual(internet_checksum(b"\x00" * 8), 0xffff)

class TestLsaCodec(unittest.TestCase):
    def setUp(self):
        self.topo = named_topology("five")
        self.model = OspfModel(self.topo)

    def test_router_lsa_fields(self):
        wire = lsa_to_wire(self.model.router_lsa(3, 0), INITIAL_SEQ_NUM,
                           self.topo.dr)
        self.assertEqual(wire.ls_type, ROUTER_LSA)
        self.assertEqual(wire.lsid, router_ip(3))
        self.assertEqual(wire.adv_router, router_ip(3))
        (link,) = wire.body.links
        self.assertEqual(link.link_type, LINK_TRANSIT)
        # transit links name the DR's interface address
        self.assertEqual(link.link_id, network_ip(0, 1))
        self.assertEqual(link.link_data, network_ip(0, 3))

    def test_decode_recovers_model_lsa(self):
        for lsa in (self.model.router_lsa(1, 0),
                    self.model.network_lsa(0, 0)):
            data = encode_lsa(lsa_to_wire(lsa, INITIAL_SEQ_NUM,
                                          self.topo.dr))
            (decoded, used) = decode_lsa(data)
            self.assertEqual(used, len(data))
            back = wire_to_lsa(decoded, 0)
            self.assertEqual(back.key, lsa.key)
            self.assertEqual(back.links, lsa.links)
            self.assertFalse(back.max_age)

    def test_max_age(self):
        lsa = self.model.router_lsa(2, 0)._replace(max_age=True)
        wire = lsa_to_wire(lsa, MAX_SEQ_NUM, self.topo.dr)
        self.assertEqual(wire.age, MAX_AGE)
        self.assertTrue(wire_to_lsa(wire, 4).max_age)

    def test_corrupted_body(self):
        data = bytearray(encode_lsa(lsa_to_wire(self.model.router_lsa(1, 0),
                                                INITIAL_SEQ_NUM,
                                                self.topo.dr)))
        data[-1] ^= 0x01
        with self.assertRaises(ChecksumError):
            decode_lsa(bytes(data))

    def test_short_buffer(self):
        with self.assertRaises(ShortBufferError):
            decode_lsa(b"\x00" * 10)

    def test_length_beyond_buffer(self):
        data = encode_lsa(lsa_to_wire(self.model.router_lsa(1, 0),
                                      INITIAL_SEQ_NUM, self.topo.dr))
        with self.assertRaises(LengthError):
            decode_lsa(data[:-4])

    def test_unknown_type(self):
        lsa = WireLsa(6, 1, router_ip(0), INITIAL_SEQ_NUM, OpaqueBody(b""))
        with self.assertRaises(UnknownLsTypeError):
            decode_lsa(encode_lsa(lsa))

    def test_unmappable_type(self):
        lsa = WireLsa(5, 1, router_ip(0), INITIAL_SEQ_NUM,
                      OpaqueBody(b"\x00" * 16))
        (decoded, _) = decode_lsa(encode_lsa(lsa))
        with self.assertRaises(WireError):
            wire_to_lsa(decoded, 0)

    def test_canonical_checksum_ignores_seq(self):
        a = self.model.router_lsa(1, 1)
        b = self.model.router_lsa(1, 3)
        self.assertEqual(canonical_checksum(a, False, self.topo.dr),
                         canonical_checksum(b, False, self.topo.dr))
        empty = Lsa(LsType.ROUTER, 1, 1, SymInt(1))
        self.assertNotEqual(canonical_checksum(a, False, self.topo.dr),
                            canonical_checksum(empty, False, self.topo.dr))

u32 = st.integers(0, 0xffffffff)

router_links = st.builds(RouterLinkEntry, u32, u32, st.integers(0, 255),
                         st.integers(0, 0xffff))
bodies = st.one_of(
    st.builds(RouterBody, st.lists(router_links, max_size=8).map(tuple),
              st.integers(0, 255)),
    st.builds(NetworkBody, st.lists(u32, max_size=8).map(tuple), u32))

@st.composite
def wire_lsas(draw):
    body = draw(bodies)
    ls_type = ROUTER_LSA if isinstance(body, RouterBody) else NETWORK_LSA
    return WireLsa(ls_type, draw(u32), draw(u32), draw(u32), body,
                   draw(st.integers(0, 0xffff)), draw(st.integers(0, 255)))

def fletcher_oracle(lsa):
    """LS checksum by the weighted-sum definition"""
    data = bytearray(lsa[2:])
    data[14:16] = b"\x00\x00"
    length = len(data)
    c0 = sum(data)
    c1 = sum((length - i) * b for (i, b) in enumerate(data))
    x = ((length - 14 - 1) * c0 - c1) % 255 or 255
    y = (-c0 - x) % 255 or 255
    return (x << 8) | y

class TestCodecProperties(unittest.TestCase):
    @settings(max_examples=10000, deadline=None)
    @given(wire_lsas())
    def test_round_trip(self, lsa):
        data = encode_lsa(lsa)
        (decoded, used) = decode_lsa(data)
        self.assertEqual(used, len(data))
        self.assertEqual(decoded, finalize_lsa(lsa))

    @settings(max_examples=200, deadline=None)
    @given(st.binary(min_size=20, max_size=300))
    def test_checksum_matches_weighted_sums(self, data):
        self.assertEqual(lsa_checksum(data), fletcher_oracle(data))

    def test_checksum_of_a_known_lsa(self):
        topo = named_topology("line2")
        data = encode_lsa(lsa_to_wire(OspfModel(topo).router_lsa(1, 0),
                                      INITIAL_SEQ_NUM, topo.dr))
        self.assertEqual(int.from_bytes(data[16:18], "big"),
                         fletcher_oracle(data))

    @settings(max_examples=1000, deadline=None)
    @given(wire_lsas(), st.data())
    def test_single_byte_corruption_is_detected(self, lsa, data):
        encoded = encode_lsa(lsa)
        position = data.draw(st.integers(2, len(encoded) - 1))
        original = encoded[position]
        value = data.draw(st.integers(0, 255).filter(
            lambda v: (v - original) % 255 != 0))
        corrupted = bytearray(encoded)
        corrupted[position] = value
        self.assertFalse(lsa_checksum_ok(bytes(corrupted)))
        # the length field decides what decode_lsa checksums
        if position not in (18, 19):
            with self.assertRaises(ChecksumError):
                decode_lsa(bytes(corrupted))

class TestPacket(unittest.TestCase):
    def setUp(self):
        topo = named_topology("line3")
        model = OspfModel(topo)
        self.lsas = [lsa_to_wire(model.router_lsa(r, 0), INITIAL_SEQ_NUM + r,
                                 topo.dr) for r in topo.routers]

    def test_decode(self):
        data = encode_lsu_packet(router_ip(1), self.lsas)
        packet = decode_lsu_packet(data)
        self.assertEqual(packet.router_id, router_ip(1))
        self.assertEqual(packet.area_id, 0)
        self.assertEqual([lsa.key for lsa in packet.lsas],
                         [lsa.key for lsa in self.lsas])
        self.assertEqual([lsa.seq for lsa in packet.lsas],
                         [lsa.seq for lsa in self.lsas])

    def test_bad_packet_checksum(self):
        data = bytearray(encode_lsu_packet(router_ip(0), self.lsas))
        data[30] ^= 0xff
        with self.assertRaises(ChecksumError):
            decode_lsu_packet(bytes(data))

    def test_not_an_update(self):
        data = bytearray(encode_lsu_packet(router_ip(0), self.lsas))
        data[1] = 1
        with self.assertRaises(WireError):
            decode_lsu_packet(bytes(data))

    def test_short(self):
        with self.assertRaises(ShortBufferError):
            decode_lsu_packet(b"\x02\x04\x00")

    def test_unknown_link_kind(self):
        lsa = Lsa(LsType.ROUTER, 0, 0, SymInt(0), False,
                  (Link(LinkKind.ATTACHED, 1),))
        with self.assertRaises(WireError):
            lsa_to_wire(lsa, INITIAL_SEQ_NUM, ())
