"""Construction, validation, corners and serialization of plane maps."""

import pytest
from hypothesis import given, strategies as st

from planemaps.errors import (
    BadMark,
    Disconnected,
    FaceMismatch,
    NotInvolution,
    NotPermutation,
    ParseError,
    WrongGenus,
)
from planemaps.maps import CornerSlot, PlaneMap, build

from common import ALL_EXAMPLES, digon, double_edge, loop_map, loop_pendant, path_map


class TestBasics:
    def test_digon(self):
        m = digon()
        assert m.degrees == (2,)
        assert m.n_edges == 1
        assert m.n_vertices == 2
        assert m.contour(1) == (0, 1)
        assert m.vertices() == ((0,), (1,))

    def test_double_edge(self):
        m = double_edge()
        assert m.degrees == (2, 2)
        assert m.n_vertices == 2
        assert m.contour(1) == (0, 2)
        assert m.contour(2) == (3, 1)
        assert set(m.vertices()) == {(0, 3), (1, 2)}

    def test_path_map(self):
        m = path_map()
        assert m.degrees == (4,)
        assert m.contour(1) == (0, 2, 3, 1)
        assert m.n_vertices == 3
        assert m.vertex_of(1) == m.vertex_of(2)
        assert m.head_of(0) == m.vertex_of(1)

    def test_loop_pendant(self):
        m = loop_pendant()
        assert m.degrees == (3, 1)
        assert m.contour(1) == (0, 2, 3)
        assert m.contour(2) == (1,)
        assert m.vertex_of(0) == m.vertex_of(1) == m.vertex_of(2)
        assert m.vertex_darts(m.vertex_of(3)) == (3,)

    def test_loop_map(self):
        m = loop_map()
        assert m.degrees == (1, 1)
        assert m.n_vertices == 1

    def test_sigma_clockwise_on_loop_pendant(self):
        m = loop_pendant()
        assert m.sigma(0) == 1
        assert m.sigma(1) == 2
        assert m.sigma(2) == 0
        assert m.sigma(3) == 3

    def test_sigma_inverse(self):
        for make in ALL_EXAMPLES:
            m = make()
            for d in range(m.n_darts):
                assert m.sigma_inv(m.sigma(d)) == d
                assert m.sigma(m.sigma_inv(d)) == d
                assert m.prev(m.next[d]) == d

    def test_edges(self):
        assert double_edge().edges() == ((0, 1), (2, 3))

    def test_immutable(self):
        m = digon()
        with pytest.raises(AttributeError):
            m.twin = (0, 1)


class TestCorners:
    def test_corner_slot(self):
        m = path_map()
        assert m.corner_slot(0) == CornerSlot(1, 0)
        assert m.corner_slot(2) == CornerSlot(1, 1)
        assert m.corner_slot(3) == CornerSlot(1, 2)
        assert m.corner_slot(1) == CornerSlot(1, 3)

    def test_slot_anchor(self):
        m = path_map()
        assert m.slot_anchor(1, 0) == 0
        assert m.slot_anchor(1, 4) == 0
        assert m.slot_anchor(1, 2) == 3
        with pytest.raises(ValueError):
            m.slot_anchor(1, 5)

    def test_corner_after(self):
        m = double_edge()
        assert m.corner_after(0) == 2
        assert m.corner_after(2) == 0

    def test_with_marked(self):
        m = double_edge()
        m2 = m.with_marked(2, 1)
        assert m2.contour(2) == (1, 3)
        assert m.contour(2) == (3, 1)


class TestValidation:
    def test_not_permutation(self):
        with pytest.raises(NotPermutation):
            PlaneMap((1, 1), (1, 0), (1, 1), (0,))
        with pytest.raises(NotPermutation):
            PlaneMap((1, 0), (0, 2), (1, 1), (0,))
        with pytest.raises(NotPermutation):
            PlaneMap((1, 0), (1, 0, 2), (1, 1), (0,))

    def test_not_involution(self):
        with pytest.raises(NotInvolution):
            PlaneMap((0, 1), (1, 0), (1, 1), (0,))
        with pytest.raises(NotInvolution):
            PlaneMap((1, 2, 0), (1, 2, 0), (1, 1, 1), (0,))
        with pytest.raises(NotInvolution):
            PlaneMap((), (), (), ())

    def test_face_mismatch(self):
        with pytest.raises(FaceMismatch):
            PlaneMap((1, 0), (1, 0), (1, 2), (0,))
        with pytest.raises(FaceMismatch):
            PlaneMap((1, 0), (1, 0), (2, 2), (0,))
        with pytest.raises(FaceMismatch):
            build((4,), (1, 0), (1, 0), (1, 1), (0,))

    def test_bad_mark(self):
        with pytest.raises(BadMark):
            PlaneMap((1, 0), (1, 0), (1, 1), ())
        with pytest.raises(BadMark):
            PlaneMap((1, 0), (1, 0), (1, 1), (2,))
        with pytest.raises(BadMark):
            PlaneMap((1, 0, 3, 2), (2, 3, 0, 1), (1, 2, 1, 2), (1, 0))

    def test_disconnected(self):
        with pytest.raises(Disconnected):
            PlaneMap(
                (1, 0, 3, 2), (1, 0, 3, 2), (1, 1, 2, 2), (0, 2)
            )

    def test_wrong_genus(self):
        with pytest.raises(WrongGenus):
            PlaneMap((2, 3, 0, 1), (1, 2, 3, 0), (1, 1, 1, 1), (0,))


class TestSerialization:
    @pytest.mark.parametrize("make", ALL_EXAMPLES)
    def test_round_trip(self, make):
        m = make()
        assert PlaneMap.from_json(m.to_json()) == m

    def test_key_order(self):
        text = digon().to_json()
        keys = ["type", "twin", "next", "face", "marked"]
        positions = [text.index(f'"{k}"') for k in keys]
        assert positions == sorted(positions)

    @pytest.mark.parametrize(
        "text",
        [
            "{",
            "[]",
            "null",
            '{"type": [2]}',
            '{"type": [2], "twin": [1, 0], "next": [1, 0], "face": [1, 1]}',
            '{"type": [2], "twin": [1, 0], "next": [1, 0], "face": [1, 1],'
            ' "marked": [0.5]}',
            '{"type": [1], "twin": [0], "next": [0], "face": [1], "marked": [0]}',
            '{"type": [2], "twin": "xy", "next": [1, 0], "face": [1, 1],'
            ' "marked": [0]}',
        ],
    )
    def test_parse_error(self, text):
        with pytest.raises(ParseError):
            PlaneMap.from_json(text)

    def test_declared_type_checked(self):
        text = '{"type": [4], "twin": [1, 0], "next": [1, 0], "face": [1, 1],' \
            ' "marked": [0]}'
        with pytest.raises(FaceMismatch):
            PlaneMap.from_json(text)


class TestCanonicalCode:
    def test_distinct_maps_distinct_codes(self):
        codes = {make().canonical_code() for make in ALL_EXAMPLES}
        assert len(codes) == len(ALL_EXAMPLES)

    def test_mark_changes_code(self):
        m = double_edge()
        assert m.canonical_code() != m.with_marked(2, 1).canonical_code()

    @given(data=st.data(), idx=st.integers(0, len(ALL_EXAMPLES) - 1))
    def test_relabel_invariance(self, data, idx):
        m = ALL_EXAMPLES[idx]()
        perm = data.draw(st.permutations(range(m.n_darts)))
        m2 = m.relabel(perm)
        assert m2.canonical_code() == m.canonical_code()

    @given(data=st.data())
    def test_relabel_round_trip(self, data):
        m = loop_pendant()
        perm = data.draw(st.permutations(range(4)))
        inv = [0] * 4
        for d, x in enumerate(perm):
            inv[x] = d
        assert m.relabel(perm).relabel(inv) == m
