import pytest
from hypothesis import given, settings

from platdga.diagram import (
    PlatDiagram,
    crossing_grading,
    initial_pairing,
    maslov,
    parse_plat,
    slice_pairing_sweep,
)
from platdga.errors import CrossingRangeError, DiagramSyntaxError, NotAKnotError

from conftest import plats


class TestParser:
    def test_trefoil_text(self):
        d = parse_plat("plat 2 : 2 2 2")
        assert d == PlatDiagram(2, (2, 2, 2))

    def test_empty_word_unknot(self):
        assert parse_plat("plat 1 :") == PlatDiagram(1, ())

    def test_json_form(self):
        d = parse_plat('{"cusps": 2, "word": [2, 2, 2]}')
        assert d == PlatDiagram(2, (2, 2, 2))

    def test_out_of_range_position(self):
        with pytest.raises(CrossingRangeError):
            parse_plat("plat 2 : 9")

    def test_two_component_link_rejected(self):
        with pytest.raises(NotAKnotError):
            parse_plat("plat 2 : 2 2")

    def test_empty_two_cusp_is_link(self):
        with pytest.raises(NotAKnotError):
            PlatDiagram(2, ())

    @pytest.mark.parametrize(
        "text",
        ["", "plat", "plat x : 1", "plat 2 ; 1", "braid 2 : 1", "plat 2 : one"],
    )
    def test_bad_grammar(self, text):
        with pytest.raises(DiagramSyntaxError):
            parse_plat(text)

    def test_bad_json_keys(self):
        with pytest.raises(DiagramSyntaxError):
            parse_plat('{"cusps": 2}')

    @given(plats())
    def test_text_round_trip(self, d):
        assert parse_plat(d.to_text()) == d

    @given(plats())
    def test_json_round_trip(self, d):
        import json

        assert parse_plat(json.dumps(d.to_json_dict())) == d


class TestMaslov:
    def test_trefoil(self, trefoil):
        m = maslov(trefoil)
        assert (m.rotation, m.tb, m.modulus) == (0, 1, 0)

    def test_unknot(self, unknot):
        m = maslov(unknot)
        assert (m.rotation, m.tb) == (0, -1)

    def test_kinked_unknot(self, kinked_unknot):
        m = maslov(kinked_unknot)
        assert abs(m.rotation) == 1
        assert m.tb == -2
        assert m.modulus == 2

    def test_normalization_arc(self, trefoil):
        assert maslov(trefoil).value(0, 1) == 0

    @given(plats())
    @settings(deadline=None)
    def test_cusp_relation(self, d):
        # exact when the rotation number vanishes, otherwise mod 2r: the
        # closing cusp of the trace absorbs the monodromy
        m = maslov(d)
        last = d.crossings

        def step_ok(upper, lower):
            delta = upper - lower - 1
            return delta % m.modulus == 0 if m.modulus else delta == 0

        for k in range(1, d.cusps + 1):
            assert step_ok(m.value(0, 2 * k - 1), m.value(0, 2 * k))
            assert step_ok(m.value(last, 2 * k - 1), m.value(last, 2 * k))

    @given(plats())
    @settings(deadline=None)
    def test_orientation_reversal(self, d):
        fwd, rev = maslov(d, 1), maslov(d, -1)
        assert rev.rotation == -fwd.rotation
        assert rev.tb == fwd.tb
        for cell, value in fwd.potential.items():
            delta = value - rev.potential[cell]
            assert delta % fwd.modulus == 0 if fwd.modulus else delta == 0

    @given(plats())
    @settings(deadline=None)
    def test_rotation_zero_iff_even_monodromy(self, d):
        m = maslov(d)
        assert m.modulus == abs(2 * m.rotation)
        assert m.modulus % 2 == 0


class TestGrading:
    def test_trefoil_all_zero(self, trefoil):
        m = maslov(trefoil)
        assert [crossing_grading(trefoil, m, j) for j in (1, 2, 3)] == [0, 0, 0]

    def test_two_cusp_unknot(self, two_cusp_unknot):
        m = maslov(two_cusp_unknot)
        assert crossing_grading(two_cusp_unknot, m, 1) == 0
        assert m.modulus == 0

    def test_bad_index(self, trefoil):
        with pytest.raises(IndexError):
            crossing_grading(trefoil, maslov(trefoil), 4)

    @given(plats())
    @settings(deadline=None)
    def test_grading_orientation_independent(self, d):
        fwd, rev = maslov(d, 1), maslov(d, -1)
        for j in range(1, d.crossings + 1):
            a, b = crossing_grading(d, fwd, j), crossing_grading(d, rev, j)
            assert (a - b) % fwd.modulus == 0 if fwd.modulus else a == b


class TestPairingSweep:
    def test_all_switches_constant(self, trefoil):
        states = slice_pairing_sweep(trefoil, {1, 2, 3})
        assert all(s == initial_pairing(2) for s in states)

    def test_trefoil_no_switches(self, trefoil):
        states = slice_pairing_sweep(trefoil)
        crossed = (0, 3, 4, 1, 2)
        flat = initial_pairing(2)
        assert states == [flat, crossed, flat, crossed]

    def test_unknot_single_slice(self, unknot):
        assert slice_pairing_sweep(unknot) == [initial_pairing(1)]

    @given(plats())
    @settings(deadline=None)
    def test_final_state_matches_permutation(self, d):
        # with no switches the flat pairing is pushed through the word
        states = slice_pairing_sweep(d)
        sigma = d.strand_permutation()
        final = {}
        for k in range(1, d.cusps + 1):
            final[sigma[2 * k - 1]] = sigma[2 * k]
            final[sigma[2 * k]] = sigma[2 * k - 1]
        assert list(states[-1][1:]) == [final[r] for r in range(1, d.rows + 1)]
