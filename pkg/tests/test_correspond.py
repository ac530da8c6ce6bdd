import pytest
from hypothesis import given, settings

from platdga.augment import enumerate_augmentations
from platdga.correspond import (
    fibers,
    return_geometry,
    ruling_from_augmentation,
    special_disk_parity,
    switch_geometry,
    verify_correspondence,
)
from platdga.dga import build_dga, rho_divides
from platdga.diagram import PlatDiagram, maslov
from platdga.errors import NotAnAugmentationError

from conftest import plats, seeded_plats


def trefoil_eps(bits):
    eps = {f"q{i + 1}": int(b) for i, b in enumerate(bits)}
    eps.update({"c1": 0, "c2": 0})
    return eps


class TestGeometryTables:
    def test_switch_geometries(self):
        assert switch_geometry(3, 1, 6) == "disjoint"
        assert switch_geometry(4, 2, 1) == "nested_above"  # b < a < p
        assert switch_geometry(1, 4, 3) == "nested_below"  # p+1 < b < a

    def test_return_geometries(self):
        assert return_geometry(3, 1, 2) == "above"
        assert return_geometry(1, 3, 4) == "below"
        assert return_geometry(2, 4, 1) == "straddle"


class TestSpecialDiskParity:
    def test_thin_rectangle(self, trefoil):
        values = trefoil_eps("111")
        assert special_disk_parity(trefoil, 1, (2, 3), 2, values) == 1

    def test_pinched_between(self, trefoil):
        # the strip from the segment to q3 pinches at q2: no disk survives
        values = trefoil_eps("111")
        assert special_disk_parity(trefoil, 1, (2, 3), 3, values) == 0

    def test_companion_segment_no_corners(self):
        d = PlatDiagram(2, (2, 2, 2))
        values = trefoil_eps("111")
        # rows 1 and 4 never reach rows (2,3) without corner chances
        assert special_disk_parity(d, 2, (1, 4), 3, values) == 0

    def test_target_left_of_segment(self, trefoil):
        assert special_disk_parity(trefoil, 2, (2, 3), 2, trefoil_eps("111")) == 0

    def test_corner_gate_concrete(self):
        # q1, q3 on rows (2,3); q2 on rows (3,4) pushes the lower boundary
        # down to row 4 unless it corners there, so q2's value gates the
        # disk from q1's crossing segment to q3 (the tail crossings only
        # make the diagram a knot)
        d = PlatDiagram(3, (2, 3, 2, 1, 4))
        base = {f"q{j}": 0 for j in range(1, 6)}
        base.update({f"c{k}": 0 for k in (1, 2, 3)})
        gated = dict(base, q2=1)
        assert special_disk_parity(d, 1, (2, 3), 3, gated) == 1
        assert special_disk_parity(d, 1, (2, 3), 3, base) == 0


class TestTrefoilCorrespondence:
    # the sweep both classifies and corrects: a switch at q1 erases the
    # augmentation bit at q2 through the thin-rectangle disk, so the five
    # augmentations land on the three rulings with fiber sizes 1, 2, 2
    CASES = {
        "111": ("SDR", "101"),
        "110": ("SDR", "100"),
        "100": ("SSS", "111"),
        "001": ("DRS", "001"),
        "011": ("DRS", "011"),
    }

    @pytest.mark.parametrize("bits", sorted(CASES))
    def test_mapping(self, trefoil, bits):
        mas = maslov(trefoil)
        g = build_dga(trefoil, mas)
        ruling, trace = ruling_from_augmentation(trefoil, mas, g, trefoil_eps(bits), 0)
        letters, final = self.CASES[bits]
        assert "".join(x for _, x in ruling.classification) == letters
        assert "".join(str(trace.final[f"q{j}"]) for j in (1, 2, 3)) == final

    def test_fiber_sizes(self, trefoil):
        mas = maslov(trefoil)
        g = build_dga(trefoil, mas)
        table = fibers(trefoil, mas, g, 0)
        sizes = {
            "".join(x for _, x in r.classification): len(augs)
            for r, augs in table.entries
        }
        assert sizes == {"SSS": 1, "SDR": 2, "DRS": 2}

    def test_switch_update_is_recorded(self, trefoil):
        mas = maslov(trefoil)
        g = build_dga(trefoil, mas)
        _, trace = ruling_from_augmentation(trefoil, mas, g, trefoil_eps("111"), 0)
        first = trace.steps[0]
        assert first.letter == "S" and first.geometry == "disjoint"
        assert first.segments == ("crossing",)
        assert first.flips == (("q2",),)

    def test_rejects_non_augmentation(self, trefoil):
        mas = maslov(trefoil)
        g = build_dga(trefoil, mas)
        with pytest.raises(NotAnAugmentationError):
            ruling_from_augmentation(trefoil, mas, g, trefoil_eps("000"), 0)


class TestFibers:
    def test_unknot_graded(self, unknot):
        mas = maslov(unknot)
        g = build_dga(unknot, mas)
        table = fibers(unknot, mas, g, 0)
        assert len(table.entries) == 1
        ruling, augs = table.entries[0]
        assert ruling.switches == frozenset() and len(augs) == 1

    def test_unknot_ungraded_cusp_bit_free(self, unknot):
        mas = maslov(unknot)
        g = build_dga(unknot, mas)
        table = fibers(unknot, mas, g, 1)
        (entry,) = table.entries
        assert len(entry[1]) == 2  # 2^(returns + cusps) = 2

    def test_kinked_unknot_vacuous(self, kinked_unknot):
        mas = maslov(kinked_unknot)
        g = build_dga(kinked_unknot, mas)
        table = fibers(kinked_unknot, mas, g, 1)
        assert table.entries == []

    @given(plats())
    @settings(deadline=None, max_examples=30)
    def test_virtual_assignments_stay_graded(self, d):
        # every intermediate assignment vanishes away from divisible gradings
        mas = maslov(d)
        g = build_dga(d, mas)
        rho = 1 if mas.rotation != 0 else 0
        for eps in enumerate_augmentations(g, rho):
            _, trace = ruling_from_augmentation(d, mas, g, eps, rho)
            for assignment in trace.assignments:
                for gen in g.generators:
                    if assignment[gen.name]:
                        assert rho_divides(rho, gen.grading)

    @given(plats())
    @settings(deadline=None, max_examples=30)
    def test_produced_ruling_is_enumerated(self, d):
        from platdga.ruling import enumerate_rulings

        mas = maslov(d)
        g = build_dga(d, mas)
        rho = 1 if mas.rotation != 0 else 0
        valid = {r.switches: r for r in enumerate_rulings(d, mas, rho)}
        for eps in enumerate_augmentations(g, rho):
            ruling, _ = ruling_from_augmentation(d, mas, g, eps, rho)
            assert valid[ruling.switches] == ruling


class TestVerifyCorrespondence:
    @pytest.mark.parametrize(
        "cusps,word,rho",
        [
            (2, (2, 2, 2), 0),
            (2, (2, 2, 2), 1),
            (1, (), 0),
            (1, (), 1),
            (2, (1, 2), 1),
            (2, (2,), 0),
        ],
    )
    def test_atlas_diagrams_pass(self, cusps, word, rho):
        report = verify_correspondence(PlatDiagram(cusps, word), rho)
        assert report.ok, report.first_failure()

    def test_report_payload(self, trefoil):
        report = verify_correspondence(trefoil, 0)
        assert report.payload["augmentations"] == 5
        assert report.payload["theta"] == [-1, 1, 1]
        assert report.payload["aug_number"]["display"] == "5*2^(-1/2)"
        assert report.payload["aug_number"] == report.payload["ruling_sum"]

    def test_seeded_sample_passes(self):
        for d in seeded_plats(20, seed=21):
            mas = maslov(d)
            rho = 0 if mas.rotation == 0 else 1
            assert verify_correspondence(d, rho, mas=mas).ok
