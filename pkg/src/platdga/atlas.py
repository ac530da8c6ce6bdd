"""Built-in example knots with frozen expected invariants.

Expected values are regression data: the unknot and trefoil numbers are
small enough to audit by hand; the two 5_2 entries were found by
exhaustive search over 3-cusp plats (single component, tb=1, rotation 0,
topological type fixed by the Jones polynomial of the resolved diagram)
and then frozen from this tool's own output.  At maximal tb that knot
type carries exactly two Legendrian classes, and the normalized graded
augmentation count separates them, so the pair realizes both classes.
"""
from __future__ import annotations

from dataclasses import dataclass

from .diagram import PlatDiagram


@dataclass(frozen=True)
class AtlasEntry:
    name: str
    diagram: PlatDiagram
    expected: dict
    provenance: str


def _entry(name, cusps, word, expected, provenance):
    return AtlasEntry(name, PlatDiagram(cusps, tuple(word)), expected, provenance)


ATLAS: dict[str, AtlasEntry] = {
    e.name: e
    for e in [
        _entry(
            "unknot",
            1,
            (),
            {
                "tb": -1,
                "rotation": 0,
                "chi_star": {0: -1, 1: 1},
                "aug_count": {0: 1, 1: 2},
                "theta": {0: (1,), 1: (1,)},
                "aug_number": {0: (1, 1), 1: (1, 1)},
            },
            "one-cusp flying saucer; every value checked by hand",
        ),
        _entry(
            "two_cusp_unknot",
            2,
            (2,),
            {
                "tb": -1,
                "rotation": 0,
                "chi_star": {0: -1, 1: 3},
                "aug_count": {0: 1, 1: 4},
                "theta": {0: (1,), 1: (1,)},
                "aug_number": {0: (1, 1), 1: (1, 1)},
            },
            "unknot with a kinkless extra cusp pair; hand-checked",
        ),
        _entry(
            "stabilized_unknot",
            2,
            (1, 2),
            {
                "tb": -2,
                "rotation": -1,
                "chi_star": {1: 4},
                "aug_count": {1: 0},
                "theta": {1: ()},
                "aug_number": {1: (0, 0)},
            },
            "once-stabilized unknot: no rulings, no augmentations",
        ),
        _entry(
            "trefoil",
            2,
            (2, 2, 2),
            {
                "tb": 1,
                "rotation": 0,
                "chi_star": {0: 1, 1: 5},
                "aug_count": {0: 5, 1: 20},
                "theta": {0: (-1, 1, 1), 1: (-1, 1, 1)},
                "aug_number": {0: (5, -1), 1: (5, -1)},
                "fiber_sizes": {0: (1, 2, 2)},
            },
            "maximal right-handed trefoil; hand-checked",
        ),
        _entry(
            "chekanov_52_a",
            3,
            (2, 1, 4, 3, 3, 2, 4, 4),
            {
                "tb": 1,
                "rotation": 0,
                "chi_star": {0: 3, 1: 11},
                "aug_count": {0: 6, 1: 96},
                "theta": {0: (-1, 1), 1: (-1, 1)},
                "aug_number": {0: (3, -1), 1: (3, -1)},
            },
            "maximal-tb 5_2 class with two graded rulings; plat word found "
            "by exhaustive 3-cusp search, knot type pinned by the Jones "
            "polynomial, values frozen from this tool",
        ),
        _entry(
            "chekanov_52_b",
            3,
            (2, 2, 1, 3, 2, 2, 2, 4),
            {
                "tb": 1,
                "rotation": 0,
                "chi_star": {0: -1, 1: 11},
                "aug_count": {0: 1, 1: 96},
                "theta": {0: (1,), 1: (-1, 1)},
                "aug_number": {0: (1, 1), 1: (3, -1)},
            },
            "maximal-tb 5_2 class with a single graded ruling; same search "
            "and freezing procedure as its partner entry",
        ),
    ]
}


def get(name: str) -> AtlasEntry:
    return ATLAS[name]


def names() -> list[str]:
    return list(ATLAS)
