"""Chekanov DGA, graded augmentations and normal rulings of Legendrian
knot fronts in plat position, with exact verification of the counting
identities relating them."""

__version__ = "0.1.0"

from .diagram import (
    MaslovData,
    PlatDiagram,
    crossing_grading,
    initial_pairing,
    maslov,
    parse_plat,
    slice_pairing_sweep,
)
from .dga import (
    Dga,
    Generator,
    add_stabilization,
    build_dga,
    chi_star,
    degree_distribution,
    verify_d_squared,
)
from .halfpow import HalfPow, halfpow_sum
from .augment import aug_number, enumerate_augmentations, is_augmentation
from .ruling import (
    LaurentPoly,
    Ruling,
    enumerate_rulings,
    interlacing_trace,
    ruling_polynomial,
    theta_multiset,
)
from .correspond import (
    FiberTable,
    VirtualAugTrace,
    fibers,
    ruling_from_augmentation,
    special_disk_parity,
    verify_correspondence,
)
from .harness import full_check, random_plat, sweep_verify
from .report import Report
from . import atlas, errors

__all__ = [
    "MaslovData",
    "PlatDiagram",
    "crossing_grading",
    "initial_pairing",
    "maslov",
    "parse_plat",
    "slice_pairing_sweep",
    "Dga",
    "Generator",
    "add_stabilization",
    "build_dga",
    "chi_star",
    "degree_distribution",
    "verify_d_squared",
    "HalfPow",
    "halfpow_sum",
    "aug_number",
    "enumerate_augmentations",
    "is_augmentation",
    "LaurentPoly",
    "Ruling",
    "enumerate_rulings",
    "interlacing_trace",
    "ruling_polynomial",
    "theta_multiset",
    "FiberTable",
    "VirtualAugTrace",
    "fibers",
    "ruling_from_augmentation",
    "special_disk_parity",
    "verify_correspondence",
    "full_check",
    "random_plat",
    "sweep_verify",
    "Report",
    "atlas",
    "errors",
]
