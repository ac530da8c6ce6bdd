"""From an augmentation to a ruling, one crossing at a time.

The sweep keeps a pairing state and a "virtual" assignment.  At an
eligible crossing the current value decides the extension: value 1 on
nested-or-disjoint pairs gives a switch, value 0 a departure, and
interlaced pairs always give a return.  After extending over crossing j
with value 1 the assignment is corrected on every later crossing k by
the parity of embedded disks that are pinched at k on the left wedge of
that crossing and capped on the left by a short vertical segment just
right of j.  Which strands the segment joins depends only on the local
geometry at j:

  switch, companions disjoint (one above, one below)  -> crossing strands
  switch, companions nested above                     -> companion strands, then crossing strands
  switch, companions nested below                     -> crossing strands, then companion strands
  return, companions enclosing the crossing (straddle)-> no correction
  return, companions both above or both below         -> companion strands

Disk boundaries may corner only at crossings currently valued 1, and
corrections at k may use corrections already made at earlier targets of
the same pass.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .augment import Assignment, aug_number, enumerate_augmentations, is_augmentation
from .dga import (
    Dga,
    build_dga,
    chi_star,
    require_zero_or_odd,
    rho_divides,
    validate_rho,
)
from .diagram import MaslovData, PlatDiagram, initial_pairing, maslov, transpose_pairing
from .errors import NotAnAugmentationError
from .halfpow import HalfPow, halfpow_sum
from .report import Report
from .ruling import Ruling, enumerate_rulings, interlaced, theta_multiset

# correction recipe per switch geometry: which segments, in which order
SWITCH_SEGMENTS = {
    "disjoint": ("crossing",),
    "nested_above": ("companions", "crossing"),
    "nested_below": ("crossing", "companions"),
}
RETURN_SEGMENTS = {
    "straddle": (),
    "above": ("companions",),
    "below": ("companions",),
}


def switch_geometry(p: int, a: int, b: int) -> str:
    """Relative position of the companion rows a (of p) and b (of p+1)
    for a non-interlaced crossing on rows (p, p+1)."""
    if a < p and b > p + 1:
        return "disjoint"
    if a < p and b < p:
        return "nested_above"
    return "nested_below"


def return_geometry(p: int, a: int, b: int) -> str:
    """Same for an interlaced crossing: both companions above, both
    below, or one on each side enclosing the crossing strands."""
    if a < p and b < p:
        return "above"
    if a > p + 1 and b > p + 1:
        return "below"
    return "straddle"


@dataclass
class ExtensionStep:
    crossing: int
    eligible: bool
    letter: str | None  # S / D / R, None when the grading is not divisible
    geometry: str | None
    segments: tuple[str, ...]
    flips: tuple[tuple[str, ...], ...]  # per segment pass: names flipped
    intermediate: Assignment | None  # after the first pass of a double pass


@dataclass
class VirtualAugTrace:
    assignments: list[Assignment]  # eps_1 .. eps_{m+1}
    steps: list[ExtensionStep]

    @property
    def final(self) -> Assignment:
        return self.assignments[-1]


def special_disk_parity(
    d: PlatDiagram,
    after: int,
    segment_rows: tuple[int, int],
    target: int,
    values: Assignment,
) -> int:
    """Parity of embedded disks from a vertical segment to a crossing.

    The segment joins two strands just right of crossing `after`; the
    disks end pinched in the left wedge of crossing `target`.  Boundary
    paths follow strands, and may corner (upper path: on the lower row
    of a crossing; lower path: on the upper row) only where the current
    assignment is 1.  Counting is mod 2 throughout.
    """
    if target <= after:
        return 0
    u0, l0 = sorted(segment_rows)
    if u0 == l0:
        raise ValueError("segment must join two distinct strands")
    pt = d.word[target - 1]
    states = {(u0, l0): 1}
    for j in range(after + 1, target):
        p = d.word[j - 1]
        corner_ok = values[f"q{j}"] == 1
        nxt: dict[tuple[int, int], int] = {}
        for (u, low), count in states.items():
            if (u, low) == (p, p + 1):
                continue  # pinched at the wrong crossing: not a disk to target
            moves = []
            if u == p:
                moves.append((p + 1, low))
            elif u == p + 1:
                moves.append((p, low))
                if corner_ok:
                    moves.append((p + 1, low))
            elif low == p + 1:
                moves.append((u, p))
            elif low == p:
                moves.append((u, p + 1))
                if corner_ok:
                    moves.append((u, p))
            else:
                moves.append((u, low))
            for nu, nl in moves:
                if nu < nl:
                    nxt[(nu, nl)] = nxt.get((nu, nl), 0) ^ count
        states = {k: v for k, v in nxt.items() if v}
    return states.get((pt, pt + 1), 0)


def _run_pass(
    d: PlatDiagram, after: int, segment_rows: tuple[int, int], values: Assignment
) -> tuple[str, ...]:
    """Correct every later crossing in place; returns the flipped names."""
    flipped = []
    for k in range(after + 1, d.crossings + 1):
        if special_disk_parity(d, after, segment_rows, k, values):
            name = f"q{k}"
            values[name] ^= 1
            flipped.append(name)
    return tuple(flipped)


def ruling_from_augmentation(
    d: PlatDiagram,
    mas: MaslovData,
    g: Dga,
    eps: Assignment,
    rho: int,
) -> tuple[Ruling, VirtualAugTrace]:
    validate_rho(rho, mas.modulus)
    require_zero_or_odd(rho)
    if not is_augmentation(g, eps, rho):
        raise NotAnAugmentationError(f"{eps} fails the augmentation equations")

    state = initial_pairing(d.cusps)
    values = dict(eps)
    assignments = [dict(values)]
    steps: list[ExtensionStep] = []
    switches: list[int] = []
    letters: list[tuple[int, str]] = []

    for j in range(1, d.crossings + 1):
        p = d.word[j - 1]
        a, b = state[p], state[p + 1]
        assert a != p + 1, "augmentation sweep reached a partner-strand crossing"
        name = f"q{j}"
        eligible = rho_divides(rho, g.grading_of(name))
        if not eligible:
            state = transpose_pairing(state, p)
            steps.append(ExtensionStep(j, False, None, None, (), (), None))
            assignments.append(dict(values))
            continue

        crossing_rows = (p, p + 1)
        companion_rows = (min(a, b), max(a, b))
        if interlaced((p, a), (p + 1, b)):
            letter, geometry = "R", return_geometry(p, a, b)
            segments = RETURN_SEGMENTS[geometry] if values[name] else ()
            state = transpose_pairing(state, p)
        elif values[name]:
            letter, geometry = "S", switch_geometry(p, a, b)
            segments = SWITCH_SEGMENTS[geometry]
            switches.append(j)
        else:
            letter, geometry = "D", switch_geometry(p, a, b)
            segments = ()
            state = transpose_pairing(state, p)
        letters.append((j, letter))

        flips = []
        intermediate = None
        for idx, seg in enumerate(segments):
            rows = crossing_rows if seg == "crossing" else companion_rows
            flips.append(_run_pass(d, j, rows, values))
            if len(segments) == 2 and idx == 0:
                intermediate = dict(values)
        steps.append(
            ExtensionStep(j, True, letter, geometry, segments, tuple(flips), intermediate)
        )
        assignments.append(dict(values))

    assert state == initial_pairing(d.cusps), "sweep must close up at the right cusps"
    s = len(switches)
    ruling = Ruling(
        switches=frozenset(switches),
        classification=tuple(letters),
        theta=d.cusps - s,
        s=s,
        d=sum(1 for _, x in letters if x == "D"),
        r=sum(1 for _, x in letters if x == "R"),
    )
    return ruling, VirtualAugTrace(assignments, steps)


@dataclass
class FiberTable:
    rho: int
    entries: list[tuple[Ruling, list[Assignment]]]
    traces: dict[int, list[VirtualAugTrace]] = field(default_factory=dict)

    def sizes(self) -> dict[Ruling, int]:
        return {r: len(augs) for r, augs in self.entries}

    def total(self) -> int:
        return sum(len(augs) for _, augs in self.entries)

    def to_json_dict(self, chi: int | None = None) -> dict:
        out = []
        for ruling, augs in self.entries:
            entry = {
                "ruling": ruling.to_json_dict(),
                "theta": ruling.theta,
                "fiber": augs,
                "actual_size": len(augs),
            }
            if chi is not None:
                entry["expected_size"] = 2 ** ((ruling.theta + chi) // 2)
            out.append(entry)
        return {"rho": self.rho, "fibers": out}


def fibers(
    d: PlatDiagram,
    mas: MaslovData,
    g: Dga,
    rho: int,
    *,
    max_eligible: int | None = None,
) -> FiberTable:
    """Group every augmentation by the ruling the sweep assigns to it."""
    kwargs = {} if max_eligible is None else {"max_eligible": max_eligible}
    augs = enumerate_augmentations(g, rho, **kwargs)
    grouped: dict[frozenset[int], tuple[Ruling, list[Assignment]]] = {}
    traces: dict[frozenset[int], list[VirtualAugTrace]] = {}
    for eps in augs:
        ruling, trace = ruling_from_augmentation(d, mas, g, eps, rho)
        key = ruling.switches
        if key not in grouped:
            grouped[key] = (ruling, [])
            traces[key] = []
        grouped[key][1].append(eps)
        traces[key].append(trace)
    entries = sorted(grouped.values(), key=lambda item: item[0].sort_key())
    table = FiberTable(rho=rho, entries=entries)
    table.traces = {
        i: traces[ruling.switches] for i, (ruling, _) in enumerate(entries)
    }
    return table


def verify_correspondence(
    d: PlatDiagram,
    rho: int,
    *,
    mas: MaslovData | None = None,
    g: Dga | None = None,
    max_eligible: int | None = None,
    disk_budget: int | None = None,
) -> Report:
    """Check every counting consequence of the correspondence on one plat.

    The report asserts, in order: each ruling's fiber has exactly
    2^((theta+chi*)/2) augmentations; the same size equals 2^returns
    (with an extra cusp factor in the ungraded case); fibers partition
    the augmentation set; the normalized augmentation count equals the
    exact sum of 2^(theta/2) over the ruling invariant; every final
    assignment augments all switches, a subset of the returns and no
    other crossing; and distinct augmentations end in distinct finals.
    """
    require_zero_or_odd(rho)
    if mas is None:
        mas = maslov(d)
    if g is None:
        kwargs = {} if disk_budget is None else {"disk_budget": disk_budget}
        g = build_dga(d, mas, **kwargs)
    validate_rho(rho, mas.modulus)
    chi = chi_star(g, rho)
    rulings = enumerate_rulings(d, mas, rho)
    table = fibers(d, mas, g, rho, max_eligible=max_eligible)
    report = Report()
    report.payload = {
        "diagram": d.to_json_dict(),
        "rho": rho,
        "chi_star": chi,
        "rulings": len(rulings),
        "augmentations": table.total(),
        "theta": list(theta_multiset(rulings)),
    }

    sizes = {r.switches: len(augs) for r, augs in table.entries}
    ok = True
    detail = ""
    for r in rulings:
        if (r.theta + chi) % 2 != 0:
            ok, detail = False, f"theta {r.theta} and chi* {chi} differ in parity"
            break
        expected = 2 ** ((r.theta + chi) // 2)
        actual = sizes.get(r.switches, 0)
        if actual != expected:
            ok = False
            detail = f"ruling {sorted(r.switches)}: fiber {actual}, expected {expected}"
            break
    report.add("fiber_size_theta_formula", ok, detail)

    ok, detail = True, ""
    for r in rulings:
        expected = 2 ** (r.r + (d.cusps if rho == 1 else 0))
        actual = sizes.get(r.switches, 0)
        if actual != expected:
            ok = False
            detail = f"ruling {sorted(r.switches)}: fiber {actual}, 2^returns gives {expected}"
            break
    report.add("fiber_size_return_formula", ok, detail)

    stray = set(sizes) - {r.switches for r in rulings}
    report.add(
        "fiber_partition",
        not stray and table.total() == len(enumerate_augmentations(
            g, rho, **({} if max_eligible is None else {"max_eligible": max_eligible})
        )),
        f"stray rulings: {[sorted(s) for s in stray]}" if stray else "",
    )

    total = halfpow_sum(HalfPow.pow2_half(t) for t in theta_multiset(rulings))
    aug_kwargs = {} if max_eligible is None else {"max_eligible": max_eligible}
    aug = aug_number(g, rho, **aug_kwargs)
    report.add(
        "aug_number_equals_ruling_sum",
        total == aug,
        f"{aug} vs {total}" if total != aug else "",
    )
    report.payload["aug_number"] = aug.to_json_dict()
    report.payload["ruling_sum"] = total.to_json_dict()

    ok, detail = True, ""
    finals = []
    for i, (r, _) in enumerate(table.entries):
        letters = r.letters
        for trace in table.traces[i]:
            final = trace.final
            finals.append(tuple(sorted(final.items())))
            for j in range(1, d.crossings + 1):
                letter = letters.get(j)
                value = final[f"q{j}"]
                if letter == "S" and value != 1:
                    ok, detail = False, f"final misses switch q{j} of {sorted(r.switches)}"
                elif letter not in ("S", "R") and value != 0:
                    ok, detail = False, f"final augments q{j}, not a switch or return"
    report.add("final_support", ok, detail)
    report.add(
        "final_injective",
        len(set(finals)) == len(finals),
        "two augmentations share a final assignment" if len(set(finals)) != len(finals) else "",
    )
    return report
