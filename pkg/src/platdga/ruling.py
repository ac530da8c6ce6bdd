"""Normal rulings of a plat front and their counting data.

A ruling pairs the 2n strands at every slice so that paired paths run
from a left cusp to a right cusp and co-bound embedded disks.  Sweeping
left to right, a crossing whose two strands belong to the same pair
kills the decomposition outright; a crossing whose grading is not
divisible by rho passes through; otherwise the crossing is a switch
(pairs stay put; legal only when the two pairs are nested or disjoint),
a departure (non-interlaced pairs cross and become interlaced) or a
return (interlaced pairs cross and untangle).
"""
from __future__ import annotations

from dataclasses import dataclass

from .diagram import (
    MaslovData,
    Pairing,
    PlatDiagram,
    crossing_grading,
    initial_pairing,
    slice_pairing_sweep,
    transpose_pairing,
)
from .dga import require_zero_or_odd, rho_divides, validate_rho


def interlaced(pair_a: tuple[int, int], pair_b: tuple[int, int]) -> bool:
    """Whether the two row pairs alternate when read top to bottom."""
    rows = sorted(pair_a + pair_b)
    members = [r in pair_a for r in rows]
    return members[0] == members[2] and members[1] == members[3] and members[0] != members[1]


def eligible_crossings(d: PlatDiagram, mas: MaslovData, rho: int) -> set[int]:
    return {
        j
        for j in range(1, d.crossings + 1)
        if rho_divides(rho, crossing_grading(d, mas, j))
    }


@dataclass(frozen=True)
class Ruling:
    switches: frozenset[int]
    classification: tuple[tuple[int, str], ...]  # (crossing, letter) for eligible crossings
    theta: int
    s: int
    d: int
    r: int

    @property
    def letters(self) -> dict[int, str]:
        return dict(self.classification)

    def sort_key(self):
        return tuple(sorted(self.switches))

    def to_json_dict(self) -> dict:
        return {
            "switches": sorted(self.switches),
            "classification": {str(j): letter for j, letter in self.classification},
            "theta": self.theta,
            "counts": {"switches": self.s, "departures": self.d, "returns": self.r},
        }


def _classify(state: Pairing, p: int) -> str | None:
    """Local pair geometry at a crossing, or None when the strands are partners."""
    a, b = state[p], state[p + 1]
    if a == p + 1:
        return None
    return "interlaced" if interlaced((p, a), (p + 1, b)) else "clear"


def enumerate_rulings(d: PlatDiagram, mas: MaslovData, rho: int) -> list[Ruling]:
    """Depth-first sweep over pairings; canonical order by switch set."""
    validate_rho(rho, mas.modulus)
    eligible = eligible_crossings(d, mas, rho)
    target = initial_pairing(d.cusps)
    word = d.word
    results: list[Ruling] = []

    def dfs(j: int, state: Pairing, switches: list[int], letters: list[tuple[int, str]]):
        if j > len(word):
            if state == target:
                s = len(switches)
                dcount = sum(1 for _, letter in letters if letter == "D")
                rcount = sum(1 for _, letter in letters if letter == "R")
                results.append(
                    Ruling(
                        switches=frozenset(switches),
                        classification=tuple(letters),
                        theta=d.cusps - s,
                        s=s,
                        d=dcount,
                        r=rcount,
                    )
                )
            return
        p = word[j - 1]
        shape = _classify(state, p)
        if shape is None:
            return  # partner strands may never cross
        crossed = transpose_pairing(state, p)
        if j not in eligible:
            dfs(j + 1, crossed, switches, letters)
            return
        if shape == "clear":
            switches.append(j)
            letters.append((j, "S"))
            dfs(j + 1, state, switches, letters)
            switches.pop()
            letters.pop()
            letters.append((j, "D"))
            dfs(j + 1, crossed, switches, letters)
            letters.pop()
        else:
            letters.append((j, "R"))
            dfs(j + 1, crossed, switches, letters)
            letters.pop()

    dfs(1, target, [], [])
    results.sort(key=Ruling.sort_key)
    return results


def theta_multiset(rulings) -> tuple[int, ...]:
    return tuple(sorted(r.theta for r in rulings))


class LaurentPoly:
    """Integer-coefficient Laurent polynomial in one variable z."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: dict[int, int] | None = None):
        self.coeffs = {e: c for e, c in (coeffs or {}).items() if c}

    @staticmethod
    def monomial(exp: int, coeff: int = 1) -> "LaurentPoly":
        return LaurentPoly({exp: coeff})

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    def shifted(self, k: int) -> "LaurentPoly":
        return LaurentPoly({e + k: c for e, c in self.coeffs.items()})

    def __eq__(self, other) -> bool:
        return isinstance(other, LaurentPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def is_zero(self) -> bool:
        return not self.coeffs

    def terms(self) -> list[tuple[int, int]]:
        return sorted(self.coeffs.items())

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for e, c in self.terms():
            if e == 0:
                parts.append(str(c))
                continue
            z = "z" if e == 1 else f"z^{e}"
            if c == 1:
                parts.append(z)
            elif c == -1:
                parts.append(f"-{z}")
            else:
                parts.append(f"{c}*{z}")
        return " + ".join(parts).replace("+ -", "- ")

    def to_json_dict(self) -> dict:
        return {str(e): c for e, c in self.terms()}

    def __repr__(self) -> str:
        return f"LaurentPoly({self.coeffs!r})"


def ruling_polynomial(d: PlatDiagram, mas: MaslovData, rho: int) -> LaurentPoly:
    """Generating function of theta over all rulings, by transfer DP.

    States are pairings; counts carry z^(-switches) and the final answer
    is shifted by z^cusps.  Must agree with the sweep enumeration.
    """
    validate_rho(rho, mas.modulus)
    eligible = eligible_crossings(d, mas, rho)
    start = initial_pairing(d.cusps)
    table: dict[Pairing, LaurentPoly] = {start: LaurentPoly.monomial(0)}
    for j, p in enumerate(d.word, start=1):
        nxt: dict[Pairing, LaurentPoly] = {}

        def accumulate(state: Pairing, poly: LaurentPoly):
            if state in nxt:
                nxt[state] = nxt[state] + poly
            else:
                nxt[state] = poly

        for state, poly in table.items():
            shape = _classify(state, p)
            if shape is None:
                continue
            accumulate(transpose_pairing(state, p), poly)
            if j in eligible and shape == "clear":
                accumulate(state, poly.shifted(-1))
        table = nxt
    final = table.get(start, LaurentPoly())
    return final.shifted(d.cusps)


def _pair_list(state: Pairing) -> list[tuple[int, int]]:
    return [(r, state[r]) for r in range(1, len(state)) if r < state[r]]


def _interlacing_sign(rho: int, diff: int) -> int:
    """Sign of one interlaced pair from the Maslov difference of the two
    lower strands; rho=0 uses the integer, odd rho>=3 its residue."""
    if rho == 0:
        if diff == 0:
            return 1
        if diff > 0:
            return 1 if diff % 2 == 1 else -1
        return 1 if diff % 2 == 0 else -1
    d = diff % rho
    return 1 if d == 0 or d % 2 == 1 else -1


def slice_interlacing_number(
    state: Pairing, mas: MaslovData, slice_: int, rho: int
) -> int:
    """Signed (unsigned for rho=1) count of interlaced pairs at one slice."""
    pairs = _pair_list(state)
    total = 0
    for i in range(len(pairs)):
        for k in range(i + 1, len(pairs)):
            if not interlaced(pairs[i], pairs[k]):
                continue
            if rho == 1:
                total += 1
                continue
            # rows alternate between the pairs; the third and fourth are
            # the lower strand of the first-seen and second-seen pair
            rows = sorted(pairs[i] + pairs[k])
            diff = mas.value(slice_, rows[2]) - mas.value(slice_, rows[3])
            total += _interlacing_sign(rho, diff)
    return total


def interlacing_trace(
    d: PlatDiagram, mas: MaslovData, ruling: Ruling, rho: int
) -> list[int]:
    """Interlacing number per slice: one entry just after the left cusps,
    one after each crossing, and a final entry just before the right
    cusps (equal to the last slice value)."""
    require_zero_or_odd(rho)
    states = slice_pairing_sweep(d, ruling.switches)
    trace = [
        slice_interlacing_number(state, mas, s, rho) for s, state in enumerate(states)
    ]
    return trace + [trace[-1]]


def predicted_trace_steps(
    d: PlatDiagram, mas: MaslovData, ruling: Ruling, rho: int
) -> list[int]:
    """Expected change of the interlacing number at each crossing.

    Switches contribute 0.  Any other crossing contributes +1 or -1
    depending only on its grading except in the divisible-grading case,
    where departures give +1 and returns -1.
    """
    letters = ruling.letters
    steps = []
    for j, p in enumerate(d.word, start=1):
        if j in ruling.switches:
            steps.append(0)
            continue
        g = crossing_grading(d, mas, j)
        if rho == 1:
            steps.append(1 if letters[j] == "D" else -1)
            continue
        divisible = rho_divides(rho, g)
        if divisible:
            steps.append(1 if letters[j] == "D" else -1)
            continue
        if rho == 0:
            up = (g > 0 and g % 2 == 0) or (g < 0 and g % 2 == 1)
        else:
            up = g % rho % 2 == 0  # nonzero even residue
        steps.append(1 if up else -1)
    return steps
