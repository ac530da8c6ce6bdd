"""Plat-position fronts: data model, parsing, Maslov potentials, gradings.

A plat with n cusps lives on 2n horizontal rows numbered 1..2n from top
to bottom.  All left cusps sit at the left edge and join rows (2k-1, 2k);
right cusps do the same at the right edge.  The word lists crossings from
left to right; letter p means rows p and p+1 cross.  Crossing j sits
between vertical slice j-1 and slice j, so a diagram with m crossings has
slices 0..m.
"""
from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import CrossingRangeError, DiagramSyntaxError, NotAKnotError

Cell = tuple[int, int]  # (slice, row)


@dataclass(frozen=True)
class PlatDiagram:
    cusps: int
    word: tuple[int, ...] = ()

    def __post_init__(self):
        if not isinstance(self.cusps, int) or isinstance(self.cusps, bool) or self.cusps < 1:
            raise DiagramSyntaxError(f"cusp count must be a positive integer, got {self.cusps!r}")
        object.__setattr__(self, "word", tuple(self.word))
        n = self.cusps
        for j, p in enumerate(self.word, start=1):
            if not isinstance(p, int) or isinstance(p, bool) or not 1 <= p <= 2 * n - 2:
                raise CrossingRangeError(
                    f"crossing {j} at position {p!r} is outside 1..{2 * n - 2}"
                )
        if self.component_count() != 1:
            raise NotAKnotError(
                f"plat {self.to_text()!r} closes into {self.component_count()} components"
            )

    @property
    def rows(self) -> int:
        return 2 * self.cusps

    @property
    def crossings(self) -> int:
        return len(self.word)

    def strand_permutation(self) -> list[int]:
        """sigma[i] = row at the right edge of the strand entering at left row i."""
        pos = list(range(self.rows + 1))  # pos[i] = current row of left strand i
        row_of = list(range(self.rows + 1))  # row_of[r] = strand currently on row r
        for p in self.word:
            a, b = row_of[p], row_of[p + 1]
            row_of[p], row_of[p + 1] = b, a
            pos[a], pos[b] = p + 1, p
        return pos

    def component_count(self) -> int:
        # Join rows by left cusps and by right cusps pulled back along the
        # strand permutation, then count connected components.
        sigma = self.strand_permutation()
        sigma_inv = [0] * (self.rows + 1)
        for i in range(1, self.rows + 1):
            sigma_inv[sigma[i]] = i
        parent = list(range(self.rows + 1))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def union(x, y):
            parent[find(x)] = find(y)

        for k in range(1, self.cusps + 1):
            union(2 * k - 1, 2 * k)  # left cusp
            union(sigma_inv[2 * k - 1], sigma_inv[2 * k])  # right cusp, pulled back
        return len({find(i) for i in range(1, self.rows + 1)})

    def right_neighbor(self, cell: Cell) -> Cell:
        """Cell reached by following the strand rightward across one crossing."""
        s, r = cell
        p = self.word[s]
        if r == p:
            return (s + 1, p + 1)
        if r == p + 1:
            return (s + 1, p)
        return (s + 1, r)

    def to_text(self) -> str:
        body = " ".join(str(p) for p in self.word)
        return f"plat {self.cusps} :" + (f" {body}" if body else "")

    def to_json_dict(self) -> dict:
        return {"cusps": self.cusps, "word": list(self.word)}


def parse_plat(text: str) -> PlatDiagram:
    """Parse `plat <n> : <p_1> ... <p_m>` or the equivalent JSON object."""
    stripped = text.strip()
    if not stripped:
        raise DiagramSyntaxError("empty input")
    if stripped.startswith("{"):
        try:
            obj = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise DiagramSyntaxError(f"bad JSON: {exc}") from exc
        if not isinstance(obj, dict) or set(obj) != {"cusps", "word"}:
            raise DiagramSyntaxError('JSON plat must have exactly the keys "cusps" and "word"')
        if not isinstance(obj["word"], list):
            raise DiagramSyntaxError('"word" must be an array of crossing positions')
        return PlatDiagram(obj["cusps"], tuple(obj["word"]))
    tokens = stripped.split()
    if len(tokens) < 3 or tokens[0] != "plat" or tokens[2] != ":":
        raise DiagramSyntaxError(f"expected 'plat <n> : <positions>', got {stripped!r}")
    try:
        cusps = int(tokens[1])
        word = tuple(int(t) for t in tokens[3:])
    except ValueError as exc:
        raise DiagramSyntaxError(f"non-integer token in {stripped!r}") from exc
    return PlatDiagram(cusps, word)


@dataclass(frozen=True)
class MaslovData:
    """A representative Maslov potential on strand cells, plus classical data.

    potential maps (slice, row) to an integer; values are well defined
    modulo `modulus` = |2 r(K)| and exact integers when the rotation
    number is 0.  The cell (0, 1) is normalized to 0.
    """

    potential: dict[Cell, int]
    rotation: int
    modulus: int
    tb: int
    orientation: int

    def value(self, slice_: int, row: int) -> int:
        return self.potential[(slice_, row)]

    def reduce(self, grading: int) -> int:
        return grading % self.modulus if self.modulus else grading


def maslov(d: PlatDiagram, orientation: int = 1) -> MaslovData:
    """Trace the knot once, propagating the cusp rule for the potential.

    At every cusp the potential is one larger on the upper strand.  The
    orientation (+1: the arc leaving the top of left cusp 1 runs right)
    only affects the sign of the rotation number.
    """
    if orientation not in (1, -1):
        raise ValueError("orientation must be +1 or -1")
    m = d.crossings
    potential: dict[Cell, int] = {}
    up_cusps = down_cusps = 0
    # horizontal travel direction seen on each half of each crossing
    desc_dir: dict[int, int] = {}
    asc_dir: dict[int, int] = {}

    cell: Cell = (0, 1)
    direction = orientation
    value = 0
    start = (cell, direction)
    while True:
        potential[cell] = value
        s, r = cell
        if direction > 0:
            if s == m:  # right cusp: turn around
                partner = r + 1 if r % 2 == 1 else r - 1
                value += -1 if partner == r + 1 else 1
                if partner == r + 1:
                    down_cusps += 1
                else:
                    up_cusps += 1
                cell, direction = (s, partner), -1
            else:
                p = d.word[s]
                if r == p:
                    desc_dir[s + 1] = 1
                elif r == p + 1:
                    asc_dir[s + 1] = 1
                cell = d.right_neighbor(cell)
        else:
            if s == 0:  # left cusp: turn around
                partner = r + 1 if r % 2 == 1 else r - 1
                value += -1 if partner == r + 1 else 1
                if partner == r + 1:
                    down_cusps += 1
                else:
                    up_cusps += 1
                cell, direction = (s, partner), 1
            else:
                p = d.word[s - 1]
                if r == p + 1:
                    desc_dir[s] = -1
                elif r == p:
                    asc_dir[s] = -1
                cell = (s - 1, p + 1 if r == p else p if r == p + 1 else r)
        if (cell, direction) == start:
            break

    assert len(potential) == d.rows * (m + 1), "trace must cover every cell exactly once"
    rotation = (down_cusps - up_cusps) // 2
    writhe = sum(desc_dir[j] * asc_dir[j] for j in range(1, m + 1))
    return MaslovData(
        potential=potential,
        rotation=rotation,
        modulus=abs(2 * rotation),
        tb=writhe - d.cusps,
        orientation=orientation,
    )


def crossing_grading(d: PlatDiagram, mas: MaslovData, j: int) -> int:
    """Grading of crossing j: potential difference of the two incoming strands.

    The strand entering on row p (the one of more negative slope) is the
    first argument of the difference.  Reduced mod |2 r(K)| when nonzero.
    """
    if not 1 <= j <= d.crossings:
        raise IndexError(f"crossing index {j} outside 1..{d.crossings}")
    p = d.word[j - 1]
    g = mas.value(j - 1, p) - mas.value(j - 1, p + 1)
    return mas.reduce(g)


Pairing = tuple[int, ...]  # partner[row], 1-based; index 0 unused


def initial_pairing(cusps: int) -> Pairing:
    partner = [0] * (2 * cusps + 1)
    for k in range(1, cusps + 1):
        partner[2 * k - 1], partner[2 * k] = 2 * k, 2 * k - 1
    return tuple(partner)


def transpose_pairing(state: Pairing, p: int) -> Pairing:
    """Pairing after the strands on rows p, p+1 cross."""
    out = list(state)
    a, b = state[p], state[p + 1]
    if a == p + 1:  # the two rows are partners of each other
        return state
    out[p], out[p + 1] = b, a
    out[a], out[b] = p + 1, p
    return tuple(out)


def slice_pairing_sweep(d: PlatDiagram, switch_set=()) -> list[Pairing]:
    """Pairing state at each of the m+1 slices; switches leave it unchanged."""
    switches = set(switch_set)
    state = initial_pairing(d.cusps)
    states = [state]
    for j, p in enumerate(d.word, start=1):
        if j not in switches:
            state = transpose_pairing(state, p)
        states.append(state)
    return states
