"""The differential graded algebra of a plat front over Z/2.

Generators are the crossings q1..qm and the right cusps c1..cn (cusps
always carry grading 1).  The differential of a generator is the mod-2
set of words cut out by admissible disks: a disk sweeps left to right
through the strip, occupying an interval of rows at each slice.  It is
capped on the left by a single left cusp, ends on the right in the wedge
just left of its generator (a crossing, or a right cusp), and its two
boundary paths follow strands of the front except at convex corners,
which contribute the letters of the word.  At a crossing on rows
(p, p+1) the upper boundary may corner only while sitting on row p+1 and
the lower boundary only on row p; otherwise a boundary path on a crossing
row follows its strand to the other row.  Each right cusp also
contributes the constant word 1 to its own differential (the small loop
of its resolution), which is why the standard one-crossing-free unknot
has zero differential: the full-saucer disk cancels the loop.

Words are read counterclockwise from the generator: the upper boundary's
corner letters right-to-left, then the lower boundary's left-to-right.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .diagram import MaslovData, PlatDiagram, crossing_grading, maslov
from .errors import EvenRhoUnsupportedError, ResourceLimitError, RhoIncompatibleError

DEFAULT_DISK_BUDGET = 10_000_000

Word = tuple[str, ...]


@dataclass(frozen=True)
class Generator:
    name: str
    kind: str  # "crossing" | "cusp" | "stab"
    index: int
    grading: int


@dataclass(frozen=True)
class Dga:
    generators: tuple[Generator, ...]
    differential: dict[str, frozenset[Word]]
    modulus: int  # |2 r(K)|; 0 means Z-graded

    def grading_of(self, name: str) -> int:
        return self._grading_map[name]

    @property
    def _grading_map(self) -> dict[str, int]:
        cached = self.__dict__.get("_grading_cache")
        if cached is None:
            cached = {g.name: g.grading for g in self.generators}
            self.__dict__["_grading_cache"] = cached
        return cached

    def sorted_words(self, name: str) -> list[Word]:
        return sorted(self.differential[name], key=lambda w: (len(w), w))

    def to_json_dict(self) -> dict:
        return {
            "modulus": self.modulus,
            "generators": [
                {"name": g.name, "kind": g.kind, "grading": g.grading}
                for g in self.generators
            ],
            "differential": {
                g.name: [list(w) for w in self.sorted_words(g.name)]
                for g in self.generators
            },
        }


def validate_rho(rho: int, modulus: int) -> None:
    """rho must be a nonnegative divisor of |2 r(K)| (0 divides only 0)."""
    if not isinstance(rho, int) or rho < 0:
        raise RhoIncompatibleError(f"rho must be a nonnegative integer, got {rho!r}")
    if rho == 0:
        if modulus != 0:
            raise RhoIncompatibleError("rho=0 needs rotation number 0")
    elif modulus % rho != 0:
        raise RhoIncompatibleError(f"rho={rho} does not divide the grading modulus {modulus}")


def require_zero_or_odd(rho: int) -> None:
    if rho != 0 and rho % 2 == 0:
        raise EvenRhoUnsupportedError(
            f"rho={rho}: even nonzero periods admit no normalized counts"
        )


def rho_divides(rho: int, grading: int) -> bool:
    """Whether a grading residue is divisible by rho (rho=0: equal to 0)."""
    if rho == 0:
        return grading == 0
    return grading % rho == 0


def build_dga(
    d: PlatDiagram,
    mas: MaslovData | None = None,
    *,
    disk_budget: int = DEFAULT_DISK_BUDGET,
) -> Dga:
    """Enumerate all admissible disks of the plat by a slice sweep.

    The frontier maps an interval (upper row, lower row) to the mod-2 set
    of (upper letters, lower letters) accumulated so far; equal partial
    words cancel early, which keeps the differential exact without
    enumerating cancelling disk pairs.  Raises ResourceLimitError when
    more than disk_budget partial states are processed.
    """
    if mas is None:
        mas = maslov(d)
    m, n = d.crossings, d.cusps
    gens = [
        Generator(f"q{j}", "crossing", j, crossing_grading(d, mas, j))
        for j in range(1, m + 1)
    ] + [Generator(f"c{k}", "cusp", k, mas.reduce(1)) for k in range(1, n + 1)]
    diff: dict[str, set[Word]] = {g.name: set() for g in gens}

    PartialWords = set[tuple[Word, Word]]
    frontier: dict[tuple[int, int], PartialWords] = {}
    for k in range(1, n + 1):
        frontier[(2 * k - 1, 2 * k)] = {((), ())}

    def toggle(words: PartialWords, item) -> None:
        if item in words:
            words.discard(item)
        else:
            words.add(item)

    processed = 0
    for j in range(1, m + 1):
        p = d.word[j - 1]
        new_frontier: dict[tuple[int, int], PartialWords] = {}
        for (u, low), words in frontier.items():
            processed += len(words)
            if processed > disk_budget:
                raise ResourceLimitError(
                    f"disk enumeration exceeded budget {disk_budget} at crossing {j}"
                )
            if (u, low) == (p, p + 1):
                # the disk is pinched here: positive corner of crossing j
                for up_w, low_w in words:
                    word = tuple(f"q{i}" for i in reversed(up_w)) + tuple(
                        f"q{i}" for i in low_w
                    )
                    toggle(diff[f"q{j}"], word)
                continue
            moves: list[tuple[int, int, str | None]] = []
            if u == p:
                moves.append((p + 1, low, None))
            elif u == p + 1:
                moves.append((p, low, None))
                moves.append((p + 1, low, "up"))
            elif low == p + 1:
                moves.append((u, p, None))
            elif low == p:
                moves.append((u, p + 1, None))
                moves.append((u, p, "low"))
            else:
                moves.append((u, low, None))
            for nu, nl, side in moves:
                if nu >= nl:
                    continue
                bucket = new_frontier.setdefault((nu, nl), set())
                for up_w, low_w in words:
                    if side == "up":
                        item = (up_w + (j,), low_w)
                    elif side == "low":
                        item = (up_w, low_w + (j,))
                    else:
                        item = (up_w, low_w)
                    toggle(bucket, item)
        frontier = {state: words for state, words in new_frontier.items() if words}

    for k in range(1, n + 1):
        name = f"c{k}"
        for up_w, low_w in frontier.get((2 * k - 1, 2 * k), ()):
            word = tuple(f"q{i}" for i in reversed(up_w)) + tuple(f"q{i}" for i in low_w)
            toggle(diff[name], word)
        toggle(diff[name], ())  # the resolution loop of the cusp

    dga = Dga(
        generators=tuple(gens),
        differential={name: frozenset(words) for name, words in diff.items()},
        modulus=mas.modulus,
    )
    bad = degree_drop_violations(dga)
    if bad:
        raise AssertionError(f"disk model produced words of wrong degree: {bad[:3]}")
    return dga


def degree_drop_violations(g: Dga) -> list[tuple[str, Word]]:
    """Words in the differential whose grading is not |generator| - 1."""
    out = []
    for gen in g.generators:
        for w in g.differential[gen.name]:
            total = sum(g.grading_of(x) for x in w)
            if g.modulus:
                ok = (total - (gen.grading - 1)) % g.modulus == 0
            else:
                ok = total == gen.grading - 1
            if not ok:
                out.append((gen.name, w))
    return out


def verify_d_squared(g: Dga) -> bool:
    """Expand the differential as a derivation and check it squares to zero."""
    for gen in g.generators:
        acc: set[Word] = set()
        for w in g.differential[gen.name]:
            for i, letter in enumerate(w):
                for u in g.differential[letter]:
                    term = w[:i] + u + w[i + 1 :]
                    if term in acc:
                        acc.discard(term)
                    else:
                        acc.add(term)
        if acc:
            return False
    return True


def degree_distribution(g: Dga, rho: int) -> dict[int, int]:
    """Generator counts by grading residue (identity when rho=0)."""
    validate_rho(rho, g.modulus)
    dist: dict[int, int] = {}
    for gen in g.generators:
        key = gen.grading if rho == 0 else gen.grading % rho
        dist[key] = dist.get(key, 0) + 1
    return dist


def chi_star(g: Dga, rho: int) -> int:
    """Shifted Euler characteristic of the degree distribution.

    For rho=0 the negative degrees enter with the opposite sign of the
    usual alternating sum; for odd rho it is the plain alternating sum
    over residues 0..rho-1.
    """
    validate_rho(rho, g.modulus)
    require_zero_or_odd(rho)
    dist = degree_distribution(g, rho)
    if rho == 0:
        total = 0
        for k, a in dist.items():
            even = k % 2 == 0
            sign = (1 if even else -1) if k >= 0 else (-1 if even else 1)
            total += sign * a
        return total
    return sum((-1) ** k * dist.get(k, 0) for k in range(rho))


def add_stabilization(g: Dga, degree: int, tag: int = 1) -> Dga:
    """Adjoin a cancelling pair: a new generator of the given degree whose
    differential is a new closed generator one degree below."""
    def red(x: int) -> int:
        return x % g.modulus if g.modulus else x

    lo = Generator(f"s{tag}a", "stab", tag, red(degree - 1))
    hi = Generator(f"s{tag}b", "stab", tag, red(degree))
    if any(gen.name in (lo.name, hi.name) for gen in g.generators):
        raise ValueError(f"stabilization tag {tag} already used")
    diff = dict(g.differential)
    diff[lo.name] = frozenset()
    diff[hi.name] = frozenset({(lo.name,)})
    return Dga(generators=g.generators + (lo, hi), differential=diff, modulus=g.modulus)
