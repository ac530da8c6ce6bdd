"""Independent brute-force reference implementations used only by tests.

Each oracle recomputes a quantity from its definition with no shared
search machinery: disk words come from enumerating candidate boundary
path pairs one path at a time and filtering illegal pairs; augmentations
come from trying every assignment; rulings come from trying every
switch subset.
"""
from __future__ import annotations

import itertools

from platdga.diagram import PlatDiagram, initial_pairing, transpose_pairing
from platdga.dga import Dga, rho_divides
from platdga.ruling import interlaced


def _paths_from(d: PlatDiagram, start_row: int):
    """Every x-monotone strand path from (0, start_row), keyed by end slice.

    A path records its row at each slice and the crossings where it took
    a convex corner (staying on its row) together with the row it sat on.
    """
    m = d.crossings
    by_end: dict[int, list[tuple[tuple[int, ...], tuple[tuple[int, int], ...]]]] = {
        e: [] for e in range(m + 1)
    }
    stack = [((start_row,), ())]
    while stack:
        rows, corners = stack.pop()
        e = len(rows) - 1
        by_end[e].append((rows, corners))
        if e == m:
            continue
        p = d.word[e]
        r = rows[-1]
        if r == p or r == p + 1:
            other = p + 1 if r == p else p
            stack.append((rows + (other,), corners))  # follow the strand
            stack.append((rows + (r,), corners + ((e + 1, r),)))  # corner
        else:
            stack.append((rows + (r,), corners))
    return by_end


def _legal_pair(d, up, lo, end, upper_corners, lower_corners):
    for s in range(end + 1):
        if up[s] >= lo[s]:
            return False
    for j, row in upper_corners:
        if row != d.word[j - 1] + 1:  # disk below: corner only on the lower row
            return False
    for j, row in lower_corners:
        if row != d.word[j - 1]:  # disk above: corner only on the upper row
            return False
    return True


def _word(upper_corners, lower_corners):
    return tuple(f"q{j}" for j, _ in reversed(upper_corners)) + tuple(
        f"q{j}" for j, _ in lower_corners
    )


def oracle_differential(d: PlatDiagram) -> dict[str, frozenset[tuple[str, ...]]]:
    """Mod-2 disk count by filtering independently enumerated path pairs."""
    m, n = d.crossings, d.cusps
    diff: dict[str, set] = {f"q{j}": set() for j in range(1, m + 1)}
    diff.update({f"c{k}": set() for k in range(1, n + 1)})

    def toggle(name, word):
        if word in diff[name]:
            diff[name].discard(word)
        else:
            diff[name].add(word)

    for k in range(1, n + 1):
        uppers = _paths_from(d, 2 * k - 1)
        lowers = _paths_from(d, 2 * k)
        for e in range(m + 1):
            for (up, ucs), (lo, lcs) in itertools.product(uppers[e], lowers[e]):
                if not _legal_pair(d, up, lo, e, ucs, lcs):
                    continue
                if e < m:
                    p = d.word[e]
                    if (up[e], lo[e]) == (p, p + 1):
                        toggle(f"q{e + 1}", _word(ucs, lcs))
                else:
                    u, low = up[m], lo[m]
                    if low == u + 1 and u % 2 == 1:
                        toggle(f"c{(u + 1) // 2}", _word(ucs, lcs))
    for k in range(1, n + 1):
        toggle(f"c{k}", ())
    return {name: frozenset(words) for name, words in diff.items()}


def oracle_augmentations(g: Dga, rho: int) -> list[dict[str, int]]:
    """Try every assignment on the eligible generators."""
    order = [gen.name for gen in g.generators]
    eligible = [gen.name for gen in g.generators if rho_divides(rho, gen.grading)]
    out = []
    for bits in itertools.product((0, 1), repeat=len(eligible)):
        eps = {name: 0 for name in order}
        eps.update(dict(zip(eligible, bits)))
        good = True
        for gen in g.generators:
            total = 0
            for word in g.differential[gen.name]:
                prod = 1
                for x in word:
                    prod &= eps[x]
                total ^= prod
            if total:
                good = False
                break
        if good:
            out.append(eps)
    out.sort(key=lambda a: tuple(a[name] for name in order))
    return out


def oracle_rulings(d: PlatDiagram, eligible: set[int]):
    """Try every switch subset; validate by replaying the sweep."""
    results = []
    for size in range(len(eligible) + 1):
        for subset in itertools.combinations(sorted(eligible), size):
            chosen = set(subset)
            state = initial_pairing(d.cusps)
            letters = []
            ok = True
            for j, p in enumerate(d.word, start=1):
                a, b = state[p], state[p + 1]
                if a == p + 1:
                    ok = False
                    break
                if j in chosen:
                    if interlaced((p, a), (p + 1, b)):
                        ok = False
                        break
                    letters.append((j, "S"))
                    continue
                if j in eligible:
                    letters.append(
                        (j, "R" if interlaced((p, a), (p + 1, b)) else "D")
                    )
                state = transpose_pairing(state, p)
            if ok and state == initial_pairing(d.cusps):
                results.append((frozenset(chosen), tuple(letters)))
    return sorted(results, key=lambda item: tuple(sorted(item[0])))
