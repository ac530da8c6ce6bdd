"""Search for plat representatives of the two maximal-tb Legendrian 5_2
classes: topological type checked by Jones polynomial (Kauffman bracket
on the front with descending-strand-over crossings), classes separated
by the normalized Z-graded augmentation count."""
import itertools
import sys
from collections import Counter

sys.path.insert(0, "src")

from platdga.diagram import PlatDiagram, maslov
from platdga.dga import build_dga, chi_star
from platdga.augment import enumerate_augmentations, aug_number
from platdga.ruling import enumerate_rulings, theta_multiset
from platdga.errors import NotAKnotError, CrossingRangeError


def bracket_loops(n, word, state):
    """Loop count after smoothing: state[j]=0 is the A-smoothing (strands
    pass straight), state[j]=1 the B-smoothing (both sides capped)."""
    m = len(word)
    parent = {}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        parent.setdefault(x, x)
        parent.setdefault(y, y)
        px, py = find(x), find(y)
        parent[px] = py

    for s in range(m + 1):
        for r in range(1, 2 * n + 1):
            parent[(s, r)] = (s, r)
    for j, p in enumerate(word, start=1):
        for r in range(1, 2 * n + 1):
            if r in (p, p + 1):
                continue
            union((j - 1, r), (j, r))
        if state[j - 1] == 0:
            union((j - 1, p), (j, p))
            union((j - 1, p + 1), (j, p + 1))
        else:
            union((j - 1, p), (j - 1, p + 1))
            union((j, p), (j, p + 1))
    for k in range(1, n + 1):
        union((0, 2 * k - 1), (0, 2 * k))
        union((m, 2 * k - 1), (m, 2 * k))
    return len({find(x) for x in parent})


def jones_in_A(d, mas):
    """Laurent polynomial in A of (-A)^(-3w) * bracket, exponents dict."""
    n, word, m = d.cusps, d.word, d.crossings
    writhe = mas.tb + d.cusps
    poly = Counter()
    # delta = -A^2 - A^-2; bracket = sum A^(a-b) delta^(loops-1)
    for state in itertools.product((0, 1), repeat=m):
        a_count = state.count(0)
        exp = a_count - (m - a_count)
        loops = bracket_loops(n, word, state)
        # expand delta^(loops-1)
        term = Counter({exp: 1})
        for _ in range(loops - 1):
            new = Counter()
            for e, c in term.items():
                new[e + 2] -= c
                new[e - 2] -= c
            term = new
        poly.update(term)
    shift = -3 * writhe
    sign = -1 if (3 * writhe) % 2 == 1 else 1
    return {e + shift: sign * c for e, c in poly.items() if c}


V_52 = {4: 1, 8: -1, 12: 2, 16: -1, 20: 1, 24: -1}  # t^-k -> A^(4k)
V_52_MIRROR = {-e: c for e, c in V_52.items()}
# right (positive) trefoil: V = t + t^3 - t^4, t = A^-4
V_RIGHT_TREFOIL = {-4: 1, -12: 1, -16: -1}


def classify_jones(j):
    if j == V_52:
        return "5_2"
    if j == V_52_MIRROR:
        return "m(5_2)"
    return None


def main():
    # calibrate on the trefoil
    tre = PlatDiagram(2, (2, 2, 2))
    jt = jones_in_A(tre, maslov(tre))
    print("trefoil jones (A-exponents):", dict(sorted(jt.items())))
    assert jt == V_RIGHT_TREFOIL, "bracket calibration failed"

    found = {}
    for length in (6, 7, 8, 9):
        for word in itertools.product((1, 2, 3, 4), repeat=length):
            try:
                d = PlatDiagram(3, word)
            except (NotAKnotError, CrossingRangeError):
                continue
            mas = maslov(d)
            if mas.rotation != 0 or mas.tb != 1:
                continue
            j = jones_in_A(d, mas)
            kind = classify_jones(j)
            if kind is None:
                continue
            g = build_dga(d, mas)
            aug = aug_number(g, 0)
            rul = enumerate_rulings(d, mas, 0)
            key = (kind, str(aug))
            if key not in found:
                chi = chi_star(g, 0)
                n0 = len(enumerate_augmentations(g, 0))
                found[key] = (word, theta_multiset(rul), chi, n0)
                print(
                    f"{kind} word={word} theta0={theta_multiset(rul)} chi*={chi} "
                    f"augs={n0} Aug0={aug}"
                )
        print(f"-- length {length} done, {len(found)} classes so far")
        if len({k for k in found if k[0] == "5_2"}) >= 2 or len(
            {k for k in found if k[0] == "m(5_2)"}
        ) >= 2:
            break


if __name__ == "__main__":
    main()
