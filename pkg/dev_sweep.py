import random
import sys

sys.path.insert(0, "src")

from platdga.diagram import PlatDiagram, maslov
from platdga.dga import build_dga, chi_star, verify_d_squared
from platdga.augment import enumerate_augmentations
from platdga.ruling import enumerate_rulings, theta_multiset, interlacing_trace, predicted_trace_steps, ruling_polynomial
from platdga.correspond import fibers, ruling_from_augmentation
from platdga.halfpow import HalfPow, halfpow_sum
from platdga.errors import NotAKnotError


def random_plat(rng, max_cusps=4, max_crossings=12):
    while True:
        n = rng.randint(1, max_cusps)
        m = rng.randint(0, max_crossings) if n > 1 else 0
        word = tuple(rng.randint(1, 2 * n - 2) for _ in range(m)) if m else ()
        try:
            return PlatDiagram(n, word)
        except NotAKnotError:
            continue


def check_diagram(d, verbose=False):
    mas = maslov(d)
    g = build_dga(d, mas)
    assert verify_d_squared(g), f"d^2 != 0 on {d}"
    rhos = [1] + ([0] if mas.rotation == 0 else [])
    for rho in rhos:
        chi = chi_star(g, rho)
        augs = enumerate_augmentations(g, rho)
        rulings = enumerate_rulings(d, mas, rho)
        assert (len(augs) > 0) == (len(rulings) > 0), f"existence mismatch {d} rho={rho}"
        table = fibers(d, mas, g, rho)
        got = {r.switches: len(a) for r, a in table.entries}
        for r in rulings:
            expect = 2 ** ((r.theta + chi) // 2)
            actual = got.get(r.switches, 0)
            assert (r.theta + chi) % 2 == 0, f"theta parity {d} rho={rho}"
            assert actual == expect, (
                f"fiber size {d} rho={rho} ruling {sorted(r.switches)}: got {actual} want {expect}"
            )
            lem = 2 ** (r.r + (d.cusps if rho == 1 else 0))
            assert actual == lem, f"return-count size {d} rho={rho}: {actual} vs {lem}"
        assert set(got) == {r.switches for r in rulings}, f"stray fibers {d} rho={rho}"
        assert table.total() == len(augs), f"partition {d} rho={rho}"
        # support + injectivity
        finals = []
        for i, (r, fiber_augs) in enumerate(table.entries):
            letters = r.letters
            for tr in table.traces[i]:
                fin = tr.final
                finals.append(tuple(sorted(fin.items())))
                for j in range(1, d.crossings + 1):
                    v = fin[f"q{j}"]
                    letter = letters.get(j)
                    if letter == "S":
                        assert v == 1, f"switch not augmented {d} rho={rho} q{j}"
                    elif letter == "R":
                        pass
                    else:
                        assert v == 0, f"final augments non-switch-return {d} rho={rho} q{j}"
        assert len(set(finals)) == len(finals), f"finals not injective {d} rho={rho}"
        # corollary
        total = halfpow_sum(HalfPow.pow2_half(t) for t in theta_multiset(rulings))
        aug_n = HalfPow.from_int(len(augs)).shift(-chi)
        assert total == aug_n, f"corollary {d} rho={rho}: {total} vs {aug_n}"
        # polynomial vs multiset
        poly = ruling_polynomial(d, mas, rho)
        from collections import Counter
        assert dict(poly.terms()) == dict(Counter(theta_multiset(rulings))), f"poly {d} rho={rho}"
        # traces
        for r in rulings:
            tr = interlacing_trace(d, mas, r, rho)
            assert tr[0] == 0 and tr[-1] == 0, f"trace ends {d} rho={rho}"
            steps = predicted_trace_steps(d, mas, r, rho)
            diffs = [tr[i + 1] - tr[i] for i in range(d.crossings)]
            assert diffs == steps, f"trace steps {d} rho={rho} {sorted(r.switches)}: {diffs} vs {steps}"
        # return count formula
        for r in rulings:
            if rho == 1:
                assert r.r == (r.theta + chi) // 2 - d.cusps, f"return formula rho=1 {d}"
                assert r.d == r.r, f"d=r balance {d}"
            else:
                assert r.r == (r.theta + chi) // 2, f"return formula {d} rho={rho}"
        if rho == 0:
            from platdga.diagram import crossing_grading
            for r in rulings:
                tilde = {}
                for j in range(1, d.crossings + 1):
                    k = crossing_grading(d, mas, j)
                    tilde[k] = tilde.get(k, 0) + 1
                alt = sum(((-1) ** k if k > 0 else (-1) ** (k + 1)) * a for k, a in tilde.items() if k != 0)
                assert r.d - r.r + alt == 0, f"alternating balance {d} ruling {sorted(r.switches)}"
    return True


def main():
    # trefoil detail
    tre = PlatDiagram(2, (2, 2, 2))
    mas = maslov(tre)
    g = build_dga(tre, mas)
    table = fibers(tre, mas, g, 0)
    for r, augs in table.entries:
        pats = ["".join(str(a[q]) for q in ("q1", "q2", "q3")) for a in augs]
        print("ruling", sorted(r.switches), [x for _, x in r.classification], "fiber", pats)
    for eps_bits in ("111", "100", "001", "110", "011"):
        eps = {f"q{i+1}": int(b) for i, b in enumerate(eps_bits)}
        eps.update({"c1": 0, "c2": 0})
        r, tr = ruling_from_augmentation(tre, mas, g, eps, 0)
        print(eps_bits, "->", [x for _, x in r.classification], "final",
              "".join(str(tr.final[f"q{i}"]) for i in (1, 2, 3)))

    seed = int(sys.argv[1]) if len(sys.argv) > 1 else 1
    count = int(sys.argv[2]) if len(sys.argv) > 2 else 300
    rng = random.Random(seed)
    import time
    t0 = time.time()
    for i in range(count):
        d = random_plat(rng)
        check_diagram(d)
        if (i + 1) % 50 == 0:
            print(f"{i+1} diagrams ok ({time.time()-t0:.1f}s)")
    print("ALL OK", count, "diagrams", f"{time.time()-t0:.1f}s")


if __name__ == "__main__":
    main()
