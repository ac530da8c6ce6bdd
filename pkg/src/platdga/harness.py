"""Random plat generation and whole-diagram verification sweeps."""
from __future__ import annotations

import random
import time
from collections import Counter

from . import __version__
from .augment import DEFAULT_MAX_ELIGIBLE, enumerate_augmentations
from .correspond import verify_correspondence
from .dga import (
    DEFAULT_DISK_BUDGET,
    build_dga,
    chi_star,
    degree_drop_violations,
    verify_d_squared,
)
from .diagram import PlatDiagram, crossing_grading, maslov
from .errors import NotAKnotError, RandomGiveUpError, ResourceLimitError
from .report import Report
from .ruling import (
    enumerate_rulings,
    interlacing_trace,
    predicted_trace_steps,
    ruling_polynomial,
    theta_multiset,
)

DEFAULT_SWEEP_CUSPS = 4
DEFAULT_SWEEP_CROSSINGS = 12


def random_plat(cusps: int, crossings: int, seed: int, max_tries: int = 10_000) -> PlatDiagram:
    """Uniform word over the strip letters, rejected until it closes into
    a knot; deterministic in the seed."""
    rng = random.Random(seed)
    top = 2 * cusps - 2
    if crossings > 0 and top < 1:
        raise RandomGiveUpError("a one-cusp plat admits no crossings")
    for _ in range(max_tries):
        word = tuple(rng.randint(1, top) for _ in range(crossings)) if crossings else ()
        try:
            return PlatDiagram(cusps, word)
        except NotAKnotError:
            continue
    raise RandomGiveUpError(
        f"no knot found with {cusps} cusps and {crossings} crossings in {max_tries} tries"
    )


def admissible_rhos(rho_list, modulus: int, rotation: int) -> list[int]:
    out = []
    for rho in rho_list:
        if rho == 0 and rotation != 0:
            continue
        if rho != 0 and modulus % rho != 0:
            continue
        out.append(rho)
    return out


def full_check(
    d: PlatDiagram,
    rho_list=(0, 1),
    *,
    max_eligible: int = DEFAULT_MAX_ELIGIBLE,
    disk_budget: int = DEFAULT_DISK_BUDGET,
) -> Report:
    """Every verifiable identity on one diagram, as a single report."""
    report = Report()
    mas = maslov(d)
    g = build_dga(d, mas, disk_budget=disk_budget)
    report.payload = {
        "diagram": d.to_json_dict(),
        "tb": mas.tb,
        "rotation": mas.rotation,
        "rho": {},
    }
    report.add("differential_squares_to_zero", verify_d_squared(g))
    report.add("differential_drops_degree", not degree_drop_violations(g))

    for rho in admissible_rhos(rho_list, mas.modulus, mas.rotation):
        if rho != 0 and rho % 2 == 0:
            continue  # no counting identities there
        tag = f"rho{rho}"
        rulings = enumerate_rulings(d, mas, rho)
        augs = enumerate_augmentations(g, rho, max_eligible=max_eligible)
        chi = chi_star(g, rho)
        report.add(
            f"{tag}_existence_equivalence",
            (len(augs) > 0) == (len(rulings) > 0),
            f"{len(augs)} augmentations vs {len(rulings)} rulings",
        )

        ok, detail = True, ""
        for r in rulings:
            want = (r.theta + chi) // 2 - (d.cusps if rho == 1 else 0)
            if (r.theta + chi) % 2 or r.r != want:
                ok, detail = False, f"ruling {sorted(r.switches)}: {r.r} returns, formula {want}"
                break
        report.add(f"{tag}_return_count_formula", ok, detail)

        if rho == 1:
            ok = all(r.d == r.r for r in rulings)
            report.add(f"{tag}_departure_return_balance", ok)
        if rho == 0:
            grading_census = Counter(
                crossing_grading(d, mas, j) for j in range(1, d.crossings + 1)
            )
            alternating = 0
            for k, a in grading_census.items():
                if k == 0:
                    continue
                even = k % 2 == 0
                alternating += ((1 if even else -1) if k > 0 else (-1 if even else 1)) * a
            ok, detail = True, ""
            for r in rulings:
                if r.d - r.r + alternating != 0:
                    ok = False
                    detail = f"ruling {sorted(r.switches)}: d-r={r.d - r.r}, crossings give {alternating}"
                    break
            report.add(f"{tag}_alternating_sum_balance", ok, detail)

        ok, detail = True, ""
        for r in rulings:
            trace = interlacing_trace(d, mas, r, rho)
            if trace[0] != 0 or trace[-1] != 0:
                ok, detail = False, f"trace of {sorted(r.switches)} ends at {trace[-1]}"
                break
            steps = [trace[i + 1] - trace[i] for i in range(d.crossings)]
            if steps != predicted_trace_steps(d, mas, r, rho):
                ok, detail = False, f"trace steps of {sorted(r.switches)} break the sign rule"
                break
        report.add(f"{tag}_interlacing_trace_rules", ok, detail)

        poly = ruling_polynomial(d, mas, rho)
        report.add(
            f"{tag}_polynomial_matches_enumeration",
            dict(poly.terms()) == dict(Counter(theta_multiset(rulings))),
        )

        sub = verify_correspondence(
            d, rho, mas=mas, g=g, max_eligible=max_eligible
        )
        for check in sub.checks:
            report.add(f"{tag}_{check.name}", check.ok, check.detail)
        report.payload["rho"][str(rho)] = {
            "chi_star": chi,
            "augmentations": len(augs),
            "rulings": len(rulings),
            "theta": list(theta_multiset(rulings)),
            "aug_number": sub.payload["aug_number"],
        }
    return report


def _shrink(d: PlatDiagram, fails) -> PlatDiagram:
    """Greedily drop crossings (then cusps) while the failure persists."""
    current = d
    changed = True
    while changed:
        changed = False
        for i in range(len(current.word)):
            word = current.word[:i] + current.word[i + 1 :]
            try:
                candidate = PlatDiagram(current.cusps, word)
            except NotAKnotError:
                continue
            if fails(candidate):
                current = candidate
                changed = True
                break
    return current


def sweep_verify(
    count: int,
    rho_list=(0, 1),
    seed: int = 0,
    *,
    max_cusps: int = DEFAULT_SWEEP_CUSPS,
    max_crossings: int = DEFAULT_SWEEP_CROSSINGS,
    max_eligible: int = DEFAULT_MAX_ELIGIBLE,
    disk_budget: int = DEFAULT_DISK_BUDGET,
) -> Report:
    """Generate seeded random plats and run the full battery on each."""
    rng = random.Random(seed)
    report = Report()
    t0 = time.perf_counter()
    diagrams = []
    failures = []
    for i in range(count):
        while True:
            cusps = rng.randint(1, max_cusps)
            crossings = rng.randint(0, max_crossings) if cusps > 1 else 0
            try:
                d = random_plat(cusps, crossings, rng.randrange(2**32))
                break
            except RandomGiveUpError:
                continue
        diagrams.append(d.to_text())
        sub = full_check(
            d, rho_list, max_eligible=max_eligible, disk_budget=disk_budget
        )
        if not sub.ok:
            bad_names = {c.name for c in sub.failures()}

            def still_fails(candidate: PlatDiagram) -> bool:
                inner = full_check(
                    candidate, rho_list, max_eligible=max_eligible, disk_budget=disk_budget
                )
                return bool(bad_names & {c.name for c in inner.failures()})

            shrunk = _shrink(d, still_fails)
            failures.append(
                {
                    "diagram": d.to_json_dict(),
                    "shrunk": shrunk.to_json_dict(),
                    "failed": [c.to_json_dict() for c in sub.failures()],
                }
            )
    report.add(
        "sweep_all_diagrams_pass",
        not failures,
        f"{len(failures)} failing diagrams" if failures else "",
    )
    report.payload = {
        "tool": "platdga",
        "version": __version__,
        "seed": seed,
        "count": count,
        "rho_list": list(rho_list),
        "bounds": {"max_cusps": max_cusps, "max_crossings": max_crossings},
        "elapsed_seconds": round(time.perf_counter() - t0, 3),
        "diagrams": diagrams,
        "counterexamples": failures,
    }
    return report
