"""Command-line interface: one JSON document on stdout per invocation.

Exit codes: 0 success, 1 invalid input or arguments, 2 a verification
check failed, 3 a search budget was exhausted.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__, atlas
from .augment import DEFAULT_MAX_ELIGIBLE, aug_number, enumerate_augmentations
from .correspond import fibers, verify_correspondence
from .dga import (
    DEFAULT_DISK_BUDGET,
    build_dga,
    chi_star,
    degree_distribution,
    require_zero_or_odd,
)
from .diagram import PlatDiagram, maslov, parse_plat
from .errors import (
    EvenRhoUnsupportedError,
    PlatError,
    RandomGiveUpError,
    ResourceLimitError,
    VerificationError,
)
from .harness import admissible_rhos, full_check, random_plat, sweep_verify
from .ruling import enumerate_rulings, ruling_polynomial, theta_multiset


def load_diagram(spec: str) -> PlatDiagram:
    """A path to a .plat/.json file, or the name of an atlas entry."""
    path = Path(spec)
    if path.exists():
        return parse_plat(path.read_text())
    if spec in atlas.ATLAS:
        return atlas.get(spec).diagram
    raise FileNotFoundError(f"no such file or atlas entry: {spec}")


def emit(obj: dict) -> None:
    json.dump(obj, sys.stdout, sort_keys=True, indent=2)
    sys.stdout.write("\n")


def rhos_for(args, mas) -> list[int]:
    wanted = args.rho if args.rho else [0, 1]
    usable = admissible_rhos(wanted, mas.modulus, mas.rotation)
    skipped = [r for r in wanted if r not in usable]
    if skipped:
        print(f"skipping inadmissible rho values {skipped}", file=sys.stderr)
    return usable


def cmd_info(args) -> int:
    d = load_diagram(args.input)
    mas = maslov(d)
    g = build_dga(d, mas, disk_budget=args.disk_budget)
    out = {
        "diagram": d.to_json_dict(),
        "text": d.to_text(),
        "cusps": d.cusps,
        "crossings": d.crossings,
        "tb": mas.tb,
        "rotation": mas.rotation,
        "grading_modulus": mas.modulus,
        "generators": len(g.generators),
        "rho": {},
    }
    for rho in rhos_for(args, mas):
        entry = {"degree_distribution": {str(k): v for k, v in sorted(degree_distribution(g, rho).items())}}
        if rho == 0 or rho % 2 == 1:
            entry["chi_star"] = chi_star(g, rho)
        out["rho"][str(rho)] = entry
    emit(out)
    return 0


def cmd_dga(args) -> int:
    d = load_diagram(args.input)
    g = build_dga(d, maslov(d), disk_budget=args.disk_budget)
    emit({"diagram": d.to_json_dict(), **g.to_json_dict()})
    return 0


def cmd_augs(args) -> int:
    d = load_diagram(args.input)
    mas = maslov(d)
    g = build_dga(d, mas, disk_budget=args.disk_budget)
    out = {"diagram": d.to_json_dict(), "rho": {}}
    for rho in rhos_for(args, mas):
        augs = enumerate_augmentations(g, rho, max_eligible=args.max_eligible)
        entry = {"count": len(augs), "augmentations": augs}
        try:
            entry["aug_number"] = aug_number(g, rho, max_eligible=args.max_eligible).to_json_dict()
        except EvenRhoUnsupportedError:
            entry["aug_number"] = None
        out["rho"][str(rho)] = entry
    emit(out)
    return 0


def cmd_rulings(args) -> int:
    d = load_diagram(args.input)
    mas = maslov(d)
    out = {"diagram": d.to_json_dict(), "rho": {}}
    for rho in rhos_for(args, mas):
        rulings = enumerate_rulings(d, mas, rho)
        out["rho"][str(rho)] = {
            "count": len(rulings),
            "theta": list(theta_multiset(rulings)),
            "polynomial": ruling_polynomial(d, mas, rho).to_json_dict(),
            "rulings": [r.to_json_dict() for r in rulings],
        }
    emit(out)
    return 0


def cmd_correspond(args) -> int:
    d = load_diagram(args.input)
    mas = maslov(d)
    g = build_dga(d, mas, disk_budget=args.disk_budget)
    out = {"diagram": d.to_json_dict(), "rho": {}}
    for rho in rhos_for(args, mas):
        try:
            require_zero_or_odd(rho)
        except EvenRhoUnsupportedError:
            print(f"skipping even rho={rho}: no correspondence there", file=sys.stderr)
            continue
        table = fibers(d, mas, g, rho, max_eligible=args.max_eligible)
        out["rho"][str(rho)] = table.to_json_dict(chi=chi_star(g, rho))
    emit(out)
    return 0


def cmd_verify(args) -> int:
    if args.input:
        d = load_diagram(args.input)
        report = full_check(
            d,
            args.rho if args.rho else (0, 1),
            max_eligible=args.max_eligible,
            disk_budget=args.disk_budget,
        )
    else:
        report = sweep_verify(
            args.count,
            args.rho if args.rho else (0, 1),
            args.seed,
            max_cusps=args.cusps,
            max_crossings=args.crossings,
            max_eligible=args.max_eligible,
            disk_budget=args.disk_budget,
        )
        report.payload["tool"] = "platdga"
        report.payload["version"] = __version__
    emit(report.to_json_dict())
    if not report.ok:
        raise VerificationError(str(report.first_failure().name))
    return 0


def cmd_random(args) -> int:
    d = random_plat(args.cusps, args.crossings, args.seed)
    emit({"diagram": d.to_json_dict(), "text": d.to_text(), "seed": args.seed})
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="platdga",
        description="invariants of Legendrian knot fronts in plat position",
    )
    parser.add_argument("--version", action="version", version=f"platdga {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, needs_input=True):
        if needs_input:
            p.add_argument("input", help="path to a .plat/.json file, or an atlas entry name")
        p.add_argument("--rho", type=int, action="append", default=None, metavar="R")
        p.add_argument("--format", choices=["json"], default="json")
        p.add_argument(
            "--max-eligible", type=int, default=DEFAULT_MAX_ELIGIBLE, metavar="N"
        )
        p.add_argument(
            "--disk-budget", type=int, default=DEFAULT_DISK_BUDGET, metavar="N"
        )

    common(sub.add_parser("info", help="classical invariants and degree data"))
    common(sub.add_parser("dga", help="generators, gradings and the differential"))
    common(sub.add_parser("augs", help="graded augmentations and their normalized count"))
    common(sub.add_parser("rulings", help="graded rulings, theta values, polynomial"))
    common(sub.add_parser("correspond", help="fibers of the augmentation-to-ruling map"))

    verify = sub.add_parser("verify", help="run every identity check")
    verify.add_argument("input", nargs="?", help="diagram file or atlas name; omit to sweep random plats")
    verify.add_argument("--rho", type=int, action="append", default=None, metavar="R")
    verify.add_argument("--format", choices=["json"], default="json")
    verify.add_argument("--max-eligible", type=int, default=DEFAULT_MAX_ELIGIBLE, metavar="N")
    verify.add_argument("--disk-budget", type=int, default=DEFAULT_DISK_BUDGET, metavar="N")
    verify.add_argument("--count", type=int, default=200, metavar="N")
    verify.add_argument("--seed", type=int, default=0, metavar="S")
    verify.add_argument("--cusps", type=int, default=4, metavar="N", help="sweep bound")
    verify.add_argument("--crossings", type=int, default=12, metavar="N", help="sweep bound")

    rand = sub.add_parser("random", help="generate a seeded random plat knot")
    rand.add_argument("--cusps", type=int, required=True, metavar="N")
    rand.add_argument("--crossings", type=int, required=True, metavar="N")
    rand.add_argument("--seed", type=int, default=0, metavar="S")
    rand.add_argument("--format", choices=["json"], default="json")
    return parser


COMMANDS = {
    "info": cmd_info,
    "dga": cmd_dga,
    "augs": cmd_augs,
    "rulings": cmd_rulings,
    "correspond": cmd_correspond,
    "verify": cmd_verify,
    "random": cmd_random,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (ResourceLimitError, RandomGiveUpError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except VerificationError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return 2
    except (PlatError, FileNotFoundError, ValueError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
