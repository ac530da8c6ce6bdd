"""Try all assignments of segment recipes to switch/return geometries and
report which survive the identity sweep."""
import itertools
import random
import sys

sys.path.insert(0, "src")

import platdga.correspond as corr
from dev_sweep import random_plat, check_diagram

RECIPES = [("crossing",), ("companions", "crossing"), ("crossing", "companions")]
R_RECIPES = [(), ("companions",)]


def try_table(switch_table, return_table, count=400, seed=7):
    corr.SWITCH_SEGMENTS = switch_table
    corr.RETURN_SEGMENTS = return_table
    rng = random.Random(seed)
    stats = {"switch_geoms": {"disjoint": 0, "nested_above": 0, "nested_below": 0}}
    for i in range(count):
        d = random_plat(rng)
        try:
            check_diagram(d)
        except AssertionError as exc:
            return False, f"diagram {i}: {exc}"
    return True, "ok"


BASE_R = {"straddle": (), "above": ("companions",), "below": ("companions",)}

print("== switch-table permutations (correct return table) ==")
for perm in itertools.permutations(RECIPES):
    table = {"disjoint": perm[0], "nested_above": perm[1], "nested_below": perm[2]}
    ok, msg = try_table(table, dict(BASE_R))
    print(table, "->", "PASS" if ok else f"FAIL ({msg[:110]})")

print("== return-table variants (correct switch table) ==")
BASE_S = {
    "disjoint": ("crossing",),
    "nested_above": ("companions", "crossing"),
    "nested_below": ("crossing", "companions"),
}
for combo in itertools.product(R_RECIPES, repeat=3):
    table = {"straddle": combo[0], "above": combo[1], "below": combo[2]}
    ok, msg = try_table(dict(BASE_S), table)
    print(table, "->", "PASS" if ok else f"FAIL ({msg[:110]})")
