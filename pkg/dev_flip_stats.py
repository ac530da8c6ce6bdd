"""Count, per geometry, how often each segment pass flips anything."""
import random
import sys
from collections import Counter

sys.path.insert(0, "src")

import platdga.correspond as corr
from platdga.correspond import fibers
from platdga.diagram import maslov
from platdga.dga import build_dga
from dev_sweep import random_plat

stats = Counter()
orig_run_pass = corr._run_pass
current_geom = [None]

orig_rfa = corr.ruling_from_augmentation

def probe(count=2000, seed=11):
    rng = random.Random(seed)
    # monkeypatch ExtensionStep assembly: easier to inspect traces afterwards
    for i in range(count):
        d = random_plat(rng)
        mas = maslov(d)
        g = build_dga(d, mas)
        rhos = [1] + ([0] if mas.rotation == 0 else [])
        for rho in rhos:
            try:
                table = fibers(d, mas, g, rho)
            except Exception:
                raise
            for idx in table.traces:
                for tr in table.traces[idx]:
                    for step in tr.steps:
                        if not step.eligible or step.geometry is None:
                            continue
                        for seg, flips in zip(step.segments, step.flips):
                            key = (step.letter, step.geometry, seg)
                            stats[key + ("used",)] += 1
                            if flips:
                                stats[key + ("flipped",)] += 1
    for key in sorted(stats):
        print(key, stats[key])

probe()
