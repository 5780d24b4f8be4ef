#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Runs each hot kernel on a fixed workload with both backends and prints a
table of best-of-N timings. The full-pipeline row times a complete
branching verification (sweep plus Steinberg identities) at the library
level, forcing the backend via weylchar._kernels function pointers.

Usage: python benchmarks/bench_kernels.py [--repeat N] [--quick]
"""

import argparse
import random
import time

from weylchar import root_datum
from weylchar._kernels import pure

try:
    from weylchar._kernels import _speedups as speedups
except ImportError:
    speedups = None


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def workloads(quick):
    b3 = root_datum("B", 3)
    f4 = root_datum("F", 4)
    cols3 = b3.simple_roots
    sym3 = b3.cartan.symmetrizers
    pw3 = tuple(r.weight for r in b3.positive_roots)
    pr3 = tuple(r.coords for r in b3.positive_roots)
    cols4 = f4.simple_roots

    rng = random.Random(1)
    walk_batch = [tuple(rng.randint(-12, 12) for _ in range(4)) for _ in range(3000)]
    lam = (1, 1, 1) if quick else (2, 2, 2)
    dom = pure.freudenthal(cols3, sym3, pw3, pr3, lam)
    full = pure.orbit_expand(cols3, dom)
    small = pure.orbit_expand(cols3, pure.freudenthal(cols3, sym3, pw3, pr3, (1, 0, 0)))

    def bench_walks(mod):
        return lambda: [mod.dominant_rep(cols4, w) for w in walk_batch]

    def bench_regularize(mod):
        return lambda: [mod.regularize_shifted(cols4, w) for w in walk_batch]

    def bench_freudenthal(mod):
        return lambda: mod.freudenthal(cols3, sym3, pw3, pr3, lam)

    def bench_expand(mod):
        return lambda: mod.orbit_expand(cols3, dom)

    def bench_convolve(mod):
        return lambda: mod.convolve(small, full)

    def bench_klimyk(mod):
        return lambda: mod.klimyk(cols3, full, (1, 0, 1))

    return [
        (f"dominant_rep x{len(walk_batch)} (F4)", bench_walks),
        (f"regularize_shifted x{len(walk_batch)} (F4)", bench_regularize),
        (f"freudenthal B3 {lam}", bench_freudenthal),
        (f"orbit_expand B3 ({len(full)} weights)", bench_expand),
        (f"convolve {len(small)}x{len(full)}", bench_convolve),
        (f"klimyk over {len(full)} weights", bench_klimyk),
    ]


def bench_pipeline(backend_mod, bound):
    """Full branching verification with the chosen backend patched in."""
    import weylchar._kernels as K
    from weylchar import characters, langlands, modified_datum

    saved = {name: getattr(K, name) for name in (
        "reflect", "dominant_rep", "regularize_shifted", "weyl_orbit", "orbit_parity",
        "dominant_below", "freudenthal", "orbit_expand", "convolve", "klimyk", "sub_scaled",
    )}
    for name in saved:
        setattr(K, name, getattr(backend_mod, name))
    try:
        characters.clear_memo()
        datum = root_datum("B", 3)
        md = modified_datum(datum, 2)
        t0 = time.perf_counter()
        report = langlands.verify_branching_theorem(md, bound, include_steinberg=True)
        assert report.passed
        return time.perf_counter() - t0
    finally:
        for name, fn in saved.items():
            setattr(K, name, fn)
        characters.clear_memo()


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--quick", action="store_true")
    args = parser.parse_args()

    if speedups is None:
        print("compiled kernels not built; nothing to compare")
        return

    rows = []
    for label, make in workloads(args.quick):
        t_pure = best_of(make(pure), args.repeat)
        t_fast = best_of(make(speedups), args.repeat)
        rows.append((label, t_pure, t_fast))

    bound = 2 if args.quick else 3
    t_pure = bench_pipeline(pure, bound)
    t_fast = bench_pipeline(speedups, bound)
    rows.append((f"verify B3 ell=2 bound {bound} (end to end)", t_pure, t_fast))

    width = max(len(r[0]) for r in rows)
    print(f"{'workload'.ljust(width)}  {'pure':>10}  {'cython':>10}  {'speedup':>7}")
    for label, tp, tf in rows:
        print(f"{label.ljust(width)}  {tp * 1e3:>8.2f}ms  {tf * 1e3:>8.2f}ms  {tp / tf:>6.1f}x")


if __name__ == "__main__":
    main()
