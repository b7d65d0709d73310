"""Compare the compiled orbit kernels against the pure-Python fallback.

Both backends run on identical groups in one process (the dispatcher reads
kernels.COMPILED at call time), and their class decompositions are compared
before any timing is reported.  Run from the repository root:

    python3 benchmarks/bench_kernels.py [--large] [--repeat N]

--large adds a multi-million element affine cell where the gap is widest.
"""

import argparse
import sys
import time

from affineclasses.oracle import (AffineGroup, build_group, count_classes,
                                  kernels)

TASKS = [
    ("GL(3,3) classes", "GL", 3, 3, False, None),
    ("Sp(4,3) classes", "Sp", 4, 3, False, None),
    ("AGU(2,3) classes", "GU", 2, 3, True, None),
    ("AO-(4,3) classes", "O-", 4, 3, True, None),
    ("ASp(2,9) classes", "Sp", 2, 9, True, None),
]

LARGE_TASKS = [
    ("ASp(4,3) classes", "Sp", 4, 3, True, 5_000_000),
]


def build(task):
    label, family, n, q, affine, cap = task
    g = build_group(family, n, q, cap=cap or 2_000_000)
    if affine:
        g = AffineGroup(g, cap=cap or 2_000_000)
    return label, g


def run_once(group):
    group._classes = None  # drop the cache so the scan really reruns
    t0 = time.perf_counter()
    dec = count_classes(group)
    return time.perf_counter() - t0, (dec.k, sorted(dec.sizes))


def time_backend(group, compiled, repeat):
    kernels.COMPILED = compiled
    best, result = run_once(group)
    for _ in range(repeat - 1):
        t, r = run_once(group)
        assert r == result
        best = min(best, t)
    return best, result


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--large", action="store_true",
                    help="include a 4.2M element affine cell")
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)

    have_compiled = kernels._speedups is not None
    if not have_compiled:
        print("compiled extension not built; timing the pure backend only")
    tasks = TASKS + (LARGE_TASKS if args.large else [])

    rows = []
    saved = kernels.COMPILED
    try:
        for task in tasks:
            label, group = build(task)
            pure_t, pure_r = time_backend(group, False, args.repeat)
            if have_compiled:
                comp_t, comp_r = time_backend(group, True, args.repeat)
                assert comp_r == pure_r, "backends disagree on %s" % label
                rows.append((label, group.order, comp_t, pure_t,
                             pure_t / comp_t))
            else:
                rows.append((label, group.order, None, pure_t, None))
    finally:
        kernels.COMPILED = saved

    print("%-18s %10s %12s %12s %9s" % ("task", "elements", "compiled",
                                        "pure", "speedup"))
    for label, size, comp_t, pure_t, ratio in rows:
        comp = "%.4fs" % comp_t if comp_t is not None else "-"
        speed = "%.1fx" % ratio if ratio is not None else "-"
        print("%-18s %10d %12s %12s %9s" % (label, size, comp,
                                            "%.4fs" % pure_t, speed))
    return 0


if __name__ == "__main__":
    sys.exit(main())
