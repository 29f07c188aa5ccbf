"""Compare the compiled kernels with the pure-Python fallback.

Run with ``python3 benchmarks/bench_kernels.py [--repeat R] [--json]``.
Both backends are imported directly, so no environment variable is needed;
each workload is checked to give identical results on both before timing.
"""

from __future__ import annotations

import argparse
import functools
import json
import operator
import random
import time

from poset_ramsey import _pykernels
from poset_ramsey.chain_lemma import _blue_bytes, _prefix_codes
from poset_ramsey.lattice import ColoredLattice
from poset_ramsey.parser import parse_poset_expression
from poset_ramsey.expr import construct
from poset_ramsey.ramsey import ArrowInstance, arrow_clauses

try:
    from poset_ramsey import _ckernels
except ImportError:  # no compiler at install time
    _ckernels = None


def _chain_lemma_workload(seed: int):
    rng = random.Random(seed)
    n, k = 11, 4
    # Sparse blue sets keep the labelling from failing early, so the whole
    # table of 2^|X| labels is built.
    size = 1 << (n + k)
    colorings = [
        ColoredLattice(n + k, functools.reduce(operator.and_, (rng.getrandbits(size) for _ in range(6))))
        for _ in range(4)
    ]
    tau = tuple(range(n + 1, n + k + 1))
    prefix = _prefix_codes(tau)
    positions = list(range(n))
    args = [(_blue_bytes(c), positions, prefix) for c in colorings]
    return "chain_lemma_labels |X|=11 |Y|=4 x4", lambda mod: [mod.chain_lemma_labels(*a) for a in args]


def _dpll_workload():
    insts = [
        ArrowInstance(construct(parse_poset_expression("CC(2,1,1)")), 1, 5),
        ArrowInstance(construct(parse_poset_expression("CC(3,1)")), 1, 5),
        ArrowInstance(construct(parse_poset_expression("CC(2,1,1)")), 1, 4),
    ]
    problems = [arrow_clauses(i) for i in insts]
    return "dpll arrow CNFs (2 UNSAT, 1 SAT)", lambda mod: [mod.dpll(nv, cl) for nv, cl in problems]


def _count_workload():
    cases = [(9, 2), (9, 3), (9, 4)]
    return "count_r_proper k=9 r=2..4", lambda mod: [mod.count_r_proper(k, r) for k, r in cases]


def _best_time(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()

    backends = {"python": _pykernels}
    if _ckernels is not None:
        backends["cython"] = _ckernels
    rows = []
    for name, work in (_chain_lemma_workload(args.seed), _dpll_workload(), _count_workload()):
        results = {b: work(mod) for b, mod in backends.items()}
        if len({repr(r) for r in results.values()}) != 1:
            raise SystemExit(f"backends disagree on {name}")
        times = {b: _best_time(lambda m=mod: work(m), args.repeat) for b, mod in backends.items()}
        speedup = times["python"] / times["cython"] if "cython" in times else None
        rows.append({"workload": name, "seconds": times, "speedup": speedup})

    if args.json:
        print(json.dumps(rows, indent=2))
        return
    print(f"{'workload':40} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for row in rows:
        t = row["seconds"]
        cy = f"{t['cython']:10.4f}" if "cython" in t else f"{'n/a':>10}"
        sp = f"{row['speedup']:7.1f}x" if row["speedup"] else f"{'n/a':>8}"
        print(f"{row['workload']:40} {t['python']:10.4f} {cy} {sp}")


if __name__ == "__main__":
    main()
