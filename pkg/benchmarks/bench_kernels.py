"""Time each kernel under the pure-Python and compiled backends.

Run ``python3 benchmarks/bench_kernels.py [--repeat N]``. Results are
cross-checked between backends before timings are reported.
"""
import argparse
import time

import numpy as np

from loopforge import kernels
from loopforge.datasets import builtin, metacyclic
from loopforge.isotopy import _plan, element_signatures


def _cases():
    t1 = builtin("table1")
    g = metacyclic(13, 3, 3)
    big = builtin("s4")
    plan, members = _plan(t1, element_signatures(t1))
    left = np.asarray(plan.left, dtype=np.intp)
    right = np.asarray(plan.right, dtype=np.intp)
    gens = list(plan.gens)
    T = t1.table
    return {
        "right_bol_violation": (T,),
        "left_bol_violation": (T,),
        "assoc_violation": (big.table,),
        "closure": (T, np.array([1], dtype=np.intp), t1.identity),
        "pair_reach": (g.table, g.inverses, np.arange(g.n, dtype=np.intp), g.identity),
        "is_homomorphism": (T, T, np.arange(t1.n, dtype=np.intp)),
        "extend_by_words": (T, left, right, gens, t1.identity),
    }


def _norm(v):
    if isinstance(v, np.ndarray):
        return v.tolist()
    return v


def _time(fn, args, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)
    backends = kernels.backends()
    cases = _cases()
    print(f"{'kernel':<22}" + "".join(f"{b:>14}" for b in backends) + (f"{'speedup':>10}" if len(backends) > 1 else ""))
    for name in kernels.NAMES:
        results = {b: _norm(getattr(mod, name)(*cases[name])) for b, mod in backends.items()}
        ref = results["python"]
        for b, r in results.items():
            if r != ref:
                raise SystemExit(f"{name}: backend {b} disagrees with python")
        times = {b: _time(getattr(mod, name), cases[name], args.repeat) for b, mod in backends.items()}
        row = f"{name:<22}" + "".join(f"{times[b] * 1e3:>12.3f}ms" for b in backends)
        if "cython" in times:
            row += f"{times['python'] / max(times['cython'], 1e-9):>9.1f}x"
        print(row)


if __name__ == "__main__":
    main()
