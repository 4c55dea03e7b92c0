"""Time the compiled kernels against the numpy fallback.

    python benchmarks/bench_kernels.py [--repeat N]

Each row reports the best of N runs per backend and the speed-up.
"""

import argparse
import time

import numpy as np

from hypersg import kernels
from hypersg.constructions import direct_product
from hypersg.hyperspace import power_semigroup
from hypersg.library import cyclic, symmetric


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def cases():
    for name, G in [("Z6", cyclic(6)), ("S3", symmetric(3)), ("Z8", cyclic(8)),
                    ("Z2xZ5", direct_product([cyclic(2), cyclic(5)])), ("Z12", cyclic(12))]:
        t = np.ascontiguousarray(G.table)
        yield f"power_table {name}", "power_table", (t,)
    for name, G in [("S3", symmetric(3)), ("Z7", cyclic(7))]:
        P = power_semigroup(G).sem
        yield f"associativity exp({name}) n={P.n}", "find_nonassociative", (np.ascontiguousarray(P.table),)
    P = power_semigroup(cyclic(10)).sem
    rng = np.random.default_rng(0)
    triples = rng.integers(0, P.n, size=(200_000, 3), dtype=np.int32)
    yield "sampled associativity exp(Z10) 2e5 triples", "sampled_nonassociative", (
        np.ascontiguousarray(P.table), triples)
    T = np.ascontiguousarray(power_semigroup(symmetric(3)).sem.table)
    ident = np.arange(T.shape[0], dtype=np.int32)
    yield "homomorphism check exp(S3) identity", "find_nonhomomorphic", (T, T, ident)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if not kernels.compiled_available():
        raise SystemExit("compiled extension not built; run `pip install -e . --no-build-isolation`")
    pure, comp = kernels.backend_module("pure"), kernels.backend_module("compiled")
    print(f"{'case':48} {'pure [s]':>10} {'compiled [s]':>13} {'speed-up':>9}")
    for label, fn_name, fargs in cases():
        a = getattr(pure, fn_name)
        b = getattr(comp, fn_name)
        ra, rb = a(*fargs), b(*fargs)
        same = np.array_equal(ra, rb) if isinstance(ra, np.ndarray) else ra == rb
        if not same:
            raise SystemExit(f"backends disagree on {label}")
        tp = best_of(lambda: a(*fargs), args.repeat)
        tc = best_of(lambda: b(*fargs), args.repeat)
        print(f"{label:48} {tp:10.4f} {tc:13.4f} {tp / tc:8.1f}x")


if __name__ == "__main__":
    main()
