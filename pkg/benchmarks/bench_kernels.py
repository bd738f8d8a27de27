"""Compare the compiled rank kernel against the pure-Python fallback.

Two views: raw rank_mod on random dense matrices, and an end-to-end
lattice verification where the kernel sits in the inner loop.  Run as

    python3 benchmarks/bench_kernels.py
"""

import itertools
import random
import statistics
import time

from cointerval import GF32003, Hypergraph, build_complex, verify_resolution
from cointerval import _kernels
from cointerval._kernels import backend_name
from cointerval import _kernels_py

try:
    from cointerval import _kernels_c
except ImportError:
    _kernels_c = None


def random_matrix(rng, rows, cols, p):
    return [[rng.randrange(p) for _ in range(cols)] for _ in range(rows)]


def bench_rank(rank_fn, mats, p, repeats=3):
    times = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        for m in mats:
            rank_fn(m, p)
        times.append(time.perf_counter() - t0)
    return min(times)


def bench_verify(rank_fn, graphs, repeats=3):
    saved = _kernels.rank_mod
    _kernels.rank_mod = rank_fn
    try:
        times = []
        for _ in range(repeats):
            t0 = time.perf_counter()
            for H in graphs:
                # the 32003 sweep is where the modular kernel actually lives
                verify_resolution(build_complex(H), fields=(GF32003,))
            times.append(time.perf_counter() - t0)
        return min(times)
    finally:
        _kernels.rank_mod = saved


def main():
    rng = random.Random(1)
    print(f"active backend: {backend_name()}")
    impls = [("python", _kernels_py.rank_mod)]
    if _kernels_c is not None:
        impls.append(("c", _kernels_c.rank_mod))
    else:
        print("compiled kernel unavailable; showing the fallback only")

    for p in (2, 32003):
        for size in (40, 80, 120):
            mats = [random_matrix(rng, size, size, p) for _ in range(4)]
            ranks = {name: [fn(m, p) for m in mats] for name, fn in impls}
            assert len({tuple(r) for r in ranks.values()}) == 1, "rank mismatch"
            line = f"rank_mod p={p:<6} {size}x{size}:"
            base = None
            for name, fn in impls:
                dt = bench_rank(fn, mats, p)
                base = base or dt
                line += f"  {name} {dt * 1000:7.1f}ms"
            if len(impls) == 2:
                line += f"  ({base / dt:.1f}x)"
            print(line)

    # end to end: verify every cointerval complex the (2,5) sweep produces
    graphs = []
    universe = list(itertools.combinations(range(1, 6), 2))
    for mask in range(2 ** len(universe)):
        H = Hypergraph(
            2, range(1, 6), [e for i, e in enumerate(universe) if mask >> i & 1]
        )
        if H.is_cointerval() and H.edges:
            graphs.append(H)
    print(f"verify sweep over {len(graphs)} cointerval graphs on [5], GF(32003):")
    base = None
    for name, fn in impls:
        dt = bench_verify(fn, graphs)
        base = base or dt
        print(f"  {name}: {dt:.2f}s")
    if len(impls) == 2:
        print(f"  speedup: {base / dt:.2f}x")


if __name__ == "__main__":
    main()
