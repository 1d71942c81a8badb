"""Time the compiled kernels against the pure-Python reference.

    python3 benchmarks/bench_kernels.py [--repeat 3] [--instances 40]

Every workload is run through both backends on identical inputs and the
results are compared before any timing is reported.
"""

from __future__ import annotations

import argparse
import random
import statistics
import sys
import time

from factorlab import _pykernels
from factorlab._backend import COMPILED, kernels
from factorlab.corpus import sample_gnp
from factorlab.prescriptions import Prescription, h_n, h_n_star


def _solve_inputs(count: int, size: int, seed: int):
    rng = random.Random(seed)
    out = []
    for G in sample_gnp(count, size, 0.5, seed):
        P = Prescription([rng.choice((h_n(1), h_n_star(1), h_n(2))) for _ in range(G.order)])
        out.append((G.order, [u for u, _ in G.edges], [v for _, v in G.edges],
                    P.deviation_table(G)))
    return out


def workloads(instances: int):
    solve_in = _solve_inputs(instances, 8, 1)
    p23_in = [G.adjacency for G in sample_gnp(instances * 10, 12, 0.25, 2)]

    def solve_all(backend, mode):
        return [backend.solve(*args, mode, None)[:5] for args in solve_in]

    yield "solve, count all optima (8 vertices)", lambda b: solve_all(b, _pykernels.MODE_ALL)
    yield "solve, degree sets only", lambda b: solve_all(b, _pykernels.MODE_ISETS)
    yield "solve, stop at first factor", lambda b: solve_all(b, _pykernels.MODE_EXISTS)
    yield "path-partition factor test (12 vertices)", \
        lambda b: [b.p23(adj, (1 << 12) - 1) for adj in p23_in]
    yield "certificate sweep, order 5", lambda b: b.sweep_certificates(5, 1)
    yield "odd-order sweep, order 5", lambda b: b.sweep_odd_order(5, 1)


def best_of(fn, backend, repeat: int) -> tuple[float, object]:
    times, result = [], None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn(backend)
        times.append(time.perf_counter() - t0)
    return min(times), result


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--instances", type=int, default=40)
    args = ap.parse_args(argv)
    if not COMPILED:
        print("compiled kernels are not available; build with pip install -e .", file=sys.stderr)
        return 1
    print(f"{'workload':<44}{'pure (s)':>10}{'compiled (s)':>14}{'speed-up':>10}")
    ratios = []
    for name, fn in workloads(args.instances):
        tp, rp = best_of(fn, _pykernels, args.repeat)
        tc, rc = best_of(fn, kernels, args.repeat)
        if rp != rc:
            print(f"{name}: backends disagree", file=sys.stderr)
            return 1
        ratios.append(tp / tc)
        print(f"{name:<44}{tp:>10.4f}{tc:>14.4f}{tp / tc:>9.1f}x")
    print(f"geometric mean speed-up: {statistics.geometric_mean(ratios):.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
