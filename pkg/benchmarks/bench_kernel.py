"""Compare the compiled multiplication kernel against the pure-Python one.

The kernels convolve packed-monomial → integer-coefficient maps; `poly.mul`
clears denominators, calls whichever kernel imported, and rescales.  This
script times both kernels on the same workloads and checks they agree
bit for bit.  Run from the repository root:

    python3 benchmarks/bench_kernel.py [--repeat N]
"""

from __future__ import annotations

import argparse
import random
import time

from tame3 import _kernel_py

try:
    from tame3 import _kernel
except ImportError:
    _kernel = None

from tame3 import poly
from tame3.poly import _pack  # the packing used by poly.mul


def _packed(p):
    return {_pack(e): int(c) for e, c in p.items()}


def _random_poly(rng: random.Random, terms: int, max_deg: int):
    p = {}
    while len(p) < terms:
        e = tuple(rng.randrange(0, max_deg + 1) for _ in range(3))
        p[e] = rng.randrange(-999, 1000) or 1
    return p


def _workloads():
    rng = random.Random(20240817)
    # binomial powers: the shape of stage products in the reduction search
    base = {(0, 1, 0): 1, (0, 0, 2): 1}
    power = dict(base)
    for _ in range(14):
        power = poly.mul(power, base)
    yield "binomial^15 * binomial", _packed(power), _packed(base)
    sparse_a = _packed(_random_poly(rng, 40, 12))
    sparse_b = _packed(_random_poly(rng, 40, 12))
    yield "sparse 40x40 terms", sparse_a, sparse_b
    dense_a = _packed(_random_poly(rng, 300, 9))
    dense_b = _packed(_random_poly(rng, 300, 9))
    yield "dense 300x300 terms", dense_a, dense_b
    big = _packed(_random_poly(rng, 60, 30))
    yield "self-square 60 terms", big, dict(big)


def _time(fn, a, b, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(a, b)
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5, help="best-of-N timing")
    args = ap.parse_args()
    if _kernel is None:
        print("compiled kernel not built; only timing the pure-Python kernel")
    print(f"{'workload':<26} {'python':>10} {'compiled':>10} {'speedup':>8}")
    for name, a, b in _workloads():
        t_py = _time(_kernel_py.mul_packed, a, b, args.repeat)
        if _kernel is None:
            print(f"{name:<26} {t_py * 1e3:>8.2f}ms {'-':>10} {'-':>8}")
            continue
        assert _kernel.mul_packed(a, b) == _kernel_py.mul_packed(a, b), name
        t_c = _time(_kernel.mul_packed, a, b, args.repeat)
        print(
            f"{name:<26} {t_py * 1e3:>8.2f}ms {t_c * 1e3:>8.2f}ms {t_py / t_c:>7.1f}x"
        )
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
