"""Compare the compiled brute-force kernel with the numpy fallback.

Usage: python benchmarks/bench_backends.py [--repeat N]
"""

import argparse
import time

from orbizeta import counting
from orbizeta.counting import count_affine_bruteforce
from orbizeta.ff import make_field
from orbizeta.kernels import BACKEND, pure
from orbizeta.parsing import parse_polynomial
from orbizeta.polynomials import AffineModel

CASES = [
    ("x*y - z^3", 7, 2),       # F_49, 117k points
    ("x^2 + y^3 + z^4", 5, 3),  # F_125, 2.0M points
    ("x^2 + y^3*z + z^3", 7, 3),  # F_343, 40M points
]


def run(kernel, model, f):
    saved = counting.kernels.count_chunk
    counting.kernels.count_chunk = kernel
    try:
        start = time.perf_counter()
        n = count_affine_bruteforce(model, f, budget=10**9)
        return n, time.perf_counter() - start
    finally:
        counting.kernels.count_chunk = saved


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    kernels = {"pure": pure.count_chunk}
    if BACKEND == "cython":
        from orbizeta.kernels import _bruteforce

        kernels["cython"] = _bruteforce.count_chunk
    else:
        print("compiled kernel not available; timing the fallback only")

    print(f"{'equation':<22}{'q':>6}  " + "".join(f"{k:>12}" for k in kernels))
    for text, p, e in CASES:
        f = make_field(p, e)
        model = AffineModel.from_equations([parse_polynomial(text)])
        times = {}
        counts = set()
        for name, kernel in kernels.items():
            best = min(run(kernel, model, f) for _ in range(args.repeat))
            counts.add(best[0])
            times[name] = best[1]
        assert len(counts) == 1, f"backends disagree on {text}: {counts}"
        row = "".join(f"{times[k]:>11.3f}s" for k in kernels)
        print(f"{text:<22}{f.q:>6}  {row}   (count {counts.pop()})")
    if len(kernels) == 2:
        print("\nlower is better; counts are asserted equal across backends")


if __name__ == "__main__":
    main()
