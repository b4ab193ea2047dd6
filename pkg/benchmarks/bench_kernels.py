"""Time the candidate search with each available kernel backend.

    python3 benchmarks/bench_kernels.py --degree 4 --repeat 3
"""

import argparse
import statistics
import time

from unilyndon.kernels import available_backends


def time_backend(fn, n, repeat):
    samples = []
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn(n)
        samples.append(time.perf_counter() - t0)
    return samples, sorted(result)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--degree", type=int, default=4)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    backends = available_backends()
    results = {}
    print(f"{'backend':<8} {'best s':>10} {'median s':>10} {'candidates':>11}")
    for name, fn in backends.items():
        samples, out = time_backend(fn, args.degree, args.repeat)
        results[name] = (min(samples), out)
        print(f"{name:<8} {min(samples):>10.4f} {statistics.median(samples):>10.4f} {len(out):>11}")
    if len(results) == 2:
        (tp, rp), (tc, rc) = results["python"], results["cython"]
        print(f"identical output: {rp == rc}")
        print(f"speedup: {tp / tc:.1f}x")
    else:
        print("compiled backend not built; only the fallback was timed")


if __name__ == "__main__":
    main()
