"""Compare the compiled and pure-Python kernels on exhaustive scans.

    python benchmarks/bench_kernels.py [--repeat N]
"""
import argparse
import time

from rigidity import _fallback

try:
    from rigidity import _kernels
except ImportError:
    _kernels = None

SCANS = [
    # (exponents, bound, pruning)
    ((1, 1), 3, False),
    ((1, 2, 3), 1, False),
    ((1, 1, 1), 1, False),
    ((2, 2, 2), 1, False),
    ((1, 1, 1), 2, True),
    ((2, 1, 2), 2, True),
    ((1, 1, 1), 2, False),
    ((1, 1, 1, 1), 1, True),
]


def best_of(fn, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - start)
    return best, result


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    if _kernels is None:
        print("compiled kernels not built; run `pip install -e . --no-build-isolation`")
    header = f"{'exponents':<14}{'bound':>6}{'pruning':>9}{'visited':>12}{'autos':>7}{'python s':>11}{'cython s':>11}{'speedup':>9}"
    print(header)
    print("-" * len(header))
    for exps, bound, pruning in SCANS:
        t_py, res_py = best_of(lambda: _fallback.scan_box(exps, bound, pruning), args.repeat)
        line = f"{str(exps):<14}{bound:>6}{'on' if pruning else 'off':>9}{res_py[0]:>12}{len(res_py[1]):>7}{t_py:>11.4f}"
        if _kernels is not None:
            t_cy, res_cy = best_of(lambda: _kernels.scan_box(exps, bound, pruning), args.repeat)
            if res_cy != res_py:
                raise SystemExit(f"backends disagree on {exps} bound {bound}")
            line += f"{t_cy:>11.4f}{t_py / t_cy:>8.0f}x"
        print(line)


if __name__ == "__main__":
    main()
