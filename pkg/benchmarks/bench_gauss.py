"""Time the compiled Gauss-sum kernel against the pure-Python one.

    python benchmarks/bench_gauss.py [--ranks 8 12 16 20] [--repeat 3]
"""

from __future__ import annotations

import argparse
import random
import time

from flexcurves import _gauss_py

try:
    from flexcurves import _gauss
except ImportError:
    _gauss = None


def _random_form(rng: random.Random, b: int) -> tuple[list[int], list[int]]:
    m = [[0] * b for _ in range(b)]
    for i in range(b):
        for j in range(i, b):
            m[i][j] = m[j][i] = rng.randrange(2)
    rows = [sum(bit << j for j, bit in enumerate(row)) for row in m]
    phi = [m[i][i] + 2 * rng.randrange(2) for i in range(b)]
    return rows, phi


def _best(fn, repeat: int) -> float:
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t)
    return min(times)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--ranks", type=int, nargs="+", default=[8, 12, 16, 20])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    if _gauss is None:
        print("compiled kernel not built; only the Python backend is timed")
    rng = random.Random(0)
    print(f"{'rank':>4}  {'python s':>10}  {'cython s':>10}  {'speedup':>8}")
    for b in args.ranks:
        rows, phi = _random_form(rng, b)
        t_py = _best(lambda: _gauss_py.residue_counts(rows, phi), args.repeat)
        if _gauss is None:
            print(f"{b:>4}  {t_py:>10.4f}  {'-':>10}  {'-':>8}")
            continue
        assert _gauss.residue_counts(rows, phi) == _gauss_py.residue_counts(rows, phi)
        t_cy = _best(lambda: _gauss.residue_counts(rows, phi), args.repeat)
        print(f"{b:>4}  {t_py:>10.4f}  {t_cy:>10.6f}  {t_py / t_cy:>7.0f}x")


if __name__ == "__main__":
    main()
