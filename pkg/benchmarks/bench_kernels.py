#!/usr/bin/env python3
"""Benchmark the compiled scanning kernel against the pure-Python
fallback on a synthetic source corpus.

Usage:
    python benchmarks/bench_kernels.py [--lines 200000] [--repeats 5]

The two backends are also checked for identical output on the
benchmark corpus before timing.
"""

from __future__ import annotations

import argparse
import random
import time

from smellscan import _kernels_py

try:
    from smellscan import _kernels
except ImportError:
    _kernels = None


def synth_corpus(n_lines: int, seed: int = 0) -> list[str]:
    """Source-shaped line mix: code, comments, blanks, docstrings,
    strings with markers inside, continuations."""
    rng = random.Random(seed)
    lines: list[str] = []
    while len(lines) < n_lines:
        roll = rng.random()
        indent = " " * (4 * rng.randint(0, 4))
        n = len(lines)
        if roll < 0.08:
            lines.append("")
        elif roll < 0.18:
            lines.append(indent + "# note " + "x" * rng.randint(0, 50))
        elif roll < 0.24:
            lines.append(indent + '"""')
            for d in range(rng.randint(1, 4)):
                lines.append(indent + f"documentation text {n} {d}")
            lines.append(indent + '"""')
        elif roll < 0.34:
            lines.append(f"def handler_{n}(request, response, extra=None):")
        elif roll < 0.44:
            lines.append(indent + f"value_{n} = compute({rng.randint(0, 99)})  # inline")
        elif roll < 0.52:
            lines.append(indent + "pattern = 'contains # marker'")
        elif roll < 0.60:
            lines.append(indent + f"total_{n} = (first +")
            lines.append(indent + "    second)")
        else:
            lines.append(indent + "total += weights[index] * factors.get('k', 0)")
    return lines[:n_lines]


def best_time(fn, lines, repeats: int) -> float:
    times = []
    for _ in range(repeats):
        start = time.perf_counter()
        fn(lines)
        times.append(time.perf_counter() - start)
    return min(times)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--lines", type=int, default=200_000)
    parser.add_argument("--repeats", type=int, default=5)
    args = parser.parse_args()

    lines = synth_corpus(args.lines)
    print(f"corpus: {len(lines)} physical lines")

    backends = [("python", _kernels_py.scan_source)]
    if _kernels is not None:
        assert _kernels.scan_source(lines) == _kernels_py.scan_source(lines), (
            "backend outputs differ on the benchmark corpus"
        )
        backends.append(("cython", _kernels.scan_source))
    else:
        print("compiled kernel not built; timing the fallback only")

    results = {}
    for name, fn in backends:
        seconds = best_time(fn, lines, args.repeats)
        results[name] = seconds
        rate = len(lines) / seconds / 1e6
        print(f"{name:>7}: {seconds * 1e3:8.1f} ms   {rate:6.2f} Mlines/s")

    if len(results) == 2:
        print(f"speedup: {results['python'] / results['cython']:.1f}x")


if __name__ == "__main__":
    main()
