"""Compare the compiled and the numpy kernels on the bulk order checks.

    python benchmarks/bench_kernels.py [--size 2048] [--repeat 3]

Each row times one kernel call on identical inputs in both backends and
checks that the answers agree.  Without a built extension only the numpy
column is printed.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from topoarith import kernels


def _best(fn, repeat: int) -> tuple[float, object]:
    best, out = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def _same(a, b) -> bool:
    if isinstance(a, np.ndarray):
        return bool(np.array_equal(a, b))
    return a == b


def cases(size: int, seed: int):
    rng = np.random.default_rng(seed)
    a = rng.integers(0, 1 << 40, size=size * size, dtype=np.int64)
    b = rng.integers(0, 1 << 40, size=size * size, dtype=np.int64)
    vals = np.arange(size, dtype=np.int64)
    signed = np.arange(-size // 2, size // 2, dtype=np.int64)
    triples = rng.integers(-size, size, size=(size * 64, 3), dtype=np.int64)
    keys = vals  # magnitude keys disagree often, which is the expensive path
    FD, VARIANT, SIGNED = kernels.FD, kernels.VARIANT, kernels.SIGNED
    yield "cmp_pairs fd", lambda k: k.cmp_pairs(FD, a, b)
    yield "cmp_pairs variant", lambda k: k.cmp_pairs(VARIANT, a, b)
    yield "antisymmetry fd", lambda k: k.antisymmetry_failures(FD, vals)
    yield "antisymmetry signed", lambda k: k.antisymmetry_failures(SIGNED, signed)
    yield "transitivity signed", lambda k: k.transitivity_failures(SIGNED, triples)
    yield "oracle pairs fd", lambda k: k.oracle_disagreements(FD, vals, keys)
    yield "scan_between fd", lambda k: k.scan_between(FD, 486838, 28086, True, True, 0, 1 << 21)
    yield "sort_values fd", lambda k: k.sort_values(FD, vals[::-1].copy())


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--size", type=int, default=2048)
    p.add_argument("--repeat", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    args = p.parse_args()

    impls = kernels.backends()
    names = [n for n in ("cython", "python") if n in impls]
    print(f"active backend: {kernels.IMPLEMENTATION}; size {args.size}")
    header = f"{'kernel':<22}" + "".join(f"{n + ' ms':>14}" for n in names)
    if len(names) == 2:
        header += f"{'speedup':>10}{'agree':>8}"
    print(header)
    for label, call in cases(args.size, args.seed):
        times, outs = [], []
        for n in names:
            t, out = _best(lambda: call(impls[n]), args.repeat)
            times.append(t)
            outs.append(out)
        row = f"{label:<22}" + "".join(f"{t * 1000:>14.2f}" for t in times)
        if len(names) == 2:
            row += f"{times[1] / times[0]:>9.1f}x{str(_same(*outs)):>8}"
        print(row)


if __name__ == "__main__":
    main()
