#!/usr/bin/env python3
"""Benchmark: compiled kernel vs pure-Python fallback.

Two layers are timed:

  * the raw term-map kernels (`terms_mul` on random sparse polynomials),
    calling both implementations directly in one process;
  * representative end-to-end workloads (symbolic invariance of the
    three-screw bracket sum, the two-screw translation SAGBI run), each in
    a subprocess so the import-time backend selection is exercised for
    real (`SCREWINV_PURE=1` forces the fallback).

Usage: python benchmarks/bench_kernels.py [--repeat N]
"""

from __future__ import annotations

import argparse
import os
import random
import subprocess
import sys
import time
from fractions import Fraction

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from screwinv._kernel import _py  # noqa: E402

try:
    from screwinv._kernel import _speedups
except ImportError:
    _speedups = None


def random_terms(rng: random.Random, nvars: int, nterms: int) -> dict:
    out = {}
    while len(out) < nterms:
        exps = tuple(rng.randint(0, 3) for _ in range(nvars))
        out[exps] = Fraction(rng.randint(-99, 99), rng.randint(1, 30))
    return out


def time_call(func, *args, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        func(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def bench_kernels(repeat: int) -> None:
    print("raw kernel: terms_mul, best of", repeat)
    print(f"{'size':>18} {'pure':>10} {'compiled':>10} {'speedup':>8}")
    rng = random.Random(2024)
    for nvars, nterms in ((6, 30), (15, 80), (25, 150)):
        a = random_terms(rng, nvars, nterms)
        b = random_terms(rng, nvars, nterms)
        pure = time_call(_py.terms_mul, a, b, repeat=repeat)
        label = f"{nterms}t x {nterms}t /{nvars}v"
        if _speedups is None:
            print(f"{label:>18} {pure * 1e3:>9.2f}ms {'n/a':>10} {'':>8}")
            continue
        fast = time_call(_speedups.terms_mul, a, b, repeat=repeat)
        print(f"{label:>18} {pure * 1e3:>9.2f}ms {fast * 1e3:>9.2f}ms {pure / fast:>7.2f}x")


WORKLOAD = r"""
import time
from screwinv import backend
from screwinv.group import ActionKind, check_invariant_symbolic, translation_invariant_basis
from screwinv.screw import se3_generator_catalog

t0 = time.perf_counter()
for name, p in se3_generator_catalog(3):
    assert check_invariant_symbolic(p, ActionKind.FULL_ADJOINT, 3)
t1 = time.perf_counter()
res = translation_invariant_basis(2)
assert res.complete and len(res.basis) == 10
t2 = time.perf_counter()
print(f"{backend()} {t1 - t0:.4f} {t2 - t1:.4f}")
"""


def bench_workloads() -> None:
    print()
    print("end-to-end: three-screw invariance sweep and two-screw SAGBI run")
    print(f"{'backend':>10} {'invariance':>12} {'sagbi':>10}")
    for env_extra in ({}, {"SCREWINV_PURE": "1"}):
        env = dict(os.environ, **env_extra)
        env["PYTHONPATH"] = os.pathsep.join(
            [os.path.join(os.path.dirname(__file__), "..", "src"), env.get("PYTHONPATH", "")]
        )
        out = subprocess.run(
            [sys.executable, "-c", WORKLOAD], env=env, capture_output=True, text=True, check=True
        )
        name, t_inv, t_sagbi = out.stdout.split()
        print(f"{name:>10} {float(t_inv) * 1e3:>10.1f}ms {float(t_sagbi) * 1e3:>8.1f}ms")


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()
    if _speedups is None:
        print("note: compiled kernel not built; showing pure timings only")
    bench_kernels(args.repeat)
    bench_workloads()


if __name__ == "__main__":
    main()
