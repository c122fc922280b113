"""Benchmark: compiled kernels vs the pure-Python fallback.

Runs the three scan kernels on representative inputs with both backends and
prints per-kernel timings plus speedups.  Usage:

    python benchmarks/compare_backends.py [--repeat N]
"""

from __future__ import annotations

import argparse
import importlib
import time

from absorb import _kernels_py
from absorb.ideals import ideal_from_generators
from absorb.phimaps import PhiZero, phi_membership
from absorb.rings import make_zn

try:
    _ckernels = importlib.import_module("absorb._ckernels")
except ImportError:
    _ckernels = None


def _cases():
    """(label, kernel name, args) triples covering the hot paths."""
    out = []
    for n, d in ((120, 4), (200, 8), (200, 200)):
        ring = make_zn(n)
        ideal = ideal_from_generators(ring, (d % n,))
        in_i = ideal.membership()
        in_phi = phi_membership(PhiZero(), ideal)
        args = (ring.order, ring.mul_table, ring.nonunit_array, in_i, in_phi)
        out.append((f"absorbing-triples Zn:{n} (d={d})", "find_absorbing_violation", args))
        out.append(
            (
                f"pair-scan Zn:{n} (d={d})",
                "find_pair_violation",
                (ring.order, ring.mul_table, in_i, in_phi),
            )
        )
    ring = make_zn(60)
    ideal = ideal_from_generators(ring, (6,))
    out.append(
        (
            "two-absorbing Zn:60 (d=6)",
            "find_two_absorbing_violation",
            (ring.order, ring.mul_table, ideal.membership(), False),
        )
    )
    return out


def _time(fn, args, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> None:
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()

    print(f"{'case':38} {'python':>10} {'compiled':>10} {'speedup':>8}")
    for label, name, call_args in _cases():
        py_fn = getattr(_kernels_py, name)
        py = _time(py_fn, call_args, args.repeat)
        if _ckernels is None:
            print(f"{label:38} {py * 1e3:9.2f}ms {'n/a':>10} {'n/a':>8}")
            continue
        c_fn = getattr(_ckernels, name)
        assert py_fn(*call_args) == c_fn(*call_args), "backends disagree"
        cc = _time(c_fn, call_args, args.repeat)
        print(f"{label:38} {py * 1e3:9.2f}ms {cc * 1e3:9.2f}ms {py / cc:7.1f}x")


if __name__ == "__main__":
    main()
