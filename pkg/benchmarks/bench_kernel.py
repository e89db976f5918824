#!/usr/bin/env python3
"""Benchmark the compiled orbit kernel against the pure-python fallback.

The workload is the hot loop of the package: enumerate PGL(3,5), then
scan the whole group to canonicalize nets.  The fallback runs a reduced
slice of the scan and the timing is scaled up for comparison.

Usage: python benchmarks/bench_kernel.py [--nets N]
"""

import argparse
import random
import time

import numpy as np

from netalg import kernel, kernel_py
from netalg.field import GF, Subspace, random_matrix
from netalg.nets import NetOfConics

P = 5
GROUP_ORDER = 372000


def sample_nets(n, seed=7):
    F = GF(P)
    rng = random.Random(seed)
    nets = []
    while len(nets) < n:
        S = Subspace(random_matrix(3, 6, F, rng))
        if S.dim == 3:
            nets.append([[int(e) for e in row] for row in S.basis.entries])
    return nets


def bench_compiled(nets, mats):
    t0 = time.time()
    codes = [kernel.net_canonical(B, mats, P)[0] for B in nets]
    return time.time() - t0, codes


def bench_pure(nets, mats, slice_size=4000):
    sub = [tuple(int(e) for e in mats[i]) for i in range(slice_size)]
    t0 = time.time()
    for B in nets:
        kernel_py.net_canonical(B, sub, P)
    dt = time.time() - t0
    return dt * (GROUP_ORDER / slice_size)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--nets", type=int, default=8)
    args = ap.parse_args()

    if not kernel.HAVE_COMPILED:
        print("compiled kernel not available; run `pip install -e .` first")
        return

    t0 = time.time()
    mats = kernel.pgl3(P)
    print(f"PGL(3,{P}) enumeration ({len(mats)} elements): {time.time() - t0:.2f}s compiled")

    t0 = time.time()
    mats_py = kernel_py.pgl3_elements(P)
    print(f"  pure python: {time.time() - t0:.2f}s")
    assert len(mats_py) == len(mats)

    nets = sample_nets(args.nets)
    dt_c, codes = bench_compiled(nets, mats)
    per_c = dt_c / len(nets)
    print(f"canonical-form scan, {len(nets)} nets x {GROUP_ORDER} elements:")
    print(f"  compiled:            {dt_c:.2f}s total, {per_c * 1000:.0f} ms/net")

    dt_p = bench_pure(nets, mats)
    per_p = dt_p / len(nets)
    print(f"  pure (extrapolated): {dt_p:.1f}s total, {per_p * 1000:.0f} ms/net")
    print(f"  speedup: {per_p / per_c:.0f}x")

    # correctness cross-check on a reduced slice
    sub = np.ascontiguousarray(mats[:2000])
    sub_py = [tuple(int(e) for e in m) for m in sub]
    for B in nets[:3]:
        cc = list(kernel.net_orbit_codes(B, sub, P))
        cp = kernel_py.net_orbit_codes(B, sub_py, P)
        assert cc == cp
    print("  cross-check on a 2000-element slice: identical codes")


if __name__ == "__main__":
    main()
