"""Backend benchmark: runs the same workloads under the numba and numpy
kernel backends (in subprocesses, since the backend is fixed at import
time) and prints a comparison table.

    python -m resetlab.benchmark [--scale small|medium] [--backend both]

Each task runs twice per backend and reports the faster run, so one-time
JIT compilation (disk-cached by numba) is mostly excluded.
"""

from __future__ import annotations

import argparse
import json
import os
import subprocess
import sys
import time


def _tasks(scale: str):
    from . import build_family, exact_reset_threshold, verify_theorem17
    from . import sweeps

    tasks = [
        ("one-point sweep n=3", lambda: sweeps.one_point_bounds_exhaustive(3)),
        ("primitive sweep n=3", lambda: sweeps.primitive_sweep(3)),
        ("equivalences n=3", lambda: sweeps.equivalences_exhaustive(3)),
        ("thm17 n=4", lambda: verify_theorem17(4)),
        ("rt of rn(8)", lambda: exact_reset_threshold(build_family("rn", 8))),
    ]
    if scale == "medium":
        tasks += [
            ("one-point sweep n=4", lambda: sweeps.one_point_bounds_exhaustive(4)),
            ("primitive sweep n=4", lambda: sweeps.primitive_sweep(4)),
            ("thm17 n=5", lambda: verify_theorem17(5)),
            ("rt of rn(11)", lambda: exact_reset_threshold(build_family("rn", 11))),
        ]
    return tasks


def _run_worker(scale: str):
    from ._kernels import BACKEND

    timings = {}
    for name, fn in _tasks(scale):
        best = None
        for _ in range(2):
            t0 = time.perf_counter()
            fn()
            dt = time.perf_counter() - t0
            best = dt if best is None else min(best, dt)
        timings[name] = best
    print(json.dumps({"backend": BACKEND, "timings": timings}))


def _spawn(backend: str, scale: str) -> dict:
    env = dict(os.environ)
    env["RESETLAB_BACKEND"] = backend
    out = subprocess.run(
        [sys.executable, "-m", "resetlab.benchmark", "--worker", "--scale", scale],
        env=env,
        capture_output=True,
        text=True,
        check=True,
    )
    return json.loads(out.stdout.strip().splitlines()[-1])


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--scale", choices=("small", "medium"), default="small")
    parser.add_argument("--backend", choices=("both", "numba", "numpy"), default="both")
    parser.add_argument("--worker", action="store_true", help=argparse.SUPPRESS)
    args = parser.parse_args(argv)
    if args.worker:
        _run_worker(args.scale)
        return 0
    backends = ("numba", "numpy") if args.backend == "both" else (args.backend,)
    results = {b: _spawn(b, args.scale) for b in backends}
    names = list(results[backends[0]]["timings"])
    width = max(len(n) for n in names)
    header = f"{'task'.ljust(width)}  " + "  ".join(f"{b:>10}" for b in backends)
    if len(backends) == 2:
        header += f"  {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for name in names:
        row = name.ljust(width) + "  "
        row += "  ".join(f"{results[b]['timings'][name]:>9.3f}s" for b in backends)
        if len(backends) == 2:
            t_numba = results["numba"]["timings"][name]
            t_numpy = results["numpy"]["timings"][name]
            row += f"  {t_numpy / t_numba:>7.1f}x"
        print(row)
    return 0


if __name__ == "__main__":
    sys.exit(main())
