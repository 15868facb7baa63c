"""Compare the compiled and pure-Python kernel backends.

    python benchmarks/bench_kernels.py [--states N]

Reports single objective-call cost and end-to-end c2_numeric /
cjwr_maximize timings (whole multi-start simplex search) for both backends,
and checks the results agree.
"""

import argparse
import time
from unittest import mock

import numpy as np

from steermub import kernels, scmub, steering
from steermub.qstate import bell_diagonal_from_c, bloch_decompose, sample_tetrahedron


def time_calls(fn, reps):
    t0 = time.perf_counter()
    for _ in range(reps):
        fn()
    return (time.perf_counter() - t0) / reps


def with_backend(name):
    impl = kernels.get_backend(name)
    return mock.patch.object(kernels, "multistart_maximize", impl.multistart_maximize)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--states", type=int, default=3)
    ap.add_argument("--reps", type=int, default=20000)
    args = ap.parse_args()

    rng = np.random.default_rng(0)
    G = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
    M = G @ G.conj().T
    M /= np.trace(M)
    rep = bloch_decompose(M)
    a, b, T = (np.ascontiguousarray(v) for v in (rep.a, rep.b, rep.T))
    x = np.array([0.3, 1.1, -0.4])

    print(f"{'kernel':<28}{'python us':>12}{'compiled us':>14}{'speedup':>10}")
    py, cy = kernels.get_backend("python"), kernels.get_backend("compiled")
    for label, call in [
        ("frame_min_holevo (m=3)", lambda k: k.frame_min_holevo(x, a, b, T, 3)),
        ("cjwr_frame_value (n=3)", lambda k: k.cjwr_frame_value(x, T, 3)),
    ]:
        tp = time_calls(lambda: call(py), args.reps) * 1e6
        tc = time_calls(lambda: call(cy), args.reps) * 1e6
        assert abs(call(py) - call(cy)) < 1e-12
        print(f"{label:<28}{tp:>12.2f}{tc:>14.2f}{tp / tc:>10.1f}x")

    cs = sample_tetrahedron(np.random.default_rng(1), args.states)
    states = [bell_diagonal_from_c(c) for c in cs]
    print(f"\nend to end over {args.states} Bell-diagonal states")
    print(f"{'operation':<28}{'python s':>12}{'compiled s':>14}{'speedup':>10}")
    for label, fn in [
        ("c2_numeric", lambda r: scmub.c2_numeric(r).value),
        ("cjwr_maximize n=2", lambda r: steering.cjwr_maximize(r, 2).F_value),
    ]:
        out, times = {}, {}
        for name in ("python", "compiled"):
            with with_backend(name):
                t0 = time.perf_counter()
                out[name] = [fn(r) for r in states]
                times[name] = time.perf_counter() - t0
        assert np.allclose(out["python"], out["compiled"], atol=1e-9)
        print(f"{label:<28}{times['python']:>12.2f}{times['compiled']:>14.2f}"
              f"{times['python'] / times['compiled']:>10.1f}x")


if __name__ == "__main__":
    main()
