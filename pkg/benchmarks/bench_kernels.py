"""Compiled vs numpy kernels: best wall time per case and agreement of outputs.

    python3 benchmarks/bench_kernels.py [--repeat 3]
"""
import argparse
import time

import numpy as np

from adaptive_circuits import kernels
from adaptive_circuits.gates import dressed_from_angles


def _best(fn, repeat):
    best, out = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def cases():
    L_flags = 512
    seed = np.zeros(L_flags, dtype=np.uint8)
    seed[L_flags // 2] = 1
    full = np.ones(L_flags, dtype=np.uint8)

    def ensemble(impl, f0, n):
        return lambda: impl.flag_ensemble(f0, 500, 0.3553, 12345, n, True, -1 if f0.sum() > 1 else L_flags // 2,
                                          10, False, 0)

    def history(impl):
        return lambda: impl.flag_history(full, 200, 0.3, 99, True)

    u2 = np.ascontiguousarray(dressed_from_angles(np.pi / 2, 0.0, (0.0, np.pi / 2, np.pi, 0.0)))
    u1 = np.ascontiguousarray(np.array([[0, 1], [1, 0]], dtype=complex))

    def sv(impl, L):
        rng = np.random.default_rng(0)
        psi0 = rng.normal(size=1 << L) + 1j * rng.normal(size=1 << L)
        psi0 /= np.linalg.norm(psi0)

        def run():
            psi = psi0.copy()
            for a in range(L):
                impl.sv_apply_2q(psi, L, a, (a + 1) % L, u2)
                impl.sv_apply_1q(psi, L, a, u1)
            return psi
        return run

    yield "flag_ensemble single seed L=512 T=500 n=2000", lambda impl: ensemble(impl, seed, 2000)
    yield "flag_ensemble all active L=512 T=500 n=50", lambda impl: ensemble(impl, full, 50)
    yield "flag_history all active L=512 T=200", history
    yield "statevector layer L=16", lambda impl: sv(impl, 16)
    yield "statevector layer L=20", lambda impl: sv(impl, 20)


def _agreement(a, b) -> str:
    """'identical' for integer/bitwise-equal outputs, else the max abs difference."""
    if isinstance(a, dict):
        parts = {_agreement(a[k], b[k]) for k in a}
        return "identical" if parts == {"identical"} else ",".join(sorted(parts - {"identical"}))
    if a is None or b is None:
        return "identical" if a is b else "differs"
    a, b = np.asarray(a), np.asarray(b)
    if np.array_equal(a, b):
        return "identical"
    return f"max|diff|={np.abs(a - b).max():.1e}"


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    py = kernels.get("python")
    try:
        cy = kernels.get("cython")
    except ImportError:
        print("compiled extension not built; only the numpy backend is available")
        return
    print(f"{'case':48s} {'cython s':>10s} {'numpy s':>10s} {'speedup':>8s}  agreement")
    for name, make in cases():
        tc, oc = _best(make(cy), args.repeat)
        tp, op = _best(make(py), args.repeat)
        print(f"{name:48s} {tc:10.4f} {tp:10.4f} {tp / tc:8.1f}  {_agreement(oc, op)}")


if __name__ == "__main__":
    main()
