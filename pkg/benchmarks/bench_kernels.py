"""Compare the numba Jacobi kernel with the batched numpy fallback.

    python benchmarks/bench_kernels.py [--repeat 3]

Times the eigensolver on random Hermitian stacks and on the full negativity
trace (40001 partial transposes) of the anisotropic reference configuration.
"""
import argparse
import time

import numpy as np

from qqent._jacobi import jacobi_numba, jacobi_numpy, sort_eigenpairs
from qqent.dynamics import STATS_GRID, evolve_many, make_propagator
from qqent.entanglement import partial_transpose
from qqent.model import ModelParams
from qqent.states import InitialStateSpec, build_initial_state, density_batch


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    rng = np.random.default_rng(0)
    prop = make_propagator(ModelParams(1, 5, 10, d_z=1, b_qb=1, b_qt=1))
    psi0 = build_initial_state(InitialStateSpec.symmetric(1.0))
    pt_stack = partial_transpose(density_batch(evolve_many(prop, psi0, STATS_GRID.times())))

    jacobi_numba(pt_stack[:2])  # compile outside the timed region

    print(f"{'workload':<28}{'n':>8}{'numba [s]':>12}{'numpy [s]':>12}{'speedup':>10}{'max |dw|':>12}")
    for label, n in [("random hermitian 6x6", 1000), ("random hermitian 6x6", 10000), ("negativity trace (XYZ)", None)]:
        if n is None:
            stack = pt_stack
        else:
            x = rng.normal(size=(n, 6, 6)) + 1j * rng.normal(size=(n, 6, 6))
            stack = (x + x.conj().transpose(0, 2, 1)) / 2
        t_nb = best_of(lambda: jacobi_numba(stack), args.repeat)
        t_np = best_of(lambda: jacobi_numpy(stack), args.repeat)
        w1, _ = sort_eigenpairs(*jacobi_numba(stack))
        w2, _ = sort_eigenpairs(*jacobi_numpy(stack))
        print(f"{label:<28}{len(stack):>8}{t_nb:>12.4f}{t_np:>12.4f}{t_np / t_nb:>10.1f}{np.abs(w1 - w2).max():>12.2e}")


if __name__ == "__main__":
    main()
