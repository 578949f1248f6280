"""Compare the compiled kernels with the pure-Python fallback.

Kernel timings run both implementations in this process. End-to-end
timings run each backend in a fresh interpreter, since the choice is
made once at import.

    python3 benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import json
import subprocess
import sys
import timeit

import numpy as np

from leastcap import _kernels_py as py
from leastcap.quadrature import cut_arguments, jacobi_rule

try:
    from leastcap import _kernels as cy
except ImportError:  # extension not built
    cy = None

END_TO_END = """
import sys, time, json
if {block}:
    sys.modules['leastcap._kernels'] = None
from leastcap import KERNEL_BACKEND, exact, least_capacity_point, preset_triangle
from leastcap.verify import triangle_grid
t = time.perf_counter()
for w in triangle_grid(exact.ISO_RIGHT_UNIT, 10):
    exact.h_sigma(w)
t_sigma = time.perf_counter() - t
t = time.perf_counter()
least_capacity_point(preset_triangle('6-9-13'))
t_sc = time.perf_counter() - t
print(json.dumps([KERNEL_BACKEND, t_sigma, t_sc]))
"""


def kernel_cases():
    q = np.exp(-np.pi)
    x, w = jacobi_rule(48, -0.5, 0.0)
    s = 0.3 + 0.2j + (0.4 + 0.1j) * x
    roots = np.exp(2j * np.pi * np.arange(3) / 3)
    exps = np.array([-2 / 3, -5 / 6, -1 / 2])
    cuts = np.array(cut_arguments(roots, 1))
    return {
        "theta1_derivs": lambda k: k.theta1_derivs(0.7 + 0.3j, q, 14),
        "jacobi_real": lambda k: k.jacobi_real(1.234, 0.5),
        "power_product_sum[48]": lambda k: k.power_product_sum(s, w, roots, exps, cuts),
    }


def bench(fn, repeat):
    n, _ = timeit.Timer(fn).autorange()
    best = min(timeit.Timer(fn).repeat(repeat, n)) / n
    return best * 1e6


def end_to_end(block):
    out = subprocess.run(
        [sys.executable, "-c", END_TO_END.format(block=block)],
        capture_output=True, text=True, check=True,
    )
    return json.loads(out.stdout)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)

    print(f"{'kernel':<24}{'python (us)':>14}{'cython (us)':>14}{'speedup':>10}")
    for name, call in kernel_cases().items():
        t_py = bench(lambda: call(py), args.repeat)
        if cy is None:
            print(f"{name:<24}{t_py:>14.2f}{'n/a':>14}{'':>10}")
            continue
        t_cy = bench(lambda: call(cy), args.repeat)
        print(f"{name:<24}{t_py:>14.2f}{t_cy:>14.2f}{t_py / t_cy:>9.1f}x")

    print()
    print(f"{'end to end':<24}{'backend':>10}{'h_sigma 10x10 (s)':>20}{'6-9-13 optimum (s)':>20}")
    for block in ((False, True) if cy is not None else (True,)):
        backend, t_sigma, t_sc = end_to_end(block)
        print(f"{'':<24}{backend:>10}{t_sigma:>20.4f}{t_sc:>20.4f}")


if __name__ == "__main__":
    main()
