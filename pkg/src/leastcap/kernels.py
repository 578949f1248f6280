"""Kernel dispatch: the compiled extension when importable, else pure Python."""

try:
    from . import _kernels as _impl

    BACKEND = "cython"
except ImportError:  # extension not built
    from . import _kernels_py as _impl

    BACKEND = "python"

theta1_derivs = _impl.theta1_derivs
power_product_sum = _impl.power_product_sum
jacobi_real = _impl.jacobi_real

__all__ = ["BACKEND", "theta1_derivs", "power_product_sum", "jacobi_real"]
