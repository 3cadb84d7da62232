"""Exact-arithmetic laboratory for counting nonnegative d-subsets of weight functions."""
from .kernels import BACKEND

__version__ = "0.1.0"
__all__ = ["BACKEND", "__version__"]
