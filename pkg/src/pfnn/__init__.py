"""Penalty-free two-network variational solver with Deep Ritz / Deep Nitsche baselines."""

__version__ = "0.1.0"

from ._kernels import BACKEND  # noqa: E402,F401
