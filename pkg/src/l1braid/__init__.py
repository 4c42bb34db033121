"""Braid-matrix families, Wigner D-functions and l1-norm extremization."""

from .report import CheckResult, Report

__version__ = "0.1.0"

__all__ = ["CheckResult", "Report", "__version__"]
