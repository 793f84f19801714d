"""Select the compiled Gauss-sum kernel when built, else the Python one."""

from __future__ import annotations

try:
    from ._gauss import residue_counts
    BACKEND = "cython"
except ImportError:  # extension not built
    from ._gauss_py import residue_counts
    BACKEND = "python"

__all__ = ["BACKEND", "residue_counts"]
