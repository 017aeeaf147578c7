"""Compactly supported bump functions for shape parameters in (1, inf).

Every member is positive exactly on (-1, 1), hits 1 only at 0, and is
evaluated through the stable transform as exp(-transform(lam/(lam-1) *
x**2, lam)), which stays well behaved as lam approaches 1 from above where
the simplified closed form's exponent 1/(1-lam) explodes.
"""

from __future__ import annotations

import math

from .core import _require_lambda, transform

__all__ = ["bump", "bump_classic"]


def _require_bump_lambda(lam: float) -> float:
    lam = _require_lambda(lam)
    if not (1.0 < lam < math.inf):
        raise ValueError(f"bump shape must satisfy 1 < lam < inf, got {lam!r}")
    return lam


def bump(x: float, lam: float) -> float:
    """Bump value at x; exactly 0 for |x| >= 1."""
    lam = _require_bump_lambda(lam)
    x = float(x)
    if math.isnan(x):
        raise ValueError("x must not be NaN")
    if abs(x) >= 1.0:
        return 0.0
    u = (lam / (lam - 1.0)) * x * x
    return math.exp(-transform(u, lam))


def bump_classic(x: float) -> float:
    """The textbook bump exp(-1/(1 - x**2)) on (-1, 1), 0 elsewhere."""
    x = float(x)
    if math.isnan(x):
        raise ValueError("x must not be NaN")
    if abs(x) >= 1.0:
        return 0.0
    return math.exp(-1.0 / (1.0 - x * x))
