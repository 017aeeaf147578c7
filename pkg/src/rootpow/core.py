"""Core evaluators for the self-inverting power transform.

The transform maps x >= 0 through a single shape knob ``lam`` that ranges
over the extended reals.  ``lam = 0`` is the identity, ``lam = 1`` behaves
like expm1, ``lam = -1`` like log1p, and the limits at +/-infinity are
-log1p(-x) and -expm1(-x).  Flipping the sign of ``lam`` inverts the
transform exactly, which is the property everything else in this package
leans on.

Every branch is evaluated as

    post_scale * expm1?( mid_scale * log1p?( pre_scale * x ) )

so the whole family costs at most one log1p and one expm1 per call.  The
branch constants live in :class:`BranchPlan`; :func:`classify` picks the
branch from windows derived from the working precision.
"""

from __future__ import annotations

import math
import sys
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

import numpy as np

__all__ = [
    "Branch",
    "BranchPlan",
    "NumericPolicy",
    "DOUBLE",
    "UnsupportedBranchError",
    "classify",
    "branch_plan",
    "max_domain",
    "parse_lambda",
    "render_lambda",
    "transform",
    "transform_naive",
    "inverse",
    "derivative",
]

# Smallest double strictly above -1; keeps log1p arguments legal when
# pre_scale * x rounds onto -1 at a clamped domain edge (happens e.g. at
# lam = 1.5, where pre_scale * max_domain rounds to exactly -1).
_ABOVE_MINUS_ONE = math.nextafter(-1.0, 0.0)
_BELOW_ONE = math.nextafter(1.0, -math.inf)


class UnsupportedBranchError(ValueError):
    """Raised when the naive closed form has no defined branch for lam."""


@dataclass(frozen=True)
class NumericPolicy:
    """Working-precision constants that drive branch classification.

    ``eps`` is the machine epsilon of the working format and ``tiny`` its
    smallest positive normal.  lam counts as infinite beyond ``1/eps``, as
    +/-1 within ``eps`` of those points, and as zero within ``tiny``.
    """

    eps: float
    tiny: float

    @property
    def pinf_threshold(self) -> float:
        return 1.0 / self.eps

    @property
    def one_window(self) -> float:
        return self.eps

    @property
    def zero_window(self) -> float:
        return self.tiny


DOUBLE = NumericPolicy(eps=sys.float_info.epsilon, tiny=sys.float_info.min)


class Branch(Enum):
    """The seven evaluation regimes of the transform."""

    POS_INF = "pos_inf"
    ONE = "one"
    POS = "pos"
    ZERO = "zero"
    NEG = "neg"
    NEG_ONE = "neg_one"
    NEG_INF = "neg_inf"


@dataclass(frozen=True)
class BranchPlan:
    """Scale factors and skip flags for one branch of the transform."""

    pre_scale: float
    skip_log: bool
    mid_scale: float
    skip_exp: bool
    post_scale: float


def _require_lambda(lam: float) -> float:
    lam = float(lam)
    if math.isnan(lam):
        raise ValueError("shape parameter lam must not be NaN")
    return lam


def parse_lambda(text: str) -> float:
    """Parse a shape parameter from its CLI spelling.

    Accepts decimal literals plus "inf" and "-inf".  NaN is rejected.
    """
    try:
        value = float(text)
    except ValueError:
        raise ValueError(f"cannot parse lam from {text!r}") from None
    return _require_lambda(value)


def render_lambda(lam: float) -> str:
    """Inverse of :func:`parse_lambda`; round-trips every accepted value."""
    lam = _require_lambda(lam)
    if lam == math.inf:
        return "inf"
    if lam == -math.inf:
        return "-inf"
    return repr(lam)


def classify(lam: float, policy: NumericPolicy = DOUBLE) -> Branch:
    """Assign lam to exactly one of the seven branches."""
    lam = _require_lambda(lam)
    if lam > policy.pinf_threshold:
        return Branch.POS_INF
    if abs(lam - 1.0) < policy.one_window:
        return Branch.ONE
    if abs(lam) < policy.zero_window:
        return Branch.ZERO
    if abs(lam + 1.0) < policy.one_window:
        return Branch.NEG_ONE
    if lam < -policy.pinf_threshold:
        return Branch.NEG_INF
    return Branch.POS if lam > 0.0 else Branch.NEG


def _nozero(value: float, policy: NumericPolicy) -> float:
    # Division guard; unreachable after classification but kept so the plan
    # constants are total functions of (lam, policy).
    return policy.tiny if abs(value) < policy.tiny else value


@lru_cache(maxsize=4096)
def branch_plan(lam: float, policy: NumericPolicy = DOUBLE) -> BranchPlan:
    """Build the scale/skip table row for lam."""
    branch = classify(lam, policy)
    if branch is Branch.POS_INF:
        return BranchPlan(-1.0, False, 1.0, True, -1.0)
    if branch is Branch.ONE:
        return BranchPlan(1.0, True, 1.0, False, 1.0)
    if branch is Branch.ZERO:
        return BranchPlan(1.0, True, 1.0, True, 1.0)
    if branch is Branch.NEG_ONE:
        return BranchPlan(1.0, False, 1.0, True, 1.0)
    if branch is Branch.NEG_INF:
        return BranchPlan(-1.0, True, 1.0, False, -1.0)
    if branch is Branch.POS:
        return BranchPlan(
            (1.0 - lam) / _nozero(lam, policy),
            False,
            1.0 / _nozero(1.0 - lam, policy),
            False,
            lam,
        )
    return BranchPlan(
        -1.0 / _nozero(lam, policy),
        False,
        lam + 1.0,
        False,
        -lam / _nozero(lam + 1.0, policy),
    )


def max_domain(lam: float) -> float:
    """Upper end of the valid input range for the given lam.

    Unbounded for lam <= 1.  For lam > 1 the transform has a pole at
    lam/(lam - 1) (at 1 for lam = +inf); the largest double strictly below
    that pole is returned so log1p arguments stay above -1 after clamping.
    """
    lam = _require_lambda(lam)
    if lam <= 1.0:
        return math.inf
    if lam == math.inf:
        return _BELOW_ONE
    return math.nextafter(lam / (lam - 1.0), -math.inf)


def _expm1(t: float) -> float:
    try:
        return math.expm1(t)
    except OverflowError:
        return math.inf


def _exp(t: float) -> float:
    try:
        return math.exp(t)
    except OverflowError:
        return math.inf


def transform(x: float, lam: float, policy: NumericPolicy = DOUBLE) -> float:
    """Stable evaluation of the transform at x.

    x is clamped from above to :func:`max_domain` first, so the result is
    finite or +inf but never NaN for x >= 0 and any non-NaN lam.  Negative
    x is evaluated through the same branch formulas; inputs beyond the
    negative-side pole saturate the same way the clamped upper edge does.
    """
    x = float(x)
    if math.isnan(x):
        raise ValueError("x must not be NaN")
    lam = _require_lambda(lam)
    x = min(x, max_domain(lam))
    plan = branch_plan(lam, policy)
    t = plan.pre_scale * x
    if not plan.skip_log:
        t = math.log1p(max(t, _ABOVE_MINUS_ONE))
    t = plan.mid_scale * t
    if not plan.skip_exp:
        t = _expm1(t)
    return plan.post_scale * t


def inverse(x: float, lam: float, policy: NumericPolicy = DOUBLE) -> float:
    """Inverse transform; identical to evaluating at -lam."""
    return transform(x, -_require_lambda(lam), policy)


def derivative(x: float, lam: float, policy: NumericPolicy = DOUBLE) -> float:
    """Analytic d/dx of :func:`transform`, strictly positive, 1 at x = 0.

    Shares the branch plan with :func:`transform`: for log-using branches
    the derivative is exp((mid_scale - 1) * log1p(pre_scale * x)) when the
    expm1 stage is active and exp(-log1p(pre_scale * x)) when it is
    skipped; the accumulated scale factors always cancel to 1.
    """
    x = float(x)
    if math.isnan(x):
        raise ValueError("x must not be NaN")
    lam = _require_lambda(lam)
    x = min(x, max_domain(lam))
    plan = branch_plan(lam, policy)
    t = plan.pre_scale * x
    if not plan.skip_log:
        inner = math.log1p(max(t, _ABOVE_MINUS_ONE))
        if plan.skip_exp:
            return _exp(-inner)
        dmid = plan.mid_scale - 1.0
        if dmid == 0.0:
            # |lam| below ~eps/2 underflows the exponent entirely; the
            # power this plan evaluates is 1, and 0 * inf must not leak
            # NaN when pre_scale * x overflows.
            return 1.0
        return _exp(dmid * inner)
    if plan.skip_exp:
        return 1.0
    return _exp(plan.mid_scale * t)


def transform_naive(x: float, lam: float, policy: NumericPolicy = DOUBLE) -> float:
    """Literal closed-form evaluation through pow, with no expm1/log1p.

    Exists as the comparison subject for the accuracy harness.  The closed
    form divides by |lam| and by (2 - |lam| + lam), so lam in {0, +inf,
    -inf} is rejected outright and lam = +/-1 raises ZeroDivisionError from
    the scaffolding itself.
    """
    x = float(x)
    if math.isnan(x):
        raise ValueError("x must not be NaN")
    lam = _require_lambda(lam)
    if math.isinf(lam) or abs(lam) < policy.tiny:
        raise UnsupportedBranchError(
            f"naive closed form undefined at lam = {render_lambda(lam)}"
        )
    s = abs(lam)
    scale = 2.0 * s / (2.0 - s + lam)
    inner = (2.0 - s - lam) / (2.0 * s)
    expo = (1.0 - s) ** (-1.0 if lam > 0.0 else 1.0)
    return scale * ((1.0 + inner * x) ** expo - 1.0)


def _transform_array(x: np.ndarray, lam: float, policy: NumericPolicy = DOUBLE) -> np.ndarray:
    """Vectorized :func:`transform` for a fixed lam (internal).

    Same plan, clamp, and -1 guard as the scalar path; used where whole
    grids are evaluated at one lam (quadrature, sweeps, test oracles).
    """
    lam = _require_lambda(lam)
    plan = branch_plan(lam, policy)
    with np.errstate(over="ignore", invalid="ignore"):
        t = np.minimum(np.asarray(x, dtype=float), max_domain(lam)) * plan.pre_scale
        if not plan.skip_log:
            t = np.log1p(np.maximum(t, _ABOVE_MINUS_ONE))
        t = plan.mid_scale * t
        if not plan.skip_exp:
            t = np.expm1(t)
        return plan.post_scale * t
