"""Exponential model of the occupancy ratio.

The ratio ``f(xi, eta) = (1 + e^xi) / (1 + e^(xi - eta))`` between the
shifted and unshifted Fermi-Dirac integrands is replaced by
``a - b exp(-c xi)``.  ``a`` and ``b`` come from the values at ``xi = 0`` and
``xi -> inf``; ``c`` is fixed by matching the ratio at the integrand's
maximizer ``xi_m``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .errors import ConvergenceError, DegenerateEta, DomainError, ModelBreakdown
from .special_functions import _check_order

MAX_ORDER = 9
# |eta| below this takes the b = 0 branch
DEGENERATE_ETA = 1e-12
ETA_OVERFLOW = 700.0

_BRACKET_EXPANSIONS = 10
_NEWTON_MAX_ITER = 100


def check_order(k) -> int:
    """Validate ``k`` against the supported range ``1 <= k <= MAX_ORDER``."""
    k = _check_order(k)
    if k > MAX_ORDER:
        raise DomainError(f"order k={k} outside supported range 1..{MAX_ORDER}")
    return k


@dataclass(frozen=True)
class ModelCoefficients:
    """Coefficients of ``a - b exp(-c xi)``.

    ``c`` is ``None`` on the degenerate branch (``b == 0``), where it plays
    no role.
    """

    a: float
    b: float
    c: Optional[float]
    xi_m: float


def ratio(xi: float, eta: float) -> float:
    """Ratio of the eta-shifted integrand to the eta = 0 integrand."""
    if xi < 0:
        raise DomainError(f"xi must be non-negative, got {xi!r}")
    if xi >= eta:
        return math.exp(eta) * (1 + math.exp(-xi)) / (1 + math.exp(eta - xi))
    return (1 + math.exp(xi)) / (1 + math.exp(xi - eta))


def boundary_coefficients(eta: float) -> tuple[float, float]:
    """Return ``(a, b)`` so the model matches the ratio at 0 and infinity.

    ``b = (e^eta - 1) / (e^-eta + 1)`` is evaluated as ``e^eta tanh(eta/2)``,
    which is the same quantity without the cancellation near 0 or the
    overflow of ``e^-eta`` for very negative eta.
    """
    if not math.isfinite(eta):
        raise DomainError(f"eta must be finite, got {eta!r}")
    if eta > ETA_OVERFLOW:
        raise DomainError(f"eta={eta!r} overflows the model coefficients")
    a = math.exp(eta)
    return a, a * math.tanh(eta / 2)


def xi_m_residual(k: int, eta: float, xi: float) -> float:
    """``k e^eta + e^xi (k - 2 xi)``; zero at the integrand maximizer."""
    return k * math.exp(eta) + math.exp(xi) * (k - 2 * xi)


def solve_xi_m(k: int, eta: float) -> float:
    """Locate the maximizer ``xi_m > k/2`` of ``xi^(k/2) / (1 + e^(xi - eta))``.

    The stationarity condition ``k e^eta + e^xi (k - 2 xi) = 0`` is divided
    by ``e^xi`` and written in the offset ``d = xi - k/2``::

        h(d) = k exp(eta - k/2 - d) - 2 d

    ``h`` is strictly decreasing with ``h(0) > 0``, so the root is unique.
    It is found by Newton steps kept inside a sign-change bracket, falling
    back to bisection whenever a step leaves the bracket.
    """
    k = check_order(k)
    if not math.isfinite(eta):
        raise DomainError(f"eta must be finite, got {eta!r}")
    scale = k * math.exp(eta - k / 2)

    def h(d):
        return scale * math.exp(-d) - 2 * d

    lo, hi = 0.0, max(eta, 0.0) + 3.0
    width = hi
    for _ in range(_BRACKET_EXPANSIONS):
        if h(hi) < 0:
            break
        lo, width = hi, 2 * width
        hi = lo + width
    else:
        raise ConvergenceError(
            f"no sign change for xi_m within {_BRACKET_EXPANSIONS} expansions "
            f"(k={k}, eta={eta})"
        )

    d = 0.5 * (lo + hi)
    for _ in range(_NEWTON_MAX_ITER):
        hd = h(d)
        if hd == 0:
            break
        if hd > 0:
            lo = d
        else:
            hi = d
        step = hd / (scale * math.exp(-d) + 2)
        d_new = d + step
        if not lo < d_new < hi:
            d_new = 0.5 * (lo + hi)
        if abs(d_new - d) <= 2 * math.ulp(d_new) or hi - lo <= 2 * math.ulp(hi):
            d = d_new
            break
        d = d_new
    else:
        raise ConvergenceError(f"xi_m iteration did not settle (k={k}, eta={eta})")
    return k / 2 + d


def coefficient_c(k: int, eta: float, xi_m: Optional[float] = None) -> float:
    """Decay constant ``c`` making the model exact at ``xi_m``.

    Matching ``a - b exp(-c xi_m)`` to the ratio gives
    ``c = -ln[(e^-eta + 1)(e^eta - ratio(xi_m)) / (e^eta - 1)] / xi_m``.
    Substituting the ratio, the logarithm argument simplifies to
    ``(1 + e^eta) / (e^xi_m + e^eta)``, which is what gets evaluated.
    """
    if abs(eta) < DEGENERATE_ETA:
        raise DegenerateEta(f"c is indeterminate at eta={eta!r} (b = 0)")
    if xi_m is None:
        xi_m = solve_xi_m(k, eta)
    # log((e^xi + e^eta) / (1 + e^eta)), kept in log-sum-exp form
    top = max(xi_m, eta) + math.log1p(math.exp(-abs(xi_m - eta)))
    bottom = max(eta, 0.0) + math.log1p(math.exp(-abs(eta)))
    log_arg = bottom - top
    if not math.isfinite(log_arg):
        raise ModelBreakdown(f"logarithm argument not positive at eta={eta!r}")
    c = -log_arg / xi_m
    if not c > -1:
        raise ModelBreakdown(f"c={c!r} <= -1 at eta={eta!r}; zeta series diverges")
    return c


def fit_model(k: int, eta: float) -> ModelCoefficients:
    """Build all four coefficients for order ``k`` at ``eta``."""
    k = check_order(k)
    a, b = boundary_coefficients(eta)
    xi_m = solve_xi_m(k, eta)
    if abs(eta) < DEGENERATE_ETA:
        return ModelCoefficients(a=a, b=0.0, c=None, xi_m=xi_m)
    c = coefficient_c(k, eta, xi_m)
    return ModelCoefficients(a=a, b=b, c=c, xi_m=xi_m)


def model_f(xi: float, coeffs: ModelCoefficients) -> float:
    if xi < 0:
        raise DomainError(f"xi must be non-negative, got {xi!r}")
    if coeffs.b == 0:
        return coeffs.a
    return coeffs.a - coeffs.b * math.exp(-coeffs.c * xi)


def compare_maximizers(k: int, eta: float) -> tuple[float, float]:
    """Diagnostic: maximizer of the true integrand vs. the modelled one.

    Returns ``(xi_m, xi_model)`` where ``xi_model`` maximizes
    ``model_f(xi) * xi^(k/2) / (1 + e^xi)``.  No threshold is implied.
    """
    from scipy.optimize import minimize_scalar

    coeffs = fit_model(k, eta)

    def neg(xi):
        return -model_f(xi, coeffs) * xi ** (k / 2) / (1 + math.exp(xi))

    upper = coeffs.xi_m * 4 + 10
    res = minimize_scalar(neg, bounds=(0.0, upper), method="bounded",
                          options={"xatol": 1e-10})
    return coeffs.xi_m, float(res.x)
