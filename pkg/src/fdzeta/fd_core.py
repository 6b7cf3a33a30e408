"""Closed-form Fermi-Dirac integrals F_{k/2}(eta) in Riemann/Hurwitz zeta terms."""
from __future__ import annotations

import enum
import functools
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .model import DEGENERATE_ETA, ModelCoefficients, check_order, fit_model
from .special_functions import alternating_hurwitz, gamma_half_integer, riemann_zeta

# above this eta the exponential model is known to degrade
VALIDITY_LIMIT = 5.0


class Method(str, enum.Enum):
    CLOSED_FORM = "closed"
    QUADRATURE = "quadrature"
    SERIES = "series"


@dataclass(frozen=True)
class EvaluationResult:
    """One estimate of F_{k/2}(eta) and how it was obtained."""

    value: float
    method: Method
    validity_warning: bool
    coefficients: Optional[ModelCoefficients] = None
    k: Optional[int] = None
    eta: Optional[float] = None


def validity_warning(eta: float) -> bool:
    return eta > VALIDITY_LIMIT


def integrand(k: int, xi, eta: float):
    """``xi^(k/2) / (1 + e^(xi - eta))`` for scalar or array ``xi >= 0``.

    The occupancy is written with ``e^-|xi - eta|`` only, so nothing
    overflows for large ``xi``.
    """
    x = np.asarray(xi, dtype=float)
    t = x - eta
    w = np.exp(-np.abs(t))
    occupancy = np.where(t > 0, w / (1 + w), 1 / (1 + w))
    out = x ** (k / 2) * occupancy
    return float(out) if out.ndim == 0 else out


@functools.lru_cache(maxsize=None)
def _zeta_at(s: float) -> float:
    return riemann_zeta(s)


def _prefactor_and_eta_zero_sum(k: int) -> tuple[float, float]:
    # Gamma(1 + k/2) and (1 - 2^{-k/2}) zeta(1 + k/2)
    return gamma_half_integer(k), (1 - 2.0 ** (-k / 2)) * _zeta_at(1 + k / 2)


def eta_zero_exact(k: int) -> float:
    """F_{k/2}(0) = Gamma(1 + k/2) (1 - 2^{-k/2}) zeta(1 + k/2)."""
    k = check_order(k)
    gamma, eta_sum = _prefactor_and_eta_zero_sum(k)
    return gamma * eta_sum


def fd_closed_form(k: int, eta: float) -> EvaluationResult:
    """Evaluate F_{k/2}(eta) from the exponential model of the occupancy ratio.

    The model turns the integral into

        Gamma(1+k/2) [ a (1 - 2^{-k/2}) zeta(1+k/2)
                       - b (2^{-k/2} zeta(1+k/2, (c+1)/2) - zeta(1+k/2, c+1)) ]

    with ``a = e^eta`` and ``b = (e^eta - 1)/(e^-eta + 1)``.  For
    ``|eta| < DEGENERATE_ETA`` the ``b`` term is dropped and the value is
    exactly :func:`eta_zero_exact`.  Values for ``eta > VALIDITY_LIMIT`` are
    returned but flagged.

    Raises:
        DomainError: ``k`` outside ``1..MAX_ORDER`` or ``eta`` too large.
        ModelBreakdown: the fitted decay constant has ``c <= -1``.
    """
    k = check_order(k)
    coeffs = fit_model(k, eta)
    gamma, eta_sum = _prefactor_and_eta_zero_sum(k)
    if abs(eta) < DEGENERATE_ETA:
        value = gamma * eta_sum
    else:
        s = 1 + k / 2
        value = gamma * (
            coeffs.a * eta_sum - coeffs.b * alternating_hurwitz(s, coeffs.c + 1)
        )
    return EvaluationResult(
        value=value,
        method=Method.CLOSED_FORM,
        validity_warning=validity_warning(eta),
        coefficients=coeffs,
        k=k,
        eta=eta,
    )
