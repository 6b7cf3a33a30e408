"""Reference evaluations of F_{k/2}(eta) that share no code with the closed form.

Two independent routes:

* :func:`fd_quadrature` integrates the defining integral directly with
  globally adaptive Gauss-Legendre panels, for any eta up to ``ETA_MAX``.
* :func:`fd_series_nondegenerate` sums the alternating exponential series,
  valid for eta <= 0.
"""
from __future__ import annotations

import heapq
import math
from dataclasses import dataclass

import numpy as np
from scipy.special import gammaincc

from .errors import ConvergenceError, DomainError
from .fd_core import EvaluationResult, Method, integrand, validity_warning
from .model import check_order

ETA_MAX = 60.0
GAUSS_POINTS = 15

_NODES, _WEIGHTS = np.polynomial.legendre.leggauss(GAUSS_POINTS)


@dataclass(frozen=True)
class QuadratureConfig:
    abs_tol: float = 1e-14
    rel_tol: float = 1e-12
    max_subdivisions: int = 2000
    # finite panel is [0, max(eta, 0) + tail_cutoff_margin]
    tail_cutoff_margin: float = 40.0

    def __post_init__(self):
        if not (self.abs_tol > 0 and self.rel_tol > 0):
            raise DomainError("quadrature tolerances must be positive")
        if self.max_subdivisions < 1:
            raise DomainError("max_subdivisions must be >= 1")
        if not self.tail_cutoff_margin >= 30:
            raise DomainError("tail_cutoff_margin must be >= 30")


DEFAULT_CONFIG = QuadratureConfig()


def tail_bound(k: int, eta: float, cutoff: float) -> float:
    """Upper bound on the integral beyond ``cutoff``: int xi^(k/2) e^(eta-xi)."""
    p = 1 + k / 2
    return math.exp(eta) * math.gamma(p) * float(gammaincc(p, cutoff))


def _gauss(f, a: float, b: float) -> float:
    half = 0.5 * (b - a)
    x = half * _NODES + 0.5 * (a + b)
    return half * float(np.dot(_WEIGHTS, f(x)))


def fd_quadrature(k: int, eta: float,
                  config: QuadratureConfig = DEFAULT_CONFIG) -> EvaluationResult:
    """Integrate ``xi^(k/2) / (1 + e^(xi - eta))`` over ``[0, inf)``.

    Each panel is estimated by a Gauss rule on the whole panel and on its
    two halves; the difference is the panel's error.  The panel with the
    largest error is split until the summed error is below
    ``rel_tol * |value|``.  The cutoff is pushed out past
    ``max(eta, 0) + tail_cutoff_margin`` if needed so the analytic tail
    bound stays below ``abs_tol`` (and below ``rel_tol`` times a lower bound
    on the integral, which matters only for very negative eta).

    Raises:
        ConvergenceError: ``max_subdivisions`` splits were not enough.
    """
    k = check_order(k)
    if not math.isfinite(eta) or eta > ETA_MAX:
        raise DomainError(f"quadrature supports finite eta <= {ETA_MAX}, got {eta!r}")

    # Gamma(1+k/2) e^eta / (1 + e^eta) never exceeds the integral
    floor = math.gamma(1 + k / 2) / (1 + math.exp(-eta))
    tail_target = min(config.abs_tol, config.rel_tol * floor)
    cutoff = max(eta, 0.0) + config.tail_cutoff_margin
    while tail_bound(k, eta, cutoff) >= tail_target:
        cutoff += 10.0

    def f(x):
        return integrand(k, x, eta)

    # short first panel, then unit-scale panels around the Fermi edge
    breaks = [0.0, 1.0]
    if eta > 1.0:
        breaks.append(eta)
    breaks.append(cutoff)
    breaks = sorted(set(breaks))

    heap = []
    total = 0.0
    total_err = 0.0

    def push(a, b, coarse):
        nonlocal total, total_err
        m = 0.5 * (a + b)
        left, right = _gauss(f, a, m), _gauss(f, m, b)
        fine = left + right
        err = abs(fine - coarse)
        total += fine
        total_err += err
        heapq.heappush(heap, (-err, a, b, fine, left, right))

    for a, b in zip(breaks[:-1], breaks[1:]):
        push(a, b, _gauss(f, a, b))

    splits = 0
    while total_err > config.rel_tol * abs(total) and total != 0.0:
        if splits >= config.max_subdivisions:
            raise ConvergenceError(
                f"quadrature did not converge in {splits} subdivisions "
                f"(k={k}, eta={eta}, error estimate {total_err:.3g})"
            )
        neg_err, a, b, fine, left, right = heapq.heappop(heap)
        total -= fine
        total_err += neg_err
        m = 0.5 * (a + b)
        push(a, m, left)
        push(m, b, right)
        splits += 1
        if splits % 64 == 0:
            # resum to shed drift from the running updates
            total = math.fsum(item[3] for item in heap)
            total_err = math.fsum(-item[0] for item in heap)

    value = math.fsum(item[3] for item in heap)
    return EvaluationResult(value=value, method=Method.QUADRATURE,
                            validity_warning=validity_warning(eta), k=k, eta=eta)


# direct summation budget before switching to the accelerated sum
_DIRECT_TERMS = 20000
_SERIES_REL_TOL = 1e-15
_CVZ_TERMS = 40


def _cvz_alternating(terms) -> float:
    """Cohen-Villegas-Zagier sum of ``sum_{j>=0} (-1)^j terms[j]``.

    Exact for the completely monotone sequences used here; the error
    shrinks like ``5.8^-n`` with ``n = len(terms)``.
    """
    n = len(terms)
    d = (3 + math.sqrt(8)) ** n
    d = (d + 1 / d) / 2
    b, c, s = -1.0, -d, 0.0
    for j, a_j in enumerate(terms):
        c = b - c
        s += c * a_j
        b = (j + n) * (j - n) * b / ((j + 0.5) * (j + 1))
    return s / d


def fd_series_nondegenerate(k: int, eta: float) -> EvaluationResult:
    """Gamma(1+k/2) * sum_{n>=1} (-1)^(n+1) e^(n eta) / n^(1+k/2), eta <= 0.

    Terms are summed directly until the next one falls below 1e-15 of the
    running sum.  Close to eta = 0, where that would take too many terms,
    the alternating sum is accelerated instead.
    """
    k = check_order(k)
    if not eta <= 0:
        raise DomainError(f"the non-degenerate series needs eta <= 0, got {eta!r}")
    s = 1 + k / 2
    x = math.exp(eta)

    if x ** _DIRECT_TERMS < _SERIES_REL_TOL:
        total = 0.0
        sign = 1.0
        term = x
        n = 1
        while True:
            total += sign * term
            n += 1
            term = x ** n / n ** s
            if term < _SERIES_REL_TOL * abs(total) or term == 0.0:
                break
            sign = -sign
    else:
        total = _cvz_alternating([x ** n / n ** s for n in range(1, _CVZ_TERMS + 1)])

    value = math.gamma(s) * total
    return EvaluationResult(value=value, method=Method.SERIES,
                            validity_warning=False, k=k, eta=eta)
