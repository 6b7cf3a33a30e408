"""Gamma and zeta building blocks for the closed-form Fermi-Dirac values.

Everything here works in double precision on the convergent half-line
``s > 1``; there is no analytic continuation.
"""
import math

from .errors import DomainError

# Euler-Maclaurin: direct terms before the asymptotic tail takes over.
N_DIRECT = 25

# B_2, B_4, ..., B_12 divided by (2j)!.
_BERNOULLI_OVER_FACTORIAL = (
    (1 / 6) / math.factorial(2),
    (-1 / 30) / math.factorial(4),
    (1 / 42) / math.factorial(6),
    (-1 / 30) / math.factorial(8),
    (5 / 66) / math.factorial(10),
    (-691 / 2730) / math.factorial(12),
)


def _check_order(k) -> int:
    if isinstance(k, bool) or not isinstance(k, int):
        if isinstance(k, float) and k.is_integer():
            k = int(k)
        else:
            raise DomainError(f"order k must be a positive integer, got {k!r}")
    if k < 1:
        raise DomainError(f"order k must be a positive integer, got {k!r}")
    return k


def gamma_half_integer(k: int) -> float:
    """Return Gamma(1 + k/2) for a positive integer ``k``.

    Built by the recurrence Gamma(x + 1) = x Gamma(x) starting from
    Gamma(1/2) = sqrt(pi) (odd k) or Gamma(1) = 1 (even k).
    """
    k = _check_order(k)
    if k % 2:
        x, value = 0.5, math.sqrt(math.pi)
    else:
        x, value = 1.0, 1.0
    target = 1 + k / 2
    while x < target:
        value *= x
        x += 1.0
    return value


def _check_zeta_args(s: float, q: float) -> None:
    if not s > 1:
        raise DomainError(f"zeta requires s > 1, got s={s!r}")
    if not q > 0:
        raise DomainError(f"Hurwitz zeta requires q > 0, got q={q!r}")


def hurwitz_zeta(s: float, q: float) -> float:
    """Hurwitz zeta ``sum_{n>=0} (n + q)**-s`` for ``s > 1``, ``q > 0``.

    The first ``N_DIRECT`` terms are summed directly; the remainder starting
    at ``a = q + N_DIRECT`` is replaced by its Euler-Maclaurin expansion
    through the B_12 correction.
    """
    _check_zeta_args(s, q)
    a = q + N_DIRECT
    # integral + half endpoint + Bernoulli corrections, smallest first
    tail = 0.0
    rising = s  # s (s+1) ... (s + 2j - 2)
    power = a ** (-s - 1)
    corrections = []
    for j, coef in enumerate(_BERNOULLI_OVER_FACTORIAL, start=1):
        corrections.append(coef * rising * power)
        rising *= (s + 2 * j - 1) * (s + 2 * j)
        power /= a * a
    for term in reversed(corrections):
        tail += term
    tail += 0.5 * a ** -s
    tail += a ** (1 - s) / (s - 1)

    head = 0.0
    for n in range(N_DIRECT - 1, -1, -1):
        head += (n + q) ** -s
    return head + tail


def riemann_zeta(s: float) -> float:
    """Riemann zeta for ``s > 1``, routed through :func:`hurwitz_zeta`."""
    if not s > 1:
        raise DomainError(f"zeta requires s > 1, got s={s!r}")
    return hurwitz_zeta(s, 1.0)


def alternating_hurwitz(s: float, q: float) -> float:
    """Alternating sum ``sum_{n>=0} (-1)**n (n + q)**-s``.

    Evaluated as ``2**(1-s) zeta(s, q/2) - zeta(s, q)``; with ``q = c + 1``
    this is exactly the bracketed Hurwitz pair of the closed form.
    """
    _check_zeta_args(s, q)
    return 2.0 ** (1 - s) * hurwitz_zeta(s, q / 2) - hurwitz_zeta(s, q)
