"""Lehmer's polynomials p_k, q_k and the central binomial series.

For k >= -1 and |x| < 1,

    sum_{n>=1} (2n)^k (2x)^{2n} / C(2n, n)
        = x / (1-x^2)^{k+3/2} * (x sqrt(1-x^2) p_k(x^2) + arcsin(x) q_k(x^2)),

which at x = 1/2 gives zeta_CB(-k) as an element of Q + Q*pi/sqrt(3).
Exact work happens over Fractions; the float functions at the bottom are
only there to cross-check closed forms against partial sums.
"""
from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .eulerian import f_at_y
from .exact import DomainError, Poly, Series, binomial

__all__ = [
    "ZetaValue",
    "PQPair",
    "pq_polys",
    "zeta_cb_neg",
    "a_seq",
    "p_via_eulerian",
    "q_via_eulerian",
    "q_egf_ode_residual",
    "a_egf_series",
    "a_egf_ode_residual",
    "series_partial_sum",
    "dirichlet_partial_sum",
    "closed_form_rhs",
    "p_egf_closed",
    "p_egf_truncated",
    "q_egf_closed",
    "q_egf_truncated",
    "a_egf_closed",
    "a_egf_truncated",
    "PI_OVER_SQRT3",
]

PI_OVER_SQRT3 = math.pi / math.sqrt(3.0)


@dataclass(frozen=True)
class ZetaValue:
    """Exact number ``rational_part + pi_sqrt3_part * pi/sqrt(3)``."""

    rational_part: Fraction
    pi_sqrt3_part: Fraction

    def __float__(self) -> float:
        return float(self.rational_part) + float(self.pi_sqrt3_part) * PI_OVER_SQRT3

    def __str__(self) -> str:
        return f"{self.rational_part} + {self.pi_sqrt3_part}*pi/sqrt(3)"


@dataclass(frozen=True)
class PQPair:
    index: int
    p: Poly
    q: Poly


_X = Poly.x()
_TWO_X_ONE_MINUS_X = Poly([0, 2, -2])

# _table[k + 1] holds (p_k, q_k); appended under the lock, read freely
_table: list = [(Poly(), Poly([1]))]
_table_lock = threading.Lock()


def pq_polys(k: int) -> PQPair:
    """(p_k, q_k) from the coupled recursion, memoized."""
    if k < -1:
        raise ValueError("k must be >= -1")
    if k + 1 >= len(_table):
        with _table_lock:
            while len(_table) <= k + 1:
                m = len(_table) - 2
                p, q = _table[-1]
                p_next = (_X * (2 * m) + 2) * p + _TWO_X_ONE_MINUS_X * p.derivative() + q
                q_next = (_X * (2 * (m + 1)) + 1) * q + _TWO_X_ONE_MINUS_X * q.derivative()
                _table.append((p_next, q_next))
    p, q = _table[k + 1]
    return PQPair(k, p, q)


def zeta_cb_neg(k: int) -> ZetaValue:
    """zeta_CB(-k) = sum_{n>=1} n^k / C(2n, n), exactly."""
    if k < 0:
        raise ValueError("k must be >= 0")
    pair = pq_polys(k)
    quarter = Fraction(1, 4)
    r = Fraction(1, 3) * Fraction(2, 3) ** k * pair.p(quarter)
    s = Fraction(1, 3) * Fraction(2, 3) ** (k + 1) * pair.q(quarter)
    return ZetaValue(r, s)


def a_seq(n: int) -> Fraction:
    """a_n = (2/3)^n p_n(1/4)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return Fraction(2, 3) ** n * pq_polys(n).p(Fraction(1, 4))


def p_via_eulerian(n: int) -> Poly:
    """2^n sum_k C(n+1, k) F_{n-k}(x, 1/2) F_k(x, 1/2)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    half = Fraction(1, 2)
    F = [f_at_y(m, half) for m in range(n + 1)]
    acc = Poly()
    for k in range(n + 1):
        acc = acc + F[n - k] * F[k] * binomial(n + 1, k)
    return acc * 2**n


def q_via_eulerian(n: int) -> Poly:
    """2^{n+1} F_{n+1}(x, 1/2)."""
    if n < -1:
        raise ValueError("n must be >= -1")
    return f_at_y(n + 1, Fraction(1, 2)) * 2 ** (n + 1)


def q_egf_ode_residual(order: int) -> Series:
    """Apply (2xt - 1) d/dt + 2x(1-x) d/dx + 1 to the truncated Q(x, t).

    Q_N = sum_{n<=N} q_{n-1}(x) t^n / n! as a series over Poly(x). The
    result is known to order N - 1 and should vanish identically.
    """
    Q = Series([pq_polys(n - 1).q * Fraction(1, factorial(n)) for n in range(order + 1)], order)
    lower = order - 1
    dQdt = Q.derivative()
    mult = Series([Poly([-1]), Poly([0, 2])], lower)
    dQdx = Series([c.derivative() * _TWO_X_ONE_MINUS_X for c in Q.coeffs], order).truncate(lower)
    return mult * dQdt + dQdx + Q.truncate(lower)


def a_egf_series(order: int) -> Series:
    """sum_n a_n t^{n+1} / (n+1)! truncated at ``order``."""
    return Series([Fraction(0)] + [a_seq(n) / factorial(n + 1) for n in range(order)], order)


def a_egf_ode_residual(order: int) -> Series:
    """((4 - e^t) d/dt - 2) A(t) - 3 e^t, known to order N - 1."""
    A = a_egf_series(order)
    lower = order - 1
    et = Series.exp_of_linear(1, lower)
    return (4 - et) * A.derivative() - 2 * A.truncate(lower) - 3 * et


# ---------------------------------------------------------------------------
# floating-point cross-checks
# ---------------------------------------------------------------------------


def _check_unit_interval(x: float) -> None:
    if not abs(x) < 1:
        raise DomainError(f"need |x| < 1, got x = {x}")


def series_partial_sum(k: int, x: float, terms: int) -> float:
    """sum_{n=1}^{terms} (2n)^k (2x)^{2n} / C(2n, n) in double precision.

    The ratio (2x)^{2n} / C(2n, n) is updated incrementally so neither
    factor is formed on its own.
    """
    _check_unit_interval(x)
    if terms < 1:
        raise ValueError("terms must be >= 1")
    ratio = 2.0 * x * x  # n = 1: 4x^2 / 2
    total = 0.0
    for n in range(1, terms + 1):
        total += (2.0 * n) ** k * ratio
        ratio *= 2.0 * x * x * (n + 1) / (2 * n + 1)
    return total


def dirichlet_partial_sum(k: int, terms: int) -> float:
    """sum_{n=1}^{terms} n^k / C(2n, n), i.e. zeta_CB(-k) truncated."""
    total = 0.0
    inv_binom = 0.5  # 1 / C(2, 1)
    for n in range(1, terms + 1):
        total += float(n) ** k * inv_binom
        inv_binom *= (n + 1) / (2.0 * (2 * n + 1))
    return total


def _horner(coeffs: list, x: float) -> float:
    acc = 0.0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def closed_form_rhs(k: int, x: float) -> float:
    """x/(1-x^2)^{k+3/2} (x sqrt(1-x^2) p_k(x^2) + arcsin(x) q_k(x^2))."""
    _check_unit_interval(x)
    if k < -1:
        raise ValueError("k must be >= -1")
    pair = pq_polys(k)
    x2 = x * x
    root = math.sqrt(1.0 - x2)
    inner = x * root * _horner(pair.p.to_float(), x2) + math.asin(x) * _horner(pair.q.to_float(), x2)
    return x / (1.0 - x2) ** (k + 1.5) * inner


def p_egf_closed(x: float, t: float) -> float:
    """P(x, t) = sum_n p_{n-1}(x) t^n / n! in closed form."""
    if not 0 < x < 1:
        raise DomainError(f"need 0 < x < 1, got x = {x}")
    growth = math.exp((1.0 - x) * t)
    arg = math.sqrt(x) * growth
    radicand = 1.0 - x * growth * growth
    if not -1.0 <= arg <= 1.0:
        raise DomainError(f"arcsin argument sqrt(x)e^((1-x)t) = {arg} outside [-1, 1]")
    if radicand <= 0:
        raise DomainError(f"radicand 1 - x e^(2(1-x)t) = {radicand} is not positive")
    return growth * (math.asin(arg) - math.asin(math.sqrt(x))) / (math.sqrt(x) * math.sqrt(radicand))


def p_egf_truncated(x: float, t: float, terms: int = 25) -> float:
    return sum(
        _horner(pq_polys(n - 1).p.to_float(), x) * t**n / factorial(n) for n in range(1, terms + 1)
    )


def q_egf_closed(x: float, t: float) -> float:
    """Q(x, t) = ((1-x) / (e^{2t(x-1)} - x))^{1/2}."""
    if not 0 < x < 1:
        raise DomainError(f"need 0 < x < 1, got x = {x}")
    radicand = (1.0 - x) / (math.exp(2.0 * t * (x - 1.0)) - x)
    if radicand <= 0:
        raise DomainError(f"radicand (1-x)/(e^(2t(x-1)) - x) = {radicand} is not positive")
    return math.sqrt(radicand)


def q_egf_truncated(x: float, t: float, terms: int = 25) -> float:
    return sum(
        _horner(pq_polys(n - 1).q.to_float(), x) * t**n / factorial(n) for n in range(0, terms + 1)
    )


def a_egf_closed(t: float) -> float:
    """6 e^{t/2} (arcsin(e^{t/2}/2) - arcsin(1/2)) / (4 - e^t)^{1/2}."""
    et = math.exp(t)
    if et >= 4.0:
        raise DomainError(f"need e^t < 4, got e^t = {et}")
    half = math.exp(t / 2.0)
    return 6.0 * half * (math.asin(half / 2.0) - math.asin(0.5)) / math.sqrt(4.0 - et)


def a_egf_truncated(t: float, terms: int = 25) -> float:
    """sum_{n=0}^{terms} a_n t^{n+1} / (n+1)!."""
    return sum(float(a_seq(n)) * t ** (n + 1) / factorial(n + 1) for n in range(terms + 1))
