"""Poly-Bernoulli numbers, antidiagonal sums b_n, and the f_j machinery.

B_n^(k) is read off the exponential generating function
Li_k(1 - e^{-t}) / (1 - e^{-t}) = sum_{m>=1} (1 - e^{-t})^{m-1} / m^k.
For k <= 0 a Stirling-number closed form gives an independent route.
"""
from __future__ import annotations

import random
import threading
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .eulerian import all_permutations, DEFAULT_PERM_CAP
from .exact import PoleError, Series, binomial, pochhammer, stirling2

__all__ = [
    "PolyBernoulliTable",
    "TABLE",
    "poly_bernoulli_egf",
    "poly_bernoulli_stirling",
    "poly_bernoulli",
    "b_sum",
    "b_rec",
    "b_rec_sequence",
    "antidiagonal_recursion",
    "b_explicit",
    "alternating_sum",
    "bn_ogf_series",
    "f_j",
    "lemma_3f2_residual",
    "key_equality_sides",
    "key_equality_check",
    "is_ascending_to_max",
    "ascending_to_max_count",
    "random_lemma_points",
]


def poly_bernoulli_egf(n: int, k: int) -> Fraction:
    """B_n^(k) for any integer k, from the truncated generating function.

    The division by 1 - e^{-t} is absorbed into the power of the sum, so
    no series is ever divided by one with zero constant term.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    one_minus = 1 - Series.exp_of_linear(-1, n)  # 1 - e^{-t}
    total = Series.const(0, n)
    power = Series.const(1, n)
    # (1 - e^{-t})^{m-1} starts at t^{m-1}, so m <= n + 1 suffices
    for m in range(1, n + 2):
        weight = Fraction(1, m**k) if k >= 0 else Fraction(m ** (-k))
        total = total + power * weight
        power = power * one_minus
    return total[n] * factorial(n)


def poly_bernoulli_stirling(n: int, k: int) -> Fraction:
    """B_n^(-k) = sum_j (j!)^2 S(n+1, j+1) S(k+1, j+1) for n, k >= 0."""
    if n < 0 or k < 0:
        raise ValueError("n and k must be >= 0")
    return Fraction(
        sum(
            factorial(j) ** 2 * stirling2(n + 1, j + 1) * stirling2(k + 1, j + 1)
            for j in range(min(n, k) + 1)
        )
    )


class PolyBernoulliTable:
    """Memo of B_n^(k). Negative k uses the Stirling form, k > 0 the EGF."""

    def __init__(self):
        self._entries: dict = {}
        self._lock = threading.Lock()

    def __getitem__(self, key) -> Fraction:
        n, k = key
        try:
            return self._entries[key]
        except KeyError:
            pass
        value = poly_bernoulli_stirling(n, -k) if k <= 0 else poly_bernoulli_egf(n, k)
        with self._lock:
            return self._entries.setdefault((n, k), value)

    def __len__(self) -> int:
        return len(self._entries)


TABLE = PolyBernoulliTable()


def poly_bernoulli(n: int, k: int) -> Fraction:
    return TABLE[n, k]


def b_sum(n: int) -> Fraction:
    """Antidiagonal sum b_n = sum_{k=0}^n B_{n-k}^(-k)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return sum((TABLE[n - k, -k] for k in range(n + 1)), Fraction(0))


def antidiagonal_recursion(values: list) -> Fraction:
    """Next term c_{n+1} of 3c_{n+1} = 2c_n + sum_k C(n+1, k) c_k + 3."""
    n = len(values) - 1
    s = sum(binomial(n + 1, k) * values[k] for k in range(n + 1))
    return (2 * values[n] + s + 3) / Fraction(3)


@lru_cache(maxsize=None)
def b_rec_sequence(n: int) -> tuple:
    """(b_0, ..., b_n) from the recursion alone."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return (Fraction(1),)
    prev = list(b_rec_sequence(n - 1))
    return tuple(prev + [antidiagonal_recursion(prev)])


def b_rec(n: int) -> Fraction:
    return b_rec_sequence(n)[n]


def _inner_sum(j: int) -> Fraction:
    return sum(
        (Fraction(3**i, (2 * i + 1) * binomial(2 * i, i)) for i in range(j)), Fraction(0)
    )


def b_explicit(n: int) -> Fraction:
    """Closed double sum for b_n in Stirling numbers and central binomials."""
    if n < 0:
        raise ValueError("n must be >= 0")
    total = Fraction(0)
    for j in range(1, n + 2):
        total += (
            (-1) ** j
            * factorial(j)
            * stirling2(n + 1, j)
            * Fraction(binomial(2 * j, j), 3 ** (j - 1))
            * _inner_sum(j)
        )
    return Fraction((-1) ** (n + 1), 2) * total


def alternating_sum(n: int) -> Fraction:
    """sum_{k=0}^n (-1)^k B_{n-k}^(-k); vanishes for n >= 1."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return sum(((-1) ** k * TABLE[n - k, -k] for k in range(n + 1)), Fraction(0))


def _inv_square_product(lo: int, hi: int, order: int) -> Series:
    """1 / prod_{i=lo}^{hi} (1 - i x)^2 as a truncated series."""
    prod_ = Series.const(1, order)
    for i in range(lo, hi + 1):
        factor = Series([1, -i], order)
        prod_ = prod_ * factor * factor
    return prod_.reciprocal()


def _f_sum_series(shift: int, order: int) -> Series:
    """sum_j f_j(s - 1/x, s - 1/x) as a series in x, for s = shift.

    (s - 1/x)_j = x^{-j} prod_{i=s}^{s+j-1} (i x - 1), and the squared
    x^{-j} and sign factors cancel against x^{2j} and each other.
    """
    total = Series.const(0, order)
    for j in range(order // 2 + 1):
        term = _inv_square_product(shift, shift + j - 1, order).shift(2 * j)
        total = total + term * (factorial(j) ** 2)
    return total


def bn_ogf_series(order: int) -> Series:
    """sum_j (j!)^2 x^{2j} / ((1-x)^2 (1-2x)^2 ... (1-(j+1)x)^2), truncated."""
    if order < 0:
        raise ValueError("order must be >= 0")
    total = Series.const(0, order)
    for j in range(order // 2 + 1):
        term = _inv_square_product(1, j + 1, order).shift(2 * j)
        total = total + term * (factorial(j) ** 2)
    return total


def f_j(x, y, j: int) -> Fraction:
    """(j!)^2 / ((x)_j (y)_j), with f_{-1} = 0."""
    if j == -1:
        return Fraction(0)
    if j < -1:
        raise ValueError("j must be >= -1")
    px, py = pochhammer(Fraction(x), j), pochhammer(Fraction(y), j)
    if px == 0 or py == 0:
        raise PoleError(f"f_{j}({x}, {y}) has a vanishing Pochhammer factor")
    return Fraction(factorial(j) ** 2) / (px * py)


def lemma_3f2_residual(x, y, j: int) -> Fraction:
    """Left side minus right side of the four-term f_j relation."""
    x, y = Fraction(x), Fraction(y)
    lhs = (
        (x - 1) * (x - 2) * (f_j(x - 2, y, j) - f_j(x - 2, y, j - 1))
        + (x - 1) * (2 * x - 5) * f_j(x - 1, y, j - 1)
        - (x - 1) * (x - y - 1) * f_j(x - 1, y, j)
        - (x - 2) ** 2 * f_j(x, y, j - 1)
    )
    rhs = (x - 1) * (y - 1) if j == 0 else Fraction(0)
    return lhs - rhs


def random_lemma_points(j: int, count: int, rng: random.Random, max_num: int = 12, max_den: int = 7):
    """Pole-free rational (x, y) pairs with small numerators and denominators."""
    points = []
    while len(points) < count:
        x = Fraction(rng.randint(-max_num, max_num), rng.randint(1, max_den))
        y = Fraction(rng.randint(-max_num, max_num), rng.randint(1, max_den))
        try:
            lemma_3f2_residual(x, y, j)
        except PoleError:
            continue
        points.append((x, y))
    return points


def key_equality_sides(order: int) -> tuple:
    """Both sides of the f_j key equality as series in x.

    LHS = 2(2-x)/(1-x)^2 * sum_j f_j(2-1/x, 2-1/x)
    RHS = 3/(1-x) + (1-x)/(1-2x)^2 * sum_j f_j(3-1/x, 3-1/x)
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    one_minus_x = Series([1, -1], order)
    one_minus_2x = Series([1, -2], order)
    lhs = Series([4, -2], order) * (one_minus_x * one_minus_x).reciprocal() * _f_sum_series(2, order)
    rhs = one_minus_x.reciprocal() * 3 + one_minus_x * (
        one_minus_2x * one_minus_2x
    ).reciprocal() * _f_sum_series(3, order)
    return lhs, rhs


def key_equality_check(order: int) -> bool:
    lhs, rhs = key_equality_sides(order)
    return lhs == rhs


def is_ascending_to_max(line) -> bool:
    """Arrows i -> i+1 point forward left of the maximum, backward right of it."""
    m = len(line)
    pos = [0] * (m + 1)
    for idx, v in enumerate(line, 1):
        pos[v] = idx
    top = pos[m]
    for i in range(1, m - 1):
        a, b = pos[i], pos[i + 1]
        if a < top and b < top and not a < b:
            return False
        if a > top and b > top and not a > b:
            return False
    return True


def ascending_to_max_count(m: int, cap: int = DEFAULT_PERM_CAP) -> int:
    """Number of ascending-to-max permutations in S_m, by enumeration."""
    if m < 1:
        raise ValueError("m must be >= 1")
    return sum(1 for p in all_permutations(m, cap) if is_ascending_to_max(p.one_line))
