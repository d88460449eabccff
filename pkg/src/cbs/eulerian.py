"""Permutation statistics and Eulerian-type polynomials.

F_n(x, y) is the generating polynomial of (exc, cyc) over the symmetric
group S_n. It is computed two ways: by the first-order recursion

    F_{n+1} = (x(1-x) d/dx + n x + y) F_n,   F_0 = 1,

and by enumerating S_n directly (the oracle).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations, product
from math import prod
from typing import Iterator, Sequence

from .exact import BiPoly, EnumerationLimitError, Poly, Series, rat

__all__ = [
    "Permutation",
    "InversionSequence",
    "exc",
    "cyc",
    "all_permutations",
    "eulerian_number",
    "eulerian_poly",
    "f_bipoly",
    "f_bipoly_brute",
    "f_at_y",
    "asc",
    "s_eulerian",
    "one_over_k_bounds",
    "f_egf_series",
    "f_egf_closed_series",
    "DEFAULT_PERM_CAP",
    "DEFAULT_SEQ_CAP",
]

DEFAULT_PERM_CAP = 9
DEFAULT_SEQ_CAP = 10**6


@dataclass(frozen=True)
class Permutation:
    """A permutation of {1..n} in one-line notation."""

    one_line: tuple

    def __post_init__(self):
        line = tuple(self.one_line)
        if sorted(line) != list(range(1, len(line) + 1)):
            raise ValueError(f"not a permutation of 1..{len(line)}: {line}")
        object.__setattr__(self, "one_line", line)

    @classmethod
    def from_string(cls, s: str) -> Permutation:
        """Parse compact notation such as ``"2314"`` (single-digit values only)."""
        return cls(tuple(int(ch) for ch in s))

    def __len__(self) -> int:
        return len(self.one_line)

    def __call__(self, i: int) -> int:
        return self.one_line[i - 1]

    def position(self, v: int) -> int:
        """1-based position of value v, i.e. the inverse permutation at v."""
        return self._inverse[v - 1]

    @property
    def _inverse(self) -> tuple:
        inv = [0] * len(self.one_line)
        for i, v in enumerate(self.one_line, 1):
            inv[v - 1] = i
        return tuple(inv)

    def cycles(self) -> list:
        """Disjoint cycles, each starting at its smallest element."""
        seen = set()
        out = []
        for start in range(1, len(self.one_line) + 1):
            if start in seen:
                continue
            cycle = []
            i = start
            while i not in seen:
                seen.add(i)
                cycle.append(i)
                i = self.one_line[i - 1]
            out.append(tuple(cycle))
        return out


@dataclass(frozen=True)
class InversionSequence:
    """An s-inversion sequence: 0 <= e_i < s_i for each i."""

    entries: tuple
    bounds: tuple

    def __post_init__(self):
        e, s = tuple(self.entries), tuple(self.bounds)
        if len(e) != len(s):
            raise ValueError("entries and bounds differ in length")
        for i, (ei, si) in enumerate(zip(e, s), 1):
            if si < 1:
                raise ValueError(f"bound s_{i} = {si} is not positive")
            if not 0 <= ei < si:
                raise ValueError(f"entry e_{i} = {ei} outside [0, {si})")
        object.__setattr__(self, "entries", e)
        object.__setattr__(self, "bounds", s)


def exc(p: Permutation) -> int:
    """Number of excedances, positions i with p_i > i."""
    return sum(1 for i, v in enumerate(p.one_line, 1) if v > i)


def cyc(p: Permutation) -> int:
    """Number of cycles in the disjoint cycle decomposition."""
    line = p.one_line
    seen = [False] * (len(line) + 1)
    count = 0
    for start in range(1, len(line) + 1):
        if seen[start]:
            continue
        count += 1
        i = start
        while not seen[i]:
            seen[i] = True
            i = line[i - 1]
    return count


def _check_perm_cap(n: int, cap: int) -> None:
    if n > cap:
        raise EnumerationLimitError(
            f"enumerating S_{n} exceeds the permutation cap n <= {cap}"
        )


def all_permutations(n: int, cap: int = DEFAULT_PERM_CAP) -> Iterator[Permutation]:
    """All of S_n in lexicographic order."""
    _check_perm_cap(n, cap)
    for line in permutations(range(1, n + 1)):
        yield Permutation(line)


def eulerian_number(n: int, k: int) -> int:
    """A(n, k): permutations of [n] with exactly k excedances."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if k < 0 or k >= n:
        return 0
    return int(f_at_y(n, 1)[k])


def eulerian_poly(n: int) -> Poly:
    """A_n(x) = sum over S_n of x^exc."""
    return f_at_y(n, 1)


@lru_cache(maxsize=None)
def f_bipoly(n: int) -> BiPoly:
    """F_n(x, y) via the recursion F_{m+1} = (x(1-x)d/dx + m x + y) F_m."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return BiPoly.one()
    prev = f_bipoly(n - 1)
    m = n - 1
    x, y = BiPoly.x(), BiPoly.y()
    return x * (1 - x) * prev.dx() + (x * m + y) * prev


def f_bipoly_brute(n: int, cap: int = DEFAULT_PERM_CAP) -> BiPoly:
    """F_n(x, y) by summing x^exc(p) y^cyc(p) over all of S_n."""
    if n < 0:
        raise ValueError("n must be >= 0")
    _check_perm_cap(n, cap)
    if n == 0:
        return BiPoly.one()
    counts: dict = {}
    for p in all_permutations(n, cap):
        key = (exc(p), cyc(p))
        counts[key] = counts.get(key, 0) + 1
    return BiPoly.from_terms(counts)


def f_at_y(n: int, y0) -> Poly:
    """F_n(x, y0) as a polynomial in x."""
    return f_bipoly(n).subs_y(rat(y0))


def asc(e: InversionSequence) -> int:
    """Ascents of e_i/s_i with the sentinel e_0/s_0 = 0.

    Fractions are compared by cross-multiplication.
    """
    count = 0
    prev_e, prev_s = 0, 1
    for ei, si in zip(e.entries, e.bounds):
        if prev_e * si < ei * prev_s:
            count += 1
        prev_e, prev_s = ei, si
    return count


def s_eulerian(bounds: Sequence[int], cap: int = DEFAULT_SEQ_CAP) -> Poly:
    """E_n^(s)(x) by enumerating every s-inversion sequence."""
    bounds = tuple(int(b) for b in bounds)
    if any(b < 1 for b in bounds):
        raise ValueError("bounds must be positive integers")
    size = prod(bounds)
    if size > cap:
        raise EnumerationLimitError(
            f"{size} inversion sequences exceeds the enumeration cap {cap}"
        )
    counts = [0] * (len(bounds) + 1)
    for entries in product(*(range(b) for b in bounds)):
        counts[asc(InversionSequence(entries, bounds))] += 1
    return Poly(counts)


def one_over_k_bounds(k: int, n: int) -> tuple:
    """The sequence s = (1, k+1, 2k+1, ...) cut at length n."""
    return tuple((i - 1) * k + 1 for i in range(1, n + 1))


def f_egf_series(x0, y0, order: int) -> Series:
    """sum_n F_n(x0, y0) t^n / n! truncated at ``order``."""
    x0, y0 = rat(x0), rat(y0)
    return Series.from_egf([f_bipoly(n)(x0, y0) for n in range(order + 1)], order)


def f_egf_closed_series(x0, y0, order: int) -> Series:
    """((1-x)/(e^{t(x-1)} - x))^y expanded at x = x0, y = y0.

    The base has constant term 1, so the rational power is exp(y log base).
    """
    x0, y0 = rat(x0), rat(y0)
    if x0 == 1:
        raise ValueError("x0 = 1 makes the base 0/0")
    denom = Series.exp_of_linear(x0 - 1, order) - x0
    base = denom.reciprocal() * (1 - x0)
    return base.power(y0)
