"""Exact arithmetic: rationals, dense polynomials, truncated power series.

Rationals are plain :class:`fractions.Fraction` values (aliased ``Rat``).
Everything here is immutable once built.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Iterable, Sequence

__all__ = [
    "Rat",
    "rat",
    "Poly",
    "BiPoly",
    "Series",
    "binomial",
    "stirling2",
    "pochhammer",
    "falling_factorial",
    "double_factorial_odd",
    "EnumerationLimitError",
    "PoleError",
    "DomainError",
]

Rat = Fraction


class EnumerationLimitError(ValueError):
    """A brute-force enumeration would exceed its configured bound."""


class PoleError(ZeroDivisionError):
    """A rational expression was evaluated at one of its poles."""


class DomainError(ValueError):
    """A floating-point closed form was called outside its domain."""


def rat(value) -> Fraction:
    """Coerce ints, Fractions and "p/q" strings to a Fraction.

    Floats are refused; exact values never pass through them.
    """
    if isinstance(value, float):
        raise TypeError("refusing to build an exact rational from a float")
    return Fraction(value)


def _trim(coeffs: Iterable) -> tuple:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


# ---------------------------------------------------------------------------
# univariate polynomials
# ---------------------------------------------------------------------------


class Poly:
    """Dense polynomial in one variable with Fraction coefficients.

    ``coeffs[i]`` is the coefficient of ``x**i``; trailing zeros are trimmed,
    so the zero polynomial has an empty coefficient tuple.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        object.__setattr__(self, "coeffs", _trim(Fraction(c) for c in coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def const(cls, c) -> Poly:
        return cls([c])

    @classmethod
    def x(cls) -> Poly:
        return cls([0, 1])

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, i: int) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Poly([other]).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("Poly", self.coeffs))

    def __repr__(self) -> str:
        return f"Poly({[str(c) for c in self.coeffs]})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if mono and c == 1:
                terms.append(mono)
            elif mono and c == -1:
                terms.append("-" + mono)
            else:
                cs = str(c) if c.denominator == 1 else f"({c})"
                terms.append(cs + ("*" + mono if mono else ""))
        return " + ".join(terms).replace("+ -", "- ")

    def _coerce(self, other) -> Poly:
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)):
            return Poly([other])
        return NotImplemented

    def __add__(self, other) -> Poly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other) -> Poly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> Poly:
        return (-self) + other

    def __mul__(self, other) -> Poly:
        if isinstance(other, (int, Fraction)):
            return Poly(c * other for c in self.coeffs)
        if not isinstance(other, Poly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> Poly:
        if e < 0:
            raise ValueError("negative polynomial power")
        result, base = Poly([1]), self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def derivative(self) -> Poly:
        return Poly(i * c for i, c in enumerate(self.coeffs) if i > 0)

    def __call__(self, a):
        """Horner evaluation; works for Fractions, ints, floats or Polys."""
        acc = 0
        for c in reversed(self.coeffs):
            if isinstance(a, float):
                acc = acc * a + float(c)
            else:
                acc = acc * a + c
        if isinstance(acc, int):
            return Fraction(acc)
        return acc

    def to_float(self):
        """Coefficients as floats, for numeric evaluation."""
        return [float(c) for c in self.coeffs]


# ---------------------------------------------------------------------------
# bivariate polynomials
# ---------------------------------------------------------------------------


class BiPoly:
    """Polynomial in x whose coefficients are polynomials in y.

    ``rows[i]`` is the :class:`Poly` in y multiplying ``x**i``; so the
    coefficient of ``x**i y**j`` is ``rows[i][j]``.
    """

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable = ()):
        object.__setattr__(
            self, "rows", _trim(r if isinstance(r, Poly) else Poly.const(r) for r in rows)
        )

    def __setattr__(self, name, value):
        raise AttributeError("BiPoly is immutable")

    @classmethod
    def one(cls) -> BiPoly:
        return cls([Poly([1])])

    @classmethod
    def x(cls) -> BiPoly:
        return cls([Poly(), Poly([1])])

    @classmethod
    def y(cls) -> BiPoly:
        return cls([Poly.x()])

    @classmethod
    def from_terms(cls, terms: dict) -> BiPoly:
        """Build from ``{(i, j): coefficient}``."""
        if not terms:
            return cls()
        nx = max(i for i, _ in terms) + 1
        ny = max(j for _, j in terms) + 1
        grid = [[Fraction(0)] * ny for _ in range(nx)]
        for (i, j), c in terms.items():
            grid[i][j] += Fraction(c)
        return cls(Poly(r) for r in grid)

    def coefficient(self, i: int, j: int) -> Fraction:
        if 0 <= i < len(self.rows):
            return self.rows[i][j]
        return Fraction(0)

    def terms(self) -> dict:
        """Nonzero coefficients as ``{(i, j): c}``."""
        return {
            (i, j): c
            for i, row in enumerate(self.rows)
            for j, c in enumerate(row.coeffs)
            if c != 0
        }

    def __eq__(self, other) -> bool:
        if isinstance(other, BiPoly):
            return self.rows == other.rows
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("BiPoly", self.rows))

    def __repr__(self) -> str:
        return f"BiPoly({self.terms()!r})"

    def __str__(self) -> str:
        parts = []
        for (i, j), c in sorted(self.terms().items(), key=lambda t: (-t[0][1], t[0][0])):
            mono = "".join(
                s for s in (
                    "" if i == 0 else ("x" if i == 1 else f"x^{i}"),
                    "" if j == 0 else ("y" if j == 1 else f"y^{j}"),
                ) if s
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            else:
                parts.append(f"{c}{mono}" if c.denominator == 1 else f"({c}){mono}")
        return " + ".join(parts) if parts else "0"

    def __add__(self, other) -> BiPoly:
        if isinstance(other, (int, Fraction)):
            other = BiPoly([Poly.const(other)])
        if not isinstance(other, BiPoly):
            return NotImplemented
        n = max(len(self.rows), len(other.rows))
        get = lambda b, i: b.rows[i] if i < len(b.rows) else Poly()
        return BiPoly(get(self, i) + get(other, i) for i in range(n))

    __radd__ = __add__

    def __neg__(self) -> BiPoly:
        return BiPoly(-r for r in self.rows)

    def __sub__(self, other) -> BiPoly:
        return self + (-other)

    def __rsub__(self, other) -> BiPoly:
        return (-self) + other

    def __mul__(self, other) -> BiPoly:
        if isinstance(other, (int, Fraction)):
            return BiPoly(r * other for r in self.rows)
        if not isinstance(other, BiPoly):
            return NotImplemented
        if not self.rows or not other.rows:
            return BiPoly()
        out = [Poly()] * (len(self.rows) + len(other.rows) - 1)
        for i, a in enumerate(self.rows):
            for j, b in enumerate(other.rows):
                out[i + j] = out[i + j] + a * b
        return BiPoly(out)

    __rmul__ = __mul__

    def dx(self) -> BiPoly:
        """Partial derivative in x."""
        return BiPoly(r * i for i, r in enumerate(self.rows) if i > 0)

    def subs_y(self, y0) -> Poly:
        """Substitute ``y = y0``; returns a polynomial in x."""
        y0 = rat(y0)
        return Poly(r(y0) for r in self.rows)

    def subs_x(self, x0) -> Poly:
        """Substitute ``x = x0``; returns a polynomial in y."""
        x0 = rat(x0)
        acc = Poly()
        for r in reversed(self.rows):
            acc = acc * x0 + r
        return acc

    def __call__(self, x0, y0) -> Fraction:
        return self.subs_y(y0)(rat(x0))


# ---------------------------------------------------------------------------
# truncated power series
# ---------------------------------------------------------------------------


class Series:
    """Power series in t known modulo ``t**(order + 1)``.

    Coefficients are Fractions by default but any commutative ring element
    supporting ``+``, ``*`` and integer scaling works (e.g. :class:`Poly`)
    for the ring operations. Reciprocal, log, exp and powers need a field.

    Mixing two different orders raises ``ValueError``; shrink one side
    explicitly with :meth:`truncate`.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Sequence, order: int):
        if order < 0:
            raise ValueError("order must be >= 0")
        c = list(coeffs)[: order + 1]
        zero = c[0] * 0 if c else Fraction(0)
        c += [zero] * (order + 1 - len(c))
        c = [Fraction(v) if isinstance(v, int) else v for v in c]
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", tuple(c))

    def __setattr__(self, name, value):
        raise AttributeError("Series is immutable")

    @classmethod
    def const(cls, c, order: int) -> Series:
        return cls([c], order)

    @classmethod
    def t(cls, order: int) -> Series:
        return cls([0, 1], order)

    @classmethod
    def exp_of_linear(cls, a, order: int) -> Series:
        """``exp(a*t)`` for a scalar ``a``."""
        a = Fraction(a) if isinstance(a, int) else a
        coeffs = []
        power = a * 0 + 1
        for n in range(order + 1):
            coeffs.append(power * Fraction(1, factorial(n)))
            power = power * a
        return cls(coeffs, order)

    @classmethod
    def from_egf(cls, values: Sequence, order: int) -> Series:
        """Series whose coefficient of ``t**n`` is ``values[n] / n!``."""
        return cls([v * Fraction(1, factorial(n)) for n, v in enumerate(values[: order + 1])], order)

    def egf_coefficients(self) -> list:
        """``n! * [t^n]`` for every n."""
        return [c * factorial(n) for n, c in enumerate(self.coeffs)]

    def __getitem__(self, n: int):
        return self.coeffs[n]

    def __len__(self) -> int:
        return len(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, Series):
            return self.order == other.order and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("Series", self.order, self.coeffs))

    def __repr__(self) -> str:
        return f"Series({[str(c) for c in self.coeffs]}, order={self.order})"

    def _check(self, other: Series) -> None:
        if other.order != self.order:
            raise ValueError(f"series order mismatch: {self.order} vs {other.order}")

    def _lift(self, other) -> Series:
        if isinstance(other, Series):
            self._check(other)
            return other
        return Series.const(other, self.order)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def truncate(self, order: int) -> Series:
        if order > self.order:
            raise ValueError("cannot raise the order of a truncated series")
        return Series(self.coeffs[: order + 1], order)

    def __add__(self, other) -> Series:
        other = self._lift(other)
        return Series([a + b for a, b in zip(self.coeffs, other.coeffs)], self.order)

    __radd__ = __add__

    def __neg__(self) -> Series:
        return Series([-a for a in self.coeffs], self.order)

    def __sub__(self, other) -> Series:
        return self + (-self._lift(other))

    def __rsub__(self, other) -> Series:
        return (-self) + other

    def __mul__(self, other) -> Series:
        if not isinstance(other, Series):
            return Series([a * other for a in self.coeffs], self.order)
        self._check(other)
        N = self.order
        a, b = self.coeffs, other.coeffs
        out = []
        for n in range(N + 1):
            acc = a[0] * b[n]
            for k in range(1, n + 1):
                if a[k] != 0:
                    acc = acc + a[k] * b[n - k]
            out.append(acc)
        return Series(out, N)

    __rmul__ = __mul__

    def __truediv__(self, other) -> Series:
        if isinstance(other, Series):
            return self * other.reciprocal()
        return self * (1 / Fraction(other))

    def __pow__(self, e: int) -> Series:
        if not isinstance(e, int):
            return self.power(e)
        if e < 0:
            return self.reciprocal() ** (-e)
        result, base = Series.const(1, self.order), self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def shift(self, k: int) -> Series:
        """Multiply by ``t**k`` (k >= 0), dropping what falls off the end."""
        zero = self.coeffs[0] * 0
        return Series([zero] * k + list(self.coeffs), self.order)

    def reciprocal(self) -> Series:
        a = self.coeffs
        if a[0] == 0:
            raise ZeroDivisionError("reciprocal of a series with zero constant term")
        inv0 = 1 / a[0]
        b = [inv0]
        for n in range(1, self.order + 1):
            acc = sum((a[k] * b[n - k] for k in range(1, n + 1)), a[0] * 0)
            b.append(-acc * inv0)
        return Series(b, self.order)

    def derivative(self) -> Series:
        """Formal d/dt; the result is known only to ``order - 1``."""
        if self.order == 0:
            raise ValueError("derivative of an order-0 series carries no information")
        return Series([n * self.coeffs[n] for n in range(1, self.order + 1)], self.order - 1)

    def integral(self) -> Series:
        """Antiderivative with zero constant term, known to ``order + 1``."""
        return Series(
            [Fraction(0)] + [c / (n + 1) for n, c in enumerate(self.coeffs)], self.order + 1
        )

    def compose(self, inner: Series) -> Series:
        """``self(inner(t))`` for ``inner`` with zero constant term."""
        self._check(inner)
        if inner.coeffs[0] != 0:
            raise ValueError("composition needs an inner series with zero constant term")
        acc = Series.const(self.coeffs[-1], self.order)
        for c in reversed(self.coeffs[:-1]):
            acc = acc * inner + c
        return acc

    def log(self) -> Series:
        if self.coeffs[0] != 1:
            raise ValueError("log needs constant term 1")
        if self.order == 0:
            return Series([0], 0)
        return (self.derivative() * self.truncate(self.order - 1).reciprocal()).integral()

    def exp(self) -> Series:
        a = self.coeffs
        if a[0] != 0:
            raise ValueError("exp needs constant term 0")
        # b' = a' b  =>  n b_n = sum_{k=1}^n k a_k b_{n-k}
        b = [Fraction(1)]
        for n in range(1, self.order + 1):
            b.append(sum((k * a[k] * b[n - k] for k in range(1, n + 1)), Fraction(0)) / n)
        return Series(b, self.order)

    def power(self, e) -> Series:
        """``self ** e`` for rational e; constant term must be 1."""
        return (self.log() * Fraction(e)).exp()


# ---------------------------------------------------------------------------
# combinatorial numbers
# ---------------------------------------------------------------------------


def binomial(n: int, k: int) -> int:
    if n < 0:
        raise ValueError("n must be >= 0")
    if k < 0 or k > n:
        return 0
    return comb(n, k)


@lru_cache(maxsize=None)
def stirling2(n: int, k: int) -> int:
    """Stirling number of the second kind S(n, k)."""
    if n < 0 or k < 0:
        raise ValueError("n and k must be >= 0")
    if n == k:
        return 1
    if n == 0 or k == 0 or k > n:
        return 0
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


def pochhammer(x, j: int):
    """Rising factorial (x)_j = x(x+1)...(x+j-1)."""
    if j < 0:
        raise ValueError("j must be >= 0")
    acc = x * 0 + 1
    for i in range(j):
        acc = acc * (x + i)
    if isinstance(acc, int):
        return Fraction(acc)
    return acc


def falling_factorial(x, j: int):
    """x(x-1)...(x-j+1)."""
    acc = x * 0 + 1
    for i in range(j):
        acc = acc * (x - i)
    return acc


def double_factorial_odd(n: int) -> int:
    """(2n+1)!! = 1*3*5*...*(2n+1)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    acc = 1
    for i in range(1, 2 * n + 2, 2):
        acc *= i
    return acc
