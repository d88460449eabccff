from fractions import Fraction
from itertools import permutations, product
from math import factorial

import pytest

from cbs.eulerian import (
    InversionSequence,
    Permutation,
    asc,
    cyc,
    eulerian_number,
    exc,
    f_at_y,
    f_bipoly,
    f_bipoly_brute,
    f_egf_closed_series,
    f_egf_series,
    one_over_k_bounds,
    s_eulerian,
)
from cbs.exact import BiPoly, EnumerationLimitError, Poly, pochhammer

P = Permutation.from_string

F3 = BiPoly.from_terms({(0, 3): 1, (1, 2): 3, (2, 1): 1, (1, 1): 1})

# weights of S_3 as tabulated: one-line -> (exc, cyc)
S3_TABLE = {"123": (0, 3), "132": (1, 2), "213": (1, 2), "231": (2, 1), "312": (1, 1), "321": (1, 2)}


@pytest.mark.parametrize("line,weights", S3_TABLE.items())
def test_exc_cyc_table(line, weights):
    assert (exc(P(line)), cyc(P(line))) == weights


def test_identity_statistics():
    ident = Permutation(tuple(range(1, 6)))
    assert exc(ident) == 0
    assert cyc(ident) == 5


def test_permutation_helpers():
    p = P("231")
    assert p.position(1) == 3
    assert p.cycles() == [(1, 2, 3)]
    assert P("213").cycles() == [(1, 2), (3,)]
    with pytest.raises(ValueError):
        Permutation((1, 1, 2))


def test_eulerian_numbers():
    assert eulerian_number(3, 1) == 4
    assert eulerian_number(4, 4) == 0
    for n in range(1, 9):
        assert eulerian_number(n, 0) == 1


def test_eulerian_5_2_by_brute_force():
    count = sum(1 for p in permutations(range(1, 6)) if sum(v > i for i, v in enumerate(p, 1)) == 2)
    assert count == 66 == eulerian_number(5, 2)


def test_f_bipoly_examples():
    assert f_bipoly(0) == BiPoly.one()
    assert f_bipoly(1) == BiPoly.y()
    assert f_bipoly(3) == F3


def test_f_bipoly_brute_examples():
    assert f_bipoly_brute(0) == BiPoly.one()
    assert f_bipoly_brute(2) == BiPoly.from_terms({(0, 2): 1, (1, 1): 1})
    assert f_bipoly_brute(3) == F3


def test_f_bipoly_brute_guard():
    with pytest.raises(EnumerationLimitError, match="<= 4"):
        f_bipoly_brute(5, cap=4)


@pytest.mark.parametrize("n", range(9))
def test_recursion_matches_enumeration(n):
    assert f_bipoly(n) == f_bipoly_brute(n)


@pytest.mark.parametrize("n", range(1, 9))
def test_y_equals_one_gives_eulerian_polynomial(n):
    counts = [0] * n
    for p in permutations(range(1, n + 1)):
        counts[sum(v > i for i, v in enumerate(p, 1))] += 1
    assert f_at_y(n, 1) == Poly(counts)


@pytest.mark.parametrize("n", range(9))
def test_y_minus_one(n):
    assert f_at_y(n + 1, -1) == -(Poly([-1, 1]) ** n)


def test_table2_row_two():
    assert f_at_y(2, Fraction(1, 2)) == Poly([Fraction(1, 4), Fraction(1, 2)])


@pytest.mark.parametrize("n", range(11))
def test_row_sums_are_factorials(n):
    assert f_at_y(n, 1)(Fraction(1)) == factorial(n)


@pytest.mark.parametrize("n", range(11))
def test_x_equals_one_gives_rising_factorial(n):
    assert f_bipoly(n + 1).subs_x(1) == pochhammer(Poly.x(), n + 1)


def test_asc_examples():
    assert asc(InversionSequence((0, 0, 0), (1, 2, 3))) == 0
    assert asc(InversionSequence((0, 1), (1, 3))) == 1
    assert asc(InversionSequence((0, 2), (1, 3))) == 1
    # 1/2 < 2/3 is an ascent, 2/3 > 1/4 is not
    assert asc(InversionSequence((0, 1, 2, 1), (1, 2, 3, 4))) == 2


def test_inversion_sequence_validation():
    with pytest.raises(ValueError):
        InversionSequence((3,), (3,))
    with pytest.raises(ValueError):
        InversionSequence((0,), (0,))


def test_s_eulerian_examples():
    assert s_eulerian((1, 2, 3)) == Poly([1, 4, 1])
    assert s_eulerian((1, 3)) == Poly([1, 2])
    assert s_eulerian(()) == Poly([1])


def test_s_eulerian_guard():
    with pytest.raises(EnumerationLimitError, match="1000"):
        s_eulerian((10, 10, 11), cap=1000)


def _asc_float_free_oracle(bounds):
    counts = [0] * (len(bounds) + 1)
    for e in product(*(range(b) for b in bounds)):
        ratios = [Fraction(0)] + [Fraction(ei, si) for ei, si in zip(e, bounds)]
        counts[sum(ratios[i] < ratios[i + 1] for i in range(len(bounds)))] += 1
    return Poly(counts)


@pytest.mark.parametrize("bounds", [(1, 2, 3, 4), (2, 3, 2), (1, 3, 5, 7), (4, 1, 3)])
def test_asc_cross_multiplication_matches_fraction_order(bounds):
    assert s_eulerian(bounds) == _asc_float_free_oracle(bounds)


@pytest.mark.parametrize("k", [1, 2, 3])
@pytest.mark.parametrize("n", range(7))
def test_one_over_k_eulerian(k, n):
    assert s_eulerian(one_over_k_bounds(k, n)) == f_at_y(n, Fraction(1, k)) * k**n


@pytest.mark.parametrize(
    "x0,y0",
    [("1/3", "1/2"), ("-1/2", "1/3"), ("2/5", "-3/2"), ("3", "2"), ("1/7", "5/4")],
)
def test_exponential_generating_function(x0, y0):
    assert f_egf_series(x0, y0, 10) == f_egf_closed_series(x0, y0, 10)
