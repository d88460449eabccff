"""Named verification suites, one per identity family.

Each suite returns a list of :class:`CheckResult`. A family stops at its
first counterexample; the remaining families of the suite still run.
"""
from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Callable, Iterable

from . import eulerian as eu
from . import lehmer as lh
from . import polybernoulli as pb
from .exact import BiPoly, Poly, double_factorial_odd, pochhammer

__all__ = [
    "CheckResult",
    "SUITES",
    "DEFAULT_SEED",
    "DEFAULT_TOLERANCE",
    "run_suite",
    "serialize",
    "parse",
    "UnknownSuiteError",
]

DEFAULT_SEED = 20040101
DEFAULT_TOLERANCE = 1e-10

# brute-force oracles stay desk-sized no matter what max_n says
_ATM_MAX = 7
_FBRUTE_MAX = 8
_SEUL_MAX = 6
_ROUTES_MAX = 10
_ODE_ORDER = 12
_EGF_ORDER = 10
_LEMMA_POINTS = 20
_LEMMA_JMAX = 6

LEHMER_POINTS = (0.1, 0.25, 0.3, 0.4)
P_EGF_POINTS = ((0.2, 0.0), (0.2, 0.1), (0.04, 0.3))
Q_EGF_POINTS = ((0.2, 0.0), (0.2, 0.1), (0.5, 0.05))
A_EGF_POINTS = (0.0, 0.2, 0.4)
EGF_SAMPLE_XY = ((Fraction(1, 3), Fraction(1, 2)), (Fraction(-1, 2), Fraction(1, 3)), (Fraction(2, 5), Fraction(-3, 2)))


class UnknownSuiteError(KeyError):
    pass


@dataclass
class CheckResult:
    suite_name: str
    parameters: dict = field(default_factory=dict)
    passed: bool = True
    detail: str = "ok"
    elapsed_ms: int = 0

    def to_json(self) -> str:
        return json.dumps(
            {
                "suite": self.suite_name,
                "params": self.parameters,
                "passed": self.passed,
                "detail": self.detail,
                "elapsed_ms": self.elapsed_ms,
            },
            sort_keys=True,
        )

    @classmethod
    def from_json(cls, line: str) -> CheckResult:
        d = json.loads(line)
        return cls(d["suite"], dict(d["params"]), bool(d["passed"]), d["detail"], int(d["elapsed_ms"]))


def serialize(results: Iterable[CheckResult]) -> str:
    return "".join(r.to_json() + "\n" for r in results)


def parse(text: str) -> list:
    return [CheckResult.from_json(line) for line in text.splitlines() if line.strip()]


def _exact(suite: str, family: str, params: dict, cases: Callable[[], Iterable]) -> CheckResult:
    """cases() yields (label, computed, expected); equality is exact."""
    start = time.perf_counter()
    detail, passed = "ok", True
    for label, got, want in cases():
        if got != want:
            passed = False
            detail = f"{family} fails at {label}: computed {got}, expected {want}"
            break
    ms = int((time.perf_counter() - start) * 1000)
    return CheckResult(suite, {"family": family, **{k: str(v) for k, v in params.items()}}, passed, detail, ms)


def _numeric(suite: str, family: str, params: dict, tol: float, cases: Callable[[], Iterable]) -> CheckResult:
    """cases() yields (label, closed_form, series); |diff| must be < tol."""
    start = time.perf_counter()
    detail, passed = "ok", True
    worst = 0.0
    for label, a, b in cases():
        diff = abs(a - b)
        worst = max(worst, diff)
        if not diff < tol:
            passed = False
            detail = f"{family} fails at {label}: closed form {a!r}, series {b!r}, |diff| {diff:.3e} >= {tol:g}"
            break
    if passed:
        detail = f"ok (max |diff| {worst:.3e})"
    ms = int((time.perf_counter() - start) * 1000)
    params = {"family": family, "tolerance": repr(tol), **{k: str(v) for k, v in params.items()}}
    return CheckResult(suite, params, passed, detail, ms)


# ---------------------------------------------------------------------------
# suites
# ---------------------------------------------------------------------------


def _suite_table(max_n, seed, tol):
    s = "tableQ"
    P = lambda *c: Poly(c)
    pq_expected = {
        -1: (P(), P(1)),
        0: (P(1), P(1)),
        1: (P(3), P(1, 2)),
        2: (P(7, 8), P(1, 10, 4)),
    }
    q_rows = {
        -1: P(1),
        0: P(1),
        1: P(1, 2),
        2: P(1, 10, 4),
        3: P(1, 36, 60, 8),
        4: P(1, 116, 516, 296, 16),
    }
    f_rows = {
        0: P(1),
        1: P(1),
        2: P(1, 2),
        3: P(1, 10, 4),
        4: P(1, 36, 60, 8),
        5: P(1, 116, 516, 296, 16),
    }
    F3 = BiPoly.from_terms({(0, 3): 1, (1, 2): 3, (2, 1): 1, (1, 1): 1})
    return [
        _exact(s, "pq_initial", {}, lambda: (
            (f"k={k}", (lh.pq_polys(k).p, lh.pq_polys(k).q), v) for k, v in pq_expected.items())),
        _exact(s, "q_rows", {}, lambda: (
            (f"n={n}", lh.pq_polys(n).q, v) for n, v in q_rows.items())),
        _exact(s, "scaled_F_rows", {}, lambda: (
            (f"n={n}", eu.f_at_y(n, Fraction(1, 2)) * 2**n, v) for n, v in f_rows.items())),
        _exact(s, "F3_example", {}, lambda: [("n=3", eu.f_bipoly(3), F3), ("n=3 brute", eu.f_bipoly_brute(3), F3)]),
        _exact(s, "eulerian_A31", {}, lambda: [("A(3,1)", eu.eulerian_number(3, 1), 4)]),
        _exact(s, "zeta_display", {}, lambda: (
            (f"k={k}", lh.zeta_cb_neg(k), lh.ZetaValue(Fraction(r), Fraction(q)))
            for k, r, q in ((0, "1/3", "2/9"), (1, "2/3", "2/9"), (2, "4/3", "10/27")))),
    ]


def _suite_qF(max_n, seed, tol):
    return [_exact("qF", "q_eq_2^(n+1)F(x,1/2)", {"max_n": max_n}, lambda: (
        (f"n={n}", lh.pq_polys(n).q, lh.q_via_eulerian(n)) for n in range(-1, max_n + 1)))]


def _suite_pF(max_n, seed, tol):
    return [_exact("pF", "p_eq_eulerian_convolution", {"max_n": max_n}, lambda: (
        (f"n={n}", lh.pq_polys(n).p, lh.p_via_eulerian(n)) for n in range(max_n + 1)))]


def _suite_stephan(max_n, seed, tol):
    return [_exact("stephan", "a_n_eq_b_n", {"max_n": max_n}, lambda: (
        (f"n={n}", lh.a_seq(n), pb.b_sum(n)) for n in range(max_n + 1)))]


def _suite_odeQ(max_n, seed, tol):
    def cases():
        res = lh.q_egf_ode_residual(_ODE_ORDER)
        for n, c in enumerate(res.coeffs):
            yield f"t^{n}", c, Poly()
    return [_exact("odeQ", "Q_ode_residual", {"order": _ODE_ORDER}, cases)]


def _suite_odeA(max_n, seed, tol):
    def cases():
        res = lh.a_egf_ode_residual(_ODE_ORDER)
        for n, c in enumerate(res.coeffs):
            yield f"t^{n}", c, 0
    return [_exact("odeA", "a_egf_ode_residual", {"order": _ODE_ORDER}, cases)]


def _suite_altsum(max_n, seed, tol):
    return [_exact("altsum", "alternating_antidiagonal", {"max_n": max_n}, lambda: (
        (f"n={n}", pb.alternating_sum(n), 0) for n in range(1, max_n + 1)))]


def _suite_routes(max_n, seed, tol):
    top = min(max_n, _ROUTES_MAX)
    return [
        _exact("routes", "egf_eq_stirling", {"max_n": top}, lambda: (
            (f"n={n},k={k}", pb.poly_bernoulli_egf(n, -k), pb.poly_bernoulli_stirling(n, k))
            for n in range(top + 1) for k in range(top + 1))),
        _exact("routes", "boundary_values", {"max_n": top}, lambda: (
            item for n in range(top + 1) for item in (
                (f"B_0^({-n})", pb.poly_bernoulli_egf(0, -n), 1),
                (f"B_{n}^(0)", pb.poly_bernoulli_egf(n, 0), 1),
                (f"B_{n}^(-1)", pb.poly_bernoulli_egf(n, -1), 2**n),
            ))),
    ]


def _suite_recursion(max_n, seed, tol):
    def a_cases():
        a = [lh.a_seq(0)]
        yield "a_0", a[0], 1
        for n in range(max_n):
            nxt = lh.a_seq(n + 1)
            yield f"a_{n + 1}", nxt, pb.antidiagonal_recursion(a)
            a.append(nxt)
    return [
        _exact("recursion", "b_rec_eq_b_sum", {"max_n": max_n}, lambda: (
            (f"n={n}", pb.b_rec(n), pb.b_sum(n)) for n in range(max_n + 1))),
        _exact("recursion", "a_satisfies_recursion", {"max_n": max_n}, a_cases),
        _exact("recursion", "a_eq_b_rec", {"max_n": max_n}, lambda: (
            (f"n={n}", lh.a_seq(n), pb.b_rec(n)) for n in range(max_n + 1))),
    ]


def _suite_explicit(max_n, seed, tol):
    def integral():
        for n in range(max_n + 1):
            b = pb.b_sum(n)
            yield f"n={n}", (b.denominator == 1 and b > 0), True
    return [
        _exact("explicit", "b_explicit_eq_b_sum", {"max_n": max_n}, lambda: (
            (f"n={n}", pb.b_explicit(n), pb.b_sum(n)) for n in range(max_n + 1))),
        _exact("explicit", "b_positive_integer", {"max_n": max_n}, integral),
    ]


def _suite_ogf(max_n, seed, tol):
    def cases():
        series = pb.bn_ogf_series(max_n)
        for n in range(max_n + 1):
            yield f"x^{n}", series[n], pb.b_rec(n)
    return [_exact("ogf", "ogf_coefficients", {"order": max_n}, cases)]


def _suite_keyeq(max_n, seed, tol):
    def cases():
        lhs, rhs = pb.key_equality_sides(max_n)
        for n in range(max_n + 1):
            yield f"x^{n}", lhs[n], rhs[n]
    return [_exact("keyeq", "key_equality", {"order": max_n}, cases)]


def _suite_lemma(max_n, seed, tol):
    rng = random.Random(seed)
    out = []
    for j in range(_LEMMA_JMAX + 1):
        points = pb.random_lemma_points(j, _LEMMA_POINTS, rng)
        out.append(_exact("lemma", f"lemma_residual_j={j}", {"seed": seed, "points": _LEMMA_POINTS}, lambda pts=points, j=j: (
            (f"j={j},x={x},y={y}", pb.lemma_3f2_residual(x, y, j), 0) for x, y in pts)))
    return out


def _suite_atm(max_n, seed, tol):
    top = min(max_n, _ATM_MAX)
    return [_exact("atm", "ascending_to_max_count", {"max_n": top}, lambda: (
        (f"S_{n + 1}", pb.ascending_to_max_count(n + 1), pb.b_sum(n)) for n in range(top + 1)))]


def _suite_seulerian(max_n, seed, tol):
    top = min(max_n, _SEUL_MAX)
    return [_exact("sEulerian", "s_eulerian_eq_k^nF(x,1/k)", {"max_n": top}, lambda: (
        (f"k={k},n={n}", eu.s_eulerian(eu.one_over_k_bounds(k, n)), eu.f_at_y(n, Fraction(1, k)) * k**n)
        for k in (1, 2, 3) for n in range(top + 1)))]


def _suite_special(max_n, seed, tol):
    s = "special_values"
    fb = min(max_n, _FBRUTE_MAX)
    small = min(max_n, 10)
    y = Poly.x()

    def egf_cases():
        for x0, y0 in EGF_SAMPLE_XY:
            yield f"x={x0},y={y0}", eu.f_egf_series(x0, y0, _EGF_ORDER), eu.f_egf_closed_series(x0, y0, _EGF_ORDER)

    return [
        _exact(s, "F_brute_eq_recursion", {"max_n": fb}, lambda: (
            (f"n={n}", eu.f_bipoly(n), eu.f_bipoly_brute(n)) for n in range(fb + 1))),
        _exact(s, "row_sum_n!", {"max_n": small}, lambda: (
            (f"n={n}", eu.f_at_y(n, 1)(Fraction(1)), factorial(n)) for n in range(small + 1))),
        _exact(s, "F(x,-1)", {"max_n": max_n}, lambda: (
            (f"n={n}", eu.f_at_y(n + 1, -1), -(Poly([-1, 1]) ** n)) for n in range(max_n + 1))),
        _exact(s, "F(1,y)_pochhammer", {"max_n": small}, lambda: (
            (f"n={n}", eu.f_bipoly(n + 1).subs_x(1), pochhammer(y, n + 1)) for n in range(small + 1))),
        _exact(s, "q_n(1)_double_factorial", {"max_n": max_n}, lambda: (
            (f"n={n}", lh.pq_polys(n).q(Fraction(1)), double_factorial_odd(n)) for n in range(max_n + 1))),
        _exact(s, "F_egf", {"order": _EGF_ORDER}, egf_cases),
    ]


def _suite_numeric_zeta(max_n, seed, tol):
    s = "numeric_zeta"
    return [
        _numeric(s, "dirichlet_partial_sum", {"terms": 60}, tol, lambda: (
            (f"k={k}", float(lh.zeta_cb_neg(k)), lh.dirichlet_partial_sum(k, 60)) for k in range(7))),
        _numeric(s, "lehmer_closed_form", {"terms": 80}, tol, lambda: (
            (f"k={k},x={x}", lh.closed_form_rhs(k, x), lh.series_partial_sum(k, x, 80))
            for k in range(-1, 6) for x in LEHMER_POINTS)),
    ]


def _suite_numeric_egf(max_n, seed, tol):
    s = "numeric_egf"
    return [
        _numeric(s, "P_egf", {"terms": 25}, tol, lambda: (
            (f"x={x},t={t}", lh.p_egf_closed(x, t), lh.p_egf_truncated(x, t, 25)) for x, t in P_EGF_POINTS)),
        _numeric(s, "Q_egf", {"terms": 25}, tol, lambda: (
            (f"x={x},t={t}", lh.q_egf_closed(x, t), lh.q_egf_truncated(x, t, 25)) for x, t in Q_EGF_POINTS)),
        _numeric(s, "a_egf", {"terms": 25}, tol, lambda: (
            (f"t={t}", lh.a_egf_closed(t), lh.a_egf_truncated(t, 25)) for t in A_EGF_POINTS)),
    ]


SUITES = {
    "stephan": _suite_stephan,
    "qF": _suite_qF,
    "pF": _suite_pF,
    "tableQ": _suite_table,
    "odeQ": _suite_odeQ,
    "odeA": _suite_odeA,
    "altsum": _suite_altsum,
    "routes": _suite_routes,
    "recursion": _suite_recursion,
    "explicit": _suite_explicit,
    "ogf": _suite_ogf,
    "keyeq": _suite_keyeq,
    "lemma": _suite_lemma,
    "atm": _suite_atm,
    "sEulerian": _suite_seulerian,
    "special_values": _suite_special,
    "numeric_zeta": _suite_numeric_zeta,
    "numeric_egf": _suite_numeric_egf,
}


def run_suite(name: str, max_n: int, seed: int = DEFAULT_SEED, tolerance: float = DEFAULT_TOLERANCE) -> list:
    """Run one suite (or ``"all"``) and return its CheckResults.

    Results of ``"all"`` are sorted by suite name; order within a suite
    is the order its families are declared in.
    """
    if max_n < 1:
        raise ValueError("max_n must be >= 1")
    if name == "all":
        names = sorted(SUITES)
    elif name in SUITES:
        names = [name]
    else:
        raise UnknownSuiteError(f"unknown suite {name!r}; choose from all, {', '.join(SUITES)}")
    results = []
    for n in names:
        results.extend(SUITES[n](max_n, seed, tolerance))
    return results
