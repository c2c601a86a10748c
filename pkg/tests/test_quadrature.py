from fractions import Fraction

import pytest
from mpmath import mp

from fracpoly.errors import DomainError
from fracpoly.families import FamilyParams, Polynomial, family_polynomial
from fracpoly.fractional import CaputoOrder, caputo_derivative_poly, caputo_quadrature_oracle, eval_frac_expansion
from fracpoly.quadrature import gauss_jacobi_rule
from fracpoly.scalars import mpf_to_fraction, working_precision

HALF = Fraction(1, 2)


def exact_weighted_monomial_integral(a: Fraction, k: int, precision: int) -> Fraction:
    """int_{-1}^{1} (1-u)^a u^k du by binomial expansion in u = 1 - s.

    Independent closed form: substitute s = 1-u so the integral becomes
    int_0^2 s^a (1-s)^k ds = sum_j binom(k,j) (-1)^j 2^{a+j+1} / (a+j+1).
    """
    import math

    with working_precision(precision):
        am = mp.mpf(a.numerator) / a.denominator
        total = mp.mpf(0)
        for j in range(k + 1):
            total += math.comb(k, j) * (-1) ** j * mp.mpf(2) ** (am + j + 1) / (am + j + 1)
        return mpf_to_fraction(total)


def test_rule_rejects_bad_parameters():
    with pytest.raises(DomainError):
        gauss_jacobi_rule(Fraction(-3, 2), 4, 128)
    with pytest.raises(DomainError):
        gauss_jacobi_rule(HALF, 0, 128)


def test_rule_integrates_polynomials_exactly():
    prec = 128
    for a in (Fraction(-1, 2), Fraction(-3, 10), HALF):
        for npts in (3, 6, 10):
            nodes, weights = gauss_jacobi_rule(a, npts, prec)
            for k in range(2 * npts):
                with working_precision(prec + 32):
                    got = mpf_to_fraction(
                        sum(w * x ** k for x, w in zip(nodes, weights))
                    )
                want = exact_weighted_monomial_integral(a, k, prec + 60)
                assert abs(got - want) <= Fraction(1, 2 ** (prec - 10)) * max(1, abs(want))


def test_rule_nodes_inside_interval_weights_positive():
    nodes, weights = gauss_jacobi_rule(Fraction(-1, 2), 8, 128)
    assert all(-1 < x < 1 for x in nodes)
    assert all(w > 0 for w in weights)
    assert all(nodes[i] < nodes[i + 1] for i in range(len(nodes) - 1))


def test_oracle_linear_monomial():
    # closed form 2 sqrt(t) / sqrt(pi) at t = 1
    got = caputo_quadrature_oracle(Polynomial([0, 1]), CaputoOrder(HALF), 1)
    with working_precision(168):
        want = mpf_to_fraction(2 / mp.sqrt(mp.pi))
    assert abs(got.as_fraction() - want) <= Fraction(1, 10 ** 30)


def test_oracle_constant_zero():
    got = caputo_quadrature_oracle(Polynomial([7]), CaputoOrder(HALF), 2)
    assert got.as_fraction() == 0


def test_oracle_t_squared_order_three_halves():
    # power-rule value gamma(3)/gamma(3/2) at t = 1
    got = caputo_quadrature_oracle(Polynomial([0, 0, 1]), CaputoOrder(Fraction(3, 2)), 1)
    with working_precision(168):
        want = mpf_to_fraction(2 / mp.gamma(mp.mpf(3) / 2))
    assert abs(got.as_fraction() - want) <= Fraction(1, 10 ** 30)


def test_oracle_rejects_nonpositive_point():
    with pytest.raises(DomainError):
        caputo_quadrature_oracle(Polynomial([0, 1]), CaputoOrder(HALF), 0)


def test_oracle_integer_order_bypass():
    got = caputo_quadrature_oracle(Polynomial([0, 0, 0, 1]), CaputoOrder(2), Fraction(3, 2))
    assert got.as_fraction() == 9  # 6t at t = 3/2


def test_oracle_agrees_with_closed_forms_on_family_grid():
    # the dual-route invariant at desk scale
    tol = Fraction(1, 10 ** 10)
    grids = [
        FamilyParams("bernoulli", 1, 1),
        FamilyParams("euler", 1, 1),
        FamilyParams("genocchi", 1, 1),
        FamilyParams("bernoulli", 1, 2),
        FamilyParams("euler", 1, 3),
        FamilyParams("bernoulli", 2, 2),
    ]
    for p in grids:
        for alpha in (Fraction(3, 10), HALF, Fraction(3, 2), Fraction(5, 2)):
            ord_ = CaputoOrder(alpha)
            for m in range(ord_.n, 9, 3):
                poly = family_polynomial(p, m)
                expansion = caputo_derivative_poly(poly, ord_)
                for t in (HALF, 1, 2):
                    a = eval_frac_expansion(expansion, t).as_fraction()
                    b = caputo_quadrature_oracle(poly, ord_, t).as_fraction()
                    assert abs(a - b) <= tol * max(1, abs(b))
