from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from graphpoly.errors import PolynomialParseError
from graphpoly.poly import (
    ExactPolynomial,
    add,
    binomial_expansion,
    derivative,
    divide_with_remainder,
    mul,
    parse_polynomial,
    poly_gcd,
    render,
    reverse,
    scale,
    squarefree_part,
)

from conftest import P, nonzero_polys, polys, rationals

X = P(0, 1)


class TestBasics:
    def test_normalisation(self):
        assert P(1, 2, 0, 0).coeffs == (1, 2)
        assert P(0, 0).is_zero() and P().degree == -1
        assert P(0, 0) == ExactPolynomial.zero()

    def test_immutable(self):
        f = P(1, 1)
        with pytest.raises(AttributeError):
            f.coeffs = ()

    def test_examples(self):
        assert add(P(1, 1), P(1, -1)) == P(2)
        assert mul(P(1, 1), P(1, 1)) == P(1, 2, 1)
        assert scale(P(0, 2), Fraction(1, 2)) == X

    def test_derivative_examples(self):
        assert derivative(binomial_expansion(3)) == binomial_expansion(2).scale(3)
        assert derivative(P(7)).is_zero()
        assert derivative(P(0, 3, 3, 1)) == P(3, 6, 3)

    def test_evaluation_is_exact(self):
        for n in range(65):
            assert binomial_expansion(n)(1) == 2**n

    def test_binomial_rows(self):
        assert binomial_expansion(0) == P(1)
        assert binomial_expansion(2) == P(1, 2, 1)
        assert binomial_expansion(40)[20] == 137846528820

    def test_hash_and_eq_with_scalars(self):
        assert P(3) == 3
        assert len({P(1, 2), P(Fraction(2, 2), 2)}) == 1


class TestDivision:
    def test_examples(self):
        assert divide_with_remainder(P(-1, 0, 1), P(-1, 1)) == (P(1, 1), P(0))
        q, r = divide_with_remainder(P(0, 3, 3, 1), P(3, 6, 3))
        assert q == P(Fraction(1, 3), Fraction(1, 3))
        assert r == P(-1)

    @given(nonzero_polys())
    def test_self_division(self, f):
        assert divide_with_remainder(f, f) == (P(1), P(0))

    def test_zero_divisor(self):
        with pytest.raises(ZeroDivisionError):
            divide_with_remainder(X, P(0))

    @settings(max_examples=500)
    @given(polys(), nonzero_polys())
    def test_reconstruction(self, f, g):
        q, r = divide_with_remainder(f, g)
        assert g * q + r == f
        assert r.degree < g.degree


class TestRing:
    @given(polys(), polys(), polys())
    def test_associativity(self, f, g, h):
        assert (f * g) * h == f * (g * h)
        assert (f + g) + h == f + (g + h)

    @given(polys(), polys(), polys())
    def test_distributivity(self, f, g, h):
        assert f * (g + h) == f * g + f * h

    @given(polys(), polys())
    def test_leibniz(self, f, g):
        assert (f * g).derivative() == f.derivative() * g + f * g.derivative()

    @given(polys(), rationals)
    def test_evaluation_homomorphism(self, f, t):
        g = f * f + X
        assert g(t) == f(t) * f(t) + t


class TestReverseGcd:
    def test_reverse_examples(self):
        assert reverse(P(1, 3, 3), 3) == P(0, 3, 3, 1)
        assert reverse(P(1), 5) == ExactPolynomial.monomial(5)
        with pytest.raises(ValueError):
            reverse(P(1, 1, 1), 1)

    @given(nonzero_polys(), rationals)
    def test_reverse_root_correspondence(self, f, t):
        assume(f(0) != 0 and t != 0)
        g = f * (X - t)
        assert (g(t) == 0) == (reverse(g, g.degree)(1 / t) == 0)
        assert (f(t) == 0) == (reverse(f, f.degree)(1 / t) == 0)

    def test_gcd_examples(self):
        assert poly_gcd(P(-1, 0, 1), P(-1, 1)) == P(-1, 1)
        assert squarefree_part(binomial_expansion(3)) == P(1, 1)
        assert squarefree_part(P(1, 0, 1)) == P(1, 0, 1)

    @given(nonzero_polys(max_degree=4), nonzero_polys(max_degree=4))
    def test_gcd_divides_both(self, f, g):
        d = poly_gcd(f, g)
        assert d.leading == 1
        assert divide_with_remainder(f, d)[1].is_zero()
        assert divide_with_remainder(g, d)[1].is_zero()

    @given(nonzero_polys(max_degree=3))
    def test_squarefree_of_square(self, f):
        assume(f.degree >= 1)
        sq = squarefree_part(f)
        assert squarefree_part(f * f) == sq
        assert poly_gcd(sq, sq.derivative()) == P(1)

    def test_zero_inputs(self):
        with pytest.raises(ValueError):
            poly_gcd(P(0), P(0))
        with pytest.raises(ValueError):
            squarefree_part(P(0))


class TestText:
    def test_render(self):
        assert render(binomial_expansion(3)) == "1 + 3*x + 3*x^2 + 1*x^3"
        assert render(P(Fraction(-1, 3), 0, 2)) == "-1/3 + 2*x^2"
        assert render(P(0)) == "0"

    @given(polys())
    def test_round_trip(self, f):
        assert parse_polynomial(render(f)) == f

    @pytest.mark.parametrize(
        "text, expected",
        [
            ("x^2 - 1", P(-1, 0, 1)),
            ("x**3+3*x**2+3*x", P(0, 3, 3, 1)),
            ("2x + 1/2", P(Fraction(1, 2), 2)),
            ("1,4,2", P(1, 4, 2)),
            ("-x", P(0, -1)),
        ],
    )
    def test_parse(self, text, expected):
        assert parse_polynomial(text) == expected

    @pytest.mark.parametrize("bad", ["", "x^", "1 2", "y+1", "3*"])
    def test_parse_errors(self, bad):
        with pytest.raises(PolynomialParseError):
            parse_polynomial(bad)


@given(st.integers(0, 30))
def test_binomial_is_power(n):
    assert binomial_expansion(n) == P(1, 1) ** n
