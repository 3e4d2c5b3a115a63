import numpy as np
import pytest
from hypothesis import given, settings

from apoly.poly import (
    BivarPoly,
    PolyParseError,
    UnivarPoly,
    format_poly,
    gcd_univar,
    parse_poly,
    squarefree_univar,
)

from conftest import bivar_polys, univar_polys

L = BivarPoly.var_l()
M = BivarPoly.var_m()
one = BivarPoly.const(1)


class TestArithmetic:
    def test_add_cancellation(self):
        assert (L - one) + one == L

    def test_add_identity(self):
        p = parse_poly("L^2*M - 3")
        assert p + BivarPoly.zero() == p

    def test_add_doubles(self):
        lm = L * M
        assert lm + lm == 2 * lm

    def test_mul_difference_of_squares(self):
        assert (L - one) * (L + one) == parse_poly("L^2 - 1")

    def test_mul_identity(self):
        p = parse_poly("M^3*L - 2*L + 7")
        assert p * one == p

    def test_mul_trefoil_expansion(self):
        assert (L - one) * (L * M**6 + one) == parse_poly("L^2*M^6 - L*M^6 + L - 1")

    @given(bivar_polys(), bivar_polys(), bivar_polys())
    @settings(max_examples=100, deadline=None)
    def test_ring_laws(self, p, q, r):
        assert (p + q) + r == p + (q + r)
        assert p * q == q * p
        assert (p * q) * r == p * (q * r)
        assert p * (q + r) == p * q + p * r

    @given(bivar_polys(allow_zero=False))
    @settings(max_examples=100, deadline=None)
    def test_normalize_idempotent(self, p):
        nf, _ = p.normalize()
        nf2, stripped = nf.normalize()
        assert nf2 == nf
        assert stripped.sign == 1 and stripped.content == 1
        assert stripped.i0 == 0 and stripped.j0 == 0


class TestDegrees:
    def test_unknot_deg_m(self):
        assert (L - one).deg_m() == 0

    def test_trefoil_factor(self):
        assert (L * M**6 + one).deg_m() == 6

    def test_constant(self):
        p = BivarPoly.const(5)
        assert p.deg_m() == 0 and p.deg_l() == 0

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            BivarPoly.zero().deg_m()


class TestNormalize:
    def test_content(self):
        nf, stripped = (6 * L - BivarPoly.const(6)).normalize()
        assert nf == L - one
        assert stripped.content == 6

    def test_sign_and_monomial(self):
        p = parse_poly("-M^2*L + M^2")
        nf, stripped = p.normalize()
        assert nf == L - one
        assert stripped.sign == -1 and stripped.i0 == 2

    def test_already_normal(self):
        nf, stripped = (L - one).normalize()
        assert nf == L - one
        assert stripped == type(stripped)(1, 0, 0, 1)

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            BivarPoly.zero().normalize()


class TestEval:
    def test_eval_m_no_dependence(self):
        assert (L - one).eval_m(1) == UnivarPoly([-1, 1])

    def test_eval_m_substitution(self):
        assert (L * M**6 + one).eval_m(-1) == UnivarPoly([1, 1])

    def test_eval_m_square(self):
        p = parse_poly("M^2*L^2 - 2*M*L + 1")
        assert p.eval_m(1) == UnivarPoly([1, -2, 1])

    @given(bivar_polys(), bivar_polys())
    @settings(max_examples=100, deadline=None)
    def test_eval_m_multiplicative(self, p, q):
        for m in (1, -1):
            assert (p * q).eval_m(m) == p.eval_m(m) * q.eval_m(m)

    def test_eval_complex_on_curve(self):
        assert (L - one).eval_complex(2.7j, 1.0) == 0

    def test_eval_complex_trefoil_point(self):
        assert abs((L * M**6 + one).eval_complex(1.0, -1.0)) < 1e-12

    def test_eval_complex_zero_poly(self):
        assert BivarPoly.zero().eval_complex(3.0 + 1j, -2.0) == 0


def rel_residual(p, u, v):
    """|p(u, v)| relative to the term-magnitude scale at (u, v)."""
    scale = sum(abs(c) * abs(u) ** i * abs(v) ** j for (i, j), c in p.terms.items())
    return abs(p.eval_complex(u, v)) / scale


class TestSurgerySubstitution:
    def test_no_m_dependence(self):
        assert (L - one).substitute_surgery(3) == UnivarPoly([-1, 1])

    def test_clears_denominator(self):
        assert (L + M**2).substitute_surgery(1) == UnivarPoly([1, 0, 0, 1])

    def test_root_oracle(self):
        # every root v of the substituted polynomial must satisfy
        # p(v^-n, v) = 0
        p = L * M**6 + one
        n = 2
        g = p.substitute_surgery(n)
        for v in np.roots(list(reversed(g.coeffs))):
            v = complex(v)
            if abs(v) < 1e-6:
                continue  # v = 0 is outside C* x C*
            assert rel_residual(p, v ** (-n), v) < 1e-8

    def test_rejects_zero_n(self):
        with pytest.raises(ValueError):
            (L - one).substitute_surgery(0)

    @given(bivar_polys(allow_zero=False, max_exp=3, max_terms=4))
    @settings(max_examples=50, deadline=None)
    def test_root_oracle_random(self, p):
        n = 2
        g = p.substitute_surgery(n)
        if g.is_zero or g.degree() == 0:
            return
        for v in np.roots(list(reversed(g.coeffs))):
            v = complex(v)
            if abs(v) < 1e-6:
                continue  # v = 0 is outside C* x C*
            assert rel_residual(p, v ** (-n), v) < 1e-6


class TestUnivarGcd:
    def test_common_factor(self):
        assert gcd_univar(UnivarPoly([-1, 0, 1]), UnivarPoly([-1, 1])) == UnivarPoly([-1, 1])

    def test_coprime(self):
        f = UnivarPoly([3, 1, 2])
        assert gcd_univar(f, UnivarPoly([1])) == UnivarPoly([1])

    def test_multiplicities(self):
        f = UnivarPoly([-1, 1]) ** 2 * UnivarPoly([2, 1])
        g = UnivarPoly([-1, 1]) * UnivarPoly([3, 1])
        assert gcd_univar(f, g) == UnivarPoly([-1, 1])

    def test_divides_both(self):
        f = UnivarPoly([2, -3, 1]) * UnivarPoly([5, 7])
        g = UnivarPoly([2, -3, 1]) * UnivarPoly([-1, 4])
        d = gcd_univar(f, g)
        assert f.try_divide(d) is not None
        assert g.try_divide(d) is not None

    def test_both_zero_rejected(self):
        with pytest.raises(ValueError):
            gcd_univar(UnivarPoly(), UnivarPoly())


class TestSquarefree:
    def test_square(self):
        assert squarefree_univar(UnivarPoly([-1, 1]) ** 2) == UnivarPoly([-1, 1])

    def test_already_squarefree(self):
        assert squarefree_univar(UnivarPoly([-1, 0, 1])) == UnivarPoly([-1, 0, 1])

    def test_mixed_multiplicities(self):
        f = UnivarPoly([-1, 1]) ** 2 * UnivarPoly([1, 1]) ** 3
        assert squarefree_univar(f) == UnivarPoly([-1, 0, 1])

    @given(univar_polys(allow_zero=False, max_deg=5))
    @settings(max_examples=100, deadline=None)
    def test_coprime_with_derivative(self, f):
        sf = squarefree_univar(f)
        if sf.degree() == 0:
            return
        assert gcd_univar(sf, sf.derivative()).degree() == 0


class TestGrammar:
    def test_simple(self):
        assert parse_poly("L - 1") == L - one

    def test_expanded_trefoil(self):
        assert parse_poly("L^2*M^6 - L*M^6 + L - 1") == (L - one) * (L * M**6 + one)

    def test_double_plus_rejected(self):
        with pytest.raises(PolyParseError) as exc:
            parse_poly("L + + 1")
        assert exc.value.col == 5

    def test_parenthesized_products(self):
        assert parse_poly("(L-1)*(L+1)") == parse_poly("L^2 - 1")

    def test_error_has_position(self):
        with pytest.raises(PolyParseError) as exc:
            parse_poly("L^2 +\n3 $ 1")
        assert exc.value.line == 2

    @given(bivar_polys())
    @settings(max_examples=150, deadline=None)
    def test_roundtrip(self, p):
        assert parse_poly(format_poly(p)) == p


class TestSymmetryHelpers:
    def test_invert_l(self):
        p = L * M**6 + one
        assert p.invert_l() == M**6 + L

    def test_try_divide_exact(self):
        a = (L - one) * (L * M**6 + one)
        assert a.try_divide(L - one) == L * M**6 + one

    def test_try_divide_inexact(self):
        assert (L * M**6 + one).try_divide(L - one) is None
