import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from brs import (
    ContextError,
    GermError,
    Monomial,
    NEGDEGREVLEX,
    Polynomial,
    VarContext,
    compare,
    jacobian_ideal,
    minors_2x2,
    parse_poly,
)
from strategies import CTX2, monomials, polynomials


class TestCompare:
    def test_unit_beats_every_variable(self, ctx2):
        one = Monomial((0, 0))
        assert compare(one, Monomial((1, 0))) == 1
        assert compare(one, Monomial((0, 1))) == 1

    def test_reflexive(self):
        m = Monomial((1, 0))
        assert compare(m, m) == 0

    def test_same_degree_revlex_tiebreak(self):
        # degree-2 monomials in (x, y): enumerating the rule by hand gives
        # y^2 > x*y > x^2 (rightmost differing exponent decides).
        xy = Monomial((1, 1))
        x2 = Monomial((2, 0))
        y2 = Monomial((0, 2))
        assert compare(xy, x2) == 1
        assert compare(y2, xy) == 1
        assert compare(x2, y2) == -1

    def test_context_mismatch(self):
        with pytest.raises(ContextError):
            compare(Monomial((1, 0)), Monomial((1, 0, 0)))

    @given(a=monomials(2), b=monomials(2))
    def test_antisymmetric(self, a, b):
        assert compare(a, b) == -compare(b, a)

    @given(a=monomials(2), b=monomials(2), c=monomials(2))
    def test_transitive(self, a, b, c):
        if compare(a, b) >= 0 and compare(b, c) >= 0:
            assert compare(a, c) >= 0

    @given(a=monomials(2), b=monomials(2), m=monomials(2))
    def test_multiplicative_compatibility(self, a, b, m):
        if compare(a, b) == 1:
            assert compare(a.mul(m), b.mul(m)) == 1


class TestArithmetic:
    def test_partial_power_rule(self, P):
        assert P("x^2 + y^3").partial(0) == P("2*x")

    def test_product_of_conjugates(self, P):
        assert P("x + y") * P("x - y") == P("x^2 - y^2")

    def test_partial_of_three_var_germ(self, ctx3):
        f = parse_poly("x*y - z^4", ctx3)
        assert f.partial(2) == parse_poly("-4*z^3", ctx3)

    def test_float_coefficients_rejected(self, ctx2):
        with pytest.raises(TypeError):
            Polynomial.constant(ctx2, 0.5)  # type: ignore[arg-type]
        with pytest.raises(TypeError):
            parse_poly("x", ctx2) * 0.5  # type: ignore[operator]

    def test_terms_sorted_descending_without_duplicates(self, P):
        p = P("y^3 + x^2 + x^2")
        keys = [NEGDEGREVLEX.key(m) for m, _ in p.terms]
        assert keys == sorted(keys, reverse=True)
        assert p == P("2*x^2 + y^3")

    @settings(max_examples=60)
    @given(f=polynomials(), g=polynomials(), h=polynomials())
    def test_ring_axioms(self, f, g, h):
        assert (f + g) + h == f + (g + h)
        assert f + g == g + f
        assert f * g == g * f
        assert (f * g) * h == f * (g * h)
        assert f * (g + h) == f * g + f * h

    @settings(max_examples=60)
    @given(f=polynomials(), g=polynomials())
    def test_product_rule(self, f, g):
        for i in range(CTX2.n):
            assert (f * g).partial(i) == f.partial(i) * g + f * g.partial(i)


class TestJacobian:
    def test_three_var_example(self, ctx3):
        f = parse_poly("x*y - z^4", ctx3)
        expected = [parse_poly(s, ctx3) for s in ("y", "x", "-4*z^3")]
        assert jacobian_ideal(f) == expected

    def test_cusp(self, P):
        assert jacobian_ideal(P("x^2 + y^3")) == [P("2*x"), P("3*y^2")]

    def test_smooth_unit_ideal(self):
        ctx1 = VarContext(("x",))
        assert jacobian_ideal(parse_poly("x", ctx1)) == [Polynomial.constant(ctx1, 1)]

    def test_constant_term_rejected(self, P):
        with pytest.raises(GermError):
            jacobian_ideal(P("x^2 + 1"))


class TestMinors:
    def test_single_minor_by_hand(self, P):
        # f = y, phi = x^2 + y^3: the one 2x2 determinant is
        # f_x*phi_y - f_y*phi_x = -2x.
        assert minors_2x2(P("y"), P("x^2 + y^3")) == [P("-2*x")]

    def test_repeated_rows_vanish(self, P):
        phi = P("x^2 + y^3")
        assert all(m.is_zero() for m in minors_2x2(phi, phi))

    def test_three_vars_lexicographic_order(self, ctx3):
        f = parse_poly("x", ctx3)
        phi = parse_poly("y", ctx3)
        got = minors_2x2(f, phi)
        assert got == [
            Polynomial.constant(ctx3, 1),
            Polynomial.zero(ctx3),
            Polynomial.zero(ctx3),
        ]

    def test_count_in_one_var(self):
        ctx1 = VarContext(("x",))
        assert minors_2x2(parse_poly("x^2", ctx1), parse_poly("x^3", ctx1)) == []


class TestContexts:
    def test_duplicate_names_rejected(self):
        with pytest.raises(ContextError):
            VarContext(("x", "x"))

    def test_embed_restrict_roundtrip(self, ctx2, ctx3):
        p = parse_poly("x^2 - 3*y", ctx2)
        assert p.embed(ctx3).restrict(ctx2) == p

    def test_restrict_fails_on_used_variable(self, ctx2, ctx3):
        p = parse_poly("z^2", ctx3)
        with pytest.raises(ContextError):
            p.restrict(ctx2)

    def test_mixed_context_arithmetic_rejected(self, ctx2, ctx3):
        with pytest.raises(ContextError):
            parse_poly("x", ctx2) + parse_poly("x", ctx3)


class TestVectorField:
    def test_length_enforced(self, ctx2, P):
        from brs import VectorField

        with pytest.raises(ContextError):
            VectorField((P("x"),))
