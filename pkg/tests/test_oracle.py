import pytest

from brs import (
    BrsError,
    INCONCLUSIVE,
    Ideal,
    JetTruncation,
    NOT_FINITE,
    colength,
    jacobian_ideal,
    jet_contains,
    jet_quotient_dim,
    oracle_colength,
    parse_poly,
)
from strategies import CTX2


def I2(*sources):
    return Ideal(CTX2, [parse_poly(s, CTX2) for s in sources])


class TestOracleColength:
    def test_maximal_ideal_stabilizes_immediately(self):
        assert oracle_colength(I2("x", "y")) == 1

    def test_cusp_jacobian(self):
        assert oracle_colength(I2("2*x", "3*y^2")) == 2

    def test_principal_is_not_finite(self):
        assert oracle_colength(I2("x")) is NOT_FINITE

    def test_cap_validation(self):
        with pytest.raises(BrsError):
            oracle_colength(I2("x", "y"), cap=2)

    def test_inconclusive_at_tiny_cap(self):
        # Colength 6 cannot stabilize by d = 4, and the quotient dimensions
        # are still growing, so a cap of 4 must refuse to answer.
        got = oracle_colength(I2("x^3", "y^3", "x*y^2 + y^5"), cap=4)
        assert got is INCONCLUSIVE

    def test_unit_tail_generator(self):
        # (x - x^2) = (x) locally; the oracle sees it through truncation.
        assert oracle_colength(I2("x - x^2", "y")) == 1

    def test_agrees_with_engine_on_t77_tjurina_ideal(self):
        phi = parse_poly("x^7 + y^7 + x^3*y^3", CTX2)
        I = Ideal(CTX2, [phi] + jacobian_ideal(phi))
        want = colength(I)
        assert oracle_colength(I) == want

    def test_determinism_under_larger_cap(self):
        for I in (I2("2*x", "3*y^2"), I2("x^2", "y^3"), I2("x^2 - y^3", "x*y")):
            first = oracle_colength(I, cap=32)
            again = oracle_colength(I, cap=40)
            assert first == again

    def test_quotient_dim_monotone_then_constant(self):
        I = I2("x^2", "y^3")
        dims = [jet_quotient_dim(I, d) for d in (4, 6, 8, 10)]
        assert dims == sorted(dims)
        assert dims[-1] == dims[-2] == colength(I)


class TestJetHelpers:
    def test_jet_membership_matches_exact_membership(self):
        from brs import membership

        I = I2("x^2", "x*y")
        assert jet_contains(I, parse_poly("x^2 + x*y", CTX2), 6)
        assert not jet_contains(I, parse_poly("y", CTX2), 6)
        assert membership(parse_poly("x^2 + x*y", CTX2), I)

    def test_truncation_index_is_graded_lexicographic(self):
        jt = JetTruncation.build(2, 3)
        ordered = sorted(jt.monomial_index, key=jt.monomial_index.get)  # type: ignore[arg-type]
        assert ordered == [(0, 0), (0, 1), (1, 0), (0, 2), (1, 1), (2, 0)]
        assert jt.size == 6
