from fractions import Fraction

import pytest

from bhdual.fixtures import VARIABLES, load_rows
from bhdual.polyparse import parse_polynomial
from bhdual.weights import (
    CanonicalWeights,
    GroupActionData,
    NonIntegralExponent,
    NonPositiveQ0,
    ReducedWeights,
    ambient_weights,
    beta_congruence_check,
    canonical_weights,
    compactified_monomials,
    gorenstein_parameter,
    reduce,
    validate_action,
)


def poly(text):
    return parse_polynomial(text, VARIABLES)


class TestCanonicalWeights:
    def test_chain_type(self):
        assert canonical_weights(poly("x^6 + x*y^3 + z^2")) == CanonicalWeights((6, 10, 18), 36)

    def test_fermat(self):
        assert canonical_weights(poly("x^11 + y^3 + z^2")) == CanonicalWeights((6, 22, 33), 66)

    def test_mixed_chain(self):
        assert canonical_weights(poly("x^4*z + x*y^3 + z^2")) == CanonicalWeights((3, 7, 12), 24)

    def test_negative_determinant_uses_absolute_value(self):
        # loop-type monomial pattern with det = -20
        w = canonical_weights(poly("x^5 + x*z^2 + y^2*z"))
        assert w == CanonicalWeights((4, 6, 8), 20)

    def test_exact_resolve(self):
        for row in load_rows():
            f = poly(row.f)
            w = canonical_weights(f)
            for exponents in f.matrix.entries:
                assert sum(e * wi for e, wi in zip(exponents, w.w)) == w.d_prime

    def test_nonpositive_weights_rejected(self):
        from bhdual.weights import NonPositiveWeights

        # x*y^2 + y solves to w = (-1, 1)
        with pytest.raises(NonPositiveWeights):
            canonical_weights(parse_polynomial("x*y^2 + y", ("x", "y")))


class TestReduce:
    def test_common_factor_two(self):
        assert reduce(CanonicalWeights((6, 10, 18), 36)) == ReducedWeights((3, 5, 9), 18, 2)

    def test_already_reduced(self):
        assert reduce(CanonicalWeights((3, 7, 12), 24)) == ReducedWeights((3, 7, 12), 24, 1)

    def test_uniform_gcd(self):
        assert reduce(CanonicalWeights((2, 2, 2), 4)) == ReducedWeights((1, 1, 1), 2, 2)


class TestGorensteinParameter:
    def test_fermat(self):
        assert gorenstein_parameter(canonical_weights(poly("x^11 + y^3 + z^2"))) == 5

    def test_chain(self):
        w = canonical_weights(poly("x^6*y + y^3 + z^2"))
        assert w == CanonicalWeights((4, 12, 18), 36)
        assert gorenstein_parameter(w) == 2

    def test_double_chain(self):
        w = canonical_weights(poly("x^6*y + x*y^3 + z^2"))
        assert w == CanonicalWeights((4, 10, 17), 34)
        assert gorenstein_parameter(w) == 3


class TestAmbientWeights:
    def test_plain_w_power(self):
        amb = ambient_weights(ReducedWeights((3, 5, 9), 18, 2), "w")
        assert amb.weights == (1, 3, 5, 9)
        assert amb.compactifier == "w^18"

    def test_x_shape(self):
        amb = ambient_weights(ReducedWeights((6, 22, 33), 66, 1), "x")
        assert amb.weights == (5, 6, 22, 33)
        assert amb.compactifier == "x*w^12"

    def test_z_shape(self):
        amb = ambient_weights(ReducedWeights((3, 5, 7), 17, 1), "z")
        assert amb.weights == (2, 3, 5, 7)
        assert amb.compactifier == "z*w^5"

    def test_nonpositive_q0(self):
        with pytest.raises(NonPositiveQ0):
            ambient_weights(ReducedWeights((3, 3, 3), 9, 1), "w")

    def test_nonintegral_exponent(self):
        # d = 17, q0 = 2: the plain w-power would need exponent 17/2
        with pytest.raises(NonIntegralExponent):
            ambient_weights(ReducedWeights((3, 5, 7), 17, 1), "w")


class TestValidateAction:
    def test_invariant_quadruple(self):
        monomials = ((0, 6, 0, 0), (0, 1, 3, 0), (0, 0, 0, 2), (18, 0, 0, 0))
        assert validate_action(monomials, GroupActionData(2, (0, 1, -1, 0)))

    def test_trivial_group(self):
        monomials = ((0, 6, 0, 0), (18, 0, 0, 0))
        assert validate_action(monomials, GroupActionData(1, (7, 7, 7, 7)))

    def test_broken_quadruple(self):
        monomials = ((0, 6, 0, 0), (0, 1, 3, 0), (0, 0, 0, 2), (18, 0, 0, 0))
        assert not validate_action(monomials, GroupActionData(2, (0, 1, 0, 0)))

    def test_every_fixture_action(self):
        for row in load_rows():
            amb = ambient_weights(reduce(canonical_weights(poly(row.f))), row.compactifier_shape)
            monomials = compactified_monomials(poly(row.f), amb)
            action = GroupActionData(row.action_c, row.action_m or (0, 0, 0, 0))
            assert validate_action(monomials, action), row.name


class TestBetaCongruence:
    def test_a5_row(self):
        assert beta_congruence_check(((2, 1), (3, 2), (11, 9)), 5, 1) is True

    def test_a2_row(self):
        assert beta_congruence_check(((3, 2), (5, 3), (7, 4)), 2, 1) is True

    def test_counterexample(self):
        assert beta_congruence_check(((4, 1),), 2, 1) is False

    def test_inapplicable_for_nonreduced(self):
        assert beta_congruence_check(((2, 1), (3, 2), (10, 7)), 2, 2) is None


class TestFixtureReproduction:
    def test_c_f_and_a_columns(self):
        for row in load_rows():
            assert reduce(canonical_weights(poly(row.f))).c_f == row.c_f, row.name
            assert gorenstein_parameter(canonical_weights(poly(row.f_T))) == row.a, row.name

    def test_ambient_and_compactifier_columns(self):
        for row in load_rows():
            amb = ambient_weights(reduce(canonical_weights(poly(row.f))), row.compactifier_shape)
            assert amb.weights == row.ambient, row.name
            assert amb.compactifier == row.compactifier, row.name

    def test_congruence_on_reduced_rows(self):
        for row in load_rows():
            verdict = beta_congruence_check(row.alpha_beta, row.a, row.c_f)
            if row.c_f == 1:
                assert verdict is True, row.name
            else:
                assert verdict is None, row.name

    def test_orbit_data_euler_number_integrality(self):
        """Consistency of the (alpha, beta) pairs with the weight systems on
        the reduced rows: the virtual Euler number -d/(q1*q2*q3) must differ
        from -sum((alpha-beta)/alpha) by an integer.  This pins down the two
        corrected beta entries in the fixture store."""
        for row in load_rows():
            if row.c_f != 1:
                continue
            rw = reduce(canonical_weights(poly(row.f)))
            euler = Fraction(-rw.d, rw.q[0] * rw.q[1] * rw.q[2])
            total = sum(Fraction(al - be, al) for al, be in row.alpha_beta)
            assert (-euler - total).denominator == 1, row.name
