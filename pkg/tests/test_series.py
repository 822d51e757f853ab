from math import comb

import pytest

from bhdual.exactalg import RationalFunction, cyclotomic, factor_cyclotomic
from bhdual.fixtures import VARIABLES, load_rows, row_by_name
from bhdual.polyparse import parse_polynomial
from bhdual.series import (
    HypothesisNotMet,
    SQUARE_RELATION_EXPECTED,
    characteristic_function,
    delta0,
    milnor_orlik,
    poincare_bruteforce,
    poincare_series,
    transpose_monodromy,
    transpose_reduced_weights,
    verify_phi_identity,
    verify_square_relation,
)
from bhdual.weights import CanonicalWeights, ReducedWeights, canonical_weights, reduce


def poly(text):
    return parse_polynomial(text, VARIABLES)


class TestPoincareSeries:
    def test_fermat_weights(self):
        p = poincare_series(CanonicalWeights((6, 22, 33), 66))
        # compare with the unreduced quotient as rational functions
        from bhdual.exactalg import IntPolynomial

        num = IntPolynomial.one_minus_t_n(66)
        den = (
            IntPolynomial.one_minus_t_n(6)
            * IntPolynomial.one_minus_t_n(22)
            * IntPolynomial.one_minus_t_n(33)
        )
        assert p == RationalFunction(num, den)

    def test_unit_weights_degree_two(self):
        p = poincare_series(CanonicalWeights((1, 1, 1), 2))
        assert p.series_coefficients(3) == [1, 3, 5, 7]

    def test_unit_weights_degree_three(self):
        p = poincare_series(CanonicalWeights((1, 1, 1), 3))
        # (1 + t + t^2) / (1 - t)^2
        assert p.numerator == cyclotomic(3)
        assert p.series_coefficients(2) == [1, 3, 6]


class TestPoincareBruteforce:
    def test_binomial_oracle(self):
        # dim in degree k is C(k+2,2) - C(k,2) for weights (1,1,1;2)
        expected = [comb(k + 2, 2) - comb(k, 2) for k in range(4)]
        assert poincare_bruteforce(CanonicalWeights((1, 1, 1), 2), 3) == expected == [1, 3, 5, 7]

    def test_degree_zero(self):
        assert poincare_bruteforce(CanonicalWeights((7, 11, 13), 77), 0) == [1]

    def test_sparse_low_degrees(self):
        out = poincare_bruteforce(CanonicalWeights((6, 22, 33), 66), 12)
        assert out == [1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1]

    def test_matches_closed_form_on_all_rows(self):
        for row in load_rows():
            w = canonical_weights(poly(row.f))
            bound = 2 * w.d_prime
            closed = poincare_series(w).series_coefficients(bound)
            assert closed == poincare_bruteforce(w, bound), row.name


class TestDelta0:
    def test_always_polynomial_with_degree(self):
        for alpha in [(2, 3, 11), (2, 2, 2), (3, 3, 8)] + [r.dolgachev for r in load_rows()]:
            d = delta0(alpha)
            assert d.is_polynomial()
            assert d.as_polynomial().degree == sum(alpha) - 2

    def test_small_case_factorization(self):
        p = delta0((2, 2, 2)).as_polynomial()
        fac = factor_cyclotomic(p)
        # (1-t)(1+t)^3 up to sign
        assert fac.factors == {1: 1, 2: 3}


class TestCharacteristicFunction:
    def test_fermat_row(self):
        phi = characteristic_function(poly("x^11 + y^3 + z^2"), (2, 3, 11))
        assert factor_cyclotomic(phi.numerator).factors == {66: 1}
        assert factor_cyclotomic(phi.denominator).factors == {1: 1}

    def test_a5_row_with_chain(self):
        phi = characteristic_function(poly("x^8*z + y^3 + z^2"), (3, 3, 8))
        assert factor_cyclotomic(phi.numerator).factors == {3: 1, 48: 1}
        assert factor_cyclotomic(phi.denominator).factors == {1: 1}

    def test_degree_with_shift_equals_rank(self):
        row = row_by_name("J_3,0")
        phi = characteristic_function(poly(row.f), row.dolgachev)
        assert phi.degree + 1 == row.mu == 16


class TestMilnorOrlik:
    def test_fermat_20(self):
        fac = milnor_orlik(ReducedWeights((6, 22, 33), 66, 1))
        assert fac.factors == {66: 1}
        assert fac.degree == 20

    def test_cubic_cone_by_enumeration(self):
        # independent oracle: the eight basis monomials x^a y^b z^c with
        # 0 <= a,b,c <= 1 have degrees k; eigenvalue exponents are (k+3) mod 3
        from collections import Counter

        degrees = Counter(a + b + c for a in (0, 1) for b in (0, 1) for c in (0, 1))
        exponents = Counter()
        for k, mult in degrees.items():
            exponents[(k + 3) % 3] += mult
        assert exponents == {0: 2, 1: 3, 2: 3}
        fac = milnor_orlik(ReducedWeights((1, 1, 1), 3, 1))
        assert fac.factors == {1: 2, 3: 3}
        assert fac.degree == 8

    def test_node(self):
        fac = milnor_orlik(ReducedWeights((1, 1, 1), 2, 1))
        assert fac.factors == {2: 1}

    def test_invalid_weights_rejected(self):
        from bhdual.series import NonIntegralMilnorNumber

        with pytest.raises(NonIntegralMilnorNumber):
            milnor_orlik(ReducedWeights((2, 3, 4), 5, 1))
        with pytest.raises(NonIntegralMilnorNumber):
            milnor_orlik(ReducedWeights((3, 3, 3), 3, 1))

    def test_degree_and_cyclotomic_on_all_rows(self):
        for row in load_rows():
            rw = transpose_reduced_weights(row)
            fac = milnor_orlik(rw)
            numerator = (rw.d - rw.q[0]) * (rw.d - rw.q[1]) * (rw.d - rw.q[2])
            denominator = rw.q[0] * rw.q[1] * rw.q[2]
            assert numerator % denominator == 0
            assert fac.degree == numerator // denominator == row.mu, row.name
            assert fac.is_cyclotomic


class TestPhiIdentity:
    def test_fermat_shift_one(self):
        report = verify_phi_identity(row_by_name("E_20"))
        assert report.holds and report.shift_exponent == 1
        assert report.oracle.factors == {66: 1}

    def test_a5_row(self):
        report = verify_phi_identity(row_by_name("Q_18"))
        assert report.holds and report.shift_exponent == 1

    def test_a3_row_hypothesis_decided_from_transpose(self):
        # the transpose's own canonical system is reduced here even though the
        # row's c_f is 3, so the identity applies
        row = row_by_name("E_19")
        assert row.c_f == 3
        assert transpose_reduced_weights(row).c_f == 1
        report = verify_phi_identity(row)
        assert report.holds and report.shift_exponent == 1

    def test_nonreduced_transpose_rejected(self):
        with pytest.raises(HypothesisNotMet):
            verify_phi_identity(row_by_name("J_3,0"))

    def test_uniform_shift_across_exceptional_rows(self):
        exponents = set()
        for row in load_rows():
            if row.case_tag.startswith("Quadrilateral"):
                continue
            report = verify_phi_identity(row)
            assert report.holds, row.name
            exponents.add(report.shift_exponent)
        assert exponents == {1}


class TestSquareRelation:
    def test_expected_verdicts(self):
        for name, expected in SQUARE_RELATION_EXPECTED.items():
            report = verify_square_relation(row_by_name(name))
            assert report.holds == expected, (name, report.reason)

    def test_positive_case_detail(self):
        report = verify_square_relation(row_by_name("Q_2,0"))
        assert report.holds and report.shift_exponent == 1

    def test_negative_control_reason(self):
        report = verify_square_relation(row_by_name("J_3,0"))
        assert not report.holds
        assert "denominator" in report.reason


class TestTransposeMonodromy:
    def test_self_dual_loop(self):
        fac = transpose_monodromy(row_by_name("S_16"))
        assert fac.factors == {17: 1}


# ---------------------------------------------------------------------------
# independent oracle: divisor calculus
# ---------------------------------------------------------------------------

def _divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


def _moebius(n):
    result = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    if n > 1:
        result = -result
    return result


def _divisor_product(q, d):
    """prod_i ((1/v_i) * L_{u_i} - L_1) in the ring with L_a * L_b =
    gcd(a,b) * L_lcm(a,b), where u_i/v_i = d/q_i in lowest terms.

    L_m stands for the root divisor of t^m - 1; the product is the divisor of
    the monodromy characteristic polynomial, computed by pure gcd/lcm
    combinatorics with no reference to the Milnor algebra.
    """
    from fractions import Fraction
    from math import gcd, lcm

    total = {1: Fraction(1)}
    for qi in q:
        g = gcd(d, qi)
        u, v = d // g, qi // g
        factor = {u: Fraction(1, v)}
        factor[1] = factor.get(1, Fraction(0)) - 1
        convolved: dict[int, Fraction] = {}
        for a, ca in total.items():
            for b, cb in factor.items():
                m = lcm(a, b)
                convolved[m] = convolved.get(m, Fraction(0)) + ca * cb * gcd(a, b)
        total = {m: c for m, c in convolved.items() if c}
    return total


def _divisor_of_factorization(fac):
    """Divisor of prod Phi_n^mult in the same L_m basis, via Moebius
    inversion of Phi_n = prod_{e | n} (t^e - 1)^mu(n/e)."""
    out: dict[int, int] = {}
    for n, mult in fac.factors.items():
        for e in _divisors(n):
            coeff = mult * _moebius(n // e)
            if coeff:
                out[e] = out.get(e, 0) + coeff
    return {m: c for m, c in out.items() if c}


class TestMonodromyDivisorCalculus:
    def test_matches_enumeration_oracle_on_all_fixture_polynomials(self):
        # both the transpose and the dual polynomial of every row
        for row in load_rows():
            for text in (row.f_T, row.f):
                rw = reduce(canonical_weights(poly(text)))
                fac = milnor_orlik(rw)
                assert _divisor_of_factorization(fac) == _divisor_product(rw.q, rw.d), (
                    row.name,
                    text,
                )

    def test_classical_anchors(self):
        # textbook monodromy characteristic polynomials of simple singularities
        anchors = [
            ("x^2 + y^2 + z^2", {2: 1}),
            ("x^3 + y^2 + z^2", {3: 1}),
            ("x^3 + x*y^2 + z^2", {2: 2, 6: 1}),
            ("x^5 + y^3 + z^2", {30: 1}),
        ]
        for text, expected in anchors:
            rw = reduce(canonical_weights(poly(text)))
            assert milnor_orlik(rw).factors == expected, text
