"""Canonical and reduced weight systems, Gorenstein parameter, ambient
projective weights and group-action validation.

The canonical weight system of an invertible polynomial with exponent matrix
E is the unique solution of E*w = d'*(1,...,1) with d' = |det E| (the absolute
value keeps all weights positive for loop-type polynomials whose determinant
is negative).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .polyparse import InvertiblePolynomial


class WeightsError(ValueError):
    pass


class NonIntegralWeights(WeightsError):
    """The linear solve has a non-integer component: input is not invertible."""


class NonPositiveWeights(WeightsError):
    pass


class NonPositiveQ0(WeightsError):
    pass


class NonIntegralExponent(WeightsError):
    pass


@dataclass(frozen=True)
class CanonicalWeights:
    """Weights (w_1..w_n) and degree d' with E*w = d'*(1,..,1)."""

    w: tuple[int, ...]
    d_prime: int


@dataclass(frozen=True)
class ReducedWeights:
    """Canonical system divided by c_f = gcd(w_1,...,w_n,d')."""

    q: tuple[int, ...]
    d: int
    c_f: int


@dataclass(frozen=True)
class AmbientWeights:
    """Weights of the ambient weighted projective space and the compactifying
    monomial (over homogeneous coordinates w,x,y,z)."""

    q0: int
    q: tuple[int, int, int]
    compactifier: str

    @property
    def weights(self) -> tuple[int, int, int, int]:
        return (self.q0, *self.q)


@dataclass(frozen=True)
class GroupActionData:
    """Cyclic group order c and the exponent quadruple of the generator acting
    on the homogeneous coordinates (w:x:y:z)."""

    c: int
    m: tuple[int, int, int, int]


def canonical_weights(f: InvertiblePolynomial) -> CanonicalWeights:
    """Solve E*w = |det E| * (1,...,1) exactly.

    Raises NonIntegralWeights / NonPositiveWeights when the solution is not a
    system of positive integers (which signals a non-invertible input).
    """
    entries = f.matrix.entries
    n = f.n
    d_prime = abs(f.matrix.determinant())
    # Gaussian elimination over exact rationals.
    aug = [[Fraction(entries[i][j]) for j in range(n)] + [Fraction(d_prime)] for i in range(n)]
    for k in range(n):
        pivot_row = next(i for i in range(k, n) if aug[i][k] != 0)
        aug[k], aug[pivot_row] = aug[pivot_row], aug[k]
        pivot = aug[k][k]
        aug[k] = [x / pivot for x in aug[k]]
        for i in range(n):
            if i != k and aug[i][k]:
                factor = aug[i][k]
                aug[i] = [x - factor * y for x, y in zip(aug[i], aug[k])]
    solution = [aug[i][n] for i in range(n)]
    if any(x.denominator != 1 for x in solution):
        raise NonIntegralWeights(f"weights {solution} are not integers")
    w = tuple(int(x) for x in solution)
    if any(x <= 0 for x in w):
        raise NonPositiveWeights(f"weights {w} are not all positive")
    # re-multiply to confirm the exact solve
    for i in range(n):
        assert sum(entries[i][j] * w[j] for j in range(n)) == d_prime
    return CanonicalWeights(w, d_prime)


def reduce(wsys: CanonicalWeights) -> ReducedWeights:
    """Divide the canonical system by c_f = gcd of all weights and the degree."""
    c_f = math.gcd(wsys.d_prime, *wsys.w)
    return ReducedWeights(tuple(x // c_f for x in wsys.w), wsys.d_prime // c_f, c_f)


def gorenstein_parameter(wsys: CanonicalWeights) -> int:
    """d' - w_1 - w_2 - w_3 of a three-variable canonical system."""
    if len(wsys.w) != 3:
        raise WeightsError("Gorenstein parameter is defined here for n = 3 only")
    return wsys.d_prime - sum(wsys.w)


# compactifier shapes, keyed by the fixture tag: which coordinate multiplies
# the power of w (the tag "w" is the plain w-power used for the quadrilateral
# rows; "x", "y", "z" are the three exceptional shapes).
_COMPACTIFIER_COORD = {"w": None, "x": 0, "y": 1, "z": 2}


def ambient_weights(rw: ReducedWeights, compactifier_choice: str) -> AmbientWeights:
    """Ambient space P(q0,q1,q2,q3) with q0 = d - q1 - q2 - q3, plus the
    compactifying monomial of the given shape, verified to have weighted
    degree exactly d."""
    if len(rw.q) != 3:
        raise WeightsError("ambient weights require a three-variable system")
    if compactifier_choice not in _COMPACTIFIER_COORD:
        raise WeightsError(f"unknown compactifier shape {compactifier_choice!r}")
    q0 = rw.d - sum(rw.q)
    if q0 <= 0:
        raise NonPositiveQ0(f"q0 = {q0} is not positive")
    coord = _COMPACTIFIER_COORD[compactifier_choice]
    numerator = rw.d if coord is None else rw.d - rw.q[coord]
    if numerator % q0 != 0:
        raise NonIntegralExponent(
            f"compactifier exponent {numerator}/{q0} is not an integer"
        )
    exponent = numerator // q0
    monomial = f"w^{exponent}" if coord is None else f"{'xyz'[coord]}*w^{exponent}"
    # verified weighted degree
    degree = q0 * exponent + (0 if coord is None else rw.q[coord])
    assert degree == rw.d
    return AmbientWeights(q0, tuple(rw.q), monomial)


def compactified_monomials(f: InvertiblePolynomial, ambient: AmbientWeights):
    """Exponent rows of F = f + compactifier over the coordinates (w,x,y,z)."""
    rows = [(0, *row) for row in f.matrix.entries]
    body, _, power = ambient.compactifier.partition("^")
    exponent = int(power)
    extra = [exponent, 0, 0, 0]
    if "*" in body:
        coord = "xyz".index(body.split("*")[0])
        extra[1 + coord] = 1
    rows.append(tuple(extra))
    return tuple(rows)


def validate_action(F_monomials, action: GroupActionData) -> bool:
    """True iff all monomials of F share one character mod c.

    ``F_monomials`` are exponent rows over (w,x,y,z); the character of a
    monomial is sum(m_j * exponent_j) mod c.
    """
    if action.c < 1:
        raise WeightsError("group order must be >= 1")
    if action.c == 1:
        return True
    characters = {
        sum(m * e for m, e in zip(action.m, row)) % action.c for row in F_monomials
    }
    return len(characters) == 1


def beta_congruence_check(alpha_beta, a: int, c_f: int):
    """Check a*beta_i == 1 (mod alpha_i) for the three orbit-invariant pairs.

    Returns True/False when c_f = 1; returns None (inapplicable) when the
    canonical system is non-reduced, where the pairs are not orbit invariants.
    """
    for alpha, beta in alpha_beta:
        if alpha < 2 or not (1 <= beta < alpha):
            raise WeightsError(f"invalid pair (alpha, beta) = ({alpha}, {beta})")
    if c_f != 1:
        return None
    return all((a * beta) % alpha == 1 % alpha for alpha, beta in alpha_beta)
