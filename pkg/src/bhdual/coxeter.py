"""Reflections, Coxeter elements, lattice invariants, and isomorphism testing
for the small edge-weighted graphs arising as Coxeter-Dynkin diagrams.

A root basis is encoded by its Gram matrix G (symmetric, all diagonal entries
-2).  The reflection in basis vector e_i acts by x -> x + <x, e_i> e_i, and
the Coxeter element is the product of all basis reflections in basis order.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exactalg import (
    CyclotomicFactorization,
    IntMatrix,
    IntPolynomial,
    char_poly,
    det_bareiss,
    factor_cyclotomic,
)

ORDER_BOUND = 10_000


class NotARoot(ValueError):
    pass


class NotARootBasis(ValueError):
    pass


class NotSymmetric(ValueError):
    pass


def reflection_matrix(gram: IntMatrix, i: int) -> IntMatrix:
    """Matrix of the reflection in basis vector e_i, in the basis itself.

    e_j maps to e_j + G[j][i] * e_i, so the matrix is the identity with row i
    replaced by row i of G plus the unit row.
    """
    if gram[i, i] != -2:
        raise NotARoot(f"basis vector {i} has self-pairing {gram[i, i]}")
    n = gram.dim
    rows = [list(row) for row in IntMatrix.identity(n).entries]
    for j in range(n):
        rows[i][j] += gram[i, j]
    return IntMatrix(rows)


@dataclass(frozen=True)
class CoxeterResult:
    matrix: IntMatrix
    char: IntPolynomial
    factorization: CyclotomicFactorization
    order: int | None  # None: no N <= ORDER_BOUND with tau^N = 1


def coxeter_element(gram: IntMatrix) -> CoxeterResult:
    """Ordered product of the basis reflections, with characteristic
    polynomial, cyclotomic factorization and (finite) order.

    The order is exact: a matrix of finite order has fully cyclotomic
    characteristic polynomial and satisfies tau^N = 1 for N the lcm of the
    factor indices, so either that N works (and is minimal for a semisimple
    tau) or no bounded power does.
    """
    n = gram.dim
    if not gram.is_symmetric():
        raise NotSymmetric("Gram matrix must be symmetric")
    if any(gram[i, i] != -2 for i in range(n)):
        raise NotARootBasis("all diagonal entries must be -2")
    tau = IntMatrix.identity(n)
    for i in range(n):
        tau = tau * reflection_matrix(gram, i)
    char = char_poly(tau)
    fac = factor_cyclotomic(char)
    order = None
    if fac.is_cyclotomic:
        candidate = fac.lcm_of_orders()
        if candidate <= ORDER_BOUND and tau ** candidate == IntMatrix.identity(n):
            order = candidate
    return CoxeterResult(tau, char, fac, order)


def preserves_form(tau: IntMatrix, gram: IntMatrix) -> bool:
    return tau.transpose() * gram * tau == gram


@dataclass(frozen=True)
class LatticeInvariants:
    rank: int
    det: int
    signature: tuple[int, int, int]  # (positive, zero, negative)


def lattice_invariants(gram: IntMatrix) -> LatticeInvariants:
    """Exact rank, determinant, and inertia via congruence diagonalization."""
    if not gram.is_symmetric():
        raise NotSymmetric("Gram matrix must be symmetric")
    n = gram.dim
    a = [[Fraction(x) for x in row] for row in gram.entries]
    pos = zero = neg = 0
    k = 0
    while k < n:
        if a[k][k] == 0:
            swap = next((j for j in range(k + 1, n) if a[j][j] != 0), None)
            if swap is not None:
                a[k], a[swap] = a[swap], a[k]
                for row in a:
                    row[k], row[swap] = row[swap], row[k]
            else:
                partner = next((j for j in range(k + 1, n) if a[k][j] != 0), None)
                if partner is None:
                    zero += 1
                    k += 1
                    continue
                # fold e_partner into e_k to create a nonzero diagonal entry
                for row in a:
                    row[k] += row[partner]
                for j in range(n):
                    a[k][j] += a[partner][j]
        d = a[k][k]
        if d > 0:
            pos += 1
        else:
            neg += 1
        for i in range(k + 1, n):
            factor = a[i][k] / d
            if factor:
                for j in range(n):
                    a[i][j] -= factor * a[k][j]
                for row in a:
                    row[i] -= factor * row[k]
        k += 1
    return LatticeInvariants(n, det_bareiss(gram), (pos, zero, neg))


def graph_isomorphic(g1: IntMatrix, g2: IntMatrix) -> list[int] | None:
    """Search for a permutation p with G1[i][j] == G2[p[i]][p[j]].

    Backtracking over vertices ordered by invariant rarity, with a two-round
    neighborhood refinement for pruning; deterministic.  Returns one witness
    permutation or None.
    """
    if not g1.is_symmetric() or not g2.is_symmetric():
        raise NotSymmetric("isomorphism testing requires symmetric matrices")
    n = g1.dim
    if g2.dim != n:
        return None

    def refine(g: IntMatrix):
        inv = [
            (g[i, i], tuple(sorted(g[i, j] for j in range(n) if j != i and g[i, j])))
            for i in range(n)
        ]
        for _ in range(2):
            inv = [
                (
                    inv[i],
                    tuple(sorted((g[i, j], inv[j]) for j in range(n) if j != i and g[i, j])),
                )
                for i in range(n)
            ]
        return inv

    inv1, inv2 = refine(g1), refine(g2)
    if sorted(inv1) != sorted(inv2):
        return None
    rarity = {key: sum(1 for x in inv1 if x == key) for key in set(inv1)}
    order = sorted(range(n), key=lambda i: (rarity[inv1[i]], i))
    mapping = [-1] * n
    used = [False] * n

    def backtrack(k: int) -> bool:
        if k == n:
            return True
        i = order[k]
        for p in range(n):
            if used[p] or inv2[p] != inv1[i]:
                continue
            if all(g1[i, order[t]] == g2[p, mapping[order[t]]] for t in range(k)):
                mapping[i] = p
                used[p] = True
                if backtrack(k + 1):
                    return True
                used[p] = False
                mapping[i] = -1
        return False

    return mapping[:] if backtrack(0) else None
