"""Exact integer polynomial and matrix arithmetic.

Everything in this module is exact: polynomials are dense lists of Python
integers, rational functions are normalized quotients of such polynomials,
and matrix kernels (determinant, characteristic polynomial) use fraction-free
elimination.  Degrees in this project stay small (at most ~132), so dense
representations and arbitrary precision are the right trade-off.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache


class InexactDivision(ArithmeticError):
    """Raised when an exact polynomial division leaves a remainder."""


class NotCyclotomic(ValueError):
    """Raised when an operation requires a fully cyclotomic factorization."""


# ---------------------------------------------------------------------------
# IntPolynomial
# ---------------------------------------------------------------------------

def _trim(coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


@dataclass(frozen=True)
class IntPolynomial:
    """Dense integer polynomial; ``coefficients[k]`` is the coefficient of t^k.

    The zero polynomial has an empty coefficient tuple; otherwise the leading
    (highest-index) coefficient is nonzero.
    """

    coefficients: tuple[int, ...]

    def __init__(self, coefficients=()):
        object.__setattr__(self, "coefficients", _trim(coefficients))

    @staticmethod
    def zero() -> "IntPolynomial":
        return IntPolynomial(())

    @staticmethod
    def one() -> "IntPolynomial":
        return IntPolynomial((1,))

    @staticmethod
    def constant(c: int) -> "IntPolynomial":
        return IntPolynomial((c,))

    @staticmethod
    def t_power(n: int, coefficient: int = 1) -> "IntPolynomial":
        """coefficient * t^n"""
        return IntPolynomial((0,) * n + (coefficient,))

    @staticmethod
    def t_n_minus_1(n: int) -> "IntPolynomial":
        """t^n - 1"""
        return IntPolynomial((-1,) + (0,) * (n - 1) + (1,))

    @staticmethod
    def one_minus_t_n(n: int) -> "IntPolynomial":
        """1 - t^n"""
        return IntPolynomial((1,) + (0,) * (n - 1) + (-1,))

    @property
    def degree(self) -> int:
        """Degree; the zero polynomial has degree -1."""
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return not self.coefficients

    @property
    def leading(self) -> int:
        if not self.coefficients:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coefficients[-1]

    def __bool__(self) -> bool:
        return bool(self.coefficients)

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coefficients, other.coefficients
        n = max(len(a), len(b))
        return IntPolynomial(
            (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)
        )

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(-c for c in self.coefficients)

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other) -> "IntPolynomial":
        if isinstance(other, int):
            return IntPolynomial(c * other for c in self.coefficients)
        a, b = self.coefficients, other.coefficients
        if not a or not b:
            return IntPolynomial.zero()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "IntPolynomial":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = IntPolynomial.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def divmod_exact_leading(self, other: "IntPolynomial"):
        """Quotient and remainder, requiring every leading-term division to be
        exact over the integers (sufficient for all divisors used here)."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coefficients)
        d = other.coefficients
        if len(rem) < len(d):
            return IntPolynomial.zero(), self
        q = [0] * (len(rem) - len(d) + 1)
        for i in range(len(rem) - len(d), -1, -1):
            c = rem[i + len(d) - 1]
            if c % d[-1] != 0:
                raise InexactDivision(f"{c} not divisible by {d[-1]}")
            t = c // d[-1]
            q[i] = t
            if t:
                for j, y in enumerate(d):
                    rem[i + j] -= t * y
        return IntPolynomial(q), IntPolynomial(rem)

    def exact_div(self, other: "IntPolynomial") -> "IntPolynomial":
        """Exact quotient; raises InexactDivision if ``other`` does not divide."""
        try:
            q, r = self.divmod_exact_leading(other)
        except InexactDivision as exc:
            raise InexactDivision(f"{self} not divisible by {other}") from exc
        if not r.is_zero():
            raise InexactDivision(f"{self} not divisible by {other}")
        return q

    def divides(self, other: "IntPolynomial") -> bool:
        """Whether self divides other over the integers."""
        try:
            other.exact_div(self)
            return True
        except InexactDivision:
            return False

    def eval_at_integer(self, x: int) -> int:
        v = 0
        for c in reversed(self.coefficients):
            v = v * x + c
        return v

    def content(self) -> int:
        return math.gcd(*self.coefficients) if self.coefficients else 0

    def primitive_part(self) -> "IntPolynomial":
        c = self.content()
        if c in (0, 1):
            return self
        return IntPolynomial(x // c for x in self.coefficients)

    def is_reciprocal_up_to_sign(self) -> bool:
        """Whether t^deg * p(1/t) == +-p(t)."""
        c = self.coefficients
        return c == tuple(reversed(c)) or c == tuple(-x for x in reversed(c))

    def __str__(self) -> str:
        if not self.coefficients:
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coefficients[k]
            if c == 0:
                continue
            term = "1" if k == 0 else ("t" if k == 1 else f"t^{k}")
            mag = abs(c)
            body = term if (mag == 1 and k > 0) else (str(mag) if k == 0 else f"{mag}*{term}")
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)


def polynomial_gcd(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """Primitive gcd in Z[t] via the subresultant pseudo-remainder sequence."""
    if a.is_zero():
        return _positive_leading(b.primitive_part())
    if b.is_zero():
        return _positive_leading(a.primitive_part())
    content = math.gcd(a.content(), b.content())
    a, b = a.primitive_part(), b.primitive_part()
    if a.degree < b.degree:
        a, b = b, a
    while not b.is_zero():
        delta = a.degree - b.degree
        scaled = a * (b.leading ** (delta + 1))
        _, r = scaled.divmod_exact_leading(b)
        a, b = b, r.primitive_part() if not r.is_zero() else IntPolynomial.zero()
    g = _positive_leading(a) * content
    return g


def _positive_leading(p: IntPolynomial) -> IntPolynomial:
    if not p.is_zero() and p.leading < 0:
        return -p
    return p


# ---------------------------------------------------------------------------
# RationalFunction
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RationalFunction:
    """Quotient of integer polynomials, stored with the gcd removed and the
    denominator normalized to positive leading coefficient."""

    numerator: IntPolynomial
    denominator: IntPolynomial

    def __init__(self, numerator: IntPolynomial, denominator: IntPolynomial = IntPolynomial((1,))):
        if denominator.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if numerator.is_zero():
            numerator, denominator = IntPolynomial.zero(), IntPolynomial.one()
        else:
            g = polynomial_gcd(numerator, denominator)
            if g.degree > 0 or abs(g.eval_at_integer(0)) > 1:
                numerator = numerator.exact_div(g)
                denominator = denominator.exact_div(g)
            if denominator.leading < 0:
                numerator, denominator = -numerator, -denominator
        object.__setattr__(self, "numerator", numerator)
        object.__setattr__(self, "denominator", denominator)

    @staticmethod
    def from_polynomial(p: IntPolynomial) -> "RationalFunction":
        return RationalFunction(p, IntPolynomial.one())

    def __mul__(self, other: "RationalFunction") -> "RationalFunction":
        return RationalFunction(
            self.numerator * other.numerator, self.denominator * other.denominator
        )

    def __truediv__(self, other: "RationalFunction") -> "RationalFunction":
        return RationalFunction(
            self.numerator * other.denominator, self.denominator * other.numerator
        )

    @property
    def degree(self) -> int:
        """Degree as a rational function (numerator minus denominator degree)."""
        return self.numerator.degree - self.denominator.degree

    def is_polynomial(self) -> bool:
        return self.denominator.degree == 0 and abs(self.denominator.leading) == 1

    def as_polynomial(self) -> IntPolynomial:
        if not self.is_polynomial():
            raise InexactDivision(f"not a polynomial: denominator {self.denominator}")
        return self.numerator if self.denominator.leading == 1 else -self.numerator

    def series_coefficients(self, k_max: int) -> list[int]:
        """Taylor coefficients at t=0 up to degree k_max.

        Requires the denominator to be invertible as a power series with
        integer inverse, i.e. constant term +-1.
        """
        den = self.denominator.coefficients
        num = self.numerator.coefficients
        if not den or den[0] not in (1, -1):
            raise InexactDivision("denominator constant term must be a unit")
        d0 = den[0]
        out = []
        for k in range(k_max + 1):
            acc = num[k] if k < len(num) else 0
            for j in range(1, min(k, len(den) - 1) + 1):
                acc -= den[j] * out[k - j]
            out.append(acc * d0)
        return out


# ---------------------------------------------------------------------------
# Cyclotomic polynomials and factorizations
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def cyclotomic(n: int) -> IntPolynomial:
    """The n-th cyclotomic polynomial, by exact division of t^n - 1."""
    if n < 1:
        raise ValueError("cyclotomic index must be >= 1")
    p = IntPolynomial.t_n_minus_1(n)
    for d in range(1, n):
        if n % d == 0:
            p = p.exact_div(cyclotomic(d))
    return p


def euler_totient(n: int) -> int:
    result = n
    m, p = n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


@dataclass(frozen=True)
class CyclotomicFactorization:
    """unit * prod(cyclotomic(n)^multiplicity) * remainder."""

    factors: dict[int, int]
    unit: int
    remainder: IntPolynomial

    @property
    def is_cyclotomic(self) -> bool:
        return self.remainder == IntPolynomial.one()

    @property
    def degree(self) -> int:
        return sum(euler_totient(n) * m for n, m in self.factors.items()) + self.remainder.degree

    def reconstruct(self) -> IntPolynomial:
        p = IntPolynomial.constant(self.unit)
        for n in sorted(self.factors):
            p = p * cyclotomic(n) ** self.factors[n]
        return p * self.remainder

    def lcm_of_orders(self) -> int:
        return math.lcm(*self.factors) if self.factors else 1

    def __str__(self) -> str:
        parts = [
            f"Φ{n}^{m}" if m > 1 else f"Φ{n}"
            for n, m in sorted(self.factors.items())
        ]
        body = "·".join(parts) if parts else "1"
        if not self.is_cyclotomic:
            body = f"{body}·({self.remainder})"
        return body if self.unit == 1 else f"-{body}"


def factor_cyclotomic(p: IntPolynomial, n_max: int = 132) -> CyclotomicFactorization:
    """Split off every cyclotomic factor with index <= n_max."""
    if p.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    factors: dict[int, int] = {}
    rem = p
    for n in range(1, n_max + 1):
        phi = euler_totient(n)
        while rem.degree >= phi:
            try:
                rem = rem.exact_div(cyclotomic(n))
            except InexactDivision:
                break
            factors[n] = factors.get(n, 0) + 1
    unit = 1
    if rem.leading < 0:
        unit, rem = -1, -rem
    return CyclotomicFactorization(factors, unit, rem)


def square_root_spectrum(c: CyclotomicFactorization) -> CyclotomicFactorization:
    """Characteristic polynomial of sigma^2 given that of sigma.

    A primitive n-th root of unity squares to a primitive n-th (n odd),
    (n/2)-th (n = 2 mod 4, bijectively) or (n/2)-th (n = 0 mod 4, two-to-one)
    root, which gives the multiplicity bookkeeping below.
    """
    if not c.is_cyclotomic:
        raise NotCyclotomic("input factorization has a non-cyclotomic remainder")
    out: dict[int, int] = {}
    for n, m in c.factors.items():
        if n % 2 == 1:
            target, mult = n, m
        elif n % 4 == 2:
            target, mult = n // 2, m
        else:
            target, mult = n // 2, 2 * m
        out[target] = out.get(target, 0) + mult
    return CyclotomicFactorization(out, 1, IntPolynomial.one())


# ---------------------------------------------------------------------------
# IntMatrix
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class IntMatrix:
    """Square matrix of arbitrary-precision integers."""

    entries: tuple[tuple[int, ...], ...]

    def __init__(self, entries):
        rows = tuple(tuple(int(x) for x in row) for row in entries)
        if any(len(row) != len(rows) for row in rows):
            raise ValueError("matrix must be square")
        object.__setattr__(self, "entries", rows)

    @staticmethod
    def identity(n: int) -> "IntMatrix":
        return IntMatrix([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @property
    def dim(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i]

    def __mul__(self, other: "IntMatrix") -> "IntMatrix":
        n = self.dim
        if other.dim != n:
            raise ValueError("dimension mismatch")
        b = other.entries
        out = [[0] * n for _ in range(n)]
        for i in range(n):
            arow = self.entries[i]
            orow = out[i]
            for k in range(n):
                a = arow[k]
                if a:
                    brow = b[k]
                    for j in range(n):
                        orow[j] += a * brow[j]
        return IntMatrix(out)

    def __pow__(self, n: int) -> "IntMatrix":
        if n < 0:
            raise ValueError("negative matrix power")
        result = IntMatrix.identity(self.dim)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def transpose(self) -> "IntMatrix":
        n = self.dim
        return IntMatrix([[self.entries[j][i] for j in range(n)] for i in range(n)])

    def is_symmetric(self) -> bool:
        return self.entries == self.transpose().entries


def det_bareiss(matrix: IntMatrix) -> int:
    """Exact determinant via fraction-free (Bareiss) elimination."""
    n = matrix.dim
    if n == 0:
        return 1
    a = [list(row) for row in matrix.entries]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def char_poly(matrix: IntMatrix) -> IntPolynomial:
    """det(t*I - M) by the Faddeev-LeVerrier recursion.

    The trace divisions are exact over the integers, so the computation stays
    fraction-free; the result is monic of degree ``matrix.dim``.
    """
    n = matrix.dim
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    work = [list(row) for row in IntMatrix.identity(n).entries]
    m = matrix.entries
    for k in range(1, n + 1):
        nxt = [[0] * n for _ in range(n)]
        for i in range(n):
            mrow = m[i]
            orow = nxt[i]
            for t in range(n):
                a = mrow[t]
                if a:
                    wrow = work[t]
                    for j in range(n):
                        orow[j] += a * wrow[j]
        trace = sum(nxt[i][i] for i in range(n))
        assert trace % k == 0
        c = -trace // k
        coeffs[n - k] = c
        for i in range(n):
            nxt[i][i] += c
        work = nxt
    return IntPolynomial(coeffs)
