"""Parsing, rendering and transposition of invertible polynomials.

An invertible polynomial in n variables is a sum of exactly n monomials with
all coefficients 1 whose square exponent matrix is nonsingular.  The grammar
accepted by :func:`parse_polynomial` is

    poly   := mono ('+' mono)*
    mono   := factor ('*'? factor)*
    factor := var ('^' uint)?

with single-letter variable names, optional '*' and whitespace, and an
optional leading literal ``1`` in a monomial.  Coefficients other than 1 are
rejected.
"""
from __future__ import annotations

from dataclasses import dataclass

from .exactalg import IntMatrix, det_bareiss


class ParseError(ValueError):
    """Malformed polynomial text; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class UnknownVariable(ParseError):
    pass


class DuplicateMonomial(ValueError):
    pass


class MonomialCountMismatch(ValueError):
    pass


class ZeroDeterminant(ValueError):
    pass


@dataclass(frozen=True)
class ExponentMatrix:
    """Square matrix of non-negative integer exponents with det != 0."""

    entries: tuple[tuple[int, ...], ...]

    def __init__(self, entries):
        rows = tuple(tuple(int(x) for x in row) for row in entries)
        n = len(rows)
        if any(len(row) != n for row in rows):
            raise ValueError("exponent matrix must be square")
        if any(x < 0 for row in rows for x in row):
            raise ValueError("exponents must be non-negative")
        if det_bareiss(IntMatrix(rows)) == 0:
            raise ZeroDeterminant("exponent matrix is singular")
        object.__setattr__(self, "entries", rows)

    @property
    def n(self) -> int:
        return len(self.entries)

    def determinant(self) -> int:
        return det_bareiss(IntMatrix(self.entries))

    def transpose(self) -> "ExponentMatrix":
        n = self.n
        return ExponentMatrix(tuple(tuple(self.entries[j][i] for j in range(n)) for i in range(n)))


@dataclass(frozen=True)
class InvertiblePolynomial:
    """Exponent matrix plus an ordered tuple of variable names.

    Row i of the matrix is the i-th monomial; column j carries the exponents
    of ``variables[j]``.  All coefficients are normalized to 1.
    """

    matrix: ExponentMatrix
    variables: tuple[str, ...]

    def __init__(self, matrix: ExponentMatrix, variables):
        variables = tuple(variables)
        if len(variables) != matrix.n:
            raise MonomialCountMismatch(
                f"{matrix.n} monomials for {len(variables)} variables"
            )
        if len(set(matrix.entries)) != matrix.n:
            raise DuplicateMonomial("two monomials have identical exponents")
        object.__setattr__(self, "matrix", matrix)
        object.__setattr__(self, "variables", variables)

    @property
    def n(self) -> int:
        return self.matrix.n

    def row_sorted_entries(self) -> tuple[tuple[int, ...], ...]:
        """Rows sorted lexicographically; the order-independent fingerprint."""
        return tuple(sorted(self.matrix.entries))

    def same_polynomial(self, other: "InvertiblePolynomial") -> bool:
        """Equality up to monomial order (variables must match)."""
        return (
            self.variables == other.variables
            and self.row_sorted_entries() == other.row_sorted_entries()
        )


def _tokenize(text: str):
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch in "+*^":
            tokens.append((ch, i))
            i += 1
        elif ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(("int", i, int(text[i:j])))
            i = j
        elif ch.isalpha():
            tokens.append(("var", i, ch))
            i += 1
        else:
            raise ParseError(f"unexpected character {ch!r}", i)
    return tokens


def parse_polynomial(text: str, variables) -> InvertiblePolynomial:
    """Parse '+'-separated monomials into an InvertiblePolynomial.

    Raises UnknownVariable, DuplicateMonomial, MonomialCountMismatch or
    ZeroDeterminant on semantically invalid input, ParseError on malformed
    text.
    """
    variables = tuple(variables)
    index = {v: k for k, v in enumerate(variables)}
    tokens = _tokenize(text)
    if not tokens:
        raise ParseError("empty polynomial", 0)

    monomials = []
    pos = 0
    while pos < len(tokens):
        row = [0] * len(variables)
        saw_factor = False
        expect_factor = True
        leading_one_allowed = True
        while pos < len(tokens) and tokens[pos][0] != "+":
            tok = tokens[pos]
            if tok[0] == "*":
                if expect_factor:
                    raise ParseError("misplaced '*'", tok[1])
                expect_factor = True
                pos += 1
                continue
            if tok[0] == "int":
                if not (leading_one_allowed and tok[2] == 1):
                    raise ParseError("numeric coefficients other than a leading 1 are not allowed", tok[1])
                leading_one_allowed = False
                saw_factor = True
                expect_factor = False
                pos += 1
                continue
            if tok[0] == "^":
                raise ParseError("misplaced '^'", tok[1])
            # variable factor
            name = tok[2]
            if name not in index:
                raise UnknownVariable(f"unknown variable {name!r}", tok[1])
            exponent = 1
            pos += 1
            if pos < len(tokens) and tokens[pos][0] == "^":
                pos += 1
                if pos >= len(tokens) or tokens[pos][0] != "int":
                    raise ParseError("'^' must be followed by an integer", tokens[pos - 1][1])
                exponent = tokens[pos][2]
                pos += 1
            row[index[name]] += exponent
            saw_factor = True
            expect_factor = False
            leading_one_allowed = False
        if not saw_factor:
            raise ParseError("empty monomial", tokens[pos][1] if pos < len(tokens) else len(text))
        monomials.append(tuple(row))
        if pos < len(tokens):
            pos += 1  # skip '+'
            if pos == len(tokens):
                raise ParseError("trailing '+'", tokens[pos - 1][1])

    if len(monomials) != len(variables):
        raise MonomialCountMismatch(
            f"{len(monomials)} monomials for {len(variables)} variables"
        )
    if len(set(monomials)) != len(monomials):
        raise DuplicateMonomial("two monomials have identical exponents")
    return InvertiblePolynomial(ExponentMatrix(tuple(monomials)), variables)


def transpose(f: InvertiblePolynomial) -> InvertiblePolynomial:
    """The transpose polynomial: transposed exponent matrix, same variables."""
    return InvertiblePolynomial(f.matrix.transpose(), f.variables)


def render(f: InvertiblePolynomial) -> str:
    """Canonical text form; parse_polynomial(render(f)) reproduces f exactly."""
    monomials = []
    for row in f.matrix.entries:
        factors = []
        for name, e in zip(f.variables, row):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        monomials.append("*".join(factors) if factors else "1")
    return " + ".join(monomials)


def infer_variables(text: str) -> tuple[str, ...]:
    """Variable names appearing in the text, in alphabetical order (the
    conventional x, y, z ordering; CLI convenience)."""
    seen = set()
    for tok in _tokenize(text):
        if tok[0] == "var":
            seen.add(tok[2])
    return tuple(sorted(seen))
