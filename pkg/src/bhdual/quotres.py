"""Symbolic local model for resolving a cyclic quotient singularity of type
(k, k-1) and the curve-attachment rules it implies.

C^2/Z_k with the action (x, y) -> (zeta*x, zeta^(-1)*y) embeds in C^3 as the
hypersurface XY = Z^k via (X, Y, Z) = (x^k, y^k, x*y).  The resolution is
covered by k charts with coordinates (u_i, v_i); chart i maps to (X, Y, Z) =
(u^i v^(i-1), u^(k-i) v^(k+1-i), u*v), and the exceptional components are
E_i = {u_i = 0} = {v_(i+1) = 0}, forming an A_(k-1) chain.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


class InvalidRange(ValueError):
    pass


class NotFactorable(ValueError):
    pass


@dataclass(frozen=True)
class LaurentPoly2:
    """Laurent polynomial in two chart coordinates u, v with exact rational
    coefficients; terms maps (exp_u, exp_v) to a nonzero coefficient."""

    terms: tuple[tuple[tuple[int, int], Fraction], ...]

    def __init__(self, terms):
        if isinstance(terms, dict):
            items = terms.items()
        else:
            items = terms
        cleaned = {}
        for key, coeff in items:
            coeff = Fraction(coeff)
            if coeff:
                cleaned[tuple(key)] = cleaned.get(tuple(key), Fraction(0)) + coeff
        cleaned = {k: c for k, c in cleaned.items() if c}
        object.__setattr__(self, "terms", tuple(sorted(cleaned.items())))

    @staticmethod
    def monomial(eu: int, ev: int, coeff=1) -> "LaurentPoly2":
        return LaurentPoly2({(eu, ev): Fraction(coeff)})

    @staticmethod
    def zero() -> "LaurentPoly2":
        return LaurentPoly2({})

    def as_dict(self) -> dict[tuple[int, int], Fraction]:
        return dict(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "LaurentPoly2") -> "LaurentPoly2":
        d = self.as_dict()
        for key, coeff in other.terms:
            d[key] = d.get(key, Fraction(0)) + coeff
        return LaurentPoly2(d)

    def __mul__(self, other: "LaurentPoly2") -> "LaurentPoly2":
        d: dict[tuple[int, int], Fraction] = {}
        for (a1, b1), c1 in self.terms:
            for (a2, b2), c2 in other.terms:
                key = (a1 + a2, b1 + b2)
                d[key] = d.get(key, Fraction(0)) + c1 * c2
        return LaurentPoly2(d)

    def __pow__(self, n: int) -> "LaurentPoly2":
        result = LaurentPoly2.monomial(0, 0)
        for _ in range(n):
            result = result * self
        return result

    def constant_term(self) -> Fraction:
        return dict(self.terms).get((0, 0), Fraction(0))

    def restrict_u0(self) -> dict[int, Fraction]:
        """Coefficients of the restriction to {u = 0} as a map ev -> coeff."""
        return {ev: c for (eu, ev), c in self.terms if eu == 0}

    def restrict_v0(self) -> dict[int, Fraction]:
        return {eu: c for (eu, ev), c in self.terms if ev == 0}

    def is_polynomial(self) -> bool:
        return all(eu >= 0 and ev >= 0 for (eu, ev), _ in self.terms)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (eu, ev), coeff in self.terms:
            factors = []
            if eu:
                factors.append("u" if eu == 1 else f"u^{eu}")
            if ev:
                factors.append("v" if ev == 1 else f"v^{ev}")
            body = "*".join(factors) if factors else "1"
            if coeff == 1 and factors:
                parts.append(body)
            elif coeff == -1 and factors:
                parts.append(f"-{body}")
            else:
                parts.append(f"{coeff}*{body}" if factors else f"{coeff}")
        return " + ".join(parts).replace("+ -", "- ")


@dataclass(frozen=True)
class ResolutionChart:
    """Chart i of the resolution of the type (k, k-1) singularity."""

    i: int
    k: int

    def __post_init__(self):
        if not 1 <= self.i <= self.k:
            raise InvalidRange(f"chart index {self.i} outside 1..{self.k}")

    def substitution(self) -> dict[str, LaurentPoly2]:
        i, k = self.i, self.k
        return {
            "X": LaurentPoly2.monomial(i, i - 1),
            "Y": LaurentPoly2.monomial(k - i, k + 1 - i),
            "Z": LaurentPoly2.monomial(1, 1),
        }


def transition_image(chart: ResolutionChart) -> dict[str, LaurentPoly2]:
    """Chart-(i+1) substitution composed with the gluing map
    (u_i, v_i) -> (1/v_i, u_i v_i^2); as Laurent polynomials in (u_i, v_i)."""
    if chart.i >= chart.k:
        raise InvalidRange("no chart above the last one")
    nxt = ResolutionChart(chart.i + 1, chart.k).substitution()
    u_new = LaurentPoly2.monomial(0, -1)
    v_new = LaurentPoly2.monomial(1, 2)
    out = {}
    for name, mono in nxt.items():
        ((eu, ev), coeff), = mono.terms
        out[name] = (u_new ** eu) * (v_new ** ev) * LaurentPoly2.monomial(0, 0, coeff)
    return out


# ---------------------------------------------------------------------------
# curves in the quotient and their proper transforms
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class XYZPoly:
    """Polynomial in the invariant coordinates X, Y, Z (exponent dict)."""

    terms: tuple[tuple[tuple[int, int, int], int], ...]

    def __init__(self, terms):
        items = terms.items() if isinstance(terms, dict) else terms
        cleaned = {tuple(k): int(c) for k, c in items if c}
        object.__setattr__(self, "terms", tuple(sorted(cleaned.items())))

    def substitute(self, chart: ResolutionChart) -> LaurentPoly2:
        sub = chart.substitution()
        total = LaurentPoly2.zero()
        for (ex, ey, ez), coeff in self.terms:
            mono = LaurentPoly2.monomial(0, 0, coeff)
            mono = mono * sub["X"] ** ex * sub["Y"] ** ey * sub["Z"] ** ez
            total = total + mono
        return total

    def __str__(self) -> str:
        parts = []
        for (ex, ey, ez), coeff in sorted(self.terms, key=lambda t: (t[0][2], t[0][0], t[0][1]), reverse=True):
            factors = [f"{n}^{e}" if e > 1 else n for n, e in (("X", ex), ("Y", ey), ("Z", ez)) if e]
            body = "*".join(factors) if factors else "1"
            parts.append(body if coeff == 1 else f"{coeff}*{body}")
        return " + ".join(parts) if parts else "0"


def invariant_image(m: int, k: int) -> XYZPoly:
    """Image of the curve x^m + y^(k-m) = 0 in invariant coordinates: Z^m + Y."""
    if not 0 < m < k:
        raise InvalidRange(f"need 0 < m < k, got m={m}, k={k}")
    return XYZPoly({(0, 0, m): 1, (0, 1, 0): 1})


def invariant_image_double(k: int) -> XYZPoly:
    """Image of the doubled curve x^2 + y^(2k-2) = 0: Z^2 + Y^2."""
    if k < 2:
        raise InvalidRange(f"need k >= 2, got k={k}")
    return XYZPoly({(0, 0, 2): 1, (0, 2, 0): 1})


def proper_transform(curve: XYZPoly, chart: ResolutionChart):
    """Factor the chart image of the curve as monomial * unit.

    Returns ((p, q), unit) with the curve image equal to u^p v^q * unit and
    unit not vanishing at the chart origin.  Raises NotFactorable when the
    image is zero or when every candidate unit vanishes at the origin (the
    curve is then not one of the supported shapes).
    """
    image = curve.substitute(chart)
    if image.is_zero():
        raise NotFactorable("curve image is zero in this chart")
    p = min(eu for (eu, ev), _ in image.terms)
    q = min(ev for (eu, ev), _ in image.terms)
    shift = LaurentPoly2.monomial(-p, -q)
    unit = shift * image
    if unit.constant_term() == 0:
        raise NotFactorable("unit factor vanishes at the chart origin")
    return (p, q), unit


def attachment_index(m: int, k: int) -> int:
    """Exceptional component met by the transform of x^m + y^(k-m): E_(k-m)."""
    if not 0 < m < k:
        raise InvalidRange(f"need 0 < m < k, got m={m}, k={k}")
    return k - m


def attachment_double(k: int):
    """The doubled curve meets E_(k-1) in two transversal branches."""
    if k < 2:
        raise InvalidRange(f"need k >= 2, got k={k}")
    return k - 1, 2


def exceptional_components_met(curve: XYZPoly, k: int) -> list[int]:
    """Indices i of the exceptional components E_i whose generic point lies on
    the proper transform of the curve.

    E_i is {u_i = 0} in chart i and {v_(i+1) = 0} in chart i+1; the transform
    meets it iff the unit factor restricted to that line is non-constant.
    """
    met = set()
    for i in range(1, k):
        _, unit = proper_transform(curve, ResolutionChart(i, k))
        on_line = unit.restrict_u0()
        if set(on_line) - {0}:
            met.add(i)
        _, unit = proper_transform(curve, ResolutionChart(i + 1, k))
        on_line = unit.restrict_v0()
        if set(on_line) - {0}:
            met.add(i)
    return sorted(met)


def _degree(p: list[Fraction]) -> int:
    d = len(p) - 1
    while d >= 0 and p[d] == 0:
        d -= 1
    return d


def _gcd_degree(a: list[Fraction], b: list[Fraction]) -> int:
    """Degree of gcd over Q, by the Euclidean algorithm on coefficient lists."""
    a, b = a[:], b[:]
    while _degree(b) >= 0:
        da, db = _degree(a), _degree(b)
        if da < db:
            a, b = b, a
            continue
        factor = a[da] / b[db]
        for j in range(db + 1):
            a[da - db + j] -= factor * b[j]
        if _degree(a) < _degree(b):
            a, b = b, a
    return max(_degree(a), 0)


def branch_count_at_attachment(curve: XYZPoly, k: int, component: int) -> int:
    """Number of distinct transversal branch points on E_(component): the
    count of distinct roots of the unit factor restricted to that line."""
    _, unit = proper_transform(curve, ResolutionChart(component, k))
    on_line = unit.restrict_u0()
    if not on_line:
        return 0
    coeffs = [Fraction(0)] * (max(on_line) + 1)
    for e, c in on_line.items():
        coeffs[e] = c
    deriv = [coeffs[e] * e for e in range(1, len(coeffs))]
    d = _degree(coeffs)
    if d <= 0:
        return 0
    return d - _gcd_degree(coeffs, deriv)
