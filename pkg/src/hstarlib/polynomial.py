"""Dense exact polynomial arithmetic and the series transforms built on it.

Two coefficient domains: Python ints (arbitrary precision) for numerator
polynomials such as h*, and ``fractions.Fraction`` for counting polynomials
in n (Ehrhart, order, chromatic).  Nothing here ever touches floating
point; every operation is exact.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Iterable, Sequence

from .errors import InvalidInput

#: Degree of the zero polynomial.  Compares below every integer, so
#: preconditions of the form ``degree(p) <= D`` hold vacuously for zero.
NEG_INF = float("-inf")


def _trim(coeffs: list) -> tuple:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class IntPolynomial:
    """Polynomial with integer coefficients, stored densely ascending.

    Trailing zeros are trimmed at construction; the zero polynomial has
    empty ``coeffs`` and degree ``NEG_INF``.  Instances are immutable and
    hashable.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()) -> None:
        cleaned = []
        for c in coeffs:
            if isinstance(c, Fraction):
                if c.denominator != 1:
                    raise InvalidInput(f"non-integer coefficient {c}")
                c = c.numerator
            elif not isinstance(c, int):
                raise InvalidInput(f"integer coefficient expected, got {c!r}")
            cleaned.append(c)
        self._coeffs = _trim(cleaned)

    @classmethod
    def zero(cls) -> "IntPolynomial":
        return cls()

    @classmethod
    def one(cls) -> "IntPolynomial":
        return cls((1,))

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> "IntPolynomial":
        return cls([0] * degree + [coeff])

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self._coeffs

    @property
    def degree(self):
        """Degree, or ``NEG_INF`` for the zero polynomial."""
        return len(self._coeffs) - 1 if self._coeffs else NEG_INF

    def __getitem__(self, i: int) -> int:
        if i < 0:
            raise IndexError("negative coefficient index")
        return self._coeffs[i] if i < len(self._coeffs) else 0

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, IntPolynomial):
            return self._coeffs == other._coeffs
        if isinstance(other, int):
            return self._coeffs == ((other,) if other else ())
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial(out)

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial([-c for c in self._coeffs])

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPolynomial([other * c for c in self._coeffs])
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        if not self._coeffs or not other._coeffs:
            return IntPolynomial()
        out = [0] * (len(self._coeffs) + len(other._coeffs) - 1)
        for i, a in enumerate(self._coeffs):
            for j, b in enumerate(other._coeffs):
                out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __call__(self, x):
        """Evaluate by Horner; exact for int or Fraction arguments."""
        acc = 0
        for c in reversed(self._coeffs):
            acc = acc * x + c
        return acc

    def shift(self, k: int) -> "IntPolynomial":
        """Multiply by z^k (k >= 0)."""
        return IntPolynomial([0] * k + list(self._coeffs))

    def is_palindromic(self, center: int) -> bool:
        """True iff p(z) = z^center * p(1/z), i.e. p_i = p_{center-i}.

        The zero polynomial is palindromic for every center.
        """
        if not self._coeffs:
            return True
        if self.degree > center:
            return False
        return all(self[i] == self[center - i] for i in range(center + 1))

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self._coeffs)

    def to_rational(self) -> "RatPolynomial":
        return RatPolynomial(self._coeffs)

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self._coeffs)!r})"


class RatPolynomial:
    """Polynomial with exact rational coefficients, stored densely ascending."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable = ()) -> None:
        cleaned = []
        for c in coeffs:
            if isinstance(c, float):
                raise InvalidInput("floating point coefficients are not allowed")
            cleaned.append(Fraction(c))
        self._coeffs = _trim(cleaned)

    @classmethod
    def zero(cls) -> "RatPolynomial":
        return cls()

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree(self):
        return len(self._coeffs) - 1 if self._coeffs else NEG_INF

    def __getitem__(self, i: int) -> Fraction:
        if i < 0:
            raise IndexError("negative coefficient index")
        return self._coeffs[i] if i < len(self._coeffs) else Fraction(0)

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, RatPolynomial):
            return self._coeffs == other._coeffs
        if isinstance(other, IntPolynomial):
            return self._coeffs == other.to_rational()._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __add__(self, other: "RatPolynomial") -> "RatPolynomial":
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return RatPolynomial(out)

    def __neg__(self) -> "RatPolynomial":
        return RatPolynomial([-c for c in self._coeffs])

    def __sub__(self, other: "RatPolynomial") -> "RatPolynomial":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return RatPolynomial([other * c for c in self._coeffs])
        if not isinstance(other, RatPolynomial):
            return NotImplemented
        if not self._coeffs or not other._coeffs:
            return RatPolynomial()
        out = [Fraction(0)] * (len(self._coeffs) + len(other._coeffs) - 1)
        for i, a in enumerate(self._coeffs):
            for j, b in enumerate(other._coeffs):
                out[i + j] += a * b
        return RatPolynomial(out)

    __rmul__ = __mul__

    def __call__(self, x) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self._coeffs):
            acc = acc * x + c
        return acc

    def leading_coefficient(self) -> Fraction:
        if not self._coeffs:
            raise InvalidInput("zero polynomial has no leading coefficient")
        return self._coeffs[-1]

    def to_int_polynomial(self) -> IntPolynomial:
        """Convert when every coefficient is an integer; raise otherwise."""
        return IntPolynomial(self._coeffs)

    def __repr__(self) -> str:
        return f"RatPolynomial({[str(c) for c in self._coeffs]!r})"


# ---------------------------------------------------------------------------
# series transforms


def reverse(p: IntPolynomial, D: int) -> IntPolynomial:
    """Coefficient reversal q(z) = z^D * p(1/z), i.e. q_i = p_{D-i}.

    Requires degree(p) <= D; the zero polynomial reverses to itself.
    """
    if D < 0:
        raise InvalidInput("reversal degree must be nonnegative")
    if p.degree > D:
        raise InvalidInput(f"cannot reverse degree {p.degree} into degree {D}")
    return IntPolynomial([p[D - i] for i in range(D + 1)])


def interpolate(points: Sequence[tuple[int, Fraction | int]]) -> RatPolynomial:
    """Exact Lagrange interpolation through the given (node, value) pairs.

    Nodes must be distinct integers; the result is the unique polynomial of
    degree < len(points) through all of them.
    """
    if not points:
        raise InvalidInput("interpolation needs at least one point")
    nodes = [n for n, _ in points]
    if len(set(nodes)) != len(nodes):
        raise InvalidInput("duplicate interpolation nodes")
    result = RatPolynomial()
    for k, (nk, vk) in enumerate(points):
        # Lagrange basis polynomial through node nk, scaled by the value.
        basis = RatPolynomial((1,))
        denom = Fraction(1)
        for j, (nj, _) in enumerate(points):
            if j == k:
                continue
            basis = basis * RatPolynomial((-nj, 1))
            denom *= nk - nj
        result = result + basis * (Fraction(vk) / denom)
    return result


def series_numerator(L: RatPolynomial, d: int) -> IntPolynomial:
    """Numerator h with sum_{n>=0} L(n) z^n = h(z) / (1-z)^{d+1}.

    h_j = sum_{i=0..j} (-1)^i C(d+1, i) L(j-i); requires degree(L) <= d and
    L integer-valued on the nodes 0..d (a fractional h coefficient means one
    of those assumptions failed).
    """
    if d < 0:
        raise InvalidInput("d must be nonnegative")
    if L.degree > d:
        raise InvalidInput(f"degree {L.degree} exceeds ambient d = {d}")
    values = [L(n) for n in range(d + 1)]
    coeffs = []
    for j in range(d + 1):
        h_j = Fraction(0)
        for i in range(j + 1):
            h_j += (-1) ** i * comb(d + 1, i) * values[j - i]
        if h_j.denominator != 1:
            raise InvalidInput(
                f"series numerator coefficient {j} is {h_j}, not an integer; "
                "the counting polynomial is not integer-valued or d is wrong"
            )
        coeffs.append(h_j.numerator)
    return IntPolynomial(coeffs)


def expand_series(h: IntPolynomial, d: int, N: int) -> list[int]:
    """First N+1 power-series coefficients of h(z) / (1-z)^{d+1}.

    Inverse of :func:`series_numerator`: coefficient n is
    sum_j h_j * C(n - j + d, d) over j <= min(n, deg h).
    """
    if d < 0 or N < 0:
        raise InvalidInput("d and N must be nonnegative")
    out = []
    top = len(h.coeffs)
    for n in range(N + 1):
        out.append(sum(h[j] * comb(n - j + d, d) for j in range(min(n, top - 1) + 1)))
    return out


def f_to_h(f: IntPolynomial, d: int) -> IntPolynomial:
    """h(z) = (1-z)^{d+1} f(z/(1-z)), expanded exactly.

    This turns the face-count polynomial of a unimodular triangulation of a
    d-polytope into its h-polynomial.  Requires f_0 = 1 (the empty face) and
    degree(f) <= d+1.
    """
    if f[0] != 1:
        raise InvalidInput("face polynomial must have constant term 1")
    if f.degree > d + 1:
        raise InvalidInput(f"degree {f.degree} exceeds d + 1 = {d + 1}")
    # (1-z)^{d+1} f(z/(1-z)) = sum_i f_i z^i (1-z)^{d+1-i}
    out = [0] * (d + 2)
    for i, fi in enumerate(f.coeffs):
        if fi == 0:
            continue
        m = d + 1 - i
        for k in range(m + 1):
            out[i + k] += fi * (-1) ** k * comb(m, k)
    return IntPolynomial(out)
