"""Dense univariate polynomials over the exact rational field.

The coefficient field is `fractions.Fraction`: values are always stored
reduced with a positive denominator, and every operation here is exact.
Nothing below uses more than +, -, *, / and equality, so any exact field
type speaking the Python number protocol could be dropped in.

Coefficients are stored lowest degree first, normalized so that a nonzero
polynomial has a nonzero leading coefficient.  The zero polynomial is the
empty tuple and has degree -1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

Rat = Fraction


def as_rat(value: Rat | int | str) -> Fraction:
    """Coerce to an exact rational; floats are refused to keep arithmetic exact."""
    if isinstance(value, float):
        raise TypeError("floats are not exact; pass a Fraction, int, or string")
    return Fraction(value)


@dataclass(frozen=True, slots=True)
class Poly:
    """Polynomial in z as a normalized tuple of rational coefficients."""

    coefficients: tuple[Fraction, ...] = ()

    def __post_init__(self) -> None:
        coeffs = [as_rat(c) for c in self.coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coefficients", tuple(coeffs))

    @classmethod
    def zero(cls) -> Poly:
        return cls(())

    @classmethod
    def one(cls) -> Poly:
        return cls((1,))

    @classmethod
    def z(cls) -> Poly:
        return cls((0, 1))

    @classmethod
    def constant(cls, value: Rat | int | str) -> Poly:
        return cls((value,))

    @classmethod
    def from_roots(
        cls, roots: Iterable[Rat | int | str], include_zero_root: bool = False
    ) -> Poly:
        """Monic polynomial with exactly the given roots (plus 0 when flagged)."""
        p = cls.z() if include_zero_root else cls.one()
        for r in roots:
            p = p * cls((-as_rat(r), Fraction(1)))
        return p

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coefficients

    @property
    def leading_coefficient(self) -> Fraction:
        return self.coefficients[-1] if self.coefficients else Fraction(0)

    def coefficient(self, n: int) -> Fraction:
        """Coefficient of z^n (zero outside the stored range)."""
        if 0 <= n < len(self.coefficients):
            return self.coefficients[n]
        return Fraction(0)

    def __add__(self, other: Poly | Rat | int) -> Poly:
        if not isinstance(other, Poly):
            other = Poly.constant(other)
        a, b = self.coefficients, other.coefficients
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly(tuple(-c for c in self.coefficients))

    def __sub__(self, other: Poly | Rat | int) -> Poly:
        if not isinstance(other, Poly):
            other = Poly.constant(other)
        return self + (-other)

    def __mul__(self, other: Poly | Rat | int | str) -> Poly:
        if not isinstance(other, Poly):
            c = as_rat(other)
            return Poly(tuple(c * a for a in self.coefficients))
        if self.is_zero or other.is_zero:
            return Poly.zero()
        out = [Fraction(0)] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if a == 0:
                continue
            for j, b in enumerate(other.coefficients):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> Poly:
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial exponent must be a nonnegative integer")
        result = Poly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other: Poly) -> tuple[Poly, Poly]:
        """Exact quotient and remainder with deg(remainder) < deg(divisor)."""
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        quot: list[Fraction] = [Fraction(0)] * max(self.degree - other.degree + 1, 0)
        rem = list(self.coefficients)
        d = other.degree
        lead = other.leading_coefficient
        while len(rem) - 1 >= d and any(rem):
            while rem and rem[-1] == 0:
                rem.pop()
            if len(rem) - 1 < d:
                break
            shift = len(rem) - 1 - d
            factor = rem[-1] / lead
            quot[shift] = factor
            for i, c in enumerate(other.coefficients):
                rem[shift + i] -= factor * c
        return Poly(quot), Poly(rem)

    def __mod__(self, other: Poly) -> Poly:
        return divmod(self, other)[1]

    def derivative(self) -> Poly:
        """Formal derivative: z maps to 1, constants map to zero."""
        return Poly(tuple(i * c for i, c in enumerate(self.coefficients) if i > 0))

    def __call__(self, x: Rat | int | str) -> Fraction:
        xr = as_rat(x)
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * xr + c
        return acc

    def monic(self) -> Poly:
        if self.is_zero:
            raise ValueError("the zero polynomial has no monic form")
        return self * (1 / self.leading_coefficient)

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts: list[str] = []
        for i in range(self.degree, -1, -1):
            c = self.coefficients[i]
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                zpart = "z" if i == 1 else f"z^{i}"
                body = zpart if mag == 1 else f"{mag}*{zpart}"
            if not parts:
                if c < 0:
                    # a leading "-z^k" would parse as (-z)^k; spell the unit out
                    if mag == 1 and i >= 2:
                        body = f"-1*{zpart}"
                    else:
                        body = f"-{body}"
                parts.append(body)
            else:
                parts.append(f" {'-' if c < 0 else '+'} {body}")
        return "".join(parts)


def gcd(p: Poly, q: Poly) -> Poly:
    """Monic greatest common divisor by the Euclidean algorithm."""
    if p.is_zero and q.is_zero:
        raise ValueError("gcd of two zero polynomials is undefined")
    a, b = p, q
    while not b.is_zero:
        a, b = b, a % b
    return a.monic()


def is_squarefree(p: Poly) -> bool:
    """True iff p has no repeated roots, i.e. gcd(p, p') is a nonzero constant."""
    if p.is_zero:
        raise ValueError("square-freeness of the zero polynomial is undefined")
    return gcd(p, p.derivative()).degree == 0
