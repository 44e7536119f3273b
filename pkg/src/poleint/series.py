"""Truncated formal series in 1/z with exact rational coefficients.

A value stores the coefficients b_0..b_N of

    sum_{n=0}^{N} b_n z^{-n}  +  O(z^{-(N+1)})

together with the truncation index N.  The window of known coefficients is
explicit data: every operation returns the largest window its inputs can
soundly support, so a result's coefficients are always exact, never merely
"probably right up to where we stopped".

Two series can only be compared where both are known; `agrees_with` does
exactly that.  The valuation of a series is the index of its first nonzero
stored coefficient, or INFINITY when every stored coefficient vanishes.

Differentiation acts term by term and gains one order of information;
antidifferentiation loses one.  A series with a nonzero z^0 or z^-1 term
has no antiderivative in this ring (the z^-1 term would integrate to a
logarithm), which raises NotIntegrableInRing.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .polynomial import Poly, Rat, as_rat

INFINITY = math.inf


class NotIntegrableInRing(ValueError):
    """The antiderivative would leave the ring of series in 1/z."""


@dataclass(frozen=True, slots=True)
class InvZSeries:
    truncation: int
    coefficients: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if self.truncation < 0:
            raise ValueError("truncation must be nonnegative")
        coeffs = tuple(as_rat(c) for c in self.coefficients)
        if len(coeffs) != self.truncation + 1:
            raise ValueError(
                f"expected {self.truncation + 1} coefficients, got {len(coeffs)}"
            )
        object.__setattr__(self, "coefficients", coeffs)

    # -- constructors --------------------------------------------------

    @classmethod
    def zero(cls, truncation: int) -> InvZSeries:
        return cls(truncation, (Fraction(0),) * (truncation + 1))

    @classmethod
    def from_coefficients(
        cls, coefficients: Iterable[Rat | int | str], truncation: int | None = None
    ) -> InvZSeries:
        """Series with the given b_0, b_1, ... coefficients.

        With an explicit truncation the sequence is padded with zeros or cut
        to the stated window; otherwise the window is what was passed.
        """
        coeffs = [as_rat(c) for c in coefficients]
        if truncation is None:
            if not coeffs:
                raise ValueError("empty coefficient sequence needs a truncation")
            truncation = len(coeffs) - 1
        coeffs = coeffs[: truncation + 1]
        coeffs += [Fraction(0)] * (truncation + 1 - len(coeffs))
        return cls(truncation, tuple(coeffs))

    @classmethod
    def inverse_linear(cls, a: Rat | int | str, truncation: int) -> InvZSeries:
        """The expansion 1/(z - a) = sum_{n>=0} a^n z^-(n+1).

        Defining contract: multiplying by the series of (1 - a/z) gives z^-1
        on the shared window, so the z-shifted product recovers 1.
        """
        ar = as_rat(a)
        coeffs = [Fraction(0)] * (truncation + 1)
        power = Fraction(1)
        for n in range(1, truncation + 1):
            coeffs[n] = power
            power *= ar
        return cls(truncation, tuple(coeffs))

    @classmethod
    def log_factor(cls, a: Rat | int | str, truncation: int) -> InvZSeries:
        """The series of log(1 - a/z) with zero constant term:

            L(a) = - sum_{n>=1} (a^n / n) z^-n.

        Defining contract: L(a)' equals a/(z(z-a)), i.e. a * inverse_linear(a)
        shifted down one power.  The sign and index range here are forced by
        that derivative identity.
        """
        ar = as_rat(a)
        coeffs = [Fraction(0)] * (truncation + 1)
        power = ar
        for n in range(1, truncation + 1):
            coeffs[n] = -power / n
            power *= ar
        return cls(truncation, tuple(coeffs))

    @classmethod
    def from_rational(
        cls, numerator: Poly, denominator: Poly, truncation: int
    ) -> InvZSeries:
        """Expansion at infinity of numerator/denominator, root-free.

        Requires deg(numerator) < deg(denominator) and a nonzero denominator;
        the result f is the unique series with zero constant term satisfying
        denominator * f = numerator, obtained by long division in powers of
        1/z using only the polynomial coefficients.
        """
        if denominator.is_zero:
            raise ValueError("denominator must be nonzero")
        if numerator.degree >= denominator.degree:
            raise ValueError("numerator degree must be below denominator degree")
        lead = denominator.leading_coefficient
        if lead != 1:
            numerator = numerator * (1 / lead)
            denominator = denominator * (1 / lead)
        d = denominator.degree
        coeffs = [Fraction(0)] * (truncation + 1)
        for n in range(1, truncation + 1):
            m = n - 1
            acc = numerator.coefficient(d - 1 - m)
            for j in range(1, min(d, m) + 1):
                acc -= denominator.coefficient(d - j) * coeffs[n - j]
            coeffs[n] = acc
        return cls(truncation, tuple(coeffs))

    # -- structure -----------------------------------------------------

    def coefficient(self, n: int) -> Fraction:
        if not 0 <= n <= self.truncation:
            raise ValueError(
                f"coefficient {n} is outside the known window 0..{self.truncation}"
            )
        return self.coefficients[n]

    def valuation(self) -> int | float:
        """Index of the first nonzero stored coefficient; INFINITY if none."""
        for n, c in enumerate(self.coefficients):
            if c != 0:
                return n
        return INFINITY

    def _first_possible_nonzero(self) -> int:
        """Lower bound on the true valuation (window valuation, else N+1)."""
        v = self.valuation()
        return self.truncation + 1 if v == INFINITY else int(v)

    def truncate(self, truncation: int) -> InvZSeries:
        if truncation > self.truncation:
            raise ValueError("cannot extend a series beyond its known window")
        return InvZSeries(truncation, self.coefficients[: truncation + 1])

    def agrees_with(self, other: InvZSeries) -> bool:
        """Equality up to the smaller of the two truncations."""
        n = min(self.truncation, other.truncation)
        return self.coefficients[: n + 1] == other.coefficients[: n + 1]

    # -- ring operations -------------------------------------------------

    def __add__(self, other: InvZSeries) -> InvZSeries:
        if not isinstance(other, InvZSeries):
            return NotImplemented
        n = min(self.truncation, other.truncation)
        return InvZSeries(
            n,
            tuple(
                self.coefficients[i] + other.coefficients[i] for i in range(n + 1)
            ),
        )

    def __neg__(self) -> InvZSeries:
        return InvZSeries(self.truncation, tuple(-c for c in self.coefficients))

    def __sub__(self, other: InvZSeries) -> InvZSeries:
        if not isinstance(other, InvZSeries):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: InvZSeries | Rat | int | str) -> InvZSeries:
        if not isinstance(other, InvZSeries):
            c = as_rat(other)
            return InvZSeries(
                self.truncation, tuple(c * b for b in self.coefficients)
            )
        # The unknown tail of one factor first pollutes the product at the
        # tail index plus the other factor's first possibly-nonzero index.
        nf, ng = self.truncation, other.truncation
        window = min(nf + other._first_possible_nonzero(), ng + self._first_possible_nonzero())
        out = []
        for n in range(window + 1):
            acc = Fraction(0)
            for i in range(max(0, n - ng), min(n, nf) + 1):
                a = self.coefficients[i]
                if a != 0:
                    acc += a * other.coefficients[n - i]
            out.append(acc)
        return InvZSeries(window, tuple(out))

    def __rmul__(self, other: Rat | int | str) -> InvZSeries:
        return self.__mul__(other)

    def mul_z_power(self, k: int) -> InvZSeries:
        """Multiply by z^k.  For k > 0 the first k coefficients must vanish,
        otherwise the result would have positive powers of z."""
        if k == 0:
            return self
        if k < 0:
            pad = (Fraction(0),) * (-k)
            return InvZSeries(self.truncation - k, pad + self.coefficients)
        if k > self.truncation:
            raise ValueError("multiplying by z^k exhausts the known window")
        if any(c != 0 for c in self.coefficients[:k]):
            raise ValueError(
                "multiplying by z^k would create positive powers of z"
            )
        return InvZSeries(self.truncation - k, self.coefficients[k:])

    # -- calculus ---------------------------------------------------------

    def derivative(self) -> InvZSeries:
        """Term-by-term derivative: b_n z^-n maps to -n b_n z^-(n+1).

        The unknown tail starts one order later, so the window grows by one.
        """
        out = [Fraction(0)] * (self.truncation + 2)
        for n in range(1, self.truncation + 1):
            out[n + 1] = -n * self.coefficients[n]
        return InvZSeries(self.truncation + 1, tuple(out))

    def antiderivative(self) -> InvZSeries:
        """The antiderivative normalized to vanish at infinity (b_0 = 0).

        Requires zero z^0 and z^-1 coefficients; the latter would integrate
        to a logarithm, which this ring cannot express.
        """
        if self.truncation < 1:
            raise ValueError(
                "window too small to certify the z^-1 coefficient vanishes"
            )
        if self.coefficients[0] != 0:
            raise NotIntegrableInRing(
                "nonzero z^0 coefficient: the antiderivative is not a series in 1/z"
            )
        if self.coefficients[1] != 0:
            raise NotIntegrableInRing(
                "nonzero z^-1 coefficient: its antiderivative is a logarithm"
            )
        out = [Fraction(0)] * self.truncation
        for m in range(1, self.truncation):
            out[m] = -self.coefficients[m + 1] / m
        return InvZSeries(self.truncation - 1, tuple(out))

    # -- numerics -----------------------------------------------------------

    def evaluate(self, z: complex) -> complex:
        """Sum the truncated series at a nonzero point, in double precision."""
        w = 1 / complex(z)
        acc = 0j
        for c in reversed(self.coefficients):
            acc = acc * w + float(c)
        return acc

    def __str__(self) -> str:
        parts = []
        for n, c in enumerate(self.coefficients):
            if c == 0:
                continue
            parts.append(f"{c}*z^-{n}" if n else f"{c}")
        body = " + ".join(parts) if parts else "0"
        return f"{body} + O(z^-{self.truncation + 1})"
