"""Symmetric polynomial evaluation and exact Vandermonde determinants.

Two routes are provided for the complete homogeneous value h_l: a
polynomial-time recurrence through the elementary symmetric values, and a
direct monomial enumeration kept as an independent in-repo oracle.  The
recurrence is the classical one obtained from

    prod_j (1 - a_j x) * sum_l h_l x^l = 1
    =>  sum_{i=0..min(l,q)} (-1)^i e_i h_{l-i} = 0   for l >= 1.

Determinants are likewise computed two ways (cofactor expansion for small
matrices, fraction-free Bareiss elimination above that) so the code paths
cross-check each other.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Sequence

from .polynomial import Rat, as_rat

DIRECT_ENUMERATION_BUDGET = 10**6


def elementary_symmetric(values: Sequence[Rat | int | str]) -> tuple[Fraction, ...]:
    """All elementary symmetric values e_0..e_n of the inputs (e_0 = 1)."""
    vals = [as_rat(v) for v in values]
    e = [Fraction(0)] * (len(vals) + 1)
    e[0] = Fraction(1)
    for k, v in enumerate(vals, start=1):
        for j in range(k, 0, -1):
            e[j] += v * e[j - 1]
    return tuple(e)


@dataclass(frozen=True, slots=True)
class SymmetricTable:
    """Elementary values e_0..e_q and complete homogeneous values h_0..h_depth."""

    q: int
    depth: int
    e: tuple[Fraction, ...]
    h: tuple[Fraction, ...]

    @classmethod
    def build(cls, values: Sequence[Rat | int | str], depth: int) -> SymmetricTable:
        if depth < 0:
            raise ValueError("depth must be nonnegative")
        e = elementary_symmetric(values)
        q = len(e) - 1
        h = [Fraction(0)] * (depth + 1)
        h[0] = Fraction(1)
        for l in range(1, depth + 1):
            acc = Fraction(0)
            for i in range(1, min(l, q) + 1):
                term = e[i] * h[l - i]
                acc += term if i % 2 == 1 else -term
            h[l] = acc
        return cls(q=q, depth=depth, e=e, h=tuple(h))


def complete_homogeneous(values: Sequence[Rat | int | str], degree: int) -> Fraction:
    """h_degree of the inputs, via the e/h recurrence."""
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    return SymmetricTable.build(values, degree).h[degree]


def complete_homogeneous_direct(
    values: Sequence[Rat | int | str],
    degree: int,
    budget: int = DIRECT_ENUMERATION_BUDGET,
) -> Fraction:
    """h_degree by direct enumeration of weakly increasing index tuples.

    This is the oracle for `complete_homogeneous`; it is exponential in the
    degree and refuses to enumerate more than `budget` monomials.
    """
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    vals = [as_rat(v) for v in values]
    if degree == 0:
        return Fraction(1)
    if not vals:
        return Fraction(0)
    count = math.comb(len(vals) + degree - 1, degree)
    if count > budget:
        raise ValueError(
            f"enumeration budget exceeded: {count} monomials > {budget}"
        )
    total = Fraction(0)
    for combo in combinations_with_replacement(vals, degree):
        total += math.prod(combo)
    return total


def vandermonde_matrix(points: Sequence[Rat | int | str]) -> list[list[Fraction]]:
    """Rows (1, x_i, x_i^2, ..., x_i^(n-1))."""
    pts = [as_rat(p) for p in points]
    n = len(pts)
    return [[p**j for j in range(n)] for p in pts]


def vandermonde_product(points: Sequence[Rat | int | str]) -> Fraction:
    """prod_{i<j} (x_j - x_i); zero iff two points coincide, 1 for n <= 1."""
    pts = [as_rat(p) for p in points]
    out = Fraction(1)
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            out *= pts[j] - pts[i]
    return out


def generalized_vandermonde_matrix(
    points: Sequence[Rat | int | str], degree: int
) -> list[list[Fraction]]:
    """Rows (1, x_i, ..., x_i^(n-2), x_i^(n-1+degree)): the square matrix whose
    determinant factors as the Vandermonde product times h_degree."""
    if degree < 1:
        raise ValueError("degree must be a positive integer")
    pts = [as_rat(p) for p in points]
    n = len(pts)
    if n < 1:
        raise ValueError("at least one point is required")
    return [[p**j for j in range(n - 1)] + [p ** (n - 1 + degree)] for p in pts]


def generalized_vandermonde(points: Sequence[Rat | int | str], degree: int) -> Fraction:
    return determinant(generalized_vandermonde_matrix(points, degree))


def _checked(matrix: Sequence[Sequence[Rat | int | str]]) -> list[list[Fraction]]:
    rows = [[as_rat(x) for x in row] for row in matrix]
    n = len(rows)
    if any(len(row) != n for row in rows):
        raise ValueError("matrix must be square")
    return rows


def determinant_cofactor(matrix: Sequence[Sequence[Rat | int | str]]) -> Fraction:
    """Exact determinant by recursive expansion along the first row."""
    rows = _checked(matrix)

    def expand(m: list[list[Fraction]]) -> Fraction:
        n = len(m)
        if n == 0:
            return Fraction(1)
        if n == 1:
            return m[0][0]
        if n == 2:
            return m[0][0] * m[1][1] - m[0][1] * m[1][0]
        total = Fraction(0)
        for j, c in enumerate(m[0]):
            if c == 0:
                continue
            minor = [row[:j] + row[j + 1 :] for row in m[1:]]
            term = c * expand(minor)
            total += term if j % 2 == 0 else -term
        return total

    return expand(rows)


def determinant_bareiss(matrix: Sequence[Sequence[Rat | int | str]]) -> Fraction:
    """Exact determinant by fraction-free (Bareiss) elimination.

    Every division below is exact by the Sylvester identity, which keeps
    intermediate entries from exploding the way plain elimination can.
    """
    m = _checked(matrix)
    n = len(m)
    if n == 0:
        return Fraction(1)
    sign = 1
    prev = Fraction(1)
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev
            m[i][k] = Fraction(0)
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def determinant(matrix: Sequence[Sequence[Rat | int | str]]) -> Fraction:
    """Exact determinant: cofactor expansion up to 4x4, Bareiss above."""
    rows = _checked(matrix)
    if len(rows) <= 4:
        return determinant_cofactor(rows)
    return determinant_bareiss(rows)
