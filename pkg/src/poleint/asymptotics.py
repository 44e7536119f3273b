"""Point-charge potentials and the shrinking-root limit of the antiderivative.

A root configuration induces charges 1/Q'(p) at each pole p of 1/Q
(including 0).  Their total is exactly zero, so the combined logarithmic
potential sum_p (1/Q'(p)) log(z - p) is single-valued up to branch cuts and
tends to -1/(q z^q) as the roots shrink to 0.  This module quantifies that
limit: the series coefficients obey the exact scaling law

    b_{q+l}(t a_1, ..., t a_q) = t^l b_{q+l}(a_1, ..., a_q),

so the far-field error |g_t(z) + 1/(q z^q)| on a circle |z| = R is dominated
by the l = 1 term and shrinks linearly in t.

This is the only module that touches floating point; everything it reports
numerically is double precision with the tolerances owned by the caller.
The exact coefficient checks stay exact.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .integrate import RootConfig, integrate_via_expansion, partial_fractions
from .polynomial import Poly, Rat, as_rat

RATIO_BAND = (0.3, 0.7)


@dataclass(frozen=True, slots=True)
class ChargeSystem:
    """Point charges (location, magnitude) with zero total charge."""

    charges: tuple[tuple[Fraction | complex, Fraction | float], ...]

    def __post_init__(self) -> None:
        total = sum(mag for _, mag in self.charges)
        if total != 0:
            raise ValueError(f"total charge must be zero, got {total}")

    @classmethod
    def from_roots(cls, cfg: RootConfig) -> ChargeSystem:
        """Charge 1/Q'(p) at every pole p of 1/Q, including the pole at 0."""
        pf = partial_fractions(Poly.one(), cfg)
        return cls(tuple(pf.terms))

    @property
    def total_charge(self) -> Fraction | float:
        return sum(mag for _, mag in self.charges)


def potential(system: ChargeSystem, z: complex) -> complex:
    """sum_j magnitude_j * log(z - location_j) with the principal branch.

    Double precision; z must avoid the charge locations.
    """
    zc = complex(z)
    total = 0j
    for loc, mag in system.charges:
        w = zc - complex(loc)
        if w == 0:
            raise ValueError(f"potential is singular at charge location {loc}")
        total += float(mag) * cmath.log(w)
    return total


@dataclass(frozen=True, slots=True)
class ScaleRow:
    """One scale t: the exact coefficients b_{q+l}(t a) and the measured
    far-field sup error against -1/(q z^q)."""

    scale: Fraction
    coefficients: tuple[Fraction, ...]
    sup_error: float


@dataclass(frozen=True, slots=True)
class ScalingReport:
    q: int
    radius: float
    samples: int
    truncation: int
    rows: tuple[ScaleRow, ...]
    ratios: tuple[float, ...]
    strictly_decreasing: bool
    ratio_in_band: tuple[bool, ...]


def scaling_limit_table(
    cfg: RootConfig,
    scales: Sequence[Rat | int | str],
    radius: float,
    samples: int,
    truncation: int,
    max_l: int | None = None,
) -> ScalingReport:
    """For each scale t, integrate 1/Q with roots t*a and measure the sup of
    |g_t(z) + 1/(q z^q)| over equispaced points on the circle |z| = radius.

    The exact side re-verifies, per row, that the leading coefficient is
    -1/q regardless of t and that b_{q+l}(t a) = t^l b_{q+l}(a); any
    violation would be an arithmetic bug and raises.  The numeric side
    reports consecutive sup-error ratios and flags those outside
    RATIO_BAND (once the l = 1 term dominates the ratio tends to 1/2 when
    scales halve); give the scales in decreasing order to read
    `strictly_decreasing` as convergence.
    """
    t_scales = [as_rat(t) for t in scales]
    if not t_scales:
        raise ValueError("at least one scale is required")
    if any(t <= 0 for t in t_scales):
        raise ValueError("scales must be positive")
    if samples < 1:
        raise ValueError("samples must be positive")
    q = cfg.q
    largest = max(abs(t * a) for t in t_scales for a in cfg.roots)
    if not radius > float(largest):
        raise ValueError(
            "radius must exceed every scaled root magnitude "
            f"(need > {float(largest)})"
        )

    depth = truncation - q
    if max_l is not None:
        depth = min(depth, max_l)
    base = integrate_via_expansion(cfg, truncation)
    points = [
        radius * cmath.exp(2j * cmath.pi * k / samples) for k in range(samples)
    ]

    rows = []
    for t in t_scales:
        res = integrate_via_expansion(cfg.scaled(t), truncation)
        if res.series.coefficient(q) != Fraction(-1, q):
            raise ArithmeticError("leading coefficient drifted from -1/q")
        t_power = Fraction(1)
        for l in range(truncation - q + 1):
            if res.series.coefficient(q + l) != t_power * base.series.coefficient(q + l):
                raise ArithmeticError(f"t^l scaling law failed at l = {l}")
            t_power *= t
        sup = max(
            abs(res.series.evaluate(z) + 1 / (q * z**q)) for z in points
        )
        rows.append(
            ScaleRow(
                scale=t,
                coefficients=tuple(
                    res.series.coefficient(q + l) for l in range(depth + 1)
                ),
                sup_error=sup,
            )
        )

    sups = [row.sup_error for row in rows]
    ratios = tuple(sups[i + 1] / sups[i] for i in range(len(sups) - 1))
    return ScalingReport(
        q=q,
        radius=radius,
        samples=samples,
        truncation=truncation,
        rows=tuple(rows),
        ratios=ratios,
        strictly_decreasing=all(b < a for a, b in zip(sups, sups[1:])),
        ratio_in_band=tuple(RATIO_BAND[0] <= r <= RATIO_BAND[1] for r in ratios),
    )
