"""Rank-2 Picard lattice of the double blow-up variety.

A divisor class lives in one of two chart bases, {H1, E1} or {H2, E2},
coming from the two blow-down maps to projective space. The pairing
numbers a, b, c, d of the hyperplane and exceptional classes against the
two contracted curve classes determine an integral basis change between
the charts with determinant -1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction


class ChartMismatch(ValueError):
    """Arithmetic attempted between divisor classes in different charts."""


class ConstraintViolation(ValueError):
    """A named integrality or positivity constraint failed."""

    def __init__(self, name: str, message: str):
        self.name = name
        super().__init__(f"{name}: {message}")


@dataclass(frozen=True)
class GeometryParams:
    """Ambient dimension, center dimensions, and (optional) center degrees."""

    n: int
    m1: int
    m2: int
    d1: int | None = None
    d2: int | None = None

    def __post_init__(self):
        if self.n < 4:
            raise ConstraintViolation("dimension-floor", f"n={self.n} < 4")
        if not (self.n - 2 >= self.m1 > self.m2 >= 1):
            raise ConstraintViolation(
                "center-dims",
                f"need n-2 >= m1 > m2 >= 1, got n={self.n}, m1={self.m1}, m2={self.m2}",
            )
        for name, deg in (("d1", self.d1), ("d2", self.d2)):
            if deg is not None and deg < 2:
                raise ConstraintViolation("center-degree", f"{name}={deg} < 2")


@dataclass(frozen=True)
class LatticeParams:
    """Pairing numbers a = H1.F2, b = H2.F1, c = E1.F2, d = E2.F1.

    b is stored but always set equal to a; the equality is a recorded
    check (`pairing_symmetry_holds`), not an assumption baked into math
    elsewhere.
    """

    a: int
    c: int
    d: int
    b: int = field(default=-1)

    def __post_init__(self):
        if self.b == -1:
            object.__setattr__(self, "b", self.a)
        if self.a <= 0 or self.c <= 0 or self.d <= 0:
            raise ConstraintViolation(
                "pairing-positivity", f"need a, c, d > 0, got {self.a}, {self.c}, {self.d}"
            )

    def pairing_symmetry_holds(self) -> bool:
        return self.a == self.b > 0

    def divides_cd_minus_one(self) -> bool:
        return (self.c * self.d - 1) % self.a == 0


@dataclass(frozen=True)
class DivisorClass:
    """Exact 2-vector in the basis {H, E} of one chart."""

    chart: int
    h: Fraction
    e: Fraction

    def __post_init__(self):
        if self.chart not in (1, 2):
            raise ValueError(f"chart must be 1 or 2, got {self.chart}")
        object.__setattr__(self, "h", Fraction(self.h))
        object.__setattr__(self, "e", Fraction(self.e))

    def _require_same_chart(self, other: "DivisorClass"):
        if self.chart != other.chart:
            raise ChartMismatch(
                f"chart {self.chart} vs chart {other.chart}: convert explicitly first"
            )

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        self._require_same_chart(other)
        return DivisorClass(self.chart, self.h + other.h, self.e + other.e)

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        self._require_same_chart(other)
        return DivisorClass(self.chart, self.h - other.h, self.e - other.e)

    def __neg__(self) -> "DivisorClass":
        return DivisorClass(self.chart, -self.h, -self.e)

    def scale(self, k) -> "DivisorClass":
        k = Fraction(k)
        return DivisorClass(self.chart, k * self.h, k * self.e)

    __rmul__ = scale

    def __str__(self) -> str:
        return f"{self.h}*H{self.chart} + {self.e}*E{self.chart}"


def hyperplane(chart: int) -> DivisorClass:
    return DivisorClass(chart, 1, 0)


def exceptional(chart: int) -> DivisorClass:
    return DivisorClass(chart, 0, 1)


@dataclass(frozen=True)
class BasisChange:
    """Integral 2x2 matrix sending chart-1 coordinates to chart-2 ones.

    Row 1 holds the chart-2 coordinates of H1, row 2 those of E1.
    """

    m11: int
    m12: int
    m21: int
    m22: int

    def determinant(self) -> int:
        return self.m11 * self.m22 - self.m12 * self.m21

    def apply(self, dc: DivisorClass) -> DivisorClass:
        if dc.chart != 1:
            raise ChartMismatch("basis change maps chart-1 classes to chart 2")
        return DivisorClass(
            2,
            dc.h * self.m11 + dc.e * self.m21,
            dc.h * self.m12 + dc.e * self.m22,
        )

    def inverse(self) -> "BasisChange":
        det = self.determinant()
        if det not in (1, -1):
            raise ConstraintViolation("unimodularity", f"determinant {det} is not a unit")
        return BasisChange(self.m22 // det, -self.m12 // det, -self.m21 // det, self.m11 // det)

    def apply_inverse(self, dc: DivisorClass) -> DivisorClass:
        if dc.chart != 2:
            raise ChartMismatch("inverse basis change maps chart-2 classes to chart 1")
        inv = self.inverse()
        return DivisorClass(
            1,
            dc.h * inv.m11 + dc.e * inv.m21,
            dc.h * inv.m12 + dc.e * inv.m22,
        )


def solve_basis_change(lp: LatticeParams) -> BasisChange:
    """Basis change determined by the pairing numbers.

    H1 = d*H2 - a*E2 and E1 = ((cd-1)/a)*H2 - c*E2; requires a | cd-1,
    and the resulting matrix always has determinant -1.
    """
    cd_minus_1 = lp.c * lp.d - 1
    if cd_minus_1 % lp.a != 0:
        raise ConstraintViolation(
            "a-divides-cd-minus-1", f"a={lp.a} does not divide c*d-1={cd_minus_1}"
        )
    bc = BasisChange(lp.d, -lp.a, cd_minus_1 // lp.a, -lp.c)
    assert bc.determinant() == -1
    return bc


_PAIRING = {
    # (chart, curve) -> (H.curve, E.curve) as functions of the params
    (1, "F1"): lambda lp: (0, -1),
    (1, "F2"): lambda lp: (lp.a, lp.c),
    (2, "F2"): lambda lp: (0, -1),
    (2, "F1"): lambda lp: (lp.b, lp.d),
}


def pairing(dc: DivisorClass, curve: str, lp: LatticeParams) -> Fraction:
    """Intersection of a divisor class with one of the curve classes F1, F2."""
    if curve not in ("F1", "F2"):
        raise ValueError(f"curve must be 'F1' or 'F2', got {curve!r}")
    h_pair, e_pair = _PAIRING[(dc.chart, curve)](lp)
    return dc.h * h_pair + dc.e * e_pair


def canonical_class(chart: int, gp: GeometryParams) -> DivisorClass:
    """-(n+1)*H + (n - m - 1)*E in the requested chart (m = that chart's
    center dimension)."""
    m = gp.m1 if chart == 1 else gp.m2
    return DivisorClass(chart, -(gp.n + 1), gp.n - m - 1)
