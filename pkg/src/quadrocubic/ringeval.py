"""Symbolic evaluation of top intersection monomials on a blow-up chart.

The chart carries one hyperplane class H and one exceptional class E; a
top-degree monomial H^(n-i) E^i evaluates to 1 at i=0, to 0 below the
center codimension, to a signed center degree at the codimension itself,
and to a named unknown u_i above it. Products of divisor classes expand
into affine-linear combinations of those unknowns with polynomial
constants, and the resulting square systems are solved by fraction-free
elimination.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .lattice import DivisorClass
from .poly import Poly, as_poly


class DegreeMismatch(ValueError):
    """Total degree of an expression does not match the chart dimension."""


class InconsistentSystem(ValueError):
    """Linear system has no solution; carries the violated combination."""

    def __init__(self, witness):
        self.witness = witness
        super().__init__(f"inconsistent system: 0 = {witness}")


class RankDeficient(ValueError):
    """Linear system does not pin every unknown; carries a rank report."""

    def __init__(self, rank: int, pinned: list[str], free: list[str]):
        self.rank = rank
        self.pinned = pinned
        self.free = free
        super().__init__(f"rank {rank}: free unknowns {free}")


def _unknown_key(name: str):
    m = re.fullmatch(r"([a-zA-Z]+)(\d+)", name)
    return (m.group(1), int(m.group(2))) if m else (name, -1)


class LinearForm:
    """constant + sum of coeff * unknown, all coefficients exact.

    Coefficients live in the polynomial ring over d1, d2 (they are plain
    rationals in every system actually solved here). Zero coefficients
    are never stored; equality is coefficient-wise.
    """

    __slots__ = ("constant", "terms")

    def __init__(self, constant=0, terms: Mapping[str, object] | None = None):
        self.constant = as_poly(constant)
        clean: dict[str, Poly] = {}
        if terms:
            for name, coeff in terms.items():
                coeff = as_poly(coeff)
                if coeff:
                    clean[name] = coeff
        self.terms = clean

    @classmethod
    def unknown(cls, name: str) -> "LinearForm":
        return cls(0, {name: 1})

    def is_constant(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        if not isinstance(other, LinearForm):
            coerced = as_poly(other)
            if coerced is NotImplemented:
                return NotImplemented
            other = LinearForm(coerced)
        return self.constant == other.constant and self.terms == other.terms

    def __hash__(self):
        return hash((self.constant, frozenset(self.terms.items())))

    def __add__(self, other) -> "LinearForm":
        if not isinstance(other, LinearForm):
            other = LinearForm(other)
        terms = dict(self.terms)
        for name, coeff in other.terms.items():
            terms[name] = terms.get(name, Poly()) + coeff
        return LinearForm(self.constant + other.constant, terms)

    __radd__ = __add__

    def __neg__(self) -> "LinearForm":
        return LinearForm(-self.constant, {n: -c for n, c in self.terms.items()})

    def __sub__(self, other) -> "LinearForm":
        if not isinstance(other, LinearForm):
            other = LinearForm(other)
        return self + (-other)

    def __rsub__(self, other) -> "LinearForm":
        return LinearForm(other) + (-self)

    def scale(self, factor) -> "LinearForm":
        factor = as_poly(factor)
        return LinearForm(
            self.constant * factor, {n: c * factor for n, c in self.terms.items()}
        )

    __rmul__ = scale
    __mul__ = scale

    def evaluate(self, unknowns: Mapping[str, object] | None = None, d1=None, d2=None):
        """Substitute numeric values for unknowns and degree symbols."""
        unknowns = unknowns or {}
        total = self.constant.subs(d1=d1, d2=d2)
        for name, coeff in self.terms.items():
            if name not in unknowns:
                raise ValueError(f"no value supplied for unknown {name}")
            total += coeff.subs(d1=d1, d2=d2) * Fraction(unknowns[name])
        return total

    def __str__(self) -> str:
        parts: list[tuple[str, str]] = []
        if self.constant or not self.terms:
            text = str(self.constant)
            parts.append(("-", text[1:].lstrip()) if text.startswith("-") else ("+", text))
        for name in sorted(self.terms, key=_unknown_key):
            coeff = self.terms[name]
            if coeff.is_constant():
                value = coeff.constant_value()
                sign = "-" if value < 0 else "+"
                body = name if abs(value) == 1 else f"{abs(value)}*{name}"
            else:
                sign = "+"
                body = f"({coeff})*{name}"
            parts.append((sign, body))
        sign, body = parts[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"LinearForm({self})"


@dataclass(frozen=True)
class IntersectionTable:
    """Values of H^(n-i) E^i on a chart whose center has dimension m.

    deg is the center degree: an integer, or the symbol 'd1'/'d2'.
    Entries above the center codimension are the unknowns u_i.
    """

    n: int
    m: int
    deg: object
    chart: int | None = None

    def __post_init__(self):
        if not (1 <= self.m <= self.n - 2):
            raise ValueError(f"need 1 <= m <= n-2, got n={self.n}, m={self.m}")

    def entry(self, i: int) -> LinearForm:
        if not (0 <= i <= self.n):
            raise DegreeMismatch(f"exponent {i} outside 0..{self.n}")
        codim = self.n - self.m
        if i == 0:
            return LinearForm(1)
        if i < codim:
            return LinearForm(0)
        if i == codim:
            sign = (-1) ** (codim - 1)
            return LinearForm(as_poly(self.deg) * sign)
        return LinearForm.unknown(f"u{i}")

    def unknown_names(self) -> list[str]:
        return [f"u{i}" for i in range(self.n - self.m + 1, self.n + 1)]


def eh_value(n: int, m: int, deg, i: int) -> LinearForm:
    """Single table entry: H^(n-i) E^i on a chart with an m-dimensional
    center of degree `deg`."""
    return IntersectionTable(n, m, deg).entry(i)


def expand_product(
    factors: Iterable[tuple[DivisorClass, int]], table: IntersectionTable
) -> LinearForm:
    """Expand a product of powers of divisor classes against the table.

    Each factor is homogeneous of degree 1 in (H, E), so the expansion is
    a single convolution over the E-exponent; total degree must equal n.
    """
    factors = list(factors)
    chart = None
    for dc, exp in factors:
        if exp < 0:
            raise ValueError("negative exponent")
        if chart is None:
            chart = dc.chart
        elif dc.chart != chart:
            raise ValueError("factors mix charts")
    if table.chart is not None and chart is not None and chart != table.chart:
        raise ValueError(f"factors in chart {chart} but table is chart {table.chart}")
    degree = sum(exp for _, exp in factors)
    if degree != table.n:
        raise DegreeMismatch(f"expected total degree {table.n}, got {degree}")

    # coeffs[k] = coefficient of H^(n-k) E^k
    coeffs = [Fraction(1)]
    for dc, exp in factors:
        binomial = [
            math.comb(exp, k) * dc.h ** (exp - k) * dc.e**k for k in range(exp + 1)
        ]
        new = [Fraction(0)] * (len(coeffs) + exp)
        for i, ci in enumerate(coeffs):
            if not ci:
                continue
            for k, bk in enumerate(binomial):
                new[i + k] += ci * bk
        coeffs = new

    result = LinearForm(0)
    for k, ck in enumerate(coeffs):
        if ck:
            result = result + table.entry(k).scale(ck)
    return result


def solve_unknowns(
    equations: Sequence[tuple[LinearForm, object]],
) -> dict[str, Poly]:
    """Solve a linear system over the unknowns by fraction-free elimination.

    Each equation is (form, required value); the value may be an int,
    Fraction, degree symbol, or Poly. Pivoting takes the first nonzero
    entry in the current column, lowest row index first, so repeated runs
    are byte-identical. Raises InconsistentSystem with the violated
    combination, or RankDeficient with the pinned/free split.
    """
    names: set[str] = set()
    for form, _ in equations:
        names.update(form.terms)
    order = sorted(names, key=_unknown_key)
    index = {name: i for i, name in enumerate(order)}
    width = len(order)

    rows: list[list[Poly]] = []
    for form, required in equations:
        row = [Poly() for _ in range(width + 1)]
        for name, coeff in form.terms.items():
            row[index[name]] = coeff
        row[width] = as_poly(required) - form.constant
        rows.append(row)

    # Bareiss forward elimination
    pivot_rows: list[int] = []
    pivot_cols: list[int] = []
    prev_pivot = Poly.const(1)
    r = 0
    for col in range(width):
        pivot = next((i for i in range(r, len(rows)) if rows[i][col]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        piv = rows[r][col]
        for i in range(r + 1, len(rows)):
            head = rows[i][col]
            for j in range(col, width + 1):
                rows[i][j] = (piv * rows[i][j] - head * rows[r][j]).exact_div(prev_pivot)
        prev_pivot = piv
        pivot_rows.append(r)
        pivot_cols.append(col)
        r += 1

    for i in range(r, len(rows)):
        if rows[i][width]:
            raise InconsistentSystem(rows[i][width])
    if len(pivot_cols) < width:
        free = [order[c] for c in range(width) if c not in pivot_cols]
        pinned = [order[c] for c in pivot_cols]
        raise RankDeficient(len(pivot_cols), pinned, free)

    solution: dict[str, Poly] = {}
    for k in reversed(range(width)):
        row = rows[pivot_rows[k]]
        col = pivot_cols[k]
        acc = row[width]
        for j in range(col + 1, width):
            acc = acc - row[j] * solution[order[j]]
        solution[order[col]] = acc.exact_div(row[col])
    return {name: solution[name] for name in order}


def chern_from_intersections(x, y, d2):
    """First two Chern coefficients of the conormal bundle from the two
    lowest unknown intersection numbers: (-x/d2, x^2/d2^2 - y/d2)."""
    x, y, d2 = Fraction(x), Fraction(y), Fraction(d2)
    if d2 == 0:
        raise ValueError("d2 must be nonzero")
    return (-x / d2, x * x / (d2 * d2) - y / d2)


@dataclass(frozen=True)
class BundleRelation:
    """Grothendieck relation data for the projectivized conormal bundle.

    rank is the bundle rank (fiber dimension + 1); chern holds the
    coefficients c_1..c_rank of its Chern classes against powers of H
    (a shorter sequence is padded with zeros).
    """

    rank: int
    chern: tuple = field(default=())

    def chern_coeff(self, i: int) -> Fraction:
        if i == 0:
            return Fraction(1)
        if 1 <= i <= len(self.chern):
            return Fraction(self.chern[i - 1])
        return Fraction(0)


def bundle_relation_residual(
    rel: BundleRelation, table: IntersectionTable
) -> list[LinearForm]:
    """Pushed-forward consequences of the Grothendieck relation.

    Multiplies the defining relation of the projectivized bundle by the
    monomials v^k H^(m-1-k) and integrates against the table; the
    returned forms all vanish exactly when the Chern coefficients are
    consistent with the table's unknown entries. Residual 0 recovers the
    first Chern formula, residual 1 the second.
    """
    n, m = table.n, table.m
    if rel.rank != n - m:
        raise ValueError(f"rank {rel.rank} does not match codimension {n - m}")
    r = rel.rank

    def pushed(v_exp: int, h_exp: int) -> LinearForm:
        # v^v_exp H^h_exp integrated over the exceptional divisor; powers
        # of H beyond the center dimension vanish on the center
        if h_exp > m:
            return LinearForm(0)
        assert v_exp + h_exp == n - 1
        return table.entry(v_exp + 1).scale((-1) ** v_exp)

    residuals = []
    for k in range(m):
        acc = LinearForm(0)
        for i in range(r + 1):
            sign = (-1) ** i
            acc = acc + pushed(r - i + k, m - 1 - k + i).scale(sign * rel.chern_coeff(i))
        residuals.append(acc)
    return residuals
