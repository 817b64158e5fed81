"""Exact polynomials in the two degree symbols d1, d2 over the rationals.

Everything downstream (intersection tables, linear forms, the symbolic
linear solve) carries its constants as these polynomials, so divisibility
and sign arguments stay exact end to end.
"""

from __future__ import annotations

from fractions import Fraction

SYMBOLS = ("d1", "d2")

Exponents = tuple[int, int]


def _monomial_key(exps: Exponents):
    # constant first, then ascending total degree; d1 before d2 within a degree
    i, j = exps
    return (i + j, -i, j)


class Poly:
    """Polynomial in d1, d2 with Fraction coefficients.

    Immutable once constructed; zero coefficients are never stored.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean: dict[Exponents, Fraction] = {}
        if terms:
            for exps, coeff in terms.items():
                coeff = Fraction(coeff)
                if coeff:
                    i, j = exps
                    if i < 0 or j < 0:
                        raise ValueError(f"negative exponent in {exps}")
                    clean[(i, j)] = coeff
        self.terms = clean

    @classmethod
    def const(cls, value) -> "Poly":
        return cls({(0, 0): Fraction(value)})

    @classmethod
    def symbol(cls, name: str) -> "Poly":
        if name not in SYMBOLS:
            raise ValueError(f"unknown degree symbol {name!r}")
        exps = (1, 0) if name == "d1" else (0, 1)
        return cls({exps: Fraction(1)})

    # -- predicates ------------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_constant(self) -> bool:
        return not self.terms or self.terms.keys() == {(0, 0)}

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self.terms.get((0, 0), Fraction(0))

    def coeff(self, exps: Exponents) -> Fraction:
        return self.terms.get(tuple(exps), Fraction(0))

    def total_degree(self) -> int:
        return max((i + j for i, j in self.terms), default=0)

    # -- arithmetic ------------------------------------------------------

    def __eq__(self, other) -> bool:
        other = as_poly(other)
        return other is not NotImplemented and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __neg__(self) -> "Poly":
        return Poly({e: -c for e, c in self.terms.items()})

    def __add__(self, other) -> "Poly":
        other = as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, Fraction(0)) + c
        return Poly(terms)

    __radd__ = __add__

    def __sub__(self, other):
        other = as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "Poly":
        other = as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        terms: dict[Exponents, Fraction] = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                e = (i1 + i2, j1 + j2)
                terms[e] = terms.get(e, Fraction(0)) + c1 * c2
        return Poly(terms)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Poly":
        if exponent < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly.const(1)
        for _ in range(exponent):
            result = result * self
        return result

    def exact_div(self, divisor) -> "Poly":
        """Divide by `divisor`, raising ValueError unless the quotient is
        again a polynomial."""
        divisor = as_poly(divisor)
        if not divisor:
            raise ZeroDivisionError("polynomial division by zero")
        if divisor.is_constant():
            c = divisor.constant_value()
            return Poly({e: v / c for e, v in self.terms.items()})
        quotient: dict[Exponents, Fraction] = {}
        rem = self
        lead = max(divisor.terms, key=_monomial_key)
        lead_c = divisor.terms[lead]
        while rem:
            (ri, rj) = max(rem.terms, key=_monomial_key)
            qi, qj = ri - lead[0], rj - lead[1]
            if qi < 0 or qj < 0:
                raise ValueError(f"{self} is not divisible by {divisor}")
            q = Poly({(qi, qj): rem.terms[(ri, rj)] / lead_c})
            for e, v in q.terms.items():
                quotient[e] = quotient.get(e, Fraction(0)) + v
            rem = rem - q * divisor
        return Poly(quotient)

    def subs(self, d1=None, d2=None):
        """Evaluate at numeric d1/d2; symbols left unset must not occur."""
        total = Fraction(0)
        for (i, j), c in self.terms.items():
            if i and d1 is None:
                raise ValueError("d1 occurs but no value was given")
            if j and d2 is None:
                raise ValueError("d2 occurs but no value was given")
            term = c
            if i:
                term *= Fraction(d1) ** i
            if j:
                term *= Fraction(d2) ** j
            total += term
        return total

    # -- rendering -------------------------------------------------------

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for exps in sorted(self.terms, key=_monomial_key):
            coeff = self.terms[exps]
            mono = "*".join(
                (sym if e == 1 else f"{sym}^{e}")
                for sym, e in zip(SYMBOLS, exps)
                if e
            )
            if not mono:
                body = str(abs(coeff))
            elif abs(coeff) == 1:
                body = mono
            else:
                body = f"{abs(coeff)}*{mono}"
            sign = "-" if coeff < 0 else "+"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"Poly({self})"


ZERO = Poly()
ONE = Poly.const(1)


def as_poly(value) -> Poly:
    """Coerce an int, Fraction, symbol name, or Poly to a Poly."""
    if isinstance(value, Poly):
        return value
    if isinstance(value, (int, Fraction)):
        return Poly.const(value)
    if isinstance(value, str) and value in SYMBOLS:
        return Poly.symbol(value)
    return NotImplemented
