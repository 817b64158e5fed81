"""Tests for the exact polynomial ring in d1, d2."""

import random
from fractions import Fraction

import pytest

from quadrocubic.poly import ONE, ZERO, Poly, as_poly


def test_construction_drops_zero_coefficients():
    p = Poly({(1, 0): 3, (0, 1): 0})
    assert p.terms == {(1, 0): Fraction(3)}


def test_negative_exponent_rejected():
    with pytest.raises(ValueError):
        Poly({(-1, 0): 1})


def test_const_and_symbol():
    assert Poly.const(5).constant_value() == 5
    assert Poly.symbol("d1").terms == {(1, 0): Fraction(1)}
    assert Poly.symbol("d2").terms == {(0, 1): Fraction(1)}
    with pytest.raises(ValueError):
        Poly.symbol("d3")


def test_is_constant():
    assert ZERO.is_constant()
    assert ONE.is_constant()
    assert not Poly.symbol("d1").is_constant()
    with pytest.raises(ValueError):
        Poly.symbol("d1").constant_value()


def test_arithmetic_identities():
    d1 = Poly.symbol("d1")
    d2 = Poly.symbol("d2")
    assert d1 + d2 - d1 == d2
    assert d1 * ZERO == ZERO
    assert d1 * ONE == d1
    assert (d1 + d2) * (d1 - d2) == d1 * d1 - d2 * d2
    assert -(-d1) == d1
    assert 2 * d1 == d1 + d1
    assert 3 - d1 == -(d1 - 3)


def test_pow():
    d1 = Poly.symbol("d1")
    assert d1**0 == ONE
    assert d1**3 == d1 * d1 * d1
    with pytest.raises(ValueError):
        d1 ** (-1)


def test_equality_with_scalars():
    assert Poly.const(7) == 7
    assert Poly.const(Fraction(1, 2)) == Fraction(1, 2)
    assert ZERO == 0
    assert Poly.symbol("d1") != 1


def test_hash_consistency():
    assert hash(Poly.const(4)) == hash(Poly({(0, 0): 4}))
    d = {Poly.symbol("d1"): "a"}
    assert d[Poly.symbol("d1")] == "a"


def test_exact_div_by_constant():
    p = Poly({(1, 0): 6, (0, 0): 9})
    q = p.exact_div(3)
    assert q == Poly({(1, 0): 2, (0, 0): 3})


def test_exact_div_polynomial():
    d1 = Poly.symbol("d1")
    d2 = Poly.symbol("d2")
    assert (d1 * d1 - d2 * d2).exact_div(d1 - d2) == d1 + d2
    assert (d1 * d2 + d1).exact_div(d1) == d2 + 1


def test_exact_div_inexact_raises():
    d1 = Poly.symbol("d1")
    with pytest.raises(ValueError):
        (d1 + 1).exact_div(d1 * d1)
    with pytest.raises(ZeroDivisionError):
        d1.exact_div(0)


def test_exact_div_random_roundtrip():
    rng = random.Random(20240)
    syms = [Poly.symbol("d1"), Poly.symbol("d2"), ONE]
    for _ in range(300):
        p = Poly.const(rng.randint(-9, 9))
        q = Poly.const(rng.randint(1, 5))
        for _ in range(rng.randint(1, 3)):
            p = p * rng.choice(syms) + rng.randint(-9, 9)
            q = q * rng.choice(syms) + rng.randint(0, 3)
        if not q:
            continue
        assert (p * q).exact_div(q) == p


def test_subs():
    p = Poly({(1, 0): 1, (0, 1): -2, (0, 0): 5})
    assert p.subs(d1=3, d2=1) == 6
    assert Poly.const(4).subs() == 4
    with pytest.raises(ValueError):
        p.subs(d1=3)


def test_str_ordering():
    # constant first, then ascending degree with d1 before d2
    p = Poly({(0, 1): -2016, (0, 0): 512})
    assert str(p) == "512 - 2016*d2"
    q = Poly({(0, 0): -37, (1, 0): -1, (0, 1): 12})
    assert str(q) == "-37 - d1 + 12*d2"
    assert str(ZERO) == "0"
    assert str(Poly.symbol("d1") ** 2) == "d1^2"


def test_total_degree():
    assert ZERO.total_degree() == 0
    assert (Poly.symbol("d1") * Poly.symbol("d2")).total_degree() == 2


def test_as_poly():
    assert as_poly(3) == Poly.const(3)
    assert as_poly("d1") == Poly.symbol("d1")
    assert as_poly(object()) is NotImplemented
