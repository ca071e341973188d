import cmath

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from mspotty.cyclotomic import CycInt, add, as_integer, cyclotomic_polynomial, mul, root
from mspotty.errors import ModulusMismatch, NotAnInteger
from mspotty.cyclotomic import exponent_sum_to_int
from mspotty.rings import build


def numeric(a: CycInt) -> complex:
    return sum(c * cmath.exp(2j * cmath.pi * j / a.modulus) for j, c in enumerate(a.coeffs))


def test_root_examples():
    assert root(6, 0) == 1
    assert root(6, 7).coeffs == root(6, 1).coeffs == (0, 1, 0, 0, 0, 0)
    assert root(1, 5) == 1


def test_sums_of_roots():
    assert as_integer(add(add(root(3, 0), root(3, 1)), root(3, 2))) == 0
    assert mul(root(4, 1), root(4, 3)) == 1
    assert as_integer(root(6, 2) + root(6, 4) + 1) == 0


def test_as_integer_examples():
    assert (root(3, 0) + root(3, 1) + root(3, 2)).as_integer() == 0
    assert CycInt(7, [5, 0, 0, 0, 0, 0, 0]).as_integer() == 5
    assert root(6, 1).as_integer() is None


@pytest.mark.parametrize("M,expected", [
    (1, (-1, 1)), (2, (1, 1)), (3, (1, 1, 1)), (4, (1, 0, 1)), (6, (1, -1, 1)),
    (8, (1, 0, 0, 0, 1)), (12, (1, 0, -1, 0, 1)),
])
def test_cyclotomic_polynomials(M, expected):
    assert cyclotomic_polynomial(M) == expected


def test_cyclotomic_polynomial_roots_numerically():
    for M in range(1, 40):
        phi = cyclotomic_polynomial(M)
        z = cmath.exp(2j * cmath.pi / M)
        assert abs(sum(c * z ** d for d, c in enumerate(phi))) < 1e-8


def test_modulus_mismatch():
    with pytest.raises(ModulusMismatch):
        root(3, 1) + root(6, 1)
    with pytest.raises(ModulusMismatch):
        root(3, 1) * root(4, 1)


def test_exponent_sum_to_int_raises_for_irrational():
    assert exponent_sum_to_int(4, [1, 1, 1, 1]) == 0
    with pytest.raises(NotAnInteger):
        exponent_sum_to_int(4, [0, 1, 0, 0])


GRID = ["Z2", "Z6", "Z8", "F(2,2)", "F(3,2)", "GR(2,2,2)", "chain(2,1,2)", "Rk(2)", "prod(Z2,Z3)"]


@pytest.mark.parametrize("text", GRID)
def test_character_orthogonality(text):
    R = build(text)
    M = R.char_modulus
    for x in range(R.order):
        counts = np.bincount(R.char_exp[R.mul[x]], minlength=M)
        total = CycInt(M, counts.tolist())
        assert total.as_integer() == (R.order if x == 0 else 0)


cyc = st.integers(1, 12).flatmap(
    lambda M: st.lists(st.integers(-20, 20), min_size=M, max_size=M).map(lambda c: CycInt(M, c))
)


def triples():
    return st.integers(1, 12).flatmap(lambda M: st.tuples(*[
        st.lists(st.integers(-9, 9), min_size=M, max_size=M).map(lambda c, M=M: CycInt(M, c))
        for _ in range(3)
    ]))


@given(triples())
def test_mul_commutative_associative(abc):
    a, b, c = abc
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(cyc)
@settings(max_examples=200)
def test_as_integer_agrees_with_complex_evaluation(a):
    n = a.as_integer()
    z = numeric(a)
    if n is None:
        assert abs(z - round(z.real)) > 1e-9 or abs(z.imag) > 1e-9
    else:
        assert abs(z - n) < 1e-6


@given(st.integers(1, 12), st.integers(-50, 50), st.integers(-50, 50))
def test_as_integer_additive(M, m, n):
    a = CycInt.from_int(M, m) + root(M, 1) - root(M, 1)
    b = CycInt.from_int(M, n)
    assert (a + b).as_integer() == a.as_integer() + b.as_integer()


@given(cyc)
def test_equality_is_modulo_phi(a):
    phi = cyclotomic_polynomial(a.modulus)
    shifted = a + CycInt(a.modulus, [3 * c for c in phi])
    assert shifted == a
    assert hash(shifted) == hash(a)
