import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_irreducible_p, gf_rem

from paley4.errors import NoBuiltinModulus, NonPrimeCharacteristic, ReducibleModulus, ZeroInverse
from paley4.field import (
    BUILTIN_MODULI,
    character_pair_sum,
    character_sum,
    chi,
    chi_generic,
    field_make,
    inv,
    is_irreducible,
)

# (p, ell, modulus) for every field of order <= 31 plus GF(27)
SMALL_FIELDS = [
    (3, 1, None), (5, 1, None), (7, 1, None), (11, 1, None), (13, 1, None), (17, 1, None),
    (19, 1, None), (23, 1, None), (29, 1, None), (31, 1, None),
    (3, 2, (1, 0, 1)),  # x^2 + 1
    (5, 2, (2, 0, 1)),  # x^2 + 2
    (3, 3, None),
]
ADMISSIBLE_Q = [(7, 1), (11, 1), (19, 1), (23, 1), (3, 3)]


def fields():
    return [field_make(p, ell, m) for p, ell, m in SMALL_FIELDS]


def test_prime_field_gf7():
    f = field_make(7)
    assert (f.q, f.paley_admissible) == (7, True)


def test_gf27_modulus_has_no_root():
    # a cubic is irreducible iff it has no root
    assert all((x ** 3 + 2 * x + 1) % 3 for x in range(3))
    f = field_make(3, 3, (1, 2, 0, 1))
    assert (f.q, f.paley_admissible) == (27, True)


def test_gf5_not_admissible():
    assert field_make(5).paley_admissible is False


@pytest.mark.parametrize("p", [1, 2, 9, 15])
def test_bad_characteristic(p):
    with pytest.raises(NonPrimeCharacteristic):
        field_make(p)


def test_reducible_modulus_rejected():
    with pytest.raises(ReducibleModulus):
        field_make(3, 3, (0, 0, 0, 1))  # x^3
    with pytest.raises(ReducibleModulus):
        field_make(3, 2, (2, 0, 1))  # x^2 - 1
    with pytest.raises(ReducibleModulus):
        field_make(3, 2, (1, 0, 2))  # not monic


def test_missing_builtin():
    with pytest.raises(NoBuiltinModulus):
        field_make(5, 2)


@pytest.mark.parametrize("key", sorted(BUILTIN_MODULI))
def test_builtin_moduli_irreducible(key):
    p, ell = key
    mod = BUILTIN_MODULI[key]
    assert gf_irreducible_p(list(reversed(mod)), p, ZZ)
    assert is_irreducible(mod, p)
    assert field_make(p, ell).modulus == mod


def test_trial_division_agrees_with_sympy():
    for low in itertools.product(range(3), repeat=3):
        mod = (*low, 1)
        assert is_irreducible(mod, 3) == bool(gf_irreducible_p(list(reversed(mod)), 3, ZZ))


def test_mul_gf7():
    f = field_make(7)
    assert f.element(3) * f.element(5) == f.one()


def test_x_times_x_squared_gf27(gf27):
    x = gf27.gen()
    # oracle: remainder of x^3 by the modulus, via sympy (high-order-first lists)
    rem = gf_rem([1, 0, 0, 0], list(reversed(gf27.modulus)), 3, ZZ)
    expected = tuple(reversed(rem)) + (0,) * (3 - len(rem))
    assert (x * (x * x)).coeffs == expected == (2, 1, 0)


def test_inverse_of_one():
    for f in fields():
        assert inv(f.one()) == f.one()


def test_zero_inverse():
    with pytest.raises(ZeroInverse):
        field_make(7).zero().inv()


@pytest.mark.parametrize("f", fields(), ids=repr)
def test_inverse_exhaustive(f):
    for a in f.elements[1:]:
        assert a * a.inv() == f.one() == a.inv() * a


def test_canonical_order_gf27(gf27):
    els = gf27.elements
    assert [e.index for e in els] == list(range(27))
    assert els[1].coeffs == (0, 0, 1) and els[9].coeffs == (1, 0, 0)
    assert sorted(e.coeffs for e in els) == [e.coeffs for e in els]


def test_chi_zero():
    for f in fields():
        assert chi(f.zero()) == 0


def test_chi_gf7():
    squares = {x * x % 7 for x in range(1, 7)}
    assert squares == {1, 2, 4}
    f = field_make(7)
    assert chi(f.element(3)) == -1
    assert [chi(f.element(a)) for a in range(1, 7)] == [1 if a in squares else -1 for a in range(1, 7)]


def test_chi_minus_one_gf11():
    f = field_make(11)
    assert chi(-f.one()) == -1


@pytest.mark.parametrize("f", fields(), ids=repr)
def test_chi_matches_squares_and_generic(f):
    squares = {(x * x).coeffs for x in f.elements[1:]}
    for x in f.elements:
        expected = 0 if x.is_zero() else (1 if x.coeffs in squares else -1)
        assert chi(x) == chi_generic(x) == expected


@pytest.mark.parametrize("f", fields(), ids=repr)
def test_chi_multiplicative(f):
    vals = {x: chi(x) for x in f.elements}
    for a, b in itertools.product(f.elements, repeat=2):
        assert vals[a * b] == vals[a] * vals[b]


@pytest.mark.parametrize("p,ell", ADMISSIBLE_Q)
def test_character_sums(p, ell):
    f = field_make(p, ell)
    assert character_sum(f) == 0
    for y in f.elements[1:]:
        assert character_pair_sum(f, y) == -1


ELEM27 = st.integers(0, 26)


@settings(max_examples=200, deadline=None)
@given(ELEM27, ELEM27, ELEM27)
def test_field_axioms_gf27(i, j, k):
    f = field_make(3, 3)
    a, b, c = f.from_index(i), f.from_index(j), f.from_index(k)
    assert a + b == b + a and a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == f.zero() and a + f.zero() == a and a * f.one() == a
