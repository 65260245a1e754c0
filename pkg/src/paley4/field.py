"""Finite fields GF(p^ell) of odd characteristic.

Elements of an extension field are coefficient vectors of polynomials
modulo a monic irreducible, constant term first.  Prime fields are the
case ell == 1 with modulus x.

The canonical element ordering is lexicographic on the coefficient
vector read constant term first, so for GF(p) it is the usual 0..p-1.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from .errors import NoBuiltinModulus, NonPrimeCharacteristic, ReducibleModulus, ZeroInverse

# Monic irreducible moduli, constant term first.
BUILTIN_MODULI = {
    (3, 3): (1, 2, 0, 1),  # x^3 + 2x + 1
    (3, 5): (1, 2, 0, 0, 0, 1),  # x^5 + 2x + 1
    (7, 3): (2, 0, 0, 1),  # x^3 + 2
    (11, 3): (4, 1, 0, 1),  # x^3 + x + 4
}


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


# -- polynomials over GF(p), coefficient tuples constant term first --------

def _trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def poly_mod(a: Sequence[int], m: Sequence[int], p: int) -> list[int]:
    """Remainder of a modulo the monic polynomial m over GF(p)."""
    r = _trim([x % p for x in a])
    dm = len(m) - 1
    while len(r) - 1 >= dm:
        lead = r[-1]
        shift = len(r) - 1 - dm
        for i, mi in enumerate(m):
            r[shift + i] = (r[shift + i] - lead * mi) % p
        _trim(r)
    return r


def is_irreducible(modulus: Sequence[int], p: int) -> bool:
    """Trial factorization against every monic polynomial of degree <= deg/2."""
    deg = len(modulus) - 1
    if deg < 1 or modulus[-1] % p != 1:
        return False
    for d in range(1, deg // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            if not poly_mod(modulus, (*low, 1), p):
                return False
    return True


@dataclass(frozen=True)
class FieldSpec:
    p: int
    ell: int
    modulus: tuple[int, ...]

    @property
    def q(self) -> int:
        return self.p ** self.ell

    @property
    def paley_admissible(self) -> bool:
        return self.q % 4 == 3

    def __repr__(self):
        return f"GF({self.p}^{self.ell})" if self.ell > 1 else f"GF({self.p})"

    # -- element construction ---------------------------------------------

    def element(self, value: int | Sequence[int]) -> FieldElement:
        """Build an element from an integer (embedded as a constant) or a coefficient vector."""
        if isinstance(value, int):
            coeffs = [value % self.p] + [0] * (self.ell - 1)
        else:
            coeffs = [int(c) % self.p for c in value]
            if len(coeffs) > self.ell:
                coeffs = poly_mod(coeffs, self.modulus, self.p)
            coeffs += [0] * (self.ell - len(coeffs))
        return FieldElement(self, tuple(coeffs))

    def zero(self) -> FieldElement:
        return self.element(0)

    def one(self) -> FieldElement:
        return self.element(1)

    def gen(self) -> FieldElement:
        """The class of x in GF(p)[x]/(modulus); for a prime field, the root of x, i.e. 0."""
        return self.element((0, 1))

    def from_index(self, i: int) -> FieldElement:
        if not 0 <= i < self.q:
            raise IndexError(i)
        coeffs = []
        for _ in range(self.ell):
            i, c = divmod(i, self.p)
            coeffs.append(c)
        return FieldElement(self, tuple(reversed(coeffs)))

    @cached_property
    def elements(self) -> tuple[FieldElement, ...]:
        """All elements in canonical order."""
        return tuple(self.from_index(i) for i in range(self.q))

    @cached_property
    def squares(self) -> frozenset[int]:
        """Indices of the nonzero squares."""
        return frozenset(x.square().index for x in self.elements[1:])


def field_make(p: int, ell: int = 1, modulus: Sequence[int] | None = None) -> FieldSpec:
    """Validate (p, ell, modulus) and return a FieldSpec.

    With ell == 1 and no modulus the field is GF(p) itself (modulus x).
    """
    if not is_prime(p) or p == 2:
        raise NonPrimeCharacteristic(f"characteristic must be an odd prime, got {p}")
    if ell < 1:
        raise ValueError(f"extension degree must be >= 1, got {ell}")
    if modulus is None:
        if ell == 1:
            modulus = (0, 1)
        elif (p, ell) in BUILTIN_MODULI:
            modulus = BUILTIN_MODULI[p, ell]
        else:
            raise NoBuiltinModulus(f"no built-in modulus for GF({p}^{ell}); pass one explicitly")
    modulus = tuple(int(c) % p for c in modulus)
    if len(modulus) != ell + 1 or modulus[-1] != 1:
        raise ReducibleModulus(f"modulus must be monic of degree {ell}: {modulus}")
    if not is_irreducible(modulus, p):
        raise ReducibleModulus(f"{modulus} is reducible over GF({p})")
    return FieldSpec(p, ell, modulus)


@dataclass(frozen=True)
class FieldElement:
    spec: FieldSpec
    coeffs: tuple[int, ...]

    def _check(self, other: FieldElement) -> None:
        if other.spec != self.spec:
            raise ValueError(f"operands from different fields: {self.spec} vs {other.spec}")

    def _coerce(self, other) -> FieldElement:
        if isinstance(other, int):
            return self.spec.element(other)
        if isinstance(other, FieldElement):
            self._check(other)
            return other
        return NotImplemented

    @property
    def index(self) -> int:
        """Rank in the canonical element ordering."""
        i = 0
        for c in self.coeffs:
            i = i * self.spec.p + c
        return i

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self):
        return not self.is_zero()

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p = self.spec.p
        return FieldElement(self.spec, tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        p = self.spec.p
        return FieldElement(self.spec, tuple(-a % p for a in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        spec = self.spec
        p = spec.p
        if spec.ell == 1:
            return FieldElement(spec, ((self.coeffs[0] * other.coeffs[0]) % p,))
        prod = [0] * (2 * spec.ell - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    prod[i + j] += a * b
        return spec.element(poly_mod(prod, spec.modulus, p))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            return self.inv() ** (-e)
        result = self.spec.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def square(self) -> FieldElement:
        return self * self

    def inv(self) -> FieldElement:
        if self.is_zero():
            raise ZeroInverse("zero has no multiplicative inverse")
        spec = self.spec
        if spec.ell == 1:
            return FieldElement(spec, (pow(self.coeffs[0], -1, spec.p),))
        return self ** (spec.q - 2)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inv()

    def __repr__(self):
        if self.spec.ell == 1:
            return f"{self.coeffs[0]}"
        return f"F{self.coeffs}"


# Free-function forms of the field operations.
def add(a: FieldElement, b: FieldElement) -> FieldElement:
    return a + b


def sub(a: FieldElement, b: FieldElement) -> FieldElement:
    return a - b


def mul(a: FieldElement, b: FieldElement) -> FieldElement:
    return a * b


def neg(a: FieldElement) -> FieldElement:
    return -a


def inv(a: FieldElement) -> FieldElement:
    return a.inv()


def chi(x: FieldElement) -> int:
    """Quadratic character: 0 at zero, +1 on nonzero squares, -1 otherwise.

    Evaluated as x^((q-1)/2).  Prime fields take Euler's criterion on ints.
    """
    spec = x.spec
    if x.is_zero():
        return 0
    if spec.ell == 1:
        return chi_prime(x.coeffs[0], spec.p)
    return chi_generic(x)


def chi_generic(x: FieldElement) -> int:
    if x.is_zero():
        return 0
    r = x ** ((x.spec.q - 1) // 2)
    if r == x.spec.one():
        return 1
    if r == -x.spec.one():
        return -1
    raise ArithmeticError(f"x^((q-1)/2) = {r} is not +-1; modulus cannot be irreducible")


def chi_prime(a: int, p: int) -> int:
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


def character_sum(spec: FieldSpec) -> int:
    """Sum of chi over the whole field."""
    return sum(chi(x) for x in spec.elements)


def character_pair_sum(spec: FieldSpec, y: FieldElement) -> int:
    """Sum over x of chi(x) * chi(x + y)."""
    return sum(chi(x) * chi(x + y) for x in spec.elements)


def parse_modulus(text: str | None) -> tuple[int, ...] | None:
    """Parse a comma-separated coefficient list, constant term first."""
    if text is None:
        return None
    return tuple(int(t) for t in text.replace(" ", "").split(",") if t)
