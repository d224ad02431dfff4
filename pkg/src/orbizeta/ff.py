"""Exact arithmetic in finite fields F_{p^e}.

A field is described by its characteristic p, extension degree e and an
explicit monic irreducible modulus over F_p.  Elements are coefficient
vectors in the power basis of the modulus.  Extension towers are never
built incrementally: F_{q^r} is always constructed directly as
F_{p^{e*r}}, which sidesteps compatible-embedding bookkeeping because all
model coefficients are plain integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterator

# Largest p^e make_field will describe, and the largest field whose
# elements we are willing to enumerate one by one.
FIELD_SIZE_BOUND = 1 << 26
ENUMERATION_BOUND = 1 << 21


class FieldError(ValueError):
    pass


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


# ---------------------------------------------------------------------------
# dense F_p[x] helpers; polynomials are tuples, lowest degree first

def _trim(poly):
    i = len(poly)
    while i > 0 and poly[i - 1] == 0:
        i -= 1
    return tuple(poly[:i])


def _poly_mul(a, b, p):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _trim(out)


def _poly_mod(a, m, p):
    """Remainder of a modulo the monic polynomial m."""
    a = list(a)
    dm = len(m) - 1
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i] % p
        if c:
            a[i] = 0
            for j in range(dm):
                a[i - dm + j] = (a[i - dm + j] - c * m[j]) % p
        else:
            a[i] = 0
    return _trim(a[:dm])


def _poly_divides(d, a, p):
    """Whether the monic polynomial d divides a over F_p."""
    return not _poly_mod(a, d, p)


def _is_irreducible(m, p):
    """Irreducibility of a monic polynomial by trial division.

    A reducible monic polynomial of degree e has a monic factor of degree
    between 1 and e//2, so trying those is enough.
    """
    e = len(m) - 1
    if e == 1:
        return True
    if m[0] == 0:  # divisible by x
        return False
    for d in range(1, e // 2 + 1):
        for tail in product(range(p), repeat=d):
            div = tail + (1,)
            if _poly_divides(div, m, p):
                return False
    return True


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FieldDesc:
    """F_{p^e} with an explicit monic irreducible modulus of degree e."""

    p: int
    e: int
    modulus: tuple[int, ...]

    @property
    def q(self) -> int:
        return self.p**self.e

    def element(self, coeffs) -> "FieldElement":
        coeffs = tuple(c % self.p for c in coeffs)
        if len(coeffs) != self.e:
            raise FieldError(f"expected {self.e} coefficients, got {len(coeffs)}")
        return FieldElement(self, coeffs)

    def zero(self) -> "FieldElement":
        return FieldElement(self, (0,) * self.e)

    def one(self) -> "FieldElement":
        return self.from_int(1)

    def from_int(self, n: int) -> "FieldElement":
        return FieldElement(self, (n % self.p,) + (0,) * (self.e - 1))

    def elements(self) -> Iterator["FieldElement"]:
        """All q elements, lexicographic on the coefficient tuple."""
        if self.q > ENUMERATION_BOUND:
            raise FieldError(f"field of size {self.q} too large to enumerate")
        for coeffs in product(range(self.p), repeat=self.e):
            yield FieldElement(self, coeffs)

    # integer encodings used by the table-driven counting backends
    def encode(self, a: "FieldElement") -> int:
        idx = 0
        for c in reversed(a.coeffs):
            idx = idx * self.p + c
        return idx

    def decode(self, idx: int) -> "FieldElement":
        coeffs = []
        for _ in range(self.e):
            coeffs.append(idx % self.p)
            idx //= self.p
        return FieldElement(self, tuple(coeffs))

    def enum_key(self, a: "FieldElement") -> int:
        """Position of a in the elements() enumeration order."""
        idx = 0
        for c in a.coeffs:
            idx = idx * self.p + c
        return idx

    def _mul_coeffs(self, a, b):
        return _pad(_poly_mod(_poly_mul(a, b, self.p), self.modulus, self.p), self.e)


def _pad(poly, e):
    return tuple(poly) + (0,) * (e - len(poly))


@dataclass(frozen=True)
class FieldElement:
    field: FieldDesc
    coeffs: tuple[int, ...]

    def _check(self, other: "FieldElement"):
        if self.field != other.field:
            raise FieldError("operands belong to different fields")

    def __add__(self, other):
        self._check(other)
        p = self.field.p
        return FieldElement(
            self.field, tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs))
        )

    def __sub__(self, other):
        self._check(other)
        p = self.field.p
        return FieldElement(
            self.field, tuple((a - b) % p for a, b in zip(self.coeffs, other.coeffs))
        )

    def __neg__(self):
        p = self.field.p
        return FieldElement(self.field, tuple((-a) % p for a in self.coeffs))

    def __mul__(self, other):
        self._check(other)
        return FieldElement(self.field, self.field._mul_coeffs(self.coeffs, other.coeffs))

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = self.field.one()
        base = self
        while n:  # square and multiply
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inverse(self) -> "FieldElement":
        if self.is_zero():
            raise ZeroDivisionError("inversion of zero field element")
        return self ** (self.field.q - 2)

    def __truediv__(self, other):
        return self * other.inverse()

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __repr__(self):
        return f"FieldElement(F_{self.field.q}, {list(self.coeffs)})"


@lru_cache(maxsize=None)
def make_field(p: int, e: int, size_bound: int = FIELD_SIZE_BOUND) -> FieldDesc:
    """F_{p^e} with the lexicographically smallest monic irreducible modulus.

    Coefficients are compared lowest degree first, so two runs (or two
    machines) always agree on the modulus.  For e = 1 the modulus is x and
    elements are residues mod p.
    """
    if not is_prime(p):
        raise FieldError(f"{p} is not prime")
    if not 1 <= e <= 20:
        raise FieldError(f"extension degree {e} out of range [1, 20]")
    if p**e > size_bound:
        raise FieldError(f"field size {p}^{e} exceeds bound {size_bound}")
    for tail in product(range(p), repeat=e):
        candidate = tail + (1,)
        if _is_irreducible(candidate, p):
            return FieldDesc(p, e, candidate)
    raise AssertionError("unreachable: irreducible polynomials exist in every degree")


def lift_integer(n: int, f: FieldDesc) -> FieldElement:
    """Canonical image of an integer in the prime subfield of f."""
    return f.from_int(n)


def frobenius_map(a: FieldElement, base_power: int) -> FieldElement:
    """a ** base_power for base_power = p^k, an automorphism fixing F_{base_power}."""
    p = a.field.p
    b = base_power
    while b % p == 0:
        b //= p
    if b != 1 or base_power < p:
        raise FieldError(f"{base_power} is not a positive power of {p}")
    return a**base_power


def enumerate_field(f: FieldDesc) -> Iterator[FieldElement]:
    return f.elements()
