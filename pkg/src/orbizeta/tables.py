"""Integer-encoded arithmetic tables for a finite field.

Elements are encoded as base-p digit strings (coefficient vectors), so an
element is just an index in [0, q).  Multiplication tables come from
discrete exp/log with respect to a deterministically chosen generator;
addition tables from digitwise arithmetic.  The counting backends work
entirely on these encoded arrays.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .ff import FieldDesc, FieldElement, FieldError

# Full q x q add/mul tables are only built below this size; exp/log tables
# (length q) are built up to the enumeration bound.
TABLE_BOUND = 4096


def factorize(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


@dataclass
class FieldTables:
    field: FieldDesc
    exp: np.ndarray            # exp[k] = encode(g^k), length q-1
    log: np.ndarray            # log[encode(x)], log[0] = -1, length q
    add: np.ndarray | None     # q x q, only for q <= TABLE_BOUND
    mul: np.ndarray | None
    neg: np.ndarray = field(init=False)
    inv: np.ndarray = field(init=False)  # inv[0] = 0 sentinel

    def __post_init__(self):
        q, p = self.q, self.field.p
        idx = np.arange(q, dtype=np.int64)
        acc = np.zeros(q, dtype=np.int64)
        for i in range(self.field.e):
            digit = (idx // p**i) % p
            acc += ((p - digit) % p) * p**i
        self.neg = acc.astype(np.int32)
        inv = np.zeros(q, dtype=np.int32)
        nz = idx[1:]
        inv[nz] = self.exp[(-self.log[nz]) % (q - 1)]
        self.inv = inv

    @property
    def q(self) -> int:
        return self.field.q

    def pow_vector(self, d: int) -> np.ndarray:
        """x^d for every encoded x, as a length-q array."""
        q = self.q
        if d == 0:
            return np.ones(q, dtype=np.int32)
        out = np.zeros(q, dtype=np.int32)
        nz = np.arange(1, q, dtype=np.int64)
        out[nz] = self.exp[(self.log[nz] * d) % (q - 1)]
        return out

    def frobenius_vector(self, base_power: int) -> np.ndarray:
        return self.pow_vector(base_power)

    def encode(self, a: FieldElement) -> int:
        return self.field.encode(a)

    def scale_vector(self, c: int) -> np.ndarray:
        """x -> c*x for every encoded x (c encoded, nonzero)."""
        q = self.q
        out = np.zeros(q, dtype=np.int32)
        nz = np.arange(1, q, dtype=np.int64)
        out[nz] = self.exp[(self.log[c] + self.log[nz]) % (q - 1)]
        return out

    def elements_of_order(self, n: int) -> list[int]:
        """Encoded elements of exact multiplicative order n.

        Sorted by enumeration order of the field, so callers get a
        deterministic first choice.
        """
        q = self.q
        if (q - 1) % n != 0:
            raise FieldError(f"no element of order {n}: {n} does not divide {q - 1}")
        h = self.exp[((q - 1) // n) % (q - 1)]
        elems = []
        acc = 1 if n == 1 else h
        for j in range(1, n + 1):
            if math.gcd(j, n) == 1:
                elems.append(int(acc) if n > 1 else 1)
            acc = self.exp[(self.log[acc] + self.log[h]) % (q - 1)] if n > 1 else 1
        key = lambda enc: self.field.enum_key(self.field.decode(enc))
        return sorted(set(elems), key=key)


def _find_generator(f: FieldDesc) -> tuple[int, ...]:
    """Coefficients of the first primitive element in enumeration order."""
    q = f.q
    primes = list(factorize(q - 1))
    for a in f.elements():
        if a.is_zero():
            continue
        if all((a ** ((q - 1) // ell)).coeffs != f.one().coeffs for ell in primes):
            return a.coeffs
    raise AssertionError("unreachable: F_q^* is cyclic")


@lru_cache(maxsize=32)
def build_tables(f: FieldDesc) -> FieldTables:
    q, p, e = f.q, f.p, f.e
    g = _find_generator(f)
    exp = np.zeros(q - 1, dtype=np.int32)
    t = f.one().coeffs
    for k in range(q - 1):
        enc = 0
        for c in reversed(t):
            enc = enc * p + c
        exp[k] = enc
        t = f._mul_coeffs(t, g)
    log = np.full(q, -1, dtype=np.int64)
    log[exp] = np.arange(q - 1)

    add = mul = None
    if q <= TABLE_BOUND:
        idx = np.arange(q, dtype=np.int64)
        acc = np.zeros((q, q), dtype=np.int64)
        for i in range(e):
            digit = (idx // p**i) % p
            acc += ((digit[:, None] + digit[None, :]) % p) * p**i
        add = acc.astype(np.int32)
        mul = np.zeros((q, q), dtype=np.int32)
        nz = idx[1:]
        mul[1:, 1:] = exp[(log[nz][:, None] + log[nz][None, :]) % (q - 1)]
    return FieldTables(field=f, exp=exp, log=log, add=add, mul=mul)
