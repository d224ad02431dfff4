"""Exact truncated power series, zeta functions, and Weil-property checks.

All series arithmetic is over exact rationals; floating point appears only
in the Riemann-modulus check, where it is unavoidable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .counting import CountSequence


class SeriesError(ValueError):
    pass


@dataclass(frozen=True)
class PowerSeries:
    """c_0 + c_1 t + ... + c_R t^R with exact rational coefficients."""

    coeffs: tuple[Fraction, ...]

    @classmethod
    def make(cls, coeffs) -> "PowerSeries":
        return cls(tuple(Fraction(c) for c in coeffs))

    @classmethod
    def one(cls, order: int) -> "PowerSeries":
        return cls.make([1] + [0] * order)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i]

    def _zip(self, other):
        R = min(self.order, other.order)
        return R, self.coeffs[: R + 1], other.coeffs[: R + 1]

    def __add__(self, other):
        R, a, b = self._zip(other)
        return PowerSeries(tuple(x + y for x, y in zip(a, b)))

    def __sub__(self, other):
        R, a, b = self._zip(other)
        return PowerSeries(tuple(x - y for x, y in zip(a, b)))

    def __mul__(self, other):
        R, a, b = self._zip(other)
        out = [Fraction(0)] * (R + 1)
        for i, x in enumerate(a):
            if x:
                for j in range(R + 1 - i):
                    out[i + j] += x * b[j]
        return PowerSeries(tuple(out))

    def __truediv__(self, other):
        R, a, b = self._zip(other)
        if b[0] == 0:
            raise SeriesError("division by a series with zero constant term")
        out = [Fraction(0)] * (R + 1)
        for n in range(R + 1):
            acc = a[n]
            for k in range(1, n + 1):
                acc -= b[k] * out[n - k]
            out[n] = acc / b[0]
        return PowerSeries(tuple(out))

    def scale(self, c) -> "PowerSeries":
        c = Fraction(c)
        return PowerSeries(tuple(c * x for x in self.coeffs))

    def exp(self) -> "PowerSeries":
        if self.coeffs[0] != 0:
            raise SeriesError("exp needs zero constant term")
        R = self.order
        out = [Fraction(1)] + [Fraction(0)] * R
        for n in range(1, R + 1):
            acc = Fraction(0)
            for k in range(1, n + 1):
                acc += k * self.coeffs[k] * out[n - k]
            out[n] = acc / n
        return PowerSeries(tuple(out))

    def log(self) -> "PowerSeries":
        if self.coeffs[0] != 1:
            raise SeriesError("log needs constant term 1")
        R = self.order
        out = [Fraction(0)] * (R + 1)
        for n in range(1, R + 1):
            acc = n * self.coeffs[n]
            for k in range(1, n):
                acc -= k * out[k] * self.coeffs[n - k]
            out[n] = acc / n
        return PowerSeries(tuple(out))


def series_arith(a: PowerSeries, b: PowerSeries, op: str) -> PowerSeries:
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown op {op!r}")


# ---------------------------------------------------------------------------
# univariate integer polynomials as coefficient tuples, lowest degree first


def _ptrim(p):
    p = list(p)
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return tuple(p)


def _pmul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _ptrim(out)


def _pdeg(p):
    return len(_ptrim(p)) - 1 if any(p) else -1


def _div_linear(p, a):
    """Divide p(t) by (1 - a*t); returns (quotient, exact flag)."""
    if len(p) == 1:
        return p, False
    out = [0] * (len(p) - 1)
    carry = 0
    for j in range(len(p) - 1):
        carry = p[j] + a * carry
        out[j] = carry
    rem = p[-1] + a * carry
    return _ptrim(out), rem == 0


@dataclass(frozen=True)
class RationalFunction:
    """Ratio of integer-coefficient polynomials, normalized to num[0], den[0] > 0."""

    num: tuple[int, ...]
    den: tuple[int, ...]

    @classmethod
    def make(cls, num, den) -> "RationalFunction":
        num, den = _ptrim(num), _ptrim(den)
        if not any(den):
            raise ZeroDivisionError("zero denominator")
        g = 0
        for c in num + den:
            g = math.gcd(g, c)
        if g > 1:
            num = tuple(c // g for c in num)
            den = tuple(c // g for c in den)
        lead = den[0] if den[0] != 0 else 1
        if lead < 0:
            num = tuple(-c for c in num)
            den = tuple(-c for c in den)
        return cls(num, den)

    def expand(self, order: int) -> PowerSeries:
        num = list(self.num) + [0] * max(0, order + 1 - len(self.num))
        den = list(self.den) + [0] * max(0, order + 1 - len(self.den))
        return PowerSeries.make(num[: order + 1]) / PowerSeries.make(den[: order + 1])

    def at_zero(self) -> Fraction:
        return Fraction(self.num[0], self.den[0])

    def weight_factorization(self, q: int, max_weight: int = 40) -> dict[int, int] | None:
        """Write den as prod (1 - q^i t)^{m_i}, if trial roots q^i exhaust it."""
        rem = self.den
        out: dict[int, int] = {}
        for i in range(max_weight + 1):
            a = q**i
            while _pdeg(rem) > 0:
                quot, exact = _div_linear(rem, a)
                if not exact:
                    break
                rem = quot
                out[i] = out.get(i, 0) + 1
            if _pdeg(rem) <= 0:
                break
        if rem == (1,):
            return out
        return None


def zeta_from_counts(c: CountSequence | tuple[int, ...]) -> PowerSeries:
    """exp(sum_r N_r t^r / r), truncated at the length of the count list."""
    values = c.values if isinstance(c, CountSequence) else tuple(c)
    if not values:
        raise SeriesError("need at least one count")
    s = PowerSeries.make([0] + [Fraction(n, r + 1) for r, n in enumerate(values)])
    return s.exp()


def counts_from_zeta(z: RationalFunction, R: int) -> tuple[int, ...]:
    """Recover N_1..N_R from a rational zeta via its logarithmic derivative."""
    if z.at_zero() != 1:
        raise SeriesError("zeta must have value 1 at t = 0")
    lg = z.expand(R).log()
    out = []
    for r in range(1, R + 1):
        n = r * lg[r]
        if n.denominator != 1:
            raise SeriesError(f"non-integral count at r = {r}")
        out.append(int(n))
    return tuple(out)


# ---------------------------------------------------------------------------
# rational recognition (Berlekamp-Massey over Q)


def _berlekamp_massey(seq):
    """Shortest LFSR (connection polynomial, constant term 1) for seq."""
    C = [Fraction(1)]
    B = [Fraction(1)]
    L, m, b = 0, 1, Fraction(1)
    for n in range(len(seq)):
        d = seq[n]
        for i in range(1, L + 1):
            d += C[i] * seq[n - i]
        if d == 0:
            m += 1
        elif 2 * L <= n:
            T = list(C)
            coef = d / b
            C = C + [Fraction(0)] * (len(B) + m - len(C))
            for i, x in enumerate(B):
                C[i + m] -= coef * x
            L = n + 1 - L
            B, b, m = T, d, 1
        else:
            coef = d / b
            C = C + [Fraction(0)] * max(0, len(B) + m - len(C))
            for i, x in enumerate(B):
                C[i + m] -= coef * x
            m += 1
    return C, L


def recognize_rational(s: PowerSeries, max_den_deg: int) -> RationalFunction | None:
    """Recognize a truncated series as a rational function.

    Finds the minimal linear recurrence on the coefficients; returns None
    when no recurrence of order <= max_den_deg fits all supplied
    coefficients.  The result re-expands to the input exactly (asserted).
    """
    if s.order + 1 < 2 * max_den_deg + 2:
        raise SeriesError(
            f"need at least {2 * max_den_deg + 2} coefficients, got {s.order + 1}"
        )
    seq = [Fraction(c) for c in s.coeffs]
    C, L = _berlekamp_massey(seq)
    if L > max_den_deg:
        return None
    C = C[: L + 1] + [Fraction(0)] * max(0, L + 1 - len(C))
    # numerator = series * denominator; must vanish from degree L on
    prod = [Fraction(0)] * len(seq)
    for j in range(len(seq)):
        acc = Fraction(0)
        for i in range(min(j, L) + 1):
            acc += C[i] * seq[j - i]
        prod[j] = acc
    if any(prod[L:]):
        return None
    num = prod[:L] if L else prod[:1]
    lcm = 1
    for x in num + C:
        lcm = lcm * x.denominator // math.gcd(lcm, x.denominator)
    zz = RationalFunction.make(
        [int(x * lcm) for x in num], [int(x * lcm) for x in C]
    )
    assert zz.expand(s.order).coeffs == s.coeffs, "re-expansion mismatch"
    return zz


# ---------------------------------------------------------------------------
# Weil properties


@dataclass(frozen=True)
class WeilReport:
    rational_form: RationalFunction
    factor_degrees: dict[int, int] | None  # weight 2i -> degree (Betti number)
    functional_sign: int | None            # +1, -1, or None
    euler_characteristic: int
    riemann_ok: bool
    max_modulus_deviation: float


def _reversal_scaled(p, s: int):
    """t^d p(1/(s t)) * s^d, an integer polynomial (reversal with powers of s)."""
    d = len(p) - 1
    return _ptrim([p[d - j] * s**j for j in range(d + 1)])


def weil_check(z: RationalFunction, n: int, q: int) -> WeilReport:
    """Diagnostic report on the Weil properties of a rational zeta.

    The functional equation is checked algebraically (integer polynomial
    identity); only the Riemann-modulus check is numeric, with relative
    tolerance 1e-6.
    """
    if z.at_zero() != 1:
        raise SeriesError("zeta must have value 1 at t = 0")
    num, den = _ptrim(z.num), _ptrim(z.den)
    chi = _pdeg(den) - _pdeg(num)

    fact = z.weight_factorization(q)
    degrees = {2 * i: m for i, m in sorted(fact.items())} if fact is not None else None

    sign = None
    if (n * chi) % 2 == 0:
        s = q**n
        scale = q ** (n * chi // 2)
        # Z(1/(q^n t)) = (q^n t)^chi * rev_num(q^n t)/rev_den(q^n t); compare with
        # +- q^{n chi/2} t^chi Z(t) by cross-multiplication
        lhs = _pmul(_ptrim([0] * chi + [s**chi]), _pmul(_reversal_scaled(num, s), den))
        rhs = _pmul((scale,), _pmul(_reversal_scaled(den, s), num))
        rhs_t = _pmul(_ptrim([0] * chi + [1]), rhs)
        if lhs == rhs_t:
            sign = 1
        elif lhs == tuple(-c for c in rhs_t):
            sign = -1

    max_dev = 0.0
    riemann_ok = True
    for poly in (num, den):
        if _pdeg(poly) < 1:
            continue
        roots = np.roots(list(reversed(poly)))
        coeff_max = max(abs(c) for c in poly)
        for root in roots:
            # reciprocal roots alpha = 1/root should satisfy |alpha| = q^{i/2}
            residual = abs(np.polyval(list(reversed(poly)), root))
            if residual > 1e-8 * (1 + coeff_max):
                riemann_ok = False
                continue
            alpha = 1.0 / abs(root)
            i_est = round(2 * math.log(alpha, q)) if alpha > 0 else None
            if i_est is None or i_est < 0:
                riemann_ok = False
                continue
            target = q ** (i_est / 2)
            dev = abs(alpha - target) / target
            max_dev = max(max_dev, dev)
            if dev > 1e-6:
                riemann_ok = False
    return WeilReport(
        rational_form=z,
        factor_degrees=degrees,
        functional_sign=sign,
        euler_characteristic=chi,
        riemann_ok=riemann_ok,
        max_modulus_deviation=max_dev,
    )
