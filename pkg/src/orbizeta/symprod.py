"""Symmetric products of surfaces: partitions, sector ages, the orbifold
generating series, and the Hilbert-scheme product formula.

The twisted sectors of X^n/S_n are indexed by partitions of n; the sector
of mu = 1^{m_1}...n^{m_n} has coarse space prod_i X^{(m_i)} and age
sum_i m_i (i-1).  The counts N(X^{(n)}) are the coefficients of the
surface zeta function, and the resolution side is the product
prod_i Z^X(q^{i-1} Q^i).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .zeta import PowerSeries, RationalFunction, zeta_from_counts


@dataclass(frozen=True)
class Partition:
    """Multiplicity form (m_1, ..., m_n) with sum i*m_i = n."""

    multiplicities: tuple[int, ...]

    @property
    def n(self) -> int:
        return sum(i * m for i, m in enumerate(self.multiplicities, start=1))

    def parts(self) -> tuple[int, ...]:
        out = []
        for i, m in enumerate(self.multiplicities, start=1):
            out.extend([i] * m)
        return tuple(sorted(out, reverse=True))

    def num_parts(self) -> int:
        return sum(self.multiplicities)


def _descending_parts(n: int, maximum: int):
    if n == 0:
        yield ()
        return
    for first in range(min(n, maximum), 0, -1):
        for rest in _descending_parts(n - first, first):
            yield (first,) + rest


def partitions(n: int) -> list[Partition]:
    """All partitions of n, reverse-lexicographic on part lists."""
    if not 0 <= n <= 30:
        raise ValueError("n out of range [0, 30]")
    out = []
    for parts in _descending_parts(n, n):
        mult = [0] * n
        for p in parts:
            mult[p - 1] += 1
        out.append(Partition(tuple(mult)))
    return out


def age_partition(mu: Partition) -> int:
    """sum_i m_i (i-1); equals n minus the number of parts."""
    return sum(m * (i - 1) for i, m in enumerate(mu.multiplicities, start=1))


@dataclass(frozen=True)
class SurfaceZeta:
    """A surface given purely through its zeta data at a fixed q."""

    name: str
    q: int
    zeta: RationalFunction | None = None
    counts: tuple[int, ...] | None = None  # N_1, N_2, ... if no rational form

    def series(self, order: int) -> PowerSeries:
        if self.zeta is not None:
            return self.zeta.expand(order)
        if order == 0:
            return PowerSeries.make([1])
        if self.counts is None or len(self.counts) < order:
            raise ValueError(f"need {order} counts for order-{order} expansion")
        return zeta_from_counts(self.counts[:order])


def surface_zeta(name: str, q: int) -> SurfaceZeta:
    """Catalog surfaces: P1, P2, P1xP1, Hirz3 (the Hirzebruch surface
    P(O + O(3)), a P1-bundle over P1)."""
    factors = {
        "P1": [(0, 1), (1, 1)],
        "P2": [(0, 1), (1, 1), (2, 1)],
        "P1xP1": [(0, 1), (1, 2), (2, 1)],
        "Hirz3": [(0, 1), (1, 2), (2, 1)],
    }
    if name not in factors:
        raise ValueError(f"unknown surface {name!r}")
    den = (1,)
    for i, mult in factors[name]:
        for _ in range(mult):
            den = _mul_linear(den, q**i)
    return SurfaceZeta(name, q, zeta=RationalFunction.make((1,), den))


def _mul_linear(poly, a):
    out = list(poly) + [0]
    for j in range(len(poly)):
        out[j + 1] -= a * poly[j]
    return tuple(out)


def symprod_counts(z: SurfaceZeta, q: int, nmax: int) -> tuple[int, ...]:
    """N(X^{(n)}) for n = 0..nmax: the coefficients of Z^X(t)."""
    if q != z.q:
        raise ValueError("surface zeta is specialized at a different q")
    series = z.series(nmax)
    out = []
    for c in series.coeffs:
        if c.denominator != 1 or c < 0:
            raise ValueError(f"non-integral symmetric-product count {c}")
        out.append(int(c))
    return tuple(out)


def orbifold_symprod_series(z: SurfaceZeta, q: int, nmax: int):
    """Age-weighted generating series sum_n Q^n sum_{mu |- n} q^{a_mu} prod_i N(X^{(m_i)}).

    Returns (series, breakdown) where breakdown[n] lists the per-partition
    contributions.
    """
    counts = symprod_counts(z, q, nmax)
    coeffs = []
    breakdown: dict[int, list[tuple[Partition, int]]] = {}
    for n in range(nmax + 1):
        total = 0
        rows = []
        for mu in partitions(n):
            contrib = q ** age_partition(mu)
            for m in mu.multiplicities:
                contrib *= counts[m]
            rows.append((mu, contrib))
            total += contrib
        coeffs.append(total)
        breakdown[n] = rows
    return PowerSeries.make(coeffs), breakdown


def goettsche_product(z: SurfaceZeta, q: int, nmax: int) -> PowerSeries:
    """prod_{i>=1} Z^X(q^{i-1} Q^i) truncated at Q^nmax.

    Factor i contributes 1 + O(Q^i), so factors with i > nmax cannot touch
    the truncation and the finite product is exact.
    """
    if q != z.q:
        raise ValueError("surface zeta is specialized at a different q")
    result = PowerSeries.one(nmax)
    for i in range(1, nmax + 1):
        inner = z.series(nmax // i)
        coeffs = [Fraction(0)] * (nmax + 1)
        for j in range(nmax // i + 1):
            coeffs[i * j] = inner[j] * q ** ((i - 1) * j)
        result = result * PowerSeries(tuple(coeffs))
    return result


@dataclass(frozen=True)
class SymprodRow:
    n: int
    n_orb: int
    n_hilbert: int

    @property
    def match(self) -> bool:
        return self.n_orb == self.n_hilbert


@dataclass(frozen=True)
class SymprodReport:
    surface: str
    q: int
    rows: tuple[SymprodRow, ...]

    @property
    def all_match(self) -> bool:
        return all(row.match for row in self.rows)

    @property
    def first_mismatch(self) -> int | None:
        for row in self.rows:
            if not row.match:
                return row.n
        return None


def verify_symprod_mckay(z: SurfaceZeta, q: int, nmax: int) -> SymprodReport:
    """Coefficientwise comparison of the orbifold series with the product."""
    lhs, _ = orbifold_symprod_series(z, q, nmax)
    rhs = goettsche_product(z, q, nmax)
    rows = tuple(
        SymprodRow(n, int(lhs[n]), int(rhs[n])) for n in range(nmax + 1)
    )
    return SymprodReport(surface=z.name, q=q, rows=rows)
