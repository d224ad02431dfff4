"""Built-in model catalog.

Five Kleinian surface families (hypersurface equation, number k of
nontrivial conjugacy classes, group order) and the two Gorenstein cyclic
3-fold quotients with their exceptional-divisor data.  k follows the ADE
ranks: A_{n-1} -> n-1, D_{n+2} -> n+2, E6/E7/E8 -> 6/7/8, which equals the
conjugacy-class counts of the binary polyhedral groups.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .counting import count_bundle, count_projective_space
from .counting import burnside_coarse_count
from .ff import FieldDesc, make_field
from .orbifold import InertiaComponent, OrbifoldModel, ages_cyclic, coarse_count
from .parsing import parse_polynomial
from .polynomials import AffineModel, IntPolynomial


class CatalogError(ValueError):
    pass


@dataclass(frozen=True)
class KleinianFamily:
    name: str
    kind: str  # cyclic, dihedral, tetra, octa, icosa
    param: int | None
    equation: IntPolynomial
    k: int
    group_order: int

    def affine_model(self) -> AffineModel:
        return AffineModel.from_equations([self.equation], ("x", "y", "z"))


def kleinian_catalog(spec: str) -> KleinianFamily:
    """Look up a Kleinian family by name: cyclic:N, dihedral:N, tetra, octa, icosa."""
    kind, _, arg = spec.partition(":")
    if kind == "cyclic":
        n = _parse_param(spec, arg, minimum=2)
        return KleinianFamily(
            spec, kind, n, parse_polynomial(f"x*y - z^{n}"), k=n - 1, group_order=n
        )
    if kind == "dihedral":
        n = _parse_param(spec, arg, minimum=1)
        return KleinianFamily(
            spec,
            kind,
            n,
            parse_polynomial(f"x^2 + y^2*z + z^{n + 1}"),
            k=n + 2,
            group_order=4 * n,
        )
    if arg:
        raise CatalogError(f"{kind!r} takes no parameter")
    fixed = {
        "tetra": ("x^2 + y^3 + z^4", 6, 24),
        "octa": ("x^2 + y^3*z + z^3", 7, 48),
        "icosa": ("x^2 + y^3 + z^5", 8, 120),
    }
    if kind not in fixed:
        raise CatalogError(f"unknown Kleinian family {spec!r}")
    eq, k, order = fixed[kind]
    return KleinianFamily(spec, kind, None, parse_polynomial(eq), k, order)


def _parse_param(spec, arg, minimum):
    try:
        n = int(arg)
    except ValueError:
        raise CatalogError(f"bad parameter in {spec!r}") from None
    if n < minimum or n > 50:
        raise CatalogError(f"parameter in {spec!r} out of range [{minimum}, 50]")
    return n


def kleinian_orbifold_model(fam: KleinianFamily, coarse: str = "count") -> OrbifoldModel:
    """Orbifold model with k twisted point-sectors of age 1.

    coarse="count" uses the hypersurface equation (counted by the
    engines); coarse="conjectured" substitutes the closed form q^2, which
    is what the zeta-level checks at large r need.
    """
    if coarse == "count":
        untwisted = fam.affine_model()
    elif coarse == "conjectured":
        untwisted = lambda fld: fld.q**2
    else:
        raise ValueError(f"unknown coarse mode {coarse!r}")
    twisted = tuple(
        InertiaComponent(f"sector-{i + 1}", Fraction(1)) for i in range(fam.k)
    )
    return OrbifoldModel(fam.name, untwisted, twisted, fam.group_order)


def kleinian_resolution_count(
    fam: KleinianFamily, f: FieldDesc, r: int = 1, budget: int | None = None
) -> int:
    """Points of the minimal resolution: replace the singular point by a
    nodal chain of k projective lines with k-1 nodes."""
    f_r = make_field(f.p, f.e * r)
    q_r = f_r.q
    n_sing = coarse_count(fam.affine_model(), f_r, budget)
    return n_sing - 1 + fam.k * count_projective_space(1, q_r) - (fam.k - 1)


DEFAULT_KLEINIAN_GRID = (
    "cyclic:2",
    "cyclic:3",
    "cyclic:4",
    "cyclic:5",
    "cyclic:6",
    "dihedral:1",
    "dihedral:2",
    "dihedral:3",
    "dihedral:4",
    "tetra",
    "octa",
    "icosa",
)


# ---------------------------------------------------------------------------
# Gorenstein 3-fold cyclic quotients


@dataclass(frozen=True)
class ThreefoldModel:
    name: str
    weights: tuple[int, int, int]
    n_order: int
    exceptional_count: Callable[[int], int]  # exceptional-divisor points over F_q
    exceptional_overlap: Callable[[int], int]  # glued-locus points, subtracted once

    @property
    def group_order(self) -> int:
        return self.n_order


def threefold_catalog(which: str) -> ThreefoldModel:
    if which == "mu3":
        # exceptional divisor of the crepant resolution is a single P^2
        return ThreefoldModel(
            "mu3",
            (1, 1, 1),
            3,
            exceptional_count=lambda q: count_projective_space(2, q),
            exceptional_overlap=lambda q: 0,
        )
    if which == "mu5":
        # P^2 glued to the Hirzebruch surface P(O + O(3)) along a P^1
        return ThreefoldModel(
            "mu5",
            (1, 2, 2),
            5,
            exceptional_count=lambda q: count_projective_space(2, q)
            + count_bundle(count_projective_space(1, q), count_projective_space(1, q)),
            exceptional_overlap=lambda q: count_projective_space(1, q),
        )
    raise CatalogError(f"unknown threefold model {which!r}")


def threefold_orbifold_model(tm: ThreefoldModel) -> OrbifoldModel:
    """Twisted sectors of a diagonal cyclic quotient of A^3.

    All weights are nonzero, so each twisted sector's coarse space is the
    origin: one point over every extension.
    """
    ages = ages_cyclic(tm.weights, tm.n_order)
    twisted = tuple(
        InertiaComponent(f"sector-{a + 1}", age) for a, age in enumerate(ages)
    )
    untwisted = lambda fld: burnside_coarse_count(tm.weights, tm.n_order, fld)
    return OrbifoldModel(tm.name, untwisted, twisted, tm.n_order)


def threefold_resolution_count(
    tm: ThreefoldModel, f: FieldDesc, r: int = 1, budget: int | None = None
) -> int:
    """Coarse count minus the singular point plus the exceptional locus."""
    f_r = make_field(f.p, f.e * r)
    q_r = f_r.q
    n_coarse = burnside_coarse_count(tm.weights, tm.n_order, f_r)
    return n_coarse - 1 + tm.exceptional_count(q_r) - tm.exceptional_overlap(q_r)


def conjectured_coarse_count(dim: int, q: int, r: int = 1) -> int:
    """The conjectural coarse quotient count q^(r*dim) for A^dim / G."""
    if dim not in (2, 3):
        raise ValueError("dim must be 2 or 3")
    return q ** (r * dim)
