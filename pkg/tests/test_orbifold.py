from fractions import Fraction

import pytest

from orbizeta.ff import FieldError, make_field
from orbizeta.orbifold import (
    InertiaComponent,
    OrbifoldError,
    OrbifoldModel,
    ages_cyclic,
    gorenstein_check,
    mckay_verify,
    orbifold_count,
    orbifold_zeta,
)
from orbizeta.zeta import zeta_from_counts


def point_model(name, dim, ages, order):
    twisted = tuple(
        InertiaComponent(f"s{i}", Fraction(a)) for i, a in enumerate(ages)
    )
    return OrbifoldModel(name, lambda f: f.q**dim, twisted, order)


# ---------------------------------------------------------------------------
# ages


def test_ages_mu3():
    assert ages_cyclic((1, 1, 1), 3) == [Fraction(1), Fraction(2)]


def test_ages_mu5():
    assert ages_cyclic((1, 2, 2), 5) == [1, 2, 1, 2]


def test_ages_surface_cyclic():
    # mu_4 with weights (1, 3): every nontrivial sector has age 1
    assert ages_cyclic((1, 3), 4) == [1, 1, 1]


def test_ages_non_gorenstein():
    assert ages_cyclic((1, 1), 3) == [Fraction(2, 3), Fraction(4, 3)]


def test_ages_rejects_out_of_range_weights():
    with pytest.raises(ValueError):
        ages_cyclic((1, 5), 5)


def test_age_pairing_invariant():
    # age(g) + age(g^-1) counts the coordinates moved by g
    for n in range(2, 13):
        for w1 in range(n):
            for w2 in range(n):
                for w3 in range(n):
                    weights = (w1, w2, w3)
                    ages = ages_cyclic(weights, n)
                    for a in range(1, n):
                        moved = sum(1 for w in weights if (a * w) % n != 0)
                        assert ages[a - 1] + ages[n - a - 1] == moved


@pytest.mark.parametrize("n", range(2, 13))
def test_gorenstein_equivalence(n):
    # gorenstein_check itself asserts that the age-integrality and
    # weight-sum criteria agree; sweep all weight triples
    for w1 in range(n):
        for w2 in range(n):
            for w3 in range(n):
                expected = (w1 + w2 + w3) % n == 0
                assert gorenstein_check((w1, w2, w3), n) is expected


# ---------------------------------------------------------------------------
# orbifold counts


def test_orbifold_count_point_sectors():
    m = point_model("k", 2, [1, 1, 1], 4)
    f = make_field(7, 1)
    assert orbifold_count(m, f) == 49 + 3 * 7
    assert orbifold_count(m, f, r=2) == 49**2 + 3 * 49


def test_orbifold_count_mixed_ages():
    m = point_model("t", 3, [1, 2, 1, 2], 5)
    assert orbifold_count(m, make_field(11, 1)) == 11**3 + 2 * 11 + 2 * 121


def test_orbifold_count_rejects_shared_characteristic():
    m = point_model("k", 2, [1], 4)
    with pytest.raises(FieldError):
        orbifold_count(m, make_field(2, 1))


def test_orbifold_count_rejects_fractional_age():
    m = OrbifoldModel(
        "bad", lambda f: f.q, (InertiaComponent("s", Fraction(1, 3)),), 3
    )
    with pytest.raises(OrbifoldError):
        orbifold_count(m, make_field(2, 1))


def test_negative_age_rejected_at_construction():
    with pytest.raises(OrbifoldError):
        InertiaComponent("s", Fraction(-1))


def test_orbifold_zeta_matches_counts():
    m = point_model("k", 2, [1, 1], 3)
    f = make_field(2, 1)
    series = orbifold_zeta(m, f, 4)
    counts = tuple(orbifold_count(m, f, r) for r in range(1, 5))
    assert series.coeffs == zeta_from_counts(counts).coeffs


# ---------------------------------------------------------------------------
# mckay_verify reports


def test_mckay_verify_match():
    m = point_model("k", 2, [1, 1], 3)
    f = make_field(5, 1)
    rep = mckay_verify(m, lambda fld, r: fld.q ** (2 * r) + 2 * fld.q**r, f, 3)
    assert rep.all_match
    assert rep.zeta_match is True
    assert [row.r for row in rep.rows] == [1, 2, 3]


def test_mckay_verify_mismatch_is_reported_not_raised():
    m = point_model("k", 2, [1, 1], 3)
    rep = mckay_verify(m, lambda fld, r: fld.q ** (2 * r), make_field(5, 1), 2)
    assert not rep.all_match
    assert rep.zeta_match is None
    assert rep.rows[0].n_orb - rep.rows[0].n_resolution == 2 * 5
