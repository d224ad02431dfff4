import pytest

from orbizeta.counting import (
    BudgetExceeded,
    NotCharsumShape,
    burnside_coarse_count,
    coarse_orbit_oracle,
    count_affine_bruteforce,
    count_affine_charsum,
    count_bundle,
    count_power_roots,
    count_projective_space,
    count_sequence,
    count_twisted_diagonal,
)
from orbizeta.ff import FieldError, make_field
from orbizeta.parsing import parse_polynomial
from orbizeta.polynomials import AffineModel


def model(*texts, variables=None):
    return AffineModel.from_equations(
        [parse_polynomial(t) for t in texts], variables=variables
    )


# ---------------------------------------------------------------------------
# brute force


def test_bruteforce_cyclic_f5():
    assert count_affine_bruteforce(model("x*y - z^3"), make_field(5, 1)) == 25


def test_bruteforce_empty_equations():
    assert count_affine_bruteforce(model(variables=("x", "y")), make_field(3, 1)) == 9


def test_bruteforce_icosa_f7():
    # 3 | 7-1, outside the analytic case split; still q^2
    assert count_affine_bruteforce(model("x^2+y^3+z^5"), make_field(7, 1)) == 49


def test_bruteforce_budget():
    with pytest.raises(BudgetExceeded):
        count_affine_bruteforce(model("x*y - z^3"), make_field(101, 1), budget=10**4)


# ---------------------------------------------------------------------------
# character-sum engine


def test_charsum_matches_bruteforce_pivot_square():
    f = make_field(11, 1)
    m = model("x^2 + y^3 + z^5")
    assert count_affine_charsum(m, f) == count_affine_bruteforce(m, f) == 121


def test_charsum_cyclic_decomposition():
    # xy = z^3 over F5: (q-1)q solutions with y != 0 plus q with y = 0
    assert count_affine_charsum(model("x*y - z^3"), make_field(5, 1)) == 25


def test_charsum_unique_cube_roots():
    f = make_field(5, 1)
    for a in f.elements():
        assert count_power_roots(3, a, f) == 1


def test_charsum_rejects_unsuitable_equation():
    # every variable occurs in two terms
    m = model("x*y + x*z + y*z")
    with pytest.raises(NotCharsumShape):
        count_affine_charsum(m, make_field(5, 1))


CATALOG_EQUATIONS = [
    "x*y - z^2",
    "x*y - z^5",
    "x^2 + y^2*z + z^3",
    "x^2 + y^2*z + z^5",
    "x^2 + y^3 + z^4",
    "x^2 + y^3*z + z^3",
    "x^2 + y^3 + z^5",
]


@pytest.mark.parametrize("text", CATALOG_EQUATIONS)
@pytest.mark.parametrize("q", [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (3, 2), (11, 1), (13, 1)])
def test_engine_agreement(text, q):
    f = make_field(*q)
    m = model(text)
    assert count_affine_charsum(m, f) == count_affine_bruteforce(m, f)


# ---------------------------------------------------------------------------
# count sequences


def test_count_sequence_affine_line():
    seq = count_sequence(model(variables=("x",)), 3, 1, 3)
    assert seq.values == (3, 9, 27)
    assert seq.incomplete is None


def test_count_sequence_cone():
    assert count_sequence(model("x*y - z^2"), 2, 1, 2).values == (4, 16)


def test_count_sequence_tetra():
    assert count_sequence(model("x^2 + y^3 + z^4"), 5, 1, 2).values == (25, 625)


def test_count_sequence_budget_prefix():
    seq = count_sequence(model("x*y + x*z + y*z"), 13, 1, 4, budget=10**5)
    # brute force only: 13^3 fits, 169^3 does not
    assert len(seq.values) == 1
    assert seq.incomplete is not None
    assert seq.engines == ("bruteforce",)


# ---------------------------------------------------------------------------
# power roots and closed forms


def test_power_roots_examples():
    f5 = make_field(5, 1)
    assert count_power_roots(2, f5.from_int(1), f5) == 2
    assert count_power_roots(2, f5.from_int(2), f5) == 0
    assert count_power_roots(2, f5.zero(), f5) == 1


@pytest.mark.parametrize("p,e", [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (3, 2), (11, 1), (13, 1), (17, 1), (19, 1), (23, 1), (5, 2)])
def test_power_roots_partition_identity(p, e):
    f = make_field(p, e)
    for d in range(1, 13):
        assert sum(count_power_roots(d, a, f) for a in f.elements()) == f.q


def test_projective_space_counts():
    assert count_projective_space(1, 7) == 8
    assert count_projective_space(2, 3) == 13
    assert count_projective_space(0, 11) == 1


def test_bundle_counts():
    q = 5
    hirzebruch = count_bundle(q + 1, q + 1)
    assert hirzebruch == (1 + q) ** 2
    assert count_bundle(13, 1) == 13
    assert count_bundle(13, 4) == 52


# ---------------------------------------------------------------------------
# twisted Frobenius / Burnside / orbit oracle


def test_twisted_untwisted_element():
    f = make_field(7, 1)
    assert count_twisted_diagonal((1, 2, 2), 5, f, 0) == 343


def test_twisted_verified_mu5():
    f = make_field(11, 1)
    # per-coordinate root enumeration in F_{11^5}, both zeta choices
    assert count_twisted_diagonal((1, 2, 2), 5, f, 1, verify=True) == 1331


def test_twisted_verified_mu3_q4():
    f = make_field(2, 2)
    assert count_twisted_diagonal((1, 1, 1), 3, f, 2, verify=True) == 64


def test_twisted_rejects_bad_characteristic():
    with pytest.raises(FieldError):
        count_twisted_diagonal((1, 1, 1), 3, make_field(3, 1), 1)


def test_burnside_examples():
    assert burnside_coarse_count((1, 1, 1), 3, make_field(7, 1)) == 343
    assert burnside_coarse_count((0,), 1, make_field(7, 1)) == 7
    assert burnside_coarse_count((1, 2, 2), 5, make_field(11, 1)) == 1331


def test_orbit_oracle_matches_burnside():
    f = make_field(2, 2)
    assert coarse_orbit_oracle((1, 1, 1), 3, f, 3) == burnside_coarse_count(
        (1, 1, 1), 3, f
    )


def test_orbit_oracle_two_variables():
    assert coarse_orbit_oracle((1, 1), 3, make_field(2, 2), 3) == 16


def test_orbit_oracle_trivial_group():
    assert coarse_orbit_oracle((0, 0), 1, make_field(3, 1), 1) == 9


def test_orbit_oracle_rejects_bad_order():
    with pytest.raises(FieldError):
        coarse_orbit_oracle((1, 1), 5, make_field(2, 2), 1)
