"""orbizeta: exact point counts over finite fields, orbifold zeta
functions, and desk-scale verification of the arithmetic McKay
correspondence on quotient-singularity models."""

from .counting import (
    BudgetExceeded,
    CountSequence,
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
from .ff import (
    FieldDesc,
    FieldElement,
    FieldError,
    enumerate_field,
    frobenius_map,
    lift_integer,
    make_field,
)
from .models import (
    KleinianFamily,
    ThreefoldModel,
    conjectured_coarse_count,
    kleinian_catalog,
    kleinian_orbifold_model,
    kleinian_resolution_count,
    threefold_catalog,
    threefold_orbifold_model,
    threefold_resolution_count,
)
from .orbifold import (
    InertiaComponent,
    OrbifoldModel,
    ages_cyclic,
    gorenstein_check,
    mckay_verify,
    orbifold_count,
    orbifold_zeta,
)
from .parsing import PolynomialSyntaxError, parse_polynomial
from .polynomials import AffineModel, IntPolynomial
from .symprod import (
    Partition,
    SurfaceZeta,
    age_partition,
    goettsche_product,
    orbifold_symprod_series,
    partitions,
    surface_zeta,
    symprod_counts,
    verify_symprod_mckay,
)
from .zeta import (
    PowerSeries,
    RationalFunction,
    WeilReport,
    counts_from_zeta,
    recognize_rational,
    weil_check,
    zeta_from_counts,
)

__version__ = "0.1.0"
