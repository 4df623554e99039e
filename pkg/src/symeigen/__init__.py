"""Exact eigenstructure computations for symmetric matrix polynomials over Q(i)."""

from .catalog import (
    BundleDescriptor,
    build_canonical_pencil,
    codim_bundle,
    codim_orbit,
    enumerate_pencil_bundles,
    enumerate_poly_bundles,
    linearization_partner,
    pencil_realizable_as_linearization,
)
from .eigenstructure import (
    CompleteEigenstructure,
    classify_bundle,
    complete_eigenstructure,
    index_sum_check,
    is_simple_structure,
)
from .errors import ConstructionFailed, IndexSumViolation, InvariantBreach, ValidationError
from .exact import (
    GaussianRational,
    MoebiusMap,
    PolyMatrix,
    UniPoly,
    format_scalar,
    parse_scalar,
    pm_eval,
    pm_moebius,
    pm_rev,
    poly_arith,
)
from .linearization import SylvesterPencil, delinearize, distance, linearize, verify_shift_law
from .polylinalg import (
    MinimalIndexReport,
    SmithForm,
    invariant_polynomials,
    is_squarefree,
    is_unimodular,
    linear_roots,
    minimal_indices,
    minimal_kernel_basis,
    normal_rank,
    smith_form,
)
from .realization import DualBasisPair, RealizationSpec, dual_minimal_bases, realize, realize_bundle

__version__ = "0.1.0"
