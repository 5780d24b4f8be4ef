"""Exact Weyl characters, tensor products, and Langlands branching for
finite-type root data.

All arithmetic is exact (Python integers and fractions); the heavy inner
loops run on compiled kernels when the optional Cython extension is built,
with a pure-Python fallback selected at import.
"""

from ._kernels import BACKEND as KERNEL_BACKEND
from .characters import (
    VirtualCharacter,
    WeightFunction,
    brauer_klimyk_product,
    decompose_into_weyl,
    dominant_multiplicities,
    evaluate_virtual,
    freudenthal_character,
    kostant_multiplicity_oracle,
    tensor_decompose,
    weyl_dimension,
)
from .errors import (
    CartanError,
    ClosedFormUnavailableError,
    InternalConsistencyError,
    NotDominantError,
    NotWInvariantError,
    SublatticeError,
    TheoremViolationError,
    WeylCharError,
)
from .langlands import (
    BranchingResult,
    VerificationReport,
    langlands_branching,
    langlands_branching_direct,
    langlands_branching_tensor,
    minuscule_branching_closed_form,
    pi_project,
    rho_shift_product_formula,
    star_dominant_box,
    steinberg_character_identity,
    verify_branching_theorem,
)
from .root_data import (
    CartanDatum,
    ModifiedDatum,
    PositiveRoot,
    RootDatum,
    cartan_matrix,
    dual_coords,
    embed,
    in_sublattice,
    modified_datum,
    positive_roots,
    root_datum,
    root_scaling_map,
    validate_cartan,
)
from .weyl import (
    Regularization,
    dominant_representative,
    orbit,
    reflect,
    rho,
    rho_l,
    shifted_regularize,
    steinberg_weight,
)

__version__ = "0.1.0"
