"""Joint-spectral-radius analysis of finite matrix tuples.

Certified bounds via product enumeration with pruning, irreducibility and
rank-one certificates, Barabanov norm approximation and verification,
offender scans for spectrum-maximal product classes, and generators for
reference tuples with known behaviour.
"""

from .bounds import (
    JsrBounds,
    bounds,
    finiteness_verified_at_depth,
    spectral_maximal_candidates,
)
from .config import DEFAULTS
from .constructions import characteristic_truth, characteristic_tuple, example_tuple
from .errors import BudgetError, ConvergenceError, InputError, JsrkitError
from .finiteness import (
    SFH_CAVEAT,
    SfhReport,
    characteristic_word_search,
    sfh_evidence,
)
from .linalg import (
    determinant,
    exterior_square,
    op_norm,
    rank_eps,
    spectral_radius,
)
from .norms import (
    ApproxResult,
    LpNorm,
    MeshNorm,
    VerificationReport,
    WeightedMaxNorm,
    approx_barabanov,
    circle_mesh,
    eval_norm,
    matrix_norm,
    norm_distance,
    norm_from_json_dict,
    norm_to_json_dict,
    sphere_samples,
    theta,
    verify_barabanov,
    verify_extremal,
)
from .structure import (
    PropertyVerdict,
    algebra_dimension,
    eigen_separation_heuristic,
    is_irreducible,
    rank_one_property,
)
from .tuples import (
    MatrixTuple,
    exterior_square_tuple,
    from_json,
    product_along,
    scale,
    to_json,
    tuple_distance,
)
from .words import (
    Word,
    canonical_rotation,
    enumerate_necklaces,
    enumerate_words,
    format_word,
    is_primitive,
    parse_word,
    power,
    rotation_equivalent,
)

__version__ = "0.1.0"

__all__ = [
    "ApproxResult",
    "BudgetError",
    "ConvergenceError",
    "DEFAULTS",
    "InputError",
    "JsrBounds",
    "JsrkitError",
    "LpNorm",
    "MatrixTuple",
    "MeshNorm",
    "PropertyVerdict",
    "SFH_CAVEAT",
    "SfhReport",
    "VerificationReport",
    "WeightedMaxNorm",
    "Word",
    "algebra_dimension",
    "approx_barabanov",
    "bounds",
    "canonical_rotation",
    "characteristic_truth",
    "characteristic_tuple",
    "characteristic_word_search",
    "circle_mesh",
    "determinant",
    "eigen_separation_heuristic",
    "enumerate_necklaces",
    "enumerate_words",
    "eval_norm",
    "example_tuple",
    "exterior_square",
    "exterior_square_tuple",
    "finiteness_verified_at_depth",
    "format_word",
    "from_json",
    "is_irreducible",
    "is_primitive",
    "matrix_norm",
    "norm_distance",
    "norm_from_json_dict",
    "norm_to_json_dict",
    "op_norm",
    "parse_word",
    "power",
    "product_along",
    "rank_eps",
    "rank_one_property",
    "rotation_equivalent",
    "scale",
    "sfh_evidence",
    "spectral_maximal_candidates",
    "spectral_radius",
    "sphere_samples",
    "theta",
    "to_json",
    "tuple_distance",
    "verify_barabanov",
    "verify_extremal",
    "__version__",
]
