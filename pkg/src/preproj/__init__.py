"""Exact convolution algebra of invariant constructible functions on
nilpotent representations of preprojective algebras of type A1..A4.

The public surface re-exports the main objects of each layer: exact
linear algebra, quiver representations, the indecomposable catalog,
Euler-characteristic counting, the convolution (bi)algebra, the
primitive Lie algebra with its central series, and Chevalley-Eilenberg
cohomology.  Everything is exact; no floats anywhere.
"""

from .catalog import Catalog, OrbitLabel, load_catalog, validate_catalog
from .cohomology import (
    BudgetExceeded,
    CEComplex,
    CohomologyTable,
    build_complex,
    cohomology_dims,
    duality_check,
)
from .exactlin import GF, Matrix, QQ, gaussian_binomial
from .grassmann import (
    SubmoduleQuery,
    count_points,
    euler_characteristic,
    fixed_point_reduce,
)
from .hall import (
    HallElement,
    TensorElement,
    coproduct,
    express_in_generators,
    is_primitive,
    product,
)
from .lie import (
    LieData,
    Subspace,
    compute_brackets,
    generated_subalgebra,
    lower_central_series,
    nilpotency_class,
    reference_tables,
    upper_central_series,
    vertex_simple_generators,
)
from .quiver import QuiverSpec, Representation, make_representation

__version__ = "0.1.0"

__all__ = [
    "BudgetExceeded",
    "CEComplex",
    "Catalog",
    "CohomologyTable",
    "GF",
    "HallElement",
    "LieData",
    "Matrix",
    "OrbitLabel",
    "QQ",
    "QuiverSpec",
    "Representation",
    "SubmoduleQuery",
    "Subspace",
    "TensorElement",
    "build_complex",
    "cohomology_dims",
    "compute_brackets",
    "coproduct",
    "count_points",
    "duality_check",
    "euler_characteristic",
    "express_in_generators",
    "fixed_point_reduce",
    "gaussian_binomial",
    "generated_subalgebra",
    "is_primitive",
    "load_catalog",
    "lower_central_series",
    "make_representation",
    "nilpotency_class",
    "product",
    "reference_tables",
    "upper_central_series",
    "validate_catalog",
    "vertex_simple_generators",
]
