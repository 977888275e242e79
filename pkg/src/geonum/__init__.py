"""Geometric numbers: Clifford algebras G(p,q), their matrix representations,
and their classification."""
from .classify import (
    BuildingBlock, ClockWalk, MatrixAlgebraShape, TableKind, classify, classify_complex,
    classify_real, clock_walk, emit_tables,
)
from .core import (
    Conjugation, Field, Multivector, Signature, conjugate, geometric_product, grade_project,
    magnitude, random_multivector, scalar_product, vector_kvector_split,
)
from .errors import (
    DimError, GeonumError, GradeError, IsoError, ParseError, RingError, SignatureError,
    ValidationError,
)
from .isomorphisms import GeneratorMap, IsoKind, apply_map, build_iso, verify_map
from .matrix_rep import (
    BlockMatrix, NullFrame, from_matrix, null_frame, null_vectors, represent, theorem2_block,
    to_matrix,
)
from .rings import RingElement, RingOp, ring_arith
from .scalars import ComplexRational

__version__ = "0.1.0"

__all__ = [
    "GeneratorMap",
    "IsoKind",
    "apply_map",
    "build_iso",
    "verify_map",
    "RingElement",
    "RingOp",
    "ring_arith",
    "BuildingBlock",
    "ClockWalk",
    "MatrixAlgebraShape",
    "TableKind",
    "classify",
    "classify_complex",
    "classify_real",
    "clock_walk",
    "emit_tables",
    "Conjugation",
    "Field",
    "Multivector",
    "Signature",
    "conjugate",
    "geometric_product",
    "grade_project",
    "magnitude",
    "random_multivector",
    "scalar_product",
    "vector_kvector_split",
    "DimError",
    "GeonumError",
    "GradeError",
    "IsoError",
    "ParseError",
    "RingError",
    "SignatureError",
    "ValidationError",
    "BlockMatrix",
    "NullFrame",
    "from_matrix",
    "null_frame",
    "null_vectors",
    "represent",
    "theorem2_block",
    "to_matrix",
    "ComplexRational",
]
