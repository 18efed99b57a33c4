"""kellerkit: exact symbolic tools for planar Keller maps.

Everything is computed over the rationals with exact arithmetic; the
algebraic criteria (gcd and resultant constancy) are valid over any
extension field, so verdicts hold over the algebraic closure.
"""

from .arith import (
    NEG_INF,
    BiPoly,
    Coeff,
    Line,
    Parametrization,
    PolyMap,
    Substitution,
    UniPoly,
    compose_map,
    gcd_bivariate,
    gcd_univariate,
    jacobian_det,
    polymap_on_param,
    restrict_to_line,
    resultant_y,
    total_degree,
)
from .embedding import (
    Check,
    EmbeddingReport,
    difference_quotient,
    is_embedding,
    is_immersion,
    is_injective_param,
    rectify,
)
from .errors import (
    AbhyankarMohViolation,
    DegenerateResultant,
    DenominatorZero,
    HypothesisViolated,
    InvalidLine,
    JacobianNotConstant,
    KellerKitError,
    NonPositiveFactor,
    NotAnEmbedding,
    NotInjectiveOnLine,
    ParseError,
    PreconditionViolated,
    TheoremViolationWitness,
)
from .keller import (
    Certificate,
    KellerReport,
    fixed_axis_invert,
    is_keller,
    prove_line,
    verify_certificate,
)
from .newton import (
    Polygon,
    SimilarityReport,
    newton_polygon,
    polygon_equal,
    scale_polygon,
    similarity_check,
    support,
)
from .tame import (
    AffineFactor,
    ElementaryFactor,
    Factor,
    Factorization,
    NotAutomorphism,
    decide_automorphism,
    factorization_inverse,
    factorization_to_map,
    invert_low_degree,
    random_tame,
)

__version__ = "0.1.0"

__all__ = [
    "NEG_INF",
    "BiPoly",
    "Coeff",
    "Line",
    "Parametrization",
    "PolyMap",
    "Substitution",
    "UniPoly",
    "compose_map",
    "gcd_bivariate",
    "gcd_univariate",
    "jacobian_det",
    "polymap_on_param",
    "restrict_to_line",
    "resultant_y",
    "total_degree",
    "Check",
    "EmbeddingReport",
    "difference_quotient",
    "is_embedding",
    "is_immersion",
    "is_injective_param",
    "rectify",
    "AbhyankarMohViolation",
    "DegenerateResultant",
    "DenominatorZero",
    "HypothesisViolated",
    "InvalidLine",
    "JacobianNotConstant",
    "KellerKitError",
    "NonPositiveFactor",
    "NotAnEmbedding",
    "NotInjectiveOnLine",
    "ParseError",
    "PreconditionViolated",
    "TheoremViolationWitness",
    "Certificate",
    "KellerReport",
    "fixed_axis_invert",
    "is_keller",
    "prove_line",
    "verify_certificate",
    "Polygon",
    "SimilarityReport",
    "newton_polygon",
    "polygon_equal",
    "scale_polygon",
    "similarity_check",
    "support",
    "AffineFactor",
    "ElementaryFactor",
    "Factor",
    "Factorization",
    "NotAutomorphism",
    "decide_automorphism",
    "factorization_inverse",
    "factorization_to_map",
    "invert_low_degree",
    "random_tame",
    "__version__",
]
