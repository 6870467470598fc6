"""Rank alternatives from reviewer rating matrices.

Three methods over the same per-alternative mean ratings: a manual
sum-normalized baseline, classical AHP (eigenvector weights with a Saaty
consistency gate), and fuzzy-AHP (triangular-fuzzy extent analysis with
degree-of-possibility weighting). Reports compare the methods by MSE.
"""

from .ahp import (
    ConsistencyReport,
    PairwiseMatrix,
    RANDOM_INDEX,
    WeightVector,
    build_pairwise,
    consistency_index,
    consistency_ratio,
    evaluate_consistency,
    principal_eigenvector,
    random_index,
)
from .dataset import (
    CANONICAL_CATEGORY_NAMES,
    RatingCategory,
    ReviewMatrix,
    ScoreVector,
    category_means,
    classify_rating,
    load_reviews,
    normalize,
)
from .errors import (
    ClampWarning,
    ConvergenceError,
    DegenerateColumnWarning,
    InputError,
    ParseError,
    RatingRangeError,
    ScoreFloorWarning,
    StructureError,
    UniformFallbackWarning,
)
from .fuzzy import (
    ExtentVector,
    FuzzyPairwiseMatrix,
    Tfn,
    build_fuzzy_pairwise,
    degree_of_possibility,
    fuzzy_weights,
    saaty_to_tfn,
    synthetic_extents,
    tfn_add,
    tfn_inverse,
)
from .ranking import (
    METHODS,
    RankEntry,
    RankingReport,
    compare_methods,
    manual_baseline,
    mse,
    rank,
)

__version__ = "0.1.0"

__all__ = [
    "CANONICAL_CATEGORY_NAMES",
    "ClampWarning",
    "ConsistencyReport",
    "ConvergenceError",
    "DegenerateColumnWarning",
    "ExtentVector",
    "FuzzyPairwiseMatrix",
    "InputError",
    "METHODS",
    "PairwiseMatrix",
    "ParseError",
    "RANDOM_INDEX",
    "RankEntry",
    "RankingReport",
    "RatingCategory",
    "RatingRangeError",
    "ReviewMatrix",
    "ScoreFloorWarning",
    "ScoreVector",
    "StructureError",
    "Tfn",
    "UniformFallbackWarning",
    "WeightVector",
    "build_fuzzy_pairwise",
    "build_pairwise",
    "category_means",
    "classify_rating",
    "compare_methods",
    "consistency_index",
    "consistency_ratio",
    "degree_of_possibility",
    "evaluate_consistency",
    "fuzzy_weights",
    "load_reviews",
    "manual_baseline",
    "mse",
    "normalize",
    "principal_eigenvector",
    "random_index",
    "rank",
    "saaty_to_tfn",
    "synthetic_extents",
    "tfn_add",
    "tfn_inverse",
]
