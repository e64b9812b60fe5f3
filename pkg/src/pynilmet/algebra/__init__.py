from pynilmet.algebra.bracket import (
    Array,
    BracketTensor,
    delta,
    delta_matrix,
    gl_act,
    random_bracket,
    random_nilpotent_bracket,
    random_two_step_bracket,
    v_inner,
)
from pynilmet.algebra.checks import (
    jacobi_residual,
    lower_central_series,
    nilpotency_index,
    require_lie,
)
from pynilmet.algebra.derivations import DerivationBasis, derivation_basis

__all__ = [
    "Array",
    "BracketTensor",
    "DerivationBasis",
    "delta",
    "delta_matrix",
    "derivation_basis",
    "gl_act",
    "jacobi_residual",
    "lower_central_series",
    "nilpotency_index",
    "random_bracket",
    "random_nilpotent_bracket",
    "random_two_step_bracket",
    "require_lie",
    "v_inner",
]
