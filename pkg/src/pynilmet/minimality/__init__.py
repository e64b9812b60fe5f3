from pynilmet.minimality.certificate import (
    SolitonCertificate,
    SolitonFit,
    Verdict,
    best_soliton_fit,
    soliton_test,
)
from pynilmet.minimality.invariants import (
    Distinction,
    DistinctionVerdict,
    IsometryInvariants,
    Normalization,
    distinguish,
    isometry_invariants,
    normalize,
)
from pynilmet.minimality.types import (
    CriticalType,
    NormalForm,
    critical_type,
    stratum_check,
    type_normal_form,
)

__all__ = [
    "CriticalType",
    "Distinction",
    "DistinctionVerdict",
    "IsometryInvariants",
    "NormalForm",
    "Normalization",
    "SolitonCertificate",
    "SolitonFit",
    "Verdict",
    "best_soliton_fit",
    "critical_type",
    "distinguish",
    "isometry_invariants",
    "normalize",
    "soliton_test",
    "stratum_check",
    "type_normal_form",
]
