from pynilmet.curvature.ricci import (
    F_value,
    invariant_ricci,
    invariant_ricci_at,
    metric_factor,
    moment_map,
    ricci,
    ricci_form,
    scalar_curvature,
)
from pynilmet.curvature.two_step import (
    CenterSplitting,
    HTypeVerdict,
    center_ricci,
    detect_center_splitting,
    j_map,
    modified_htype_check,
)

__all__ = [
    "CenterSplitting",
    "F_value",
    "HTypeVerdict",
    "center_ricci",
    "detect_center_splitting",
    "invariant_ricci",
    "invariant_ricci_at",
    "j_map",
    "metric_factor",
    "modified_htype_check",
    "moment_map",
    "ricci",
    "ricci_form",
    "scalar_curvature",
]
