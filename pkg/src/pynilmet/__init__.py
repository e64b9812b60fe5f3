from pynilmet.algebra import BracketTensor, derivation_basis, gl_act, jacobi_residual
from pynilmet.curvature import F_value, invariant_ricci, ricci, scalar_curvature
from pynilmet.flow import flow_run, grad_F, normalized_metric_flow
from pynilmet.minimality import critical_type, distinguish, soliton_test
from pynilmet.structures import GeomStructure, StructureKind, standard_structure
from pynilmet.utils.logging import setup_logging

setup_logging()

__all__ = [
    "BracketTensor",
    "F_value",
    "GeomStructure",
    "StructureKind",
    "critical_type",
    "derivation_basis",
    "distinguish",
    "flow_run",
    "gl_act",
    "grad_F",
    "invariant_ricci",
    "jacobi_residual",
    "normalized_metric_flow",
    "ricci",
    "scalar_curvature",
    "soliton_test",
    "standard_structure",
]
