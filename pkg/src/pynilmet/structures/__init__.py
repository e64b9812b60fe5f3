from pynilmet.structures.integrability import (
    ComplexFlags,
    classify_complex_flags,
    hypercomplex_residual,
    integrability_residual,
    nijenhuis_residual,
    symplectic_closed_residual,
)
from pynilmet.structures.projection import (
    project_invariant,
    project_structure_algebra,
    random_invariant_symmetric,
    random_structure_group_element,
    random_structure_isometry,
    structure_algebra_residual,
)
from pynilmet.structures.structure import (
    GeomStructure,
    StructureKind,
    antidiagonal_complex,
    standard_complex,
    standard_hypercomplex,
    standard_structure,
    standard_symplectic,
)

__all__ = [
    "ComplexFlags",
    "GeomStructure",
    "StructureKind",
    "antidiagonal_complex",
    "classify_complex_flags",
    "hypercomplex_residual",
    "integrability_residual",
    "nijenhuis_residual",
    "project_invariant",
    "project_structure_algebra",
    "random_invariant_symmetric",
    "random_structure_group_element",
    "random_structure_isometry",
    "standard_complex",
    "standard_hypercomplex",
    "standard_structure",
    "standard_symplectic",
    "structure_algebra_residual",
]
