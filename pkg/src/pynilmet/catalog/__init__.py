"""Example families of brackets with their geometric structures."""

from pynilmet.catalog.complex import (
    W6Relations,
    complex_abelian_curve,
    complex_htype_curve,
    complex_iwasawa_curve,
    complex_nonabelian_curve,
    complex_w6,
    w6_relations,
)
from pynilmet.catalog.hypercomplex import (
    W8Relations,
    hypercomplex_abelian_rst,
    hypercomplex_curve,
    hypercomplex_rst,
    hypercomplex_w8,
    w8_bracket,
    w8_center_splitting,
    w8_relations,
)
from pynilmet.catalog.model import center_vectors
from pynilmet.catalog.registry import (
    CATALOG,
    SYMPLECTIC_TYPES,
    CatalogEntry,
    TableRow,
    build,
    get_entry,
)
from pynilmet.catalog.symplectic import (
    abc_family,
    filiform4,
    heisenberg,
    m26_arc,
    m26_family,
    m26_tensor,
)

__all__ = [
    "CATALOG",
    "SYMPLECTIC_TYPES",
    "CatalogEntry",
    "TableRow",
    "W6Relations",
    "W8Relations",
    "abc_family",
    "build",
    "center_vectors",
    "complex_abelian_curve",
    "complex_htype_curve",
    "complex_iwasawa_curve",
    "complex_nonabelian_curve",
    "complex_w6",
    "filiform4",
    "get_entry",
    "heisenberg",
    "hypercomplex_abelian_rst",
    "hypercomplex_curve",
    "hypercomplex_rst",
    "hypercomplex_w8",
    "m26_arc",
    "m26_family",
    "m26_tensor",
    "w6_relations",
    "w8_bracket",
    "w8_center_splitting",
    "w8_relations",
]
