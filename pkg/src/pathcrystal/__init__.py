"""Path realisation of Demazure crystals for affine sl_n and their characters."""

from .crystal import (
    ColElem,
    ColumnCrystal,
    RowCrystal,
    RowElem,
    Tensor,
    TruncatedPath,
    TruncationError,
    CapExceeded,
)
from .demazure import (
    DemazureSetup,
    InhomogeneousSetup,
    E0,
    demazure_model,
    demazure_paths,
    homogeneous_character,
    verify_inhom,
    verify_iso,
    verify_kostka,
)
from .qpoly import QPoly
from .symfunc import Partition, SchurExpansion, Tableau, charge, kostka_foulkes, milne

__all__ = [
    "CapExceeded",
    "ColElem",
    "ColumnCrystal",
    "DemazureSetup",
    "E0",
    "InhomogeneousSetup",
    "Partition",
    "QPoly",
    "RowCrystal",
    "RowElem",
    "SchurExpansion",
    "Tableau",
    "Tensor",
    "TruncatedPath",
    "TruncationError",
    "charge",
    "demazure_model",
    "demazure_paths",
    "homogeneous_character",
    "kostka_foulkes",
    "milne",
    "verify_inhom",
    "verify_iso",
    "verify_kostka",
]
