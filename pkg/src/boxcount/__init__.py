"""Exact enumeration of plane partitions in a box, their symmetry classes,
q-analogues and the q = -1 identities, with an exterior-power model of the
operators behind them."""

from .combinatorics import (
    CLASS_LABELS,
    SYMMETRY_CLASSES,
    BinarySeq,
    BoxDims,
    Partition,
    PlanePartition,
    SymmetryClass,
    get_class,
    is_fixed,
)
from .enumeration import (
    ClassCountReport,
    class_table,
    count_class,
    count_class_q,
    count_q,
    enum_partitions,
    enum_plane_partitions,
)
from .errors import (
    BoxCountError,
    DimensionMismatchError,
    IntegrityError,
    MalformedInputError,
    PoleError,
    ResourceCapError,
    UnsupportedMethodError,
)
from .formulas import identity_suite, n_count, n_count_q, n_tau_q, sc_count, tc_count
from .render import render_svg

__version__ = "0.1.0"

__all__ = [
    "BinarySeq",
    "BoxDims",
    "Partition",
    "PlanePartition",
    "SymmetryClass",
    "SYMMETRY_CLASSES",
    "CLASS_LABELS",
    "get_class",
    "is_fixed",
    "ClassCountReport",
    "count_q",
    "count_class",
    "count_class_q",
    "class_table",
    "enum_partitions",
    "enum_plane_partitions",
    "n_count",
    "n_count_q",
    "sc_count",
    "tc_count",
    "n_tau_q",
    "identity_suite",
    "render_svg",
    "BoxCountError",
    "DimensionMismatchError",
    "MalformedInputError",
    "UnsupportedMethodError",
    "ResourceCapError",
    "IntegrityError",
    "PoleError",
]
