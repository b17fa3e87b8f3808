"""Exact fibredness checks for plumbing multilinks.

Quick tour::

    >>> from plumblink import parse_multilink, is_fibred
    >>> g = parse_multilink("graph L5\\nvertex v e=-3 g=1\\narrow v m=3\\n")
    >>> is_fibred(g).fibred
    True
"""
from plumblink._backend import BACKEND
from plumblink.brieskorn import brieskorn_isolated_critical_value
from plumblink.errors import (
    EmptyFamily,
    ExponentTooSmall,
    InvalidGraph,
    NonPositiveMultiplicity,
    NotBlowDownable,
    NotSymmetric,
    ParseError,
    PlumbingError,
    SingularError,
    UnknownVertex,
    UntaggedArrow,
    ZeroDenominatorQuotient,
)
from plumblink.fibration import (
    FgBarReport,
    FibredVerdict,
    GermData,
    boundary_vector,
    difference_multilink,
    fgbar_report,
    germ_multiplicities,
    is_fibred,
    multiplicity_vector,
    scale_to_fibred,
)
from plumblink.linalg import determinant, is_negative_definite, solve
from plumblink.model import (
    Arrow,
    Diagnostic,
    Edge,
    PlumbingMultilink,
    Vertex,
    intersection_matrix,
    parse_multilink,
    rupture_vertices,
    serialize,
    valence,
    validate,
)
from plumblink.moves import blow_down_leaf, blow_up_leaf

__version__ = "0.1.0"
