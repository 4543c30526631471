"""Exact structure computations for matrix Lie superalgebras over coordinate
superalgebras.

Algebras travel as JSON document strings (kinds ``assoc``, ``lie`` and
``coordinate``); :func:`loads` turns one into a plain dict for inspection.
"""

import json as _json

from ._core import (
    DecompositionFailureError,
    DocumentError,
    Error,
    InvalidParameterError,
    assemble,
    build_model,
    builtin_algebra,
    casimir_adjoint_is_scalar,
    check_root_graded,
    check_structure_conditions,
    coordinatize_model,
    document_kind,
    hom_dimensions,
    model_coordinates,
    root_counts,
    run_suite,
    verify_jacobi,
)

__version__ = "1.0.0"

__all__ = [
    "DecompositionFailureError",
    "DocumentError",
    "Error",
    "InvalidParameterError",
    "assemble",
    "build_model",
    "builtin_algebra",
    "casimir_adjoint_is_scalar",
    "check_root_graded",
    "check_structure_conditions",
    "coordinatize_model",
    "document_kind",
    "hom_dimensions",
    "loads",
    "model_coordinates",
    "root_counts",
    "run_suite",
    "verify_jacobi",
]


def loads(document):
    """Parse a structure document into a dict."""
    return _json.loads(document)
