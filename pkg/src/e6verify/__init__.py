"""Exact verification of the combinatorics of E6-covers of the projective line.

Subpackages are imported lazily by callers; the names below are the most
common entry points.
"""
from __future__ import annotations

__version__ = "0.1.0"

from .errors import (  # noqa: E402
    DegenerateInput,
    E6VerifyError,
    GenerationError,
    NotARootError,
    ParseError,
    PartitionError,
    ShapeError,
)
from .lattice import Root, enumerate_lines, enumerate_roots, parse_root, parse_roots  # noqa: E402

__all__ = [
    "__version__",
    "DegenerateInput",
    "E6VerifyError",
    "GenerationError",
    "NotARootError",
    "ParseError",
    "PartitionError",
    "ShapeError",
    "Root",
    "enumerate_lines",
    "enumerate_roots",
    "parse_root",
    "parse_roots",
]
