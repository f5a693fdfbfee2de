"""Generalized and projective Reed-Muller codes over GF(q).

Constructions, closed-form invariants (dimension, minimum distance,
minimum-weight codeword characterization and count), and exhaustive
brute-force cross-verification at desk scale.
"""

from .errors import GuardExceeded
from .gf import GF
from .poly import Poly, format_poly, parse_poly, reduce_projective

__version__ = "0.1.0"

__all__ = [
    "GF",
    "GuardExceeded",
    "Poly",
    "format_poly",
    "parse_poly",
    "reduce_projective",
    "__version__",
]
