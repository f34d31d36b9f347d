"""Trace polynomials of words in Z2 * Z3, the search that classifies the
words with a prescribed trace polynomial, piece analysis, and an exact
check of a 3-dimensional representation."""

from .polys import IntPoly
from .trace import ElementaryForm, classify_elementary, target_poly, trace_poly
from .words import BlockList, Word, canonicalize, parse_word, print_word

__all__ = [
    "BlockList",
    "ElementaryForm",
    "IntPoly",
    "Word",
    "canonicalize",
    "classify_elementary",
    "parse_word",
    "print_word",
    "target_poly",
    "trace_poly",
]
__version__ = "0.1.0"
