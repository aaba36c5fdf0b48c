"""Proof search and coherence for skew monoidal categories.

Terms cross the boundary as s-expression strings; flags are keyword-only
booleans ``ln``, ``rn`` and ``an``.
"""

from ._skewcat import (
    Error,
    FlagError,
    ParseError,
    SkewTypeError,
    cat_equal,
    check,
    cmplt,
    count,
    emb,
    focus,
    hom,
    normalize_formula,
    normalize_sequent,
    rewrite_nf,
    search,
    seq_equal,
    sound,
)

__all__ = [
    "Error",
    "FlagError",
    "ParseError",
    "SkewTypeError",
    "cat_equal",
    "check",
    "cmplt",
    "count",
    "emb",
    "focus",
    "hom",
    "normalize_formula",
    "normalize_sequent",
    "rewrite_nf",
    "search",
    "seq_equal",
    "sound",
]
