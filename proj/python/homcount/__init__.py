"""Exact graph homomorphism counting."""

from ._core import (
    BudgetExceeded,
    Expr,
    Graph,
    InternalCheckFailed,
    InvalidInput,
    brute_hom,
    brute_iso,
    clique,
    count_colorings,
    count_hom_kneser,
    count_hom_subdivided,
    count_hom_via_expr,
    cycle,
    gadget_reduce,
    hypercube,
    hypercube_expr,
    kneser,
    labeled_iso,
    par,
    path,
    subdivide_clique,
    synthesize,
)

__all__ = [
    "BudgetExceeded",
    "Expr",
    "Graph",
    "InternalCheckFailed",
    "InvalidInput",
    "brute_hom",
    "brute_iso",
    "clique",
    "count_colorings",
    "count_hom_kneser",
    "count_hom_subdivided",
    "count_hom_via_expr",
    "cycle",
    "gadget_reduce",
    "hypercube",
    "hypercube_expr",
    "kneser",
    "labeled_iso",
    "par",
    "path",
    "subdivide_clique",
    "synthesize",
]
