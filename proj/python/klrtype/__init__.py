from ._klrtype import (
    KlrError,
    classify,
    decomp_search,
    equiv_class,
    gamma_cartan,
    graded_dim,
    graded_dim_total,
    line_cartan,
    max_plus,
    quiver_dot,
    quiver_json,
    solve_x,
    tquiver_json,
)

__all__ = [
    "KlrError",
    "classify",
    "decomp_search",
    "equiv_class",
    "gamma_cartan",
    "graded_dim",
    "graded_dim_total",
    "line_cartan",
    "max_plus",
    "quiver_dot",
    "quiver_json",
    "solve_x",
    "tquiver_json",
]
