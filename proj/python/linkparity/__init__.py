"""Parity invariants of virtual links from Gauss codes.

The heavy lifting happens in the compiled extension; this package just
re-exports it under a stable name.
"""

from ._core import (
    GaussDiagram,
    SimpleGaussDiagram,
    LinkError,
    GaussCodeSyntaxError,
    LabelError,
    RangeError,
    NotTwoColourable,
    NotAKnot,
    OddLinkingNumbers,
    StaleSite,
    parse,
    serialize,
    degenerate_components,
    two_colourable,
    colourings,
    generating_set,
    two_colour_parity,
    gaussian_parity,
    naive_parity,
    ip_self_parity,
    project,
    writhe,
    two_colour_writhe,
    self_writhe,
    naive_writhe,
    linking_matrix,
    ip_self_writhe,
    smoothing_height,
    chequerboard_certificate,
    invariants,
    random_walk,
    verify_parity_axioms,
    __version__,
)

__all__ = [
    "GaussDiagram",
    "SimpleGaussDiagram",
    "LinkError",
    "GaussCodeSyntaxError",
    "LabelError",
    "RangeError",
    "NotTwoColourable",
    "NotAKnot",
    "OddLinkingNumbers",
    "StaleSite",
    "parse",
    "serialize",
    "degenerate_components",
    "two_colourable",
    "colourings",
    "generating_set",
    "two_colour_parity",
    "gaussian_parity",
    "naive_parity",
    "ip_self_parity",
    "project",
    "writhe",
    "two_colour_writhe",
    "self_writhe",
    "naive_writhe",
    "linking_matrix",
    "ip_self_writhe",
    "smoothing_height",
    "chequerboard_certificate",
    "invariants",
    "random_walk",
    "verify_parity_axioms",
    "__version__",
]
