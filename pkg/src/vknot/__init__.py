"""Virtual knot invariants, Gauss-diagram moves and flip-count certificates."""
from .diagram import (
    EMPTY,
    CanonicalKey,
    DiagramError,
    Endpoint,
    GaussCodeError,
    GaussDiagram,
    Role,
    canonical_form,
    canonical_key,
    chords_link,
    parse_gauss_code,
    rotate,
    to_gauss_code,
    validate,
)
from .poly import SparsePoly

__version__ = "0.1.0"
