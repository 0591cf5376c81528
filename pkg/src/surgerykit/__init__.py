"""Fundamental groups of 3-manifolds from surgery on blackboard-framed knots."""

from .diagram import (
    Crossing,
    DiagramError,
    LinkError,
    OrientedDiagram,
    ParseError,
    ValidationError,
    emit_native,
    emit_pd,
    from_gauss,
    mirror,
    parse_native,
    parse_pd,
    writhe,
)
from .fpgroup import (
    AbelianInvariants,
    CosetTable,
    abelianization,
    coset_enumerate,
    simplify_presentation,
    smith_diagonal,
)
from .knots import builtin, unknot_with_kinks
from .moves import Move, apply_reidemeister
from .surgery import (
    SurgerySpec,
    analyze_group,
    framed_unknot_surgery,
    perform_surgery,
    surgery_presentation,
    zero_surgery_group,
)
from .wirtinger import exponent_sum, longitude_word, wirtinger_presentation
from .words import GroupWord, Presentation, parse_word

__version__ = "0.1.0"
