"""legfront: Legendrian front words, their invariants, and obstructions."""

__version__ = "0.1.0"

from .errors import (
    ConsistencyError,
    DuplicateHandle,
    EmptyWord,
    FrontSyntaxError,
    InapplicableMove,
    LegfrontError,
    MalformedCode,
    NotAKnot,
    PositionOutOfRange,
    SameComponent,
    TooLarge,
    UnbalancedClosure,
    UnknownComponent,
)
from .front import (
    FrontDiagram,
    FrontEvent,
    GridDiagram,
    L,
    OrientedFront,
    R,
    X,
    orient,
    trace_components,
    validate,
)
from .invariants import (
    InvariantReport,
    cusp_counts,
    linking,
    report,
    rot,
    tb,
    writhe,
)
from .codes import GenericCode, from_pd, parse_pd_text, pd_text, to_generic_code
from .moves import (
    MoveInstance,
    applicable_moves,
    apply_move,
    fuzz,
    inverse_move,
)
from .constructions import (
    PushOffResult,
    legendrianize,
    push_off,
    whitehead_double,
)
from .obstructions import (
    GenusBound,
    HandleStatus,
    SliceCertificate,
    SteinReport,
    genus_bound,
    slice_check,
    stein_check,
)
from .oracles import (
    BracketPolynomial,
    kauffman_bracket,
    oracle_linking,
    oracle_writhe,
)
from .render import RenderSpec, render
from .textio import (
    parse_front,
    parse_grid,
    serialize_front,
    serialize_grid,
)

__all__ = [name for name in dir() if not name.startswith("_")]
