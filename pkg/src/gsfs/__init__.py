"""Symbolic invariants of generalized Seifert fiber spaces."""

from .census import (
    CensusRecord,
    EnumBounds,
    build_census,
    enumerate_symbols,
    load_census,
    oracle_census,
    read_census,
    write_census,
)
from .cover import check_cover_consistency, double_cover
from .errors import (
    BoundsError,
    FormatError,
    GsfsError,
    IntegerOverflow,
    InvalidSymbol,
    NotBranched,
    NotInImage,
    ParseError,
)
from .local_action import (
    LocalActionSymbol,
    equivalent_local,
    from_local_action,
    local_sing_count,
    normalize_local,
    to_local_action,
    validate_local,
)
from .notation import parse_gsfs, parse_local, render_gsfs, render_local
from .symbols import (
    Epsilon,
    GsfsSymbol,
    OrientationPolicy,
    SeifertPair,
    Violation,
    equivalent,
    is_manifold,
    normalize_gsfs,
    reverse_orientation,
    sing_count,
    validate_gsfs,
)

__version__ = "0.1.0"
