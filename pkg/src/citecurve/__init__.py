"""Hyperbolic model of rank-ordered citation counts and the citation
indices that follow from it."""

from .errors import (
    CiteCurveError,
    DegenerateSignature,
    DomainError,
    EmptyGroup,
    EmptyInput,
    EmptyProfile,
    InsufficientData,
    InvariantViolation,
    IoError,
    ParseError,
)
from .model import *  # noqa: F401,F403
from .empirical import *  # noqa: F401,F403
from .approx import *  # noqa: F401,F403
from .group import *  # noqa: F401,F403
from .temporal import *  # noqa: F401,F403
from .stats import *  # noqa: F401,F403
from .ingest import *  # noqa: F401,F403
from .plots import emit_histogram_svg, emit_scatter_svg, histogram_svg, scatter_svg

__version__ = "0.1.0"
