"""Exact angle geometry over the rational plane with certified angular measure."""

from .angles import (
    HALF_TURN,
    RIGHT,
    Angle,
    EnclosedAngle,
    GeneralizedAngle,
    Location,
    Ordering,
    ProperAngle,
    add_general,
    addable,
    angle_from_points,
    compare,
    congruent,
    inside,
    rotate_compose,
    supplement,
)
from .exact import (
    ConsistencyError,
    DomainError,
    PrecisionError,
    RatInterval,
    as_rat,
    sqrt_enclosure,
    sqrt_interval,
)
from .measure import (
    MeasureEnclosure,
    MeasuredAngle,
    PiEnclosure,
    Unit,
    arc_length,
    convert,
    envelope_check,
    from_halfturn_fraction,
    pi_enclosure,
    sigma,
    theta,
    theta_lower_chordsum,
)
from .plane import (
    Point,
    Ray,
    Segment,
    SqLength,
    add_lengths,
    betweenness,
    length_ratio,
    side_of_line,
    sq_length,
)

__version__ = "0.1.0"
