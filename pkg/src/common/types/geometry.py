"""Geometry-level enumerations shared across modules."""

from enum import Enum


class SurfaceKind(str, Enum):
    """Surface generator kinds."""

    CLIFFORD = "clifford"
    HOMOGENEOUS = "homogeneous"
    HOPF = "hopf"
    HSL = "hsl"
    SAMPLED = "sampled"
    MOEBIUS_IMAGE = "moebius_image"
    CONFORMAL_MASLOV = "conformal_maslov"


class Ambient(str, Enum):
    """Space form a CMC surface lives in."""

    R3 = "R3"
    S3 = "S3"


class HarmonicSide(str, Enum):
    """Which Euclidean normal is harmonic."""

    LEFT = "left"
    RIGHT = "right"
