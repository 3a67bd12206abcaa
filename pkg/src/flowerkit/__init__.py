"""Reciprocal bodies, flowers and the spherical inversion for convex geometry in R^n."""
from .arithmetic import ScaledSum, flower_sum, minkowski, oplus, radial_sum, scale
from .bodies import (
    Ball,
    Body,
    Ellipse2,
    HRep,
    Polytope,
    Segment,
    StarBody,
    body_from_json,
    radial,
    support,
)
from .dualities import (
    alexandrov,
    core,
    flower,
    inner_hull,
    is_flower,
    is_reciprocal,
    phi,
    polar,
    reciprocal,
    star_conv,
)
from .functionals import (
    flower_mixed_volume,
    flower_volume,
    geometric_distance,
    quermass_flower,
    star_volume,
    verify_inequality,
)
from .numkit import GeometryError, SphereGrid, UnboundedBody, make_grid

__version__ = "0.1.0"
