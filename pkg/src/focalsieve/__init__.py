"""Geometric model of the Sieve of Eratosthenes.

The first p² integers embed into the plane so that divisibility by any
a in [2, p-1] becomes incidence with a family of "focal" lines; sieving the
interval (p, p²) is then a purely geometric crossing-out.  The package
keeps all geometry in exact rational arithmetic, verifies every structural
claim against brute-force oracles, and renders deterministic SVG figures.
"""

from .extremes import Extreme, QuotientPoint, extremes, quotient_points, reflect
from .focal import (
    FocalLine,
    FocalPoint,
    MultiplicativeAxis,
    ZerothLine,
    family_lines,
    focal_line,
    focal_point,
    k_witness,
    lattice_hits,
    line_contains,
    multiplicative_axis,
    pairwise_intersection,
    zeroth_line,
)
from .numerics import Rational, arith, format_rational, parse_rational, rat
from .plane import (
    NotPrimeError,
    PlanePoint,
    SieveContext,
    map_to_plane,
    new_context,
    point,
    unmap,
)
from .remainders import (
    QuotientClass,
    attained_quotients,
    max_remainder_for_quotient,
    min_a_for_quotient,
    quotient_class,
)
from .render import (
    RenderOptions,
    Window,
    make_window,
    render_detail,
    render_quotient_distribution,
    render_quotient_remainder,
    render_sieve,
)
from .sieve import (
    SieveResult,
    crossed_geometric,
    primes_classic,
    primes_geometric,
    sieve_classic,
    sieve_geometric,
)
from .verify import run_verification

__version__ = "0.1.0"

__all__ = [
    "Extreme",
    "FocalLine",
    "FocalPoint",
    "MultiplicativeAxis",
    "NotPrimeError",
    "PlanePoint",
    "QuotientClass",
    "QuotientPoint",
    "Rational",
    "RenderOptions",
    "SieveContext",
    "SieveResult",
    "Window",
    "ZerothLine",
    "arith",
    "attained_quotients",
    "crossed_geometric",
    "extremes",
    "family_lines",
    "focal_line",
    "focal_point",
    "format_rational",
    "k_witness",
    "lattice_hits",
    "line_contains",
    "make_window",
    "map_to_plane",
    "max_remainder_for_quotient",
    "min_a_for_quotient",
    "multiplicative_axis",
    "new_context",
    "pairwise_intersection",
    "parse_rational",
    "point",
    "primes_classic",
    "primes_geometric",
    "quotient_class",
    "quotient_points",
    "rat",
    "reflect",
    "render_detail",
    "render_quotient_distribution",
    "render_quotient_remainder",
    "render_sieve",
    "run_verification",
    "sieve_classic",
    "sieve_geometric",
    "unmap",
    "zeroth_line",
    "__version__",
]
