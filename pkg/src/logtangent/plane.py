"""Total Tjurina number of a reduced plane curve.

Works in a three-variable ring: saturate the gradient ideal of the defining
polynomial and read the constant Hilbert polynomial of the quotient.  The
result matches the m-invariant of the pair (hyperplane, curve cone) in four
variables, which is the cross-check the acceptance suite runs.
"""

from __future__ import annotations

from .groebner import saturate_ideal
from .hilbert import hilbert_of_ideal_quotient
from .poly import Polynomial


class NonReducedCurveError(ValueError):
    """The gradient scheme is not finite, so the curve has a singular divisor."""


def tjurina_plane(g: Polynomial) -> int:
    """Degree of the saturated gradient scheme of g in k[x0, x1, x2]."""
    ring = g.ring
    if ring.nvars != 3:
        raise ValueError("plane-curve computation needs a three-variable ring")
    if g.is_zero() or not g.is_homogeneous() or g.degree < 1:
        raise ValueError("need a nonzero homogeneous polynomial of positive degree")
    grads = [g.partial(i) for i in range(3)]
    if all(p.is_zero() for p in grads):
        raise NonReducedCurveError("vanishing gradient")
    sat = saturate_ideal(ring, grads)
    h = hilbert_of_ideal_quotient(ring, sat)
    if h.pole_order == 0:
        return 0
    if h.pole_order == 1:
        return h.degree
    raise NonReducedCurveError(
        f"gradient scheme has projective dimension {h.dim_projective}"
    )
