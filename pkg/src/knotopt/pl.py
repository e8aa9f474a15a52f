"""Piecewise-linear interpolants through a knot vector and their error measures.

A knot vector holds the interval endpoints plus n ordered interior knots.
The interpolant agrees with the curve at every knot; each segment stores its
slope/intercept pair.  Coincident knots are allowed as inputs: a zero-width
segment becomes a degenerate marker that contributes nothing to any error
measure and is skipped during evaluation.

Three error measures are provided.  ``error_concave`` is the signed area
between the curve and the interpolant (exact L1 error when the curve is
concave, where the interpolant under-approximates everywhere).
``error_general`` squares each segment's signed area gap before summing, so
it is meaningful without a concavity assumption.  ``error_interior_squared``
is the squared-gap sum restricted to the segments joining consecutive
interior knots; this is the quantity reported by the experiment harness (see
``knotopt.harness``), matching the known reference values for the
bundled catalog.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

_DEGENERATE_WIDTH = 0.0  # ties are exact; no tolerance involved


@dataclass(frozen=True)
class KnotVector:
    """Endpoints a < b plus n nondecreasing interior knots in [a, b]."""

    a: float
    b: float
    interior: np.ndarray

    def __post_init__(self):
        # copy so later caller-side mutation cannot break the frozen invariant
        xs = np.array(self.interior, dtype=float).reshape(-1)
        if not self.a < self.b:
            raise ValueError("knot vector needs a < b")
        if xs.size and (xs[0] < self.a or xs[-1] > self.b):
            raise ValueError("interior knots must lie in [a, b]")
        if np.any(np.diff(xs) < 0):
            raise ValueError("interior knots must be nondecreasing")
        xs.flags.writeable = False
        object.__setattr__(self, "interior", xs)

    @classmethod
    def equally_spaced(cls, a: float, b: float, n: int) -> "KnotVector":
        """n interior knots splitting [a, b] into n + 1 equal segments."""
        return cls(a, b, np.linspace(a, b, n + 2)[1:-1])

    @property
    def n(self) -> int:
        return self.interior.size

    def full(self) -> np.ndarray:
        """All n + 2 breakpoints including the endpoints."""
        return np.concatenate(([self.a], self.interior, [self.b]))


@dataclass(frozen=True)
class Segment:
    alpha: float
    beta: float
    lo: float
    hi: float
    degenerate: bool = False


@dataclass(frozen=True)
class PLApprox:
    """Piecewise-linear interpolant; callable on scalars or arrays."""

    segments: list[Segment] = field(repr=False)
    knots: KnotVector
    values: np.ndarray = field(repr=False)

    def __call__(self, x):
        xs = self.knots.full()
        keep = np.concatenate(([True], np.diff(xs) > _DEGENERATE_WIDTH))
        out = np.interp(np.asarray(x, dtype=float), xs[keep], self.values[keep])
        return out if np.ndim(x) else float(out)


def build_pl(curve, knots: KnotVector) -> PLApprox:
    """Interpolant through (x_i, f(x_i)); degenerate segments are marked."""
    xs = knots.full()
    fv = np.asarray(curve.value(xs), dtype=float)
    segments = []
    for lo, hi, flo, fhi in zip(xs[:-1], xs[1:], fv[:-1], fv[1:]):
        if hi - lo <= _DEGENERATE_WIDTH:
            segments.append(Segment(0.0, flo, lo, hi, degenerate=True))
        else:
            alpha = (fhi - flo) / (hi - lo)
            beta = (hi * flo - lo * fhi) / (hi - lo)
            segments.append(Segment(alpha, beta, lo, hi))
    return PLApprox(segments=segments, knots=knots, values=fv)


def segment_gaps(curve, knots: KnotVector) -> np.ndarray:
    """Per-segment signed area between curve and chord.

    gap_i = integral of f over [x_i, x_{i+1}] minus the trapezoid
    (1/2)(f(x_i) + f(x_{i+1}))(x_{i+1} - x_i).  Degenerate segments give 0.
    Each segment is integrated independently so the gaps can be inspected
    (and squared) individually.
    """
    xs = knots.full()
    fv = np.asarray(curve.value(xs), dtype=float)
    integrals = curve.integrate_segments(xs[:-1], xs[1:])
    trapezoids = 0.5 * (fv[:-1] + fv[1:]) * np.diff(xs)
    return integrals - trapezoids


def error_concave(curve, knots: KnotVector) -> float:
    """Area under the curve minus area under the interpolant.

    Nonnegative whenever the curve is concave on [a, b] (the chords then lie
    below the curve); the caller is responsible for that assumption.
    """
    return float(np.sum(segment_gaps(curve, knots)))


def error_general(curve, knots: KnotVector) -> float:
    """Sum of squared per-segment area gaps over all n + 1 segments."""
    return float(np.sum(segment_gaps(curve, knots) ** 2))


def error_interior_squared(curve, knots: KnotVector) -> float:
    """Squared-gap sum over interior segments only.

    Counts the segments [x_1, x_2] .. [x_{n-1}, x_n] between consecutive
    interior knots and excludes the two boundary segments touching a and b.
    Zero when n < 2.  This is the error the experiment harness reports.
    """
    gaps = segment_gaps(curve, knots)
    if gaps.size <= 2:
        return 0.0
    return float(np.sum(gaps[1:-1] ** 2))
