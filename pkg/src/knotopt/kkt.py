"""First-order optimality diagnostics for knot-placement problems.

The ordering constraints x_i - x_{i+1} <= 0 (i = 0..n, with x_0 = a and
x_{n+1} = b fixed) carry multipliers lambda_0..lambda_n.  Stationarity reads

    g_i + lambda_i - lambda_{i-1} = 0,    i = 1..n,

with g the gradient of the chosen objective, together with complementarity
0 <= x_{i+1} - x_i  perp  lambda_i >= 0.  For this problem every KKT point
has all multipliers zero and strictly ordered knots, so when the knots are
strictly separated the report simply sets lambda = 0 and the stationarity
residual equals the max-norm of the gradient.  When ties are present the
multipliers are recovered by a forward substitution sweep through the
stationarity rows (tied constraints take the value forced by their row,
separated ones take zero, negatives are clamped) and the residuals report
how far the rows remain from holding.

``hessian_phi`` assembles the tridiagonal curvature matrix of the area
objective's stationarity system: diagonal (x_{i-1} - x_{i+1}) f''(x_i),
off-diagonal f'(x_{i+1}) - f'(x_i).  This equals twice the Hessian of phi
(the scale does not affect definiteness).  ``prop1_test`` applies a
sufficient local-minimum condition for tridiagonal matrices: positive
diagonal entries plus, for i = 1..n-1,

    [f'(x_{i+1}) - f'(x_i)]^2
        < (1/4)(x_{i-1} - x_{i+1})(x_i - x_{i+2}) f''(x_i) f''(x_{i+1})
          / cos^2(pi / (n + 1)).

The index range stops at n - 1 because the i = n instance would reference a
breakpoint beyond b.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .objective import ObjectiveKind, YObjective, grad_phi
from .pl import KnotVector

#: a segment narrower than this counts as an active (tied) constraint
COMPLEMENTARITY_TOL = 1e-8


@dataclass(frozen=True)
class KktReport:
    lam: np.ndarray                      # multipliers lambda_0..lambda_n
    stationarity_residual: float
    complementarity_residual: float
    hessian: np.ndarray = field(repr=False)
    prop1_holds: bool | None
    prop1_margins: np.ndarray | None

    def to_dict(self) -> dict:
        return {
            "lambda": self.lam.tolist(),
            "stationarity_residual": self.stationarity_residual,
            "complementarity_residual": self.complementarity_residual,
            "hessian": self.hessian.tolist(),
            "prop1_holds": self.prop1_holds,
            "prop1_margins": None if self.prop1_margins is None
                             else self.prop1_margins.tolist(),
        }


def _objective_gradient(curve, knots: KnotVector, kind: ObjectiveKind) -> np.ndarray:
    if kind is ObjectiveKind.CONCAVE_AREA:
        return grad_phi(curve, knots)
    return YObjective(curve, knots.a, knots.b, kind=kind).grad_x(knots)


def kkt_check(curve, knots: KnotVector,
              kind: ObjectiveKind = ObjectiveKind.CONCAVE_AREA) -> KktReport:
    """Recover multipliers and measure how far the KKT conditions are violated."""
    xs = knots.full()
    gaps = np.diff(xs)
    g = _objective_gradient(curve, knots, kind)
    n = knots.n

    active = gaps <= COMPLEMENTARITY_TOL
    lam = np.zeros(n + 1)
    if np.any(active):
        # forward substitution through g_i + lam_i - lam_{i-1} = 0
        for i in range(1, n + 1):
            if active[i]:
                lam[i] = lam[i - 1] - g[i - 1]
        np.maximum(lam, 0.0, out=lam)

    rows = g + lam[1:] - lam[:-1]
    stationarity = float(np.max(np.abs(rows))) if n else 0.0
    complementarity = float(np.max(np.minimum(gaps, lam)))

    hessian = hessian_phi(curve, knots)
    return KktReport(
        lam=lam,
        stationarity_residual=stationarity,
        complementarity_residual=complementarity,
        hessian=hessian,
        prop1_holds=None,
        prop1_margins=None,
    )


def hessian_phi(curve, knots: KnotVector) -> np.ndarray:
    """Tridiagonal curvature matrix of the area objective (twice its Hessian)."""
    xs = knots.full()
    n = knots.n
    fpp = np.asarray(curve.deriv2(xs[1:-1]), dtype=float)
    diag = (xs[:-2] - xs[2:]) * fpp
    matrix = np.diag(diag)
    if n > 1:
        fp = np.asarray(curve.deriv1(xs[1:-1]), dtype=float)
        off = fp[1:] - fp[:-1]
        matrix += np.diag(off, 1) + np.diag(off, -1)
    return matrix


def prop1_test(curve, knots: KnotVector,
               kkt_tol: float = 1e-6) -> tuple[bool, np.ndarray]:
    """Sufficient second-order test at a KKT point of the area objective.

    Returns (holds, margins) where margins[i] is the slack of the strict
    inequality for index i + 1 (empty when n == 1, in which case the verdict
    is positivity of the single diagonal entry).  Raises if the point fails
    the first-order check at tolerance ``kkt_tol``.
    """
    report = kkt_check(curve, knots, ObjectiveKind.CONCAVE_AREA)
    if report.stationarity_residual > kkt_tol:
        raise ValueError(
            f"not a KKT point: stationarity residual "
            f"{report.stationarity_residual:.3e} exceeds {kkt_tol:.1e}")

    xs = knots.full()
    n = knots.n
    fpp = np.asarray(curve.deriv2(xs[1:-1]), dtype=float)
    diag = (xs[:-2] - xs[2:]) * fpp
    if n == 1:
        return bool(diag[0] > 0.0), np.empty(0)

    fp = np.asarray(curve.deriv1(xs[1:-1]), dtype=float)
    lhs = (fp[1:] - fp[:-1]) ** 2
    # (x_{i-1} - x_{i+1})(x_i - x_{i+2}) f''(x_i) f''(x_{i+1}) terms, i = 1..n-1
    rhs = 0.25 * diag[:-1] * diag[1:] / math.cos(math.pi / (n + 1)) ** 2
    margins = rhs - lhs
    holds = bool(np.all(diag > 0.0) and np.all(margins > 0.0))
    return holds, margins
