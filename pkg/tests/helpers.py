"""Shared test curves and independent numerical oracles."""

from __future__ import annotations

import numpy as np

from knotopt.quadrature import integrate_segments


class QuadraticCurve:
    """Closed-form quadratic a2*x^2 + a1*x + a0 used as a test hook."""

    def __init__(self, a2: float, a1: float, a0: float):
        self.a2, self.a1, self.a0 = a2, a1, a0

    def value(self, x):
        x = np.asarray(x, dtype=float)
        out = self.a2 * x ** 2 + self.a1 * x + self.a0
        return out if out.ndim else float(out)

    def deriv1(self, x):
        x = np.asarray(x, dtype=float)
        out = 2.0 * self.a2 * x + self.a1
        return out if out.ndim else float(out)

    def deriv2(self, x):
        x = np.asarray(x, dtype=float)
        out = np.full_like(x, 2.0 * self.a2)
        return out if out.ndim else float(out)

    def _antideriv(self, x):
        return self.a2 * x ** 3 / 3.0 + self.a1 * x ** 2 / 2.0 + self.a0 * x

    def integrate(self, lo, hi):
        return float(self._antideriv(hi) - self._antideriv(lo))

    def integrate_segments(self, lo, hi):
        lo = np.asarray(lo, dtype=float)
        hi = np.asarray(hi, dtype=float)
        return self._antideriv(hi) - self._antideriv(lo)


class LinearCurve(QuadraticCurve):
    """Affine curve; every chord matches it exactly."""

    def __init__(self, slope: float, offset: float):
        super().__init__(0.0, slope, offset)


class QuadratureBackedQuadratic(QuadraticCurve):
    """Quadratic hook whose integrals go through the production quadrature."""

    def integrate(self, lo, hi):
        if hi == lo:
            return 0.0
        return float(integrate_segments(self.value, [lo], [hi])[0])

    def integrate_segments(self, lo, hi):
        return integrate_segments(self.value, lo, hi)


def central_diff(func, x: float, h: float) -> float:
    return (func(x + h) - func(x - h)) / (2.0 * h)


def fd_gradient(func, x: np.ndarray, h: float | np.ndarray) -> np.ndarray:
    """Componentwise central finite differences of a scalar function."""
    x = np.asarray(x, dtype=float)
    h = np.broadcast_to(np.asarray(h, dtype=float), x.shape)
    grad = np.empty_like(x)
    for i in range(x.size):
        step = np.zeros_like(x)
        step[i] = h[i]
        grad[i] = (func(x + step) - func(x - step)) / (2.0 * h[i])
    return grad


def fd_gradient_richardson(func, x: np.ndarray,
                           h: float | np.ndarray) -> np.ndarray:
    """Central differences at steps h and h/2, Richardson-extrapolated.

    Cancels the leading h^2 truncation term, leaving O(h^4) error; useful
    when gradient components near zero must be resolved to tight absolute
    tolerances.
    """
    coarse = fd_gradient(func, x, h)
    fine = fd_gradient(func, x, 0.5 * np.asarray(h, dtype=float))
    return (4.0 * fine - coarse) / 3.0


def simpson_integral(func, lo: float, hi: float, tol: float = 1e-12,
                     max_doublings: int = 24) -> float:
    """Composite Simpson with panel doubling until two estimates agree."""
    if hi == lo:
        return 0.0
    panels = 8
    prev = _simpson_fixed(func, lo, hi, panels)
    for _ in range(max_doublings):
        panels *= 2
        cur = _simpson_fixed(func, lo, hi, panels)
        if abs(cur - prev) <= tol * max(1.0, abs(cur)):
            return cur
        prev = cur
    raise RuntimeError("simpson oracle did not converge")


def _simpson_fixed(func, lo: float, hi: float, panels: int) -> float:
    xs = np.linspace(lo, hi, 2 * panels + 1)
    fv = np.asarray(func(xs), dtype=float)
    h = (hi - lo) / (2 * panels)
    return h / 3.0 * (fv[0] + fv[-1] + 4.0 * fv[1:-1:2].sum() + 2.0 * fv[2:-2:2].sum())


def brute_force_cone_projection_batch(V: np.ndarray) -> np.ndarray:
    """Projection of each row of V onto {0 <= y_1 <= ... <= y_n}.

    Active-set enumeration: every subset of the n + 1 constraints is treated
    as tight, the resulting equality-constrained least-squares problem is
    solved in closed form (pooled coordinates take their group mean, a group
    anchored at the floor takes zero), and the best feasible candidate wins.
    Exponential in n, so only usable for small n; entirely independent of
    the production code.
    """
    V = np.atleast_2d(np.asarray(V, dtype=float))
    m, n = V.shape
    best = np.full_like(V, np.nan)
    best_cost = np.full(m, np.inf)
    for mask in range(1 << n):
        # bit 0: y_1 = 0; bit i (i >= 1): y_i = y_{i+1}
        groups = []
        start = 0
        for i in range(1, n):
            if not mask & (1 << i):
                groups.append((start, i))
                start = i
        groups.append((start, n))
        Y = np.empty_like(V)
        for lo, hi in groups:
            if lo == 0 and mask & 1:
                Y[:, lo:hi] = 0.0
            else:
                Y[:, lo:hi] = V[:, lo:hi].mean(axis=1, keepdims=True)
        feasible = Y[:, 0] >= -1e-12
        if n > 1:
            feasible &= np.all(np.diff(Y, axis=1) >= -1e-12, axis=1)
        cost = np.sum((V - Y) ** 2, axis=1)
        better = feasible & (cost < best_cost)
        best[better] = Y[better]
        best_cost[better] = cost[better]
    return best


def brute_force_cone_projection(v: np.ndarray) -> np.ndarray:
    return brute_force_cone_projection_batch(np.asarray(v, dtype=float))[0]


def random_feasible_y(rng: np.random.Generator, n: int, scale: float = 2.0) -> np.ndarray:
    """A random point of the cone with comfortably positive components."""
    return np.cumsum(rng.uniform(0.01, scale, size=n))
