"""Certifying solutions with first- and second-order checks.

A knot vector is first-order optimal for the area objective exactly when
its gradient vanishes with all ordering multipliers at zero.  On top of
that, a tridiagonal curvature test gives a sufficient condition for a
strict local minimum.  Both checks are cheap, so they double as a safety
net for solver output: the cone substitution can park iterates against the
right endpoint where the transformed gradient is artificially tiny, and the
diagnostic residual exposes that immediately.
"""

import numpy as np

from knotopt import (KnotVector, ObjectiveKind, default_catalog, hessian_phi,
                     kkt_check, prop1_test, solve)

catalog = {e.name: e for e in default_catalog()}
entry = catalog["logistic1a"]

report = solve(entry.curve, ObjectiveKind.CONCAVE_AREA, 4,
               a=entry.a, b=entry.b)
kkt = kkt_check(entry.curve, report.final_knots)
print(f"solution knots {np.array2string(report.final_knots.interior, precision=6)}")
print(f"stationarity residual {kkt.stationarity_residual:.2e}, "
      f"multipliers {kkt.lam}")

holds, margins = prop1_test(entry.curve, report.final_knots)
print(f"sufficient condition holds: {holds}, "
      f"margins {np.array2string(margins, precision=3)}")
print("curvature matrix eigenvalues:",
      np.array2string(np.linalg.eigvalsh(hessian_phi(entry.curve,
                                                     report.final_knots)),
                      precision=4))

# an arbitrary knot vector fails the first-order check
arbitrary = KnotVector(entry.a, entry.b, np.array([0.1, 0.4, 0.6, 1.9]))
print(f"\narbitrary knots residual: "
      f"{kkt_check(entry.curve, arbitrary).stationarity_residual:.3e}")

# the known trap: knots crowded against b look stationary in y coordinates,
# but the x-space residual gives them away
trapped = solve(entry.curve, ObjectiveKind.CONCAVE_AREA, 3,
                init=KnotVector(entry.a, entry.b, np.array([1.7, 1.8, 1.9])))
residual = kkt_check(entry.curve, trapped.final_knots).stationarity_residual
print(f"\nright-cluster start: termination {trapped.termination.value}, "
      f"knots {np.array2string(trapped.final_knots.interior, precision=5)}, "
      f"residual {residual:.3e}")
if residual > 1e-6:
    print("-> not first-order optimal; restart from a different point")
