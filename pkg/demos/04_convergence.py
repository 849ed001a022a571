"""Order-of-convergence study for all four schemes.

Each scheme runs the same n=5 damped Gaussian problem over a ladder of
step counts; the least-squares slope of log(error) against log(dt)
should land on the design order.  The final time deliberately avoids
half-period resonances, where the leading error terms of every mode
cancel simultaneously and the fitted slopes overshoot.
"""
from wavesplit.circuits import ModeSystem
from wavesplit.harness import (
    DEFAULT_SWEEP_STEPS,
    DEFAULT_SWEEP_T_FINAL,
    convergence_sweep,
    gaussian_profile,
)
from wavesplit.schemes import builtin_schemes

sys5 = ModeSystem(n=5, gamma=0.5)
phi, dphi = gaussian_profile(sys5)

for scheme in builtin_schemes():
    table = convergence_sweep(scheme, sys5, DEFAULT_SWEEP_T_FINAL,
                              list(DEFAULT_SWEEP_STEPS[scheme.name]), phi, dphi)
    print(f"\n{scheme.name} (design order {scheme.order})")
    for row in table.rows:
        print(f"  T={row.T:<4d} dt={row.dt:.5f} eps={row.epsilon:.3e} "
              f"cnots={row.cnot_total}")
    lo, hi = table.fit_window
    print(f"  fitted order {table.fitted_order:.3f} "
          f"over rows {lo}..{hi - 1}")
