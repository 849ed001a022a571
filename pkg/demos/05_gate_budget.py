"""CNOT and qubit budgets of one splitting step.

A sixth-order step on an n-qubit-per-dimension, d-dimensional grid
costs 30nd + 60d + 32 CNOT equivalents on nd + 2 qubits: each of the
15 unitary stages spends 2n + 4 per dimension, each of the 16
dissipative stages spends 2.  The counter walks the actual circuits, so
the closed formula is re-derived, not assumed.
"""
from wavesplit.harness import gate_report

print("bernier6 budgets (counted == formula on every row):")
print(f"{'n':>3} {'d':>2} {'cnots/step':>11} {'qubits':>7}")
for n, d in [(3, 1), (7, 1), (10, 1), (15, 1), (7, 2), (15, 3), (20, 3)]:
    rep = gate_report("bernier6", n, d)
    assert rep.consistent
    print(f"{n:>3} {d:>2} {rep.per_step_cnots:>11} {rep.qubits:>7}")

print("\nper-scheme cost at n=7, d=1:")
for name in ("lie", "strang", "castella4", "bernier6"):
    rep = gate_report(name, 7, 1)
    print(f"  {name:<10} {rep.per_step_cnots:>5} CNOTs/step")

print("\nsmallest case, lie at n=1: "
      f"{gate_report('lie', 1, 1).per_step_cnots} CNOTs "
      "(one wave stage 2n+4=6, one dissipative stage 2)")
