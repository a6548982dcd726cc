"""
Controlled gates from projectors, exponentials and T phases
============================================================

CZ, CNOT, CCZ and Toffoli are built several ways and checked against their
textbook matrices.
"""
import numpy as np

from eigensynth import gates, routes
from eigensynth.matrix_core import max_abs_diff

# Each route is an independent construction. All must land on the same matrix.
for name in ("CZ", "CNOT", "CCZ", "TOFFOLI"):
    target = routes.build(name)
    for route in routes.available_routes(name):
        diff = max_abs_diff(routes.build(name, route), target)
        print(f"{name:8s} {route:13s} {diff:.1e}")

# Toffoli as a global phase times seven commuting Pauli-word exponentials.
f = gates.toffoli_factorization_printed()
print("\nToffoli phase:", np.round(f.global_phase, 6))
for factor in f.factors:
    print(f"  exp(i {factor.angle / np.pi:+.3f} pi {factor.word})")
print("largest commutator between factors:", f.max_commutator())

# Because the factors commute, any order works.
shuffled = f.evaluate(order=[6, 3, 0, 5, 1, 4, 2])
print("reordered product vs Toffoli:", max_abs_diff(shuffled, gates.standard_gate("TOFFOLI")))

# CCZ from seven diagonal T-phase factors on XORs of the inputs.
form = gates.t_product_ccz()
print("\nT-product:", " ".join(fac.label() for fac in form.factors))
print("vs CCZ:", max_abs_diff(gates.evaluate_t_product(form), gates.standard_gate("CCZ")))

# The same cancellation written as a polynomial in the T operators, for
# each of the supported phase roots r.
for root in ("omega", "omega_s", "-1"):
    diff = max_abs_diff(gates.t_polynomial_ccz(root), gates.standard_gate("CCZ"))
    print(f"T-polynomial with r = {root:8s} {diff:.1e}")
