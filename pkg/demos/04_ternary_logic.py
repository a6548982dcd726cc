"""
Three-valued connectives
========================

With the seed diag(+1, 0, -1) the same interpolation yields ternary Min and
Max. The reversed seed diag(-1, 0, +1) gives a balanced half-adder.
"""
import numpy as np

from eigensynth import multivalued as mv
from eigensynth.matrix_core import max_abs_diff


def grid(op):
    return np.diag(op).real.reshape(3, 3)


# Closed-form projectors for the seed match the generic construction.
for p in mv.lz_projectors_closed_form():
    print(np.diag(p).real)

print("\nMin (rows U, columns V, order +1 0 -1):\n", grid(mv.min_operator()))
print("Max:\n", grid(mv.max_operator()))
print("polynomial vs interpolation:",
      max_abs_diff(mv.min_operator("polynomial"), mv.min_operator("interpolation")),
      max_abs_diff(mv.max_operator("polynomial"), mv.max_operator("interpolation")))

# Balanced ternary half-adder: A + C = 3 carry + sum.
total, carry = mv.half_adder_operators()
print("\nsum (order -1 0 +1):\n", grid(total))
print("carry:\n", grid(carry))
values = np.array([-1, 0, 1])
a, c = np.meshgrid(values, values, indexing="ij")
print("3*carry + sum == A + C:", np.allclose(3 * grid(carry) + grid(total), a + c))
