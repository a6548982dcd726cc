"""
Truth tables as operators
=========================

A logical connective becomes an observable whose eigenvalues are the
connective's outputs. Everything starts from a one-variable seed whose
eigenvalues are the alphabet of truth values.
"""
import numpy as np

from eigensynth.interpolation import (
    Alphabet,
    SeedOperator,
    TruthTable,
    all_truth_tables,
    as_seed_polynomial,
    projectors_from_seed,
    synthesize,
    verify_eigenlogic,
)

np.set_printoptions(precision=3, suppress=True)

# The Boolean alphabet {0, 1}. The seed is diag(0, 1), i.e. the projector
# onto |1>. Its spectral family is a pair of orthogonal projectors that sum
# to the identity.
b01 = Alphabet((0, 1))
seed = SeedOperator(b01)
family = projectors_from_seed(seed)
print("seed:\n", seed.matrix)
print("projector defects:", family.defects())

# AND over two variables. Only the interpretation x = y = 1 gives eigenvalue 1.
and_op = synthesize(TruthTable(b01, 2, (0, 0, 0, 1)), seed)
print("\nAND:\n", and_op.matrix.real)
print("eigenvalue check:", verify_eigenlogic(and_op))

# The same construction works for any set of distinct values. With the
# +1/-1 alphabet, XOR is the product Z (x) Z.
pm = Alphabet((1, -1))
xor_op = synthesize(TruthTable.from_function(pm, 2, lambda x, y: x * y), SeedOperator(pm))
print("\nXOR over +1/-1:", np.diag(xor_op.matrix).real)

# A three-valued alphabet with a complex root of unity.
omega = np.exp(2j * np.pi / 3)
tri = SeedOperator.from_values((1, omega, omega ** 2))
print("\nthree-valued family defects:", projectors_from_seed(tri).defects())

# For one variable every connective is a polynomial in the seed.
for table in all_truth_tables(pm, 1):
    op = synthesize(table, SeedOperator(pm))
    coeffs = np.round(np.real(as_seed_polynomial(op)), 12)
    print(f"table {np.real(table.entries)} -> {coeffs[0] + 0:+.0f} I {coeffs[1] + 0:+.0f} Z")
