"""
Walsh spectra and Reed-Muller products
======================================

Over the +1/-1 encoding a Boolean function is a linear combination of Pauli-Z
characters. The Walsh coefficients are those weights, and the GF(2)
polynomial of the function gives a second, multiplicative construction.
"""
import itertools

import numpy as np

from eigensynth.fourier import (
    BooleanFunction,
    character_expansion,
    householder,
    quantum_boolean_operator,
    reed_muller,
    reed_muller_product,
    walsh_transform,
)
from eigensynth.matrix_core import max_abs_diff

# Three-input majority.
maj = BooleanFunction.from_callable(3, lambda x, y, z: int(x + y + z >= 2))
spectrum = walsh_transform(maj)
print("majority, +1/-1 values:", maj.values)
print("character expansion:", character_expansion(maj))
print("Parseval sum:", spectrum.parseval_sum(), "(always 4^n = 64)")

# Reconstruct the operator from the characters and check the diagonal.
g = quantum_boolean_operator(maj)
print("diagonal:", np.diag(g).real)

# Reed-Muller form: XOR of AND monomials. Each monomial contributes a
# (-1)^{AND} factor, and the factors multiply to the same operator.
form = reed_muller(maj.bools())
print("\nReed-Muller monomials:", sorted(sorted(m) for m in form.monomials))
print("product vs characters:", max_abs_diff(reed_muller_product(form), g))

# Every 3-input function agrees under both constructions.
worst = max(
    max_abs_diff(reed_muller_product(reed_muller(b)),
                 quantum_boolean_operator(BooleanFunction.from_bools(3, b)))
    for b in itertools.product((0, 1), repeat=8)
)
print("worst disagreement over all 256 functions:", worst)

# Householder: a projector P becomes the reflection I - 2P.
p_and = np.diag([0, 0, 0, 1.0])
print("\nI - 2 P_AND:", np.diag(householder(p_and)).real)
