"""
The QFT from one diagonal generator
===================================

The diagonal operator Im = diag(exp(-2 pi i d / 2^n)) is built from qubit
projectors and from a shifted angular-momentum spectrum. Its powers applied
to the uniform superposition give the QFT columns.
"""
import numpy as np

from eigensynth import multivalued as mv
from eigensynth.gates import H
from eigensynth.matrix_core import identity, max_abs_diff

for n in range(1, 5):
    im = mv.im_operator(n)
    print(f"n={n}: projector route {max_abs_diff(im, mv.im_from_projectors(n)):.1e}, "
          f"Jz route {max_abs_diff(im, mv.im_from_jz(n)):.1e}, "
          f"Im^(2^n) - I {max_abs_diff(np.linalg.matrix_power(im, 2 ** n), identity(2 ** n)):.1e}")

q = mv.qft_matrix(3)
print("\nQFT(3) columns vs formula:", max_abs_diff(q, mv.qft_matrix(3, "direct")))
print("unitary:", max_abs_diff(q @ q.conj().T, identity(8)))
print("QFT(1) == H:", max_abs_diff(mv.qft_matrix(1), H))

# This sign convention is the unnormalized numpy FFT scaled by 1/sqrt(N).
print("vs numpy fft:", max_abs_diff(q, np.fft.fft(np.eye(8)) / np.sqrt(8)))
