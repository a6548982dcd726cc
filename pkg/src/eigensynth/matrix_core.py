"""Dense complex linear algebra at small dimensions.

Every operator in the package is a ``numpy.ndarray`` of dtype ``complex128``.
State vectors are 1-d arrays. Dimensions in scope are tiny (at most 81), so
everything is dense.
"""
from __future__ import annotations

from functools import reduce

import numpy as np

DEFAULT_TOL = 1e-10

_DIAG_TOL = 1e-14
_INVOLUTION_TOL = 1e-12


def as_matrix(a) -> np.ndarray:
    m = np.asarray(a, dtype=complex)
    if m.ndim != 2:
        raise ValueError(f"expected a 2-d matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix has non-finite entries")
    return m


def identity(dim: int) -> np.ndarray:
    return np.eye(dim, dtype=complex)


def matmul(a, b) -> np.ndarray:
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    if a.shape[-1] != b.shape[0]:
        raise ValueError(f"cannot multiply shapes {a.shape} and {b.shape}")
    return a @ b


def mat_product(*mats) -> np.ndarray:
    """Left-to-right product of one or more conformable matrices."""
    return reduce(matmul, mats)


def kron(a, b) -> np.ndarray:
    """Kronecker product; ``a`` is the high-order (leftmost) factor."""
    return np.kron(np.asarray(a, dtype=complex), np.asarray(b, dtype=complex))


def kron_all(*mats) -> np.ndarray:
    return reduce(kron, mats)


def adjoint(a) -> np.ndarray:
    return np.conj(np.asarray(a, dtype=complex)).T


def max_abs_diff(a, b) -> float:
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    if a.shape != b.shape:
        raise ValueError(f"shape mismatch: {a.shape} vs {b.shape}")
    if a.size == 0:
        return 0.0
    return float(np.max(np.abs(a - b)))


def apply(a, v) -> np.ndarray:
    """Matrix-vector product ``a|v>``."""
    a = np.asarray(a, dtype=complex)
    v = np.asarray(v, dtype=complex)
    if v.ndim != 1:
        raise ValueError(f"state vector must be 1-d, got shape {v.shape}")
    if a.shape[1] != v.shape[0]:
        raise ValueError(f"cannot apply {a.shape} matrix to state of dim {v.shape[0]}")
    return a @ v


def basis_state(index: int, dim: int) -> np.ndarray:
    v = np.zeros(dim, dtype=complex)
    v[index] = 1.0
    return v


def is_diagonal(a, tol: float = _DIAG_TOL) -> bool:
    off = a - np.diag(np.diag(a))
    return bool(np.all(np.abs(off) < tol))


def _involution_parts(a):
    """Return ``(theta, M)`` with ``a = i*theta*M`` and ``M @ M = I``, or None.

    ``theta`` is chosen from the Frobenius norm, so M is determined up to sign
    (both signs give the same exponential).
    """
    n = a.shape[0]
    norm = np.linalg.norm(a) / np.sqrt(n)
    if norm == 0.0:
        return None
    m = a / (1j * norm)
    if max_abs_diff(m @ m, identity(n)) < _INVOLUTION_TOL:
        return norm, m
    return None


def expm_series(a, terms: int = 18) -> np.ndarray:
    """Scaling-and-squaring with a truncated Taylor series.

    The argument is scaled down until its 1-norm is at most 1/2, so 18 terms
    leave a truncation error far below double precision.
    """
    a = np.asarray(a, dtype=complex)
    n = a.shape[0]
    norm = np.linalg.norm(a, 1)
    squarings = max(0, int(np.ceil(np.log2(norm / 0.5)))) if norm > 0.5 else 0
    scaled = a / (2.0 ** squarings)
    result = identity(n)
    term = identity(n)
    for k in range(1, terms + 1):
        term = term @ scaled / k
        result = result + term
    for _ in range(squarings):
        result = result @ result
    return result


def expm(a) -> np.ndarray:
    """Matrix exponential.

    Dispatch: diagonal arguments are exponentiated elementwise; ``i*theta*M``
    with an involution ``M`` uses ``cos(theta) I + i sin(theta) M``; anything
    else falls through to :func:`expm_series`.
    """
    a = np.asarray(a, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expm needs a square matrix, got shape {a.shape}")
    if is_diagonal(a):
        return np.diag(np.exp(np.diag(a)))
    parts = _involution_parts(a)
    if parts is not None:
        theta, m = parts
        return np.cos(theta) * identity(a.shape[0]) + 1j * np.sin(theta) * m
    return expm_series(a)


def expm_involution(theta: float, m) -> np.ndarray:
    """``exp(i*theta*M)`` for ``M @ M = I`` in closed form."""
    m = np.asarray(m, dtype=complex)
    if max_abs_diff(m @ m, identity(m.shape[0])) > _INVOLUTION_TOL:
        raise ValueError("argument is not an involution")
    return np.cos(theta) * identity(m.shape[0]) + 1j * np.sin(theta) * m


def is_unitary(a, tol: float = DEFAULT_TOL) -> bool:
    a = np.asarray(a, dtype=complex)
    return max_abs_diff(a @ adjoint(a), identity(a.shape[0])) < tol


def is_hermitian(a, tol: float = DEFAULT_TOL) -> bool:
    return max_abs_diff(a, adjoint(a)) < tol


def commutator(a, b) -> np.ndarray:
    return a @ b - b @ a
