"""Ternary connectives and the diagonal QFT generator.

Two ternary orderings are used and never re-sorted: the angular-momentum
seed ``diag(+1, 0, -1)`` for Min/Max, and the reversed ``diag(-1, 0, +1)``
for the balanced half-adder. Both diagonal layouts depend on the ordering.

Min and Max keep their customary names even though, reading +1 as the
smallest truth value, the connective called Min here is the numerical maximum.
"""
from __future__ import annotations

import numpy as np

from .fourier import PI_ONE
from .gates import H
from .interpolation import (
    Alphabet,
    SeedOperator,
    TruthTable,
    dictator,
    lift,
    synthesize,
)
from .matrix_core import basis_state, expm, identity, kron_all

LZ_ALPHABET = Alphabet((1, 0, -1))
HA_ALPHABET = Alphabet((-1, 0, 1))
MAX_QUBITS = 4

# Rows indexed by U (position 1), columns by V (position 0), both in +1, 0, -1 order.
MIN_TABLE = (
    (+1, +1, +1),
    (+1, 0, 0),
    (+1, 0, -1),
)
MAX_TABLE = (
    (+1, 0, -1),
    (0, 0, -1),
    (-1, -1, -1),
)
# Rows indexed by A (position 1), columns by carry-in (position 0), both in -1, 0, +1 order.
HA_SUM_TABLE = (
    (+1, -1, 0),
    (-1, 0, +1),
    (0, +1, -1),
)
HA_CARRY_TABLE = (
    (-1, 0, 0),
    (0, 0, 0),
    (0, 0, +1),
)


def lz_seed() -> SeedOperator:
    """z-component orbital angular momentum for l = 1, in units of hbar."""
    return SeedOperator(LZ_ALPHABET)


def ha_seed() -> SeedOperator:
    return SeedOperator(HA_ALPHABET)


def lz_projectors_closed_form() -> tuple:
    """``(P_+1, P_0, P_-1)`` written directly as polynomials in the seed."""
    lam = lz_seed().matrix
    eye = identity(3)
    return (lam @ (lam + eye) / 2, eye - lam @ lam, lam @ (lam - eye) / 2)


def table_from_rows(alphabet: Alphabet, rows) -> TruthTable:
    return TruthTable(alphabet, 2, tuple(v for row in rows for v in row))


def _uv(seed: SeedOperator):
    return dictator(seed, 1, 2), dictator(seed, 0, 2)


def min_operator(route: str = "polynomial") -> np.ndarray:
    """``(U + V + U^2 + V^2 - UV - U^2 V^2) / 2``, or synthesized from the table."""
    if route == "interpolation":
        return synthesize(table_from_rows(LZ_ALPHABET, MIN_TABLE), lz_seed()).matrix
    if route != "polynomial":
        raise ValueError(f"unknown Min route {route!r}")
    u, v = _uv(lz_seed())
    u2, v2 = u @ u, v @ v
    return (u + v + u2 + v2 - u @ v - u2 @ v2) / 2


def max_operator(route: str = "polynomial") -> np.ndarray:
    """``(U + V - U^2 - V^2 + UV + U^2 V^2) / 2``, or synthesized from the table."""
    if route == "interpolation":
        return synthesize(table_from_rows(LZ_ALPHABET, MAX_TABLE), lz_seed()).matrix
    if route != "polynomial":
        raise ValueError(f"unknown Max route {route!r}")
    u, v = _uv(lz_seed())
    u2, v2 = u @ u, v @ v
    return (u + v - u2 - v2 + u @ v + u2 @ v2) / 2


def half_adder_operators(route: str = "polynomial") -> tuple:
    """``(sum, carry)`` of the balanced ternary half-adder.

    Polynomial route: ``S = A + C - 3/2 A^2 C - 3/2 A C^2`` and
    ``Carry = (A C^2 + A^2 C) / 2`` with ``A`` the addend and ``C`` the
    carry-in dictator.
    """
    seed = ha_seed()
    if route == "interpolation":
        return (
            synthesize(table_from_rows(HA_ALPHABET, HA_SUM_TABLE), seed).matrix,
            synthesize(table_from_rows(HA_ALPHABET, HA_CARRY_TABLE), seed).matrix,
        )
    if route != "polynomial":
        raise ValueError(f"unknown half-adder route {route!r}")
    a, c = _uv(seed)
    a2, c2 = a @ a, c @ c
    total = a + c - 1.5 * a2 @ c - 1.5 * a @ c2
    carry = (a @ c2 + a2 @ c) / 2
    return total, carry


# -- QFT --------------------------------------------------------------------

def _check_qubits(n: int):
    if not isinstance(n, (int, np.integer)) or not 1 <= n <= MAX_QUBITS:
        raise ValueError(f"qubit count must be between 1 and {MAX_QUBITS}, got {n!r}")


def im_operator(n: int) -> np.ndarray:
    """``diag(exp(-2 pi i d / 2^n))`` over register numbers ``d``."""
    _check_qubits(n)
    d = np.arange(2 ** n)
    return np.diag(np.exp(-2j * np.pi * d / 2 ** n))


def register_number_operator(n: int) -> np.ndarray:
    """``sum_k 2^k P_k`` with ``P_k`` the qubit-1 projector lifted to position ``k``."""
    return sum(2 ** k * lift(PI_ONE, k, n, 2) for k in range(n))


def im_from_projectors(n: int) -> np.ndarray:
    _check_qubits(n)
    return expm(-2j * np.pi / 2 ** n * register_number_operator(n))


def jz_operator(n: int) -> np.ndarray:
    """Shifted angular-momentum spectrum ``m = d - (2^n - 1)/2`` (hbar = 1)."""
    j = (2 ** n - 1) / 2
    return np.diag(np.arange(2 ** n) - j).astype(complex)


def im_from_jz(n: int) -> np.ndarray:
    _check_qubits(n)
    size = 2 ** n
    return -np.exp(1j * np.pi / size) * expm(-2j * np.pi / size * jz_operator(n))


def qft_matrix(n: int, route: str = "columns") -> np.ndarray:
    """Quantum Fourier transform with the ``exp(-2 pi i q p / 2^n)`` sign.

    ``columns`` builds column ``q`` as ``Im^q H^n |0>``; ``direct`` fills the
    entries from the closed formula. The common positive-sign QFT is the
    complex conjugate of this matrix.
    """
    _check_qubits(n)
    size = 2 ** n
    if route == "direct":
        q, p = np.meshgrid(np.arange(size), np.arange(size))
        return np.exp(-2j * np.pi * q * p / size) / np.sqrt(size)
    if route != "columns":
        raise ValueError(f"unknown QFT route {route!r}")
    im = im_operator(n)
    start = kron_all(*([H] * n)) @ basis_state(0, size)
    out = np.zeros((size, size), dtype=complex)
    col = start
    for q in range(size):
        out[:, q] = col
        col = im @ col
    return out
