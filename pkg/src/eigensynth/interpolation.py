"""Seed-operator interpolation: spectral projectors and logical operators.

A seed operator has ``m`` distinct eigenvalues, the truth values of an
``m``-valued logic. Its rank-1 projectors are Lagrange polynomials in the
seed, and every ``n``-ary connective is the operator that is diagonal in the
lifted eigenbasis with the truth table on the diagonal.

Interpretation index ``k`` is read in base ``m`` as ``d_{n-1} ... d_1 d_0``;
the variable at position ``j`` takes the value ``alphabet.values[d_j]``.
Position 0 is the lowest digit and the rightmost Kronecker factor.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from .matrix_core import adjoint, basis_state, identity, kron_all, max_abs_diff

VALUE_TOL = 1e-9


class DegenerateAlphabetError(ValueError):
    """Two alphabet values coincide within tolerance."""

    def __init__(self, i, j, a, b):
        super().__init__(
            f"alphabet values {i} and {j} coincide ({a!r} vs {b!r}); "
            "the seed operator would be degenerate"
        )
        self.pair = (i, j)


@dataclass(frozen=True)
class Alphabet:
    values: tuple

    def __post_init__(self):
        vals = tuple(complex(v) for v in self.values)
        if len(vals) < 2:
            raise ValueError("an alphabet needs at least two values")
        for v in vals:
            if not np.isfinite(v):
                raise ValueError(f"non-finite alphabet value {v!r}")
        for i, j in itertools.combinations(range(len(vals)), 2):
            if abs(vals[i] - vals[j]) <= VALUE_TOL:
                raise DegenerateAlphabetError(i, j, vals[i], vals[j])
        object.__setattr__(self, "values", vals)

    @property
    def m(self) -> int:
        return len(self.values)

    def index_of(self, value) -> int:
        """Position of ``value`` in the alphabet; ValueError if absent."""
        value = complex(value)
        for i, a in enumerate(self.values):
            if abs(a - value) <= VALUE_TOL:
                return i
        raise ValueError(f"{value!r} is not in alphabet {self.values}")

    def __contains__(self, value) -> bool:
        try:
            self.index_of(value)
        except ValueError:
            return False
        return True

    def same_as(self, other: "Alphabet") -> bool:
        return self.m == other.m and all(
            abs(a - b) <= VALUE_TOL for a, b in zip(self.values, other.values)
        )

    def is_real(self) -> bool:
        return all(abs(v.imag) <= VALUE_TOL for v in self.values)

    def on_unit_circle(self) -> bool:
        return all(abs(abs(v) - 1.0) <= VALUE_TOL for v in self.values)


@dataclass(frozen=True)
class SeedOperator:
    """``basis @ diag(alphabet) @ basis^dagger``.

    ``basis`` defaults to the computational basis. Its columns are the
    eigenvectors, in alphabet order.
    """

    alphabet: Alphabet
    basis: np.ndarray | None = None
    matrix: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        diag = np.diag(np.array(self.alphabet.values, dtype=complex))
        if self.basis is None:
            mat = diag
        else:
            b = np.asarray(self.basis, dtype=complex)
            m = self.alphabet.m
            if b.shape != (m, m):
                raise ValueError(f"basis must be {m}x{m}, got {b.shape}")
            if max_abs_diff(b @ adjoint(b), identity(m)) > 1e-10:
                raise ValueError("basis is not unitary")
            object.__setattr__(self, "basis", b)
            mat = b @ diag @ adjoint(b)
        object.__setattr__(self, "matrix", mat)

    @classmethod
    def from_values(cls, values, basis=None) -> "SeedOperator":
        return cls(Alphabet(tuple(values)), basis)

    @property
    def m(self) -> int:
        return self.alphabet.m

    def eigenvector(self, i: int) -> np.ndarray:
        if self.basis is None:
            return basis_state(i, self.m)
        return self.basis[:, i].copy()


@dataclass(frozen=True)
class TruthTable:
    alphabet: Alphabet
    arity: int
    entries: tuple

    def __post_init__(self):
        if self.arity < 1:
            raise ValueError("arity must be at least 1")
        expected = self.alphabet.m ** self.arity
        if len(self.entries) != expected:
            raise ValueError(
                f"truth table needs {expected} entries for m={self.alphabet.m}, "
                f"n={self.arity}; got {len(self.entries)}"
            )
        snapped = []
        for k, e in enumerate(self.entries):
            try:
                snapped.append(self.alphabet.values[self.alphabet.index_of(e)])
            except ValueError:
                raise ValueError(f"entry {k} = {e!r} is not an alphabet value") from None
        object.__setattr__(self, "entries", tuple(snapped))

    @classmethod
    def from_function(cls, alphabet: Alphabet, arity: int, fn) -> "TruthTable":
        """Tabulate ``fn(x_{n-1}, ..., x_0)`` over all interpretations.

        Arguments are passed highest position first, matching how the table
        is read row-major.
        """
        entries = []
        for k in range(alphabet.m ** arity):
            digits = interpretation_digits(k, alphabet.m, arity)
            args = [alphabet.values[digits[j]] for j in reversed(range(arity))]
            entries.append(fn(*args))
        return cls(alphabet, arity, tuple(entries))

    @property
    def dim(self) -> int:
        return self.alphabet.m ** self.arity


@dataclass(frozen=True)
class SpectralFamily:
    seed: SeedOperator
    projectors: tuple

    def defects(self) -> dict:
        """Worst-case violation of each projector law."""
        m = self.seed.m
        eye = identity(m)
        idem = max(max_abs_diff(p @ p, p) for p in self.projectors)
        orth = max(
            (max_abs_diff(self.projectors[i] @ self.projectors[j], 0 * eye)
             for i in range(m) for j in range(m) if i != j),
            default=0.0,
        )
        closure = max_abs_diff(sum(self.projectors), eye)
        lam = self.seed.matrix
        eig = max(
            max_abs_diff(p @ lam, v * p)
            for p, v in zip(self.projectors, self.seed.alphabet.values)
        )
        recon = max_abs_diff(
            sum(v * p for p, v in zip(self.projectors, self.seed.alphabet.values)), lam
        )
        return {
            "idempotent": idem,
            "orthogonal": orth,
            "closure": closure,
            "eigen": eig,
            "reconstruction": recon,
        }


@dataclass(frozen=True)
class LogicalOperator:
    matrix: np.ndarray
    table: TruthTable
    seed: SeedOperator


def interpretation_digits(index: int, m: int, n: int) -> list:
    """Base-``m`` digits of ``index``; element ``j`` is the digit at position ``j``."""
    digits = []
    for _ in range(n):
        index, d = divmod(index, m)
        digits.append(d)
    return digits


def projectors_from_seed(seed: SeedOperator) -> SpectralFamily:
    """Rank-1 projectors as Lagrange polynomials in the seed operator.

    ``P_i = prod_{j != i} (L - l_j I) / (l_i - l_j)``.
    """
    lam = seed.matrix
    vals = seed.alphabet.values
    eye = identity(seed.m)
    projectors = []
    for i, li in enumerate(vals):
        p = eye.copy()
        for j, lj in enumerate(vals):
            if j != i:
                p = p @ (lam - lj * eye) / (li - lj)
        projectors.append(p)
    return SpectralFamily(seed, tuple(projectors))


def lift(op, position: int, arity: int, local_dim: int) -> np.ndarray:
    """``I^(n-1-j) (x) op (x) I^j`` for position ``j``."""
    if not 0 <= position < arity:
        raise ValueError(f"position {position} out of range for arity {arity}")
    op = np.asarray(op, dtype=complex)
    if op.shape != (local_dim, local_dim):
        raise ValueError(f"operator must be {local_dim}x{local_dim}, got {op.shape}")
    eye = identity(local_dim)
    factors = [eye] * arity
    factors[arity - 1 - position] = op
    return kron_all(*factors)


def dictator(seed: SeedOperator, position: int, arity: int) -> np.ndarray:
    """The lifted seed: the operator returning the variable at ``position``."""
    return lift(seed.matrix, position, arity, seed.m)


def interpretation_projector(family: SpectralFamily, digits) -> np.ndarray:
    """Kronecker product of the per-position projectors selected by ``digits``."""
    n = len(digits)
    return kron_all(*(family.projectors[digits[j]] for j in reversed(range(n))))


def synthesize(table: TruthTable, seed: SeedOperator) -> LogicalOperator:
    """The unique operator whose eigenvalue on interpretation ``s`` is ``table[s]``."""
    if not table.alphabet.same_as(seed.alphabet):
        raise ValueError(
            f"table alphabet {table.alphabet.values} does not match "
            f"seed alphabet {seed.alphabet.values}"
        )
    family = projectors_from_seed(seed)
    m, n = seed.m, table.arity
    dim = m ** n
    mat = np.zeros((dim, dim), dtype=complex)
    for k, value in enumerate(table.entries):
        if value == 0:
            continue
        mat += value * interpretation_projector(family, interpretation_digits(k, m, n))
    return LogicalOperator(mat, table, seed)


def interpretation_state(seed: SeedOperator, index: int, arity: int) -> np.ndarray:
    digits = interpretation_digits(index, seed.m, arity)
    return kron_all(*(seed.eigenvector(digits[j]) for j in reversed(range(arity))))


def verify_eigenlogic(op: LogicalOperator) -> float:
    """Largest ``|| F|s> - table[s] |s> ||`` over all basis interpretations."""
    n = op.table.arity
    worst = 0.0
    for k, value in enumerate(op.table.entries):
        s = interpretation_state(op.seed, k, n)
        worst = max(worst, float(np.linalg.norm(op.matrix @ s - value * s)))
    return worst


def divided_differences(xs, ys) -> list:
    """Newton divided-difference coefficients of the interpolant through (xs, ys)."""
    coef = [complex(y) for y in ys]
    n = len(xs)
    for level in range(1, n):
        for i in range(n - 1, level - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - level])
    return coef


def newton_to_monomial(xs, coef) -> list:
    """Convert Newton-form coefficients to power-basis coefficients ``c_0..c_{m-1}``."""
    n = len(coef)
    poly = [0j] * n
    poly[0] = coef[-1]
    # Horner on nested form: p = c_{n-1}; p = p*(x - x_i) + c_i
    for i in range(n - 2, -1, -1):
        shifted = [0j] + poly[:-1]
        poly = [s - xs[i] * p for s, p in zip(shifted, poly)]
        poly[0] += coef[i]
    return poly


def as_seed_polynomial(op: LogicalOperator) -> list:
    """Coefficients ``c_k`` with ``F = sum_k c_k L^k`` (arity 1 only)."""
    if op.table.arity != 1:
        raise NotImplementedError("seed polynomial form is only defined for arity 1")
    xs = op.seed.alphabet.values
    return newton_to_monomial(xs, divided_differences(xs, op.table.entries))


def seed_polynomial(seed: SeedOperator, coeffs) -> np.ndarray:
    """Evaluate ``sum_k coeffs[k] * L^k``."""
    lam = seed.matrix
    out = np.zeros_like(lam)
    power = identity(seed.m)
    for c in coeffs:
        out = out + c * power
        power = power @ lam
    return out


def all_truth_tables(alphabet: Alphabet, arity: int):
    """Every one of the ``m^(m^n)`` truth tables, in lexicographic order."""
    for entries in itertools.product(alphabet.values, repeat=alphabet.m ** arity):
        yield TruthTable(alphabet, arity, entries)
