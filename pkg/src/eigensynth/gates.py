"""Standard gates and their interpolation-derived constructions.

Qubit positions follow the interpolation module: position 0 is the rightmost
Kronecker factor. CNOT controls on position 1 and targets position 0; the
Toffoli controls on positions 2 and 1 and targets position 0.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from .fourier import PI_ONE, Z, conjunction_projector, householder
from .interpolation import Alphabet, SeedOperator, TruthTable, lift, synthesize
from .matrix_core import (
    DEFAULT_TOL,
    adjoint,
    expm_involution,
    identity,
    kron_all,
    max_abs_diff,
)

OMEGA = np.exp(1j * np.pi / 4)
OMEGA_S = np.exp(1j * np.pi / 2)

X = np.array([[0, 1], [1, 0]], dtype=complex)
H = np.array([[1, 1], [1, -1]], dtype=complex) / np.sqrt(2)
S = np.diag([1, OMEGA_S])
T = np.diag([1, OMEGA])
I2 = identity(2)
PI_X = H @ PI_ONE @ H

GATE_NAMES = ("Z", "X", "H", "S", "T", "Tdg", "CZ", "CNOT", "SWAP", "CCZ", "TOFFOLI")
_ALIASES = {"T_DAGGER": "Tdg", "TDG": "Tdg", "CCX": "TOFFOLI", "CX": "CNOT"}


def _permutation(images) -> np.ndarray:
    """Matrix sending basis state ``k`` to ``images[k]``."""
    dim = len(images)
    out = np.zeros((dim, dim), dtype=complex)
    for k, j in enumerate(images):
        out[j, k] = 1
    return out


def canonical_name(name: str) -> str:
    if name in GATE_NAMES:
        return name
    key = name.upper()
    key = _ALIASES.get(key, key)
    if key in GATE_NAMES:
        return key
    if key == "TDG":
        return "Tdg"
    raise KeyError(f"unknown gate {name!r}; expected one of {', '.join(GATE_NAMES)}")


def standard_gate(name: str) -> np.ndarray:
    """Canonical computational-basis matrix, written out directly."""
    name = canonical_name(name)
    if name == "Z":
        return Z.copy()
    if name == "X":
        return X.copy()
    if name == "H":
        return H.copy()
    if name == "S":
        return S.copy()
    if name == "T":
        return T.copy()
    if name == "Tdg":
        return np.diag([1, np.exp(-1j * np.pi / 4)])
    if name == "CZ":
        return np.diag([1, 1, 1, -1]).astype(complex)
    if name == "CNOT":
        return _permutation([0, 1, 3, 2])
    if name == "SWAP":
        return _permutation([0, 2, 1, 3])
    if name == "CCZ":
        return np.diag([1] * 7 + [-1]).astype(complex)
    # TOFFOLI: |xyz> -> |x y (xy xor z)>
    return _permutation([0, 1, 2, 3, 4, 5, 7, 6])


def pauli_word(word: str) -> np.ndarray:
    """Kronecker word over {I, Z, X}; the leftmost letter is the highest position."""
    letters = {"I": I2, "Z": Z, "X": X}
    try:
        return kron_all(*(letters[c] for c in word))
    except KeyError:
        raise ValueError(f"word {word!r} may only use the letters I, Z, X") from None


def on_qubit(op, position: int, n: int) -> np.ndarray:
    return lift(op, position, n, 2)


# -- polynomial and projector constructions ---------------------------------

def cz_polynomial() -> np.ndarray:
    z1, z0 = on_qubit(Z, 1, 2), on_qubit(Z, 0, 2)
    return (identity(4) + z1 + z0 - z1 @ z0) / 2


def cz_householder() -> np.ndarray:
    return householder(conjunction_projector({0, 1}, 2))


def cnot_construction(route: str = "polynomial") -> np.ndarray:
    """CNOT by ``polynomial`` (Z1, X0 expansion), ``householder`` or ``conjugation``."""
    if route == "polynomial":
        z1, x0 = on_qubit(Z, 1, 2), on_qubit(X, 0, 2)
        return (identity(4) + z1 + x0 - z1 @ x0) / 2
    if route == "householder":
        return householder(np.kron(PI_ONE, PI_X))
    if route == "conjugation":
        h0 = on_qubit(H, 0, 2)
        return h0 @ cz_polynomial() @ h0
    raise ValueError(f"unknown CNOT route {route!r}")


def ccz_construction(route: str = "householder") -> np.ndarray:
    """Doubly-controlled Z as ``I - 2 (P (x) P (x) P)`` or as the Z-word polynomial."""
    if route == "householder":
        return householder(conjunction_projector({0, 1, 2}, 3))
    if route == "polynomial":
        z2, z1, z0 = (on_qubit(Z, j, 3) for j in (2, 1, 0))
        return (3 * identity(8) + z2 + z1 + z0
                - z2 @ z1 - z2 @ z0 - z1 @ z0 + z2 @ z1 @ z0) / 4
    raise ValueError(f"unknown CCZ route {route!r}")


def toffoli_construction(route: str = "polynomial") -> np.ndarray:
    """Toffoli by one of ``polynomial``, ``controlled``, ``householder``, ``conjugation``.

    ``controlled`` is ``(I + Z2 + C - Z2 C) / 2`` with ``C`` the CNOT on
    positions 1, 0; ``polynomial`` is its expansion in single-qubit words.
    """
    if route == "polynomial":
        z2, z1, x0 = on_qubit(Z, 2, 3), on_qubit(Z, 1, 3), on_qubit(X, 0, 3)
        return (3 * identity(8) + z2 + z1 + x0
                - z2 @ z1 - z2 @ x0 - z1 @ x0 + z2 @ z1 @ x0) / 4
    if route == "controlled":
        z2 = on_qubit(Z, 2, 3)
        c = np.kron(I2, cnot_construction("polynomial"))
        return (identity(8) + z2 + c - z2 @ c) / 2
    if route == "householder":
        return householder(kron_all(PI_ONE, PI_ONE, PI_X))
    if route == "conjugation":
        h0 = on_qubit(H, 0, 3)
        return h0 @ ccz_construction("householder") @ h0
    raise ValueError(f"unknown Toffoli route {route!r}")


# -- exponential factorizations ----------------------------------------------

@dataclass(frozen=True)
class ExpFactor:
    """``exp(i * angle * M)`` for the Kronecker word ``M``."""

    angle: float
    word: str

    def __post_init__(self):
        m = pauli_word(self.word)
        if max_abs_diff(m @ m, identity(m.shape[0])) > 1e-12:
            raise ValueError(f"word {self.word!r} is not an involution")

    def operator(self) -> np.ndarray:
        return pauli_word(self.word)

    def evaluate(self) -> np.ndarray:
        return expm_involution(self.angle, self.operator())


@dataclass(frozen=True)
class GateFactorization:
    global_phase: complex
    factors: tuple = ()
    n: int = field(default=0)

    def __post_init__(self):
        if abs(abs(self.global_phase) - 1) > 1e-12:
            raise ValueError("global phase must have unit modulus")
        lengths = {len(f.word) for f in self.factors}
        if len(lengths) > 1:
            raise ValueError(f"factor words have mixed lengths {sorted(lengths)}")
        if lengths:
            object.__setattr__(self, "n", lengths.pop())

    @property
    def dim(self) -> int:
        return 2 ** self.n

    def max_commutator(self) -> float:
        """Largest ``|[M_a, M_b]|`` entry over all factor pairs."""
        worst = 0.0
        ops = [f.operator() for f in self.factors]
        for a, b in itertools.combinations(ops, 2):
            worst = max(worst, max_abs_diff(a @ b, b @ a))
        return worst

    def evaluate(self, order=None) -> np.ndarray:
        factors = self.factors if order is None else [self.factors[k] for k in order]
        out = self.global_phase * identity(self.dim)
        for f in factors:
            out = out @ f.evaluate()
        return out


def _phase_polynomial(projector_words, n: int) -> GateFactorization:
    """Factorize ``(-1)^P`` where ``P = 2^-k prod_j (I - W_j)`` over ``k`` words.

    Expanding the product gives signed words with magnitude ``2^-k``; each one
    becomes an exponential of angle ``-pi * sign / 2^k`` after pulling the
    identity term out as a global phase.
    """
    k = len(projector_words)
    scale = np.pi / 2 ** k
    phase = np.exp(1j * scale)
    factors = []
    # single words first, then pairs, then the full product, as printed for CZ/Toffoli
    for size in range(1, k + 1):
        for combo in itertools.combinations(range(k), size):
            letters = ["I"] * n
            for idx in combo:
                pos, letter = projector_words[idx]
                letters[n - 1 - pos] = letter
            sign = (-1) ** size
            factors.append(ExpFactor(sign * scale, "".join(letters)))
    return GateFactorization(phase, tuple(factors))


_EXP_TARGETS = {
    "CZ": ([(1, "Z"), (0, "Z")], 2),
    "CNOT": ([(1, "Z"), (0, "X")], 2),
    "CCZ": ([(2, "Z"), (1, "Z"), (0, "Z")], 3),
    "TOFFOLI": ([(2, "Z"), (1, "Z"), (0, "X")], 3),
}


def exp_factorization(name: str) -> GateFactorization:
    """Global phase times commuting Pauli-word exponentials.

    CZ: ``e^{i pi/4} e^{-i pi/4 Z1} e^{-i pi/4 Z0} e^{+i pi/4 Z1 Z0}``.
    Toffoli: ``e^{i pi/8}`` times seven ``pi/8`` factors on the words built
    from Z2, Z1, X0. CNOT and CCZ swap Z0 and X0 respectively.
    """
    try:
        key = canonical_name(name)
        words, n = _EXP_TARGETS[key]
    except KeyError:
        raise ValueError(
            f"no exponential factorization for {name!r}; supported: {', '.join(_EXP_TARGETS)}"
        ) from None
    return _phase_polynomial(words, n)


def toffoli_factorization_printed() -> GateFactorization:
    """The Toffoli factorization with the factor order exactly as usually written."""
    a = np.pi / 8
    return GateFactorization(np.exp(1j * a), (
        ExpFactor(-a, "ZII"), ExpFactor(-a, "IZI"), ExpFactor(-a, "IIX"),
        ExpFactor(+a, "ZIX"), ExpFactor(+a, "ZZI"), ExpFactor(+a, "IZX"),
        ExpFactor(-a, "ZZX"),
    ))


# -- T-gate constructions ----------------------------------------------------

T_ALPHABET = Alphabet((1, OMEGA))


@dataclass(frozen=True)
class TFactor:
    """Diagonal ``omega^{XOR of the bits at positions}``, optionally daggered."""

    positions: frozenset
    dagger: bool = False

    def label(self) -> str:
        names = "xyz"
        body = "^".join(names[2 - p] if p < 3 else f"q{p}" for p in sorted(self.positions, reverse=True))
        return f"T[{body}]" + ("^dag" if self.dagger else "")


@dataclass(frozen=True)
class TProductForm:
    n: int
    factors: tuple


def xor_table(positions, n: int, alphabet: Alphabet = T_ALPHABET) -> TruthTable:
    """XOR of the selected positions, with False/True as the alphabet's first/second value."""
    entries = []
    for k in range(2 ** n):
        parity = sum((k >> j) & 1 for j in positions) & 1
        entries.append(alphabet.values[parity])
    return TruthTable(alphabet, n, tuple(entries))


def t_xor_operator(positions, n: int) -> np.ndarray:
    """The T-alphabet XOR operator, synthesized from its truth table."""
    seed = SeedOperator(T_ALPHABET)
    return synthesize(xor_table(positions, n), seed).matrix


def t_product_ccz() -> TProductForm:
    """CCZ as seven diagonal T-alphabet factors.

    Uses ``4xyz = x + y + z - x^y - x^z - y^z + x^y^z`` so the phases add up
    to ``omega^{4xyz} = (-1)^{xyz}``.
    """
    x, y, z = 2, 1, 0
    fs = [
        TFactor(frozenset({z})), TFactor(frozenset({y})), TFactor(frozenset({x})),
        TFactor(frozenset({x, y}), True), TFactor(frozenset({x, z}), True),
        TFactor(frozenset({y, z}), True), TFactor(frozenset({x, y, z})),
    ]
    return TProductForm(3, tuple(fs))


def evaluate_t_product(form: TProductForm) -> np.ndarray:
    out = identity(2 ** form.n)
    for f in form.factors:
        op = t_xor_operator(f.positions, form.n)
        if f.dagger:
            op = adjoint(op)
        if np.any(np.abs(op - np.diag(np.diag(op))) > 1e-14):
            raise ValueError(f"factor {f.label()} is not diagonal")
        out = out @ op
    return out


def flip_daggers(form: TProductForm) -> TProductForm:
    return TProductForm(form.n, tuple(TFactor(f.positions, not f.dagger) for f in form.factors))


_POLY_ROOTS = {"omega": OMEGA, "omega_s": OMEGA_S, "-1": -1.0 + 0j}


def resolve_root(root) -> complex:
    if isinstance(root, str):
        key = root.lower().replace("ω", "omega")
        if key not in _POLY_ROOTS:
            raise ValueError(f"unknown root {root!r}; expected one of {', '.join(_POLY_ROOTS)}")
        return _POLY_ROOTS[key]
    value = complex(root)
    for known in _POLY_ROOTS.values():
        if abs(value - known) < 1e-12:
            return known
    raise ValueError(f"root {root!r} is not one of e^(i pi/4), e^(i pi/2), -1")


def t_polynomial_ccz(root=OMEGA) -> np.ndarray:
    """CCZ as a multilinear polynomial in the lifted gates ``diag(1, root)``.

    ``I + 2 (root - 1)^-3 (I - T2 - T1 - T0 + T2T1 + T2T0 + T1T0 - T2T1T0)``;
    with ``root = -1`` the gates are Z.
    """
    r = resolve_root(root)
    gate = np.diag([1, r])
    t2, t1, t0 = (on_qubit(gate, j, 3) for j in (2, 1, 0))
    eye = identity(8)
    bracket = eye - t2 - t1 - t0 + t2 @ t1 + t2 @ t0 + t1 @ t0 - t2 @ t1 @ t0
    return eye + 2 / (r - 1) ** 3 * bracket


def conjugate_target(op, n: int) -> np.ndarray:
    """``H0 op H0``: turns a Z-type target on position 0 into an X-type one."""
    h0 = on_qubit(H, 0, n)
    return h0 @ op @ h0


# -- evaluation ----------------------------------------------------------------

def expectation(op, state, norm_tol: float = 1e-6) -> complex:
    """Born-rule mean value ``<psi|op|psi>``."""
    op = np.asarray(op, dtype=complex)
    psi = np.asarray(state, dtype=complex)
    if psi.ndim != 1 or op.shape != (psi.size, psi.size):
        raise ValueError(f"cannot take expectation of {op.shape} operator in state of shape {psi.shape}")
    norm = np.linalg.norm(psi)
    if abs(norm - 1) > norm_tol:
        raise ValueError(f"state is not normalized (norm {norm:.6g})")
    return complex(np.vdot(psi, op @ psi))


def equivalent(a, b, tol: float = DEFAULT_TOL) -> bool:
    return max_abs_diff(a, b) < tol
