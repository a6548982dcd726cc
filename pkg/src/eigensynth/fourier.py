"""Walsh-Fourier analysis of Boolean functions and their operator forms.

Encoding used throughout: Boolean 0 (False) is +1 and Boolean 1 (True) is -1.
Bit strings are indexed like truth tables: bit ``j`` of the integer index is
the variable at position ``j``, and position 0 is the rightmost Kronecker
factor. Conversions between the two encodings are always explicit.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .matrix_core import identity, kron_all, max_abs_diff

Z = np.diag([1.0, -1.0]).astype(complex)
PI_ONE = np.diag([0.0, 1.0]).astype(complex)


def bits_of(index: int, n: int) -> tuple:
    """Bits of ``index``; element ``j`` is the bit at position ``j``."""
    return tuple((index >> j) & 1 for j in range(n))


def index_of(bits) -> int:
    return sum(b << j for j, b in enumerate(bits))


def parse_bitstring(s: str) -> tuple:
    """Read a written bit string such as ``"10"``, leftmost character = highest position."""
    if not s or any(c not in "01" for c in s):
        raise ValueError(f"not a bit string: {s!r}")
    return tuple(int(c) for c in reversed(s))


def format_bits(bits) -> str:
    return "".join(str(b) for b in reversed(bits))


def to_pm1(bools) -> tuple:
    """Boolean {0,1} values to the {+1,-1} encoding."""
    out = []
    for b in bools:
        if b not in (0, 1):
            raise ValueError(f"not a Boolean value: {b!r}")
        out.append(1 - 2 * int(b))
    return tuple(out)


def from_pm1(values) -> tuple:
    out = []
    for v in values:
        if v == 1:
            out.append(0)
        elif v == -1:
            out.append(1)
        else:
            raise ValueError(f"not a +1/-1 value: {v!r}")
    return tuple(out)


@dataclass(frozen=True)
class BooleanFunction:
    """A +1/-1 valued function on ``n`` bits, tabulated by bit-string index."""

    arity: int
    values: tuple

    def __post_init__(self):
        if self.arity < 1:
            raise ValueError("arity must be at least 1")
        if len(self.values) != 2 ** self.arity:
            raise ValueError(
                f"need {2 ** self.arity} values for arity {self.arity}, got {len(self.values)}"
            )
        vals = []
        for k, v in enumerate(self.values):
            c = complex(v)
            if c == 1:
                vals.append(1)
            elif c == -1:
                vals.append(-1)
            else:
                raise ValueError(f"value {k} = {v!r} is not +1 or -1")
        object.__setattr__(self, "values", tuple(vals))

    @classmethod
    def from_bools(cls, arity: int, bools) -> "BooleanFunction":
        return cls(arity, to_pm1(bools))

    @classmethod
    def from_callable(cls, arity: int, fn) -> "BooleanFunction":
        """``fn`` takes Boolean bits highest position first and returns a Boolean."""
        bools = [int(fn(*reversed(bits_of(k, arity)))) & 1 for k in range(2 ** arity)]
        return cls.from_bools(arity, bools)

    def bools(self) -> tuple:
        return from_pm1(self.values)


@dataclass(frozen=True)
class WalshSpectrum:
    arity: int
    coeffs: tuple

    def __getitem__(self, p):
        if isinstance(p, str):
            p = index_of(parse_bitstring(p))
        return self.coeffs[p]

    def parseval_sum(self) -> int:
        return sum(c * c for c in self.coeffs)


@dataclass(frozen=True)
class ReedMullerForm:
    """Positive-polarity XOR-of-ANDs: ``constant XOR (XOR over S of AND_{j in S} x_j)``."""

    arity: int
    monomials: frozenset
    constant: int = 0

    def evaluate(self, bits) -> int:
        acc = self.constant
        for mono in self.monomials:
            acc ^= int(all(bits[j] for j in mono))
        return acc

    def truth_table(self) -> tuple:
        return tuple(self.evaluate(bits_of(k, self.arity)) for k in range(2 ** self.arity))


def _parity(x: int) -> int:
    return bin(x).count("1") & 1


def character_operator(p, n: int) -> np.ndarray:
    """Kronecker word with Z at every position where ``p`` has a 1."""
    if isinstance(p, str):
        p = parse_bitstring(p)
    elif isinstance(p, int):
        p = bits_of(p, n)
    if len(p) != n:
        raise ValueError(f"bit string of length {len(p)} for arity {n}")
    eye = identity(2)
    return kron_all(*(Z if p[j] else eye for j in reversed(range(n))))


def projector_from_bits(s) -> np.ndarray:
    """Rank-1 projector onto ``|s>`` built from ``(I + (-1)^{s_k} Z) / 2`` factors."""
    if isinstance(s, str):
        s = parse_bitstring(s)
    eye = identity(2)
    return kron_all(*((eye + (-1) ** s[j] * Z) / 2 for j in reversed(range(len(s)))))


def walsh_transform(g: BooleanFunction) -> WalshSpectrum:
    """Unnormalised transform ``g^_p = sum_s (-1)^{p.s} g(s)`` by direct summation."""
    size = 2 ** g.arity
    coeffs = []
    for p in range(size):
        coeffs.append(sum((-1) ** _parity(p & s) * g.values[s] for s in range(size)))
    return WalshSpectrum(g.arity, tuple(coeffs))


def fast_walsh_transform(values) -> np.ndarray:
    """In-place butterfly; same ordering and normalisation as :func:`walsh_transform`."""
    a = np.array(values, dtype=float)
    h = 1
    while h < len(a):
        for i in range(0, len(a), 2 * h):
            x = a[i:i + h].copy()
            y = a[i + h:i + 2 * h].copy()
            a[i:i + h] = x + y
            a[i + h:i + 2 * h] = x - y
        h *= 2
    return a


def quantum_boolean_operator(g: BooleanFunction) -> np.ndarray:
    """``G = 2^-n sum_p g^_p chi_p``, built from the character expansion."""
    spectrum = walsh_transform(g)
    n = g.arity
    out = np.zeros((2 ** n, 2 ** n), dtype=complex)
    for p, c in enumerate(spectrum.coeffs):
        if c:
            out += c * character_operator(p, n)
    return out / 2 ** n


def character_expansion(g: BooleanFunction) -> dict:
    """Non-zero normalised coefficients ``g^_p / 2^n`` keyed by written bit string."""
    spectrum = walsh_transform(g)
    return {
        format_bits(bits_of(p, g.arity)): c / 2 ** g.arity
        for p, c in enumerate(spectrum.coeffs)
        if c
    }


def householder(p, tol: float = 1e-10) -> np.ndarray:
    """Projector to self-inverse operator: ``I - 2P``."""
    p = np.asarray(p, dtype=complex)
    defect = max_abs_diff(p @ p, p)
    if defect > tol:
        raise ValueError(f"not idempotent: |P^2 - P| = {defect:.3g}")
    return identity(p.shape[0]) - 2 * p


def householder_inverse(g, tol: float = 1e-10) -> np.ndarray:
    """Self-inverse operator to projector: ``(I - G) / 2``."""
    g = np.asarray(g, dtype=complex)
    eye = identity(g.shape[0])
    defect = max_abs_diff(g @ g, eye)
    if defect > tol:
        raise ValueError(f"not self-inverse: |G^2 - I| = {defect:.3g}")
    return (eye - g) / 2


def reed_muller(bools, arity: int | None = None) -> ReedMullerForm:
    """Positive-polarity Reed-Muller form via the GF(2) butterfly."""
    a = [int(b) for b in bools]
    if any(b not in (0, 1) for b in a):
        raise ValueError("Reed-Muller input must be 0/1 valued")
    size = len(a)
    n = size.bit_length() - 1
    if size != 2 ** n or (arity is not None and arity != n):
        raise ValueError(f"table length {size} does not match arity {arity}")
    h = 1
    while h < size:
        for i in range(0, size, 2 * h):
            for k in range(i, i + h):
                a[k + h] ^= a[k]
        h *= 2
    monomials = frozenset(
        frozenset(j for j in range(n) if (mask >> j) & 1)
        for mask in range(1, size)
        if a[mask]
    )
    return ReedMullerForm(n, monomials, a[0])


def conjunction_projector(positions, n: int) -> np.ndarray:
    """``|1><1|`` at every position in ``positions``, identity elsewhere."""
    eye = identity(2)
    return kron_all(*(PI_ONE if j in positions else eye for j in reversed(range(n))))


def conjunction_operator(positions, n: int) -> np.ndarray:
    """``(-1)^{P_S}`` for the conjunction of the variables in ``positions``."""
    return identity(2 ** n) - 2 * conjunction_projector(positions, n)


def reed_muller_product(form: ReedMullerForm) -> np.ndarray:
    """Product of conjunction operators, one per monomial.

    Monomials are applied in order of increasing degree, then by position;
    they all commute so the order only matters for readability.
    """
    n = form.arity
    out = identity(2 ** n)
    if form.constant:
        out = -out
    ordered = sorted(form.monomials, key=lambda s: (len(s), sorted(s, reverse=True)))
    for mono in ordered:
        out = out @ conjunction_operator(mono, n)
    return out


def reduce_mod2(coeffs: dict) -> frozenset:
    """Keep monomials whose integer coefficient is odd.

    ``(-1)^{2k M} = I`` for any projector ``M``, so only the parity of an
    arithmetic coefficient survives in the exponent.
    """
    return frozenset(frozenset(s) for s, c in coeffs.items() if int(c) % 2)


def arithmetic_to_reed_muller(arity: int, coeffs: dict) -> ReedMullerForm:
    """Reed-Muller form from an arithmetic (inclusion-exclusion) polynomial.

    ``coeffs`` maps position subsets to integer coefficients; the empty set
    holds the constant.
    """
    const = int(coeffs.get(frozenset(), 0)) % 2
    rest = {s: c for s, c in coeffs.items() if len(s)}
    return ReedMullerForm(arity, reduce_mod2(rest), const)
