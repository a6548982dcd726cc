import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from eigensynth.gates import OMEGA, T, Z
from eigensynth.interpolation import (
    Alphabet,
    DegenerateAlphabetError,
    SeedOperator,
    TruthTable,
    all_truth_tables,
    as_seed_polynomial,
    dictator,
    lift,
    projectors_from_seed,
    seed_polynomial,
    synthesize,
    verify_eigenlogic,
)
from eigensynth.matrix_core import identity, kron, kron_all, max_abs_diff

from conftest import random_alphabet

PI = np.diag([0, 1]).astype(complex)
I2 = identity(2)


def brute_force_operator(table):
    """Diagonal with the table on it: the computational-basis answer."""
    return np.diag(np.array(table.entries, dtype=complex))


def test_projectors_of_z():
    fam = projectors_from_seed(SeedOperator.from_values((1, -1)))
    p_plus, p_minus = fam.projectors
    assert max_abs_diff(p_plus, (I2 + Z) / 2) < 1e-15
    assert max_abs_diff(p_plus, np.diag([1, 0])) < 1e-15
    assert max_abs_diff(p_minus, (I2 - Z) / 2) < 1e-15
    assert max_abs_diff(p_minus, np.diag([0, 1])) < 1e-15


def test_projectors_of_ternary_seed_match_closed_forms():
    seed = SeedOperator.from_values((1, 0, -1))
    lam, eye = seed.matrix, identity(3)
    expected = (lam @ (lam + eye) / 2, eye - lam @ lam, lam @ (lam - eye) / 2)
    for got, want in zip(projectors_from_seed(seed).projectors, expected):
        assert max_abs_diff(got, want) < 1e-15


def test_projector_of_t_gate():
    fam = projectors_from_seed(SeedOperator.from_values((1, OMEGA)))
    assert max_abs_diff(fam.projectors[1], (T - I2) / (OMEGA - 1)) < 1e-15
    assert max_abs_diff(fam.projectors[1], PI) < 1e-15


def test_degenerate_alphabet_names_pair():
    with pytest.raises(DegenerateAlphabetError) as err:
        Alphabet((0, 1, 1 + 1e-12))
    assert err.value.pair == (1, 2)


def test_alphabet_needs_two_values():
    with pytest.raises(ValueError):
        Alphabet((1,))


def test_lift_examples():
    lam = np.diag([1, 0, -1]).astype(complex)
    assert max_abs_diff(lift(lam, 1, 2, 3), kron(lam, identity(3))) == 0
    assert max_abs_diff(lift(lam, 0, 1, 3), lam) == 0
    assert max_abs_diff(lift(PI, 2, 4, 2), kron_all(I2, PI, I2, I2)) == 0
    with pytest.raises(ValueError):
        lift(PI, 2, 2, 2)


def test_synthesize_reference_diagonals():
    and01 = TruthTable(Alphabet((0, 1)), 2, (0, 0, 0, 1))
    op = synthesize(and01, SeedOperator(and01.alphabet)).matrix
    assert max_abs_diff(op, kron(PI, PI)) < 1e-12

    xor = TruthTable(Alphabet((1, -1)), 2, (1, -1, -1, 1))
    op = synthesize(xor, SeedOperator(xor.alphabet)).matrix
    assert max_abs_diff(op, kron(Z, Z)) < 1e-12

    tern = Alphabet((1, 0, -1))
    mn = TruthTable(tern, 2, (1, 1, 1, 1, 0, 0, 1, 0, -1))
    op = synthesize(mn, SeedOperator(tern)).matrix
    assert max_abs_diff(op, np.diag([1, 1, 1, 1, 0, 0, 1, 0, -1])) < 1e-12


def test_synthesize_rejects_alphabet_mismatch():
    table = TruthTable(Alphabet((0, 1)), 1, (1, 0))
    with pytest.raises(ValueError, match="alphabet"):
        synthesize(table, SeedOperator.from_values((1, -1)))


def test_truth_table_validation():
    with pytest.raises(ValueError, match="entries"):
        TruthTable(Alphabet((0, 1)), 2, (0, 1, 0))
    with pytest.raises(ValueError, match="not an alphabet value"):
        TruthTable(Alphabet((0, 1)), 1, (0, 2))


def test_from_function_orders_high_position_first():
    t = TruthTable.from_function(Alphabet((0, 1)), 2, lambda x, y: x * (1 - y))
    # x is position 1 (high digit): x=1, y=0 is index 2
    assert t.entries == (0, 0, 1, 0)


def test_seed_polynomial_examples():
    b = SeedOperator.from_values((0, 1))
    ident = synthesize(TruthTable(b.alphabet, 1, (0, 1)), b)
    assert np.allclose(as_seed_polynomial(ident), [0, 1], atol=1e-14)

    t = SeedOperator.from_values((1, 0, -1))
    p0 = synthesize(TruthTable(t.alphabet, 1, (0, 1, 0)), t)
    assert np.allclose(as_seed_polynomial(p0), [1, 0, -1], atol=1e-14)

    neg = synthesize(TruthTable(b.alphabet, 1, (1, 0)), b)
    c = as_seed_polynomial(neg)
    assert np.allclose(c, [1, -1], atol=1e-14)
    # cross-check: evaluating c_0 + c_1 x at 0 and 1 gives the table
    assert [c[0] + c[1] * x for x in (0, 1)] == [1, 0]


def test_seed_polynomial_rejects_higher_arity():
    b = SeedOperator.from_values((0, 1))
    op = synthesize(TruthTable(b.alphabet, 2, (0, 0, 0, 1)), b)
    with pytest.raises(NotImplementedError):
        as_seed_polynomial(op)


def test_seed_polynomial_reproduces_operator(rng):
    for m in (2, 3, 4, 5):
        seed = SeedOperator.from_values(random_alphabet(rng, m, 0.3))
        entries = tuple(seed.alphabet.values[k] for k in rng.integers(0, m, size=m))
        op = synthesize(TruthTable(seed.alphabet, 1, entries), seed)
        assert max_abs_diff(seed_polynomial(seed, as_seed_polynomial(op)), op.matrix) < 1e-9


def test_verify_eigenlogic_examples():
    b = SeedOperator.from_values((0, 1))
    and_table = TruthTable(b.alphabet, 2, (0, 0, 0, 1))
    assert verify_eigenlogic(synthesize(and_table, b)) < 1e-12

    t = SeedOperator.from_values((1, 0, -1))
    min_table = TruthTable(t.alphabet, 2, (1, 1, 1, 1, 0, 0, 1, 0, -1))
    assert verify_eigenlogic(synthesize(min_table, t)) < 1e-12

    from eigensynth.interpolation import LogicalOperator
    wrong = LogicalOperator(np.diag([0, 0, 1, 1]).astype(complex), and_table, b)
    assert verify_eigenlogic(wrong) == 1.0


def test_non_computational_basis_seed():
    from eigensynth.gates import H, PI_X, X
    seed = SeedOperator.from_values((1, -1), basis=H)
    assert max_abs_diff(seed.matrix, X) < 1e-15
    fam = projectors_from_seed(seed)
    assert max_abs_diff(fam.projectors[1], PI_X) < 1e-15
    # NOT on the X seed: the table (1 -> -1, -1 -> 1) gives -X
    op = synthesize(TruthTable(seed.alphabet, 1, (-1, 1)), seed)
    assert max_abs_diff(op.matrix, -X) < 1e-15
    assert verify_eigenlogic(op) < 1e-15
    # mixed-basis arity 2 is not diagonal but still passes the eigen check
    op2 = synthesize(TruthTable(seed.alphabet, 2, (1, 1, 1, -1)), seed)
    assert verify_eigenlogic(op2) < 1e-12


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 5), st.integers(0, 2 ** 32 - 1))
def test_projector_laws_random_alphabets(m, seed_int):
    rng = np.random.default_rng(seed_int)
    seed = SeedOperator.from_values(random_alphabet(rng, m))
    d = projectors_from_seed(seed).defects()
    assert max(d.values()) < 1e-9, d


def test_arity_one_family_over_pm1_is_four_operators():
    alpha = Alphabet((1, -1))
    seed = SeedOperator(alpha)
    ops = [synthesize(t, seed).matrix for t in all_truth_tables(alpha, 1)]
    assert len(ops) == 4
    expected = [I2, Z, -Z, -I2]
    for want in expected:
        assert sum(max_abs_diff(op, want) < 1e-12 for op in ops) == 1


def test_arity_two_binary_family_is_injective():
    alpha = Alphabet((0, 1))
    seed = SeedOperator(alpha)
    diagonals = {tuple(np.diag(synthesize(t, seed).matrix).real.round(12)) for t in all_truth_tables(alpha, 2)}
    assert len(diagonals) == 16


@pytest.mark.parametrize("m, n, expected", [(2, 1, 4), (2, 2, 16), (3, 1, 27)])
def test_connective_count(m, n, expected):
    alpha = Alphabet(tuple(range(m)))
    assert sum(1 for _ in all_truth_tables(alpha, n)) == expected == m ** (m ** n)


def test_operators_from_one_seed_commute(rng):
    seed = SeedOperator.from_values((1, 0, -1))
    ops = []
    for _ in range(20):
        entries = tuple(seed.alphabet.values[k] for k in rng.integers(0, 3, size=9))
        ops.append(synthesize(TruthTable(seed.alphabet, 2, entries), seed).matrix)
    for a, b in itertools.combinations(ops, 2):
        assert max_abs_diff(a @ b, b @ a) < 1e-9


def test_real_alphabet_gives_hermitian_and_unit_circle_gives_unitary(rng):
    real = SeedOperator.from_values((0.5, -1.5, 2.0))
    entries = tuple(real.alphabet.values[k] for k in rng.integers(0, 3, size=9))
    op = synthesize(TruthTable(real.alphabet, 2, entries), real).matrix
    assert max_abs_diff(op, op.conj().T) < 1e-12

    circle = SeedOperator.from_values(tuple(np.exp(2j * np.pi * k / 5) for k in range(5)))
    entries = tuple(circle.alphabet.values[k] for k in rng.integers(0, 5, size=25))
    op = synthesize(TruthTable(circle.alphabet, 2, entries), circle).matrix
    assert max_abs_diff(op @ op.conj().T, identity(25)) < 1e-12


def test_dictator_is_lifted_seed():
    seed = SeedOperator.from_values((1, 0, -1))
    table = TruthTable.from_function(seed.alphabet, 2, lambda u, v: u)
    assert max_abs_diff(synthesize(table, seed).matrix, dictator(seed, 1, 2)) < 1e-12
