"""Exit criteria. Each test records one PASS/FAIL line, shown in the pytest summary."""
import io
import itertools
import json

import numpy as np
import pytest

from eigensynth import gates, multivalued
from eigensynth.cli import main
from eigensynth.fourier import (
    BooleanFunction,
    quantum_boolean_operator,
    reed_muller,
    reed_muller_product,
    walsh_transform,
)
from eigensynth.interpolation import (
    Alphabet,
    SeedOperator,
    TruthTable,
    all_truth_tables,
    projectors_from_seed,
    synthesize,
    verify_eigenlogic,
)
from eigensynth.matrix_core import adjoint, identity, kron, max_abs_diff
from eigensynth.serialize import dumps, entries_to_matrix

from conftest import ACCEPTANCE_LINES, random_alphabet


@pytest.fixture
def record(request):
    """Collect ``(label, measured, tol)`` checks and log one line for the criterion."""
    checks = []

    def check(label, measured, tol):
        checks.append((label, float(measured), tol))

    yield check
    failed = [c for c in checks if not c[1] < c[2]]
    worst = max(checks, key=lambda c: c[1] / c[2]) if checks else ("none", 0.0, 1.0)
    status = "PASS" if checks and not failed else "FAIL"
    line = (f"[{status}] {request.node.name}: {len(checks)} checks, "
            f"worst {worst[0]} = {worst[1]:.2e} (tol {worst[2]:g})")
    ACCEPTANCE_LINES.append(line)
    print(line)


def test_criterion_1_projector_laws(record, rng):
    alphabets = [(0, 1), (1, -1), (1, 0, -1), (1, gates.OMEGA)]
    alphabets += [random_alphabet(rng, int(rng.integers(2, 6))) for _ in range(20)]
    worst = 0.0
    for values in alphabets:
        defects = projectors_from_seed(SeedOperator.from_values(values)).defects()
        for law, value in defects.items():
            record(f"{law} {len(values)}-valued", value, 1e-9)
            worst = max(worst, value)
    assert worst < 1e-9


def test_criterion_2_reference_diagonals(record):
    w = gates.OMEGA
    b01, pm = Alphabet((0, 1)), Alphabet((1, -1))
    cases = {
        "Pi_AND": (synthesize(TruthTable(b01, 2, (0, 0, 0, 1)), SeedOperator(b01)).matrix,
                   np.diag([0, 0, 0, 1])),
        "G_XOR": (synthesize(TruthTable(pm, 2, (1, -1, -1, 1)), SeedOperator(pm)).matrix,
                  np.diag([1, -1, -1, 1])),
        "CZ poly": (gates.cz_polynomial(), np.diag([1, 1, 1, -1])),
        "CCZ": (gates.ccz_construction(), np.diag([1] * 7 + [-1])),
        "Max": (multivalued.max_operator(), np.diag([1, 0, -1, 0, 0, -1, -1, -1, -1])),
        "Min": (multivalued.min_operator(), np.diag([1, 1, 1, 1, 0, 0, 1, 0, -1])),
        "HA sum": (multivalued.half_adder_operators()[0], np.diag([1, -1, 0, -1, 0, 1, 0, 1, -1])),
        "HA carry": (multivalued.half_adder_operators()[1], np.diag([-1, 0, 0, 0, 0, 0, 0, 0, 1])),
        "T_xor(x,y)": (gates.t_xor_operator({2, 1}, 3), np.diag([1, 1, w, w, w, w, 1, 1])),
    }
    for label, (got, want) in cases.items():
        record(label, max_abs_diff(got, want), 1e-12)
        assert max_abs_diff(got, want) < 1e-12, label


def test_criterion_3_factorization_equivalences(record):
    canon = gates.standard_gate
    pm = Alphabet((1, -1))
    or3 = BooleanFunction.from_callable(3, lambda x, y, z: x | y | z)
    g_or3 = synthesize(TruthTable(pm, 3, or3.values), SeedOperator(pm)).matrix
    cases = {
        "CZ exp": (gates.exp_factorization("CZ").evaluate(), canon("CZ")),
        "Toffoli exp": (gates.toffoli_factorization_printed().evaluate(), canon("TOFFOLI")),
        "CNOT exp": (gates.exp_factorization("CNOT").evaluate(), canon("CNOT")),
        "CCZ T-product": (gates.evaluate_t_product(gates.t_product_ccz()), canon("CCZ")),
        "CCZ poly omega": (gates.t_polynomial_ccz("omega"), canon("CCZ")),
        "CCZ poly omega_S": (gates.t_polynomial_ccz("omega_s"), canon("CCZ")),
        "CCZ poly -1": (gates.t_polynomial_ccz("-1"), canon("CCZ")),
        "OR3 Reed-Muller": (reed_muller_product(reed_muller(or3.bools())), g_or3),
    }
    f = gates.toffoli_factorization_printed()
    assert abs(f.global_phase - np.exp(1j * np.pi / 8)) < 1e-15 and len(f.factors) == 7
    for label, (got, want) in cases.items():
        record(label, max_abs_diff(got, want), 1e-10)
        assert max_abs_diff(got, want) < 1e-10, label


def test_criterion_4_exhaustive_n3(record):
    worst = 0.0
    for bools in itertools.product((0, 1), repeat=8):
        g = BooleanFunction.from_bools(3, bools)
        diff = max_abs_diff(reed_muller_product(reed_muller(bools)), quantum_boolean_operator(g))
        worst = max(worst, diff)
        assert diff < 1e-10, bools
        assert walsh_transform(g).parseval_sum() == 64, bools
    record("max over 256 functions", worst, 1e-10)
    record("Parseval violations", 0, 1)


def test_criterion_5_interpolation_oracle(record, rng):
    seeds = {2: SeedOperator.from_values((0, 1)), 3: SeedOperator.from_values((1, 0, -1))}
    ops = {2: [], 3: []}
    worst = 0.0
    for _ in range(50):
        m = int(rng.choice([2, 3]))
        n = int(rng.integers(1, 4))
        seed = seeds[m]
        entries = tuple(seed.alphabet.values[k] for k in rng.integers(0, m, size=m ** n))
        op = synthesize(TruthTable(seed.alphabet, n, entries), seed)
        dev = verify_eigenlogic(op)
        worst = max(worst, dev)
        assert dev < 1e-10
        ops[m].append(op.matrix)
    record("eigen deviation", worst, 1e-10)
    comm = 0.0
    for mats in ops.values():
        for a, b in itertools.combinations(mats, 2):
            if a.shape == b.shape:
                comm = max(comm, max_abs_diff(a @ b, b @ a))
    record("pairwise commutator", comm, 1e-9)
    assert comm < 1e-9


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_criterion_6_qft_identities(record, n):
    direct, proj, jz = (multivalued.im_operator(n), multivalued.im_from_projectors(n),
                        multivalued.im_from_jz(n))
    size = 2 ** n
    checks = {
        "direct vs projector": max_abs_diff(direct, proj),
        "direct vs Jz": max_abs_diff(direct, jz),
        "projector vs Jz": max_abs_diff(proj, jz),
        "Im^(2^n) = I": max_abs_diff(np.linalg.matrix_power(direct, size), identity(size)),
        "QFT columns vs formula": max_abs_diff(multivalued.qft_matrix(n, "columns"),
                                               multivalued.qft_matrix(n, "direct")),
        "QFT unitary": max_abs_diff(multivalued.qft_matrix(n) @ adjoint(multivalued.qft_matrix(n)),
                                    identity(size)),
    }
    if n == 1:
        checks["QFT(1) = H"] = max_abs_diff(multivalued.qft_matrix(1), gates.H)
    for label, value in checks.items():
        record(label, value, 1e-12)
        assert value < 1e-12, label


def test_criterion_7_counting(record):
    pm = Alphabet((1, -1))
    ops = [synthesize(t, SeedOperator(pm)).matrix for t in all_truth_tables(pm, 1)]
    expected = [identity(2), gates.Z, -gates.Z, -identity(2)]
    matched = sum(any(max_abs_diff(op, e) < 1e-12 for op in ops) for e in expected)
    distinct = len({tuple(np.round(op, 9).ravel()) for op in ops})
    record("arity-1 ops missing from {Z,-Z,I,-I}", 4 - matched, 1)
    assert len(ops) == 4 and distinct == 4 and matched == 4

    diagonals = {tuple(np.diag(synthesize(t, SeedOperator(pm)).matrix).real)
                 for t in all_truth_tables(pm, 2)}
    record("arity-2 distinct diagonals short of 16", 16 - len(diagonals), 1)
    assert len(diagonals) == 16


def _cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    return main(list(argv), stdout=out, stderr=err), out.getvalue()


def test_criterion_8_cli_contract(record, tmp_path):
    w = gates.OMEGA
    spec_diagonals = {
        "AND": [0, 0, 0, 1],
        "XOR": [1, -1, -1, 1],
        "CZ_AND": [1, 1, 1, -1],
        "CCZ_AND3": [1] * 7 + [-1],
        "MIN3": [1, 1, 1, 1, 0, 0, 1, 0, -1],
        "MAX3": [1, 0, -1, 0, 0, -1, -1, -1, -1],
        "HA_SUM": [1, -1, 0, -1, 0, 1, 0, 1, -1],
        "HA_CARRY": [-1, 0, 0, 0, 0, 0, 0, 0, 1],
        "T_XOR2": [1, w, w, 1],
    }
    for name, diag in spec_diagonals.items():
        code, out = _cli("synthesize", name, "--oracle")
        assert code == 0, name
        mat = entries_to_matrix(json.loads(out)["entries"])
        record(f"synthesize {name}", max_abs_diff(mat, np.diag(diag)), 1e-12)
        assert max_abs_diff(mat, np.diag(diag)) < 1e-12
        assert dumps(json.loads(out)) == out

    gate_runs = [
        ("CZ", "exp", None), ("TOFFOLI", "exp", None), ("CNOT", "exp", None),
        ("CCZ", "t-product", None), ("CCZ", "t-polynomial", "omega"),
        ("CCZ", "t-polynomial", "omega_s"), ("CCZ", "t-polynomial", "-1"),
        ("CZ", "polynomial", None), ("CCZ", "householder", None),
        ("MIN3", "polynomial", None), ("MAX3", "polynomial", None),
        ("HA_SUM", "polynomial", None), ("HA_CARRY", "polynomial", None),
    ]
    for name, route, root in gate_runs:
        argv = ["gate", name, "--route", route, "--verify"] + (["--root", root] if root else [])
        code, out = _cli(*argv)
        verdict = json.loads(out)["verdict"]
        record(f"gate {name} {route}", verdict["max_abs_diff"], 1e-10)
        assert code == 0 and verdict["pass"]
        assert dumps(json.loads(out)) == out

    assert _cli("verify", "spec:CCZ_AND3", "CCZ:t-product")[0] == 0
    assert _cli("verify", "TOFFOLI:exp", "TOFFOLI:t-polynomial:omega_s")[0] == 0
    assert _cli("verify", "Z", "X")[0] == 1
    assert _cli("gate", "SWAP", "--route", "t-product")[0] == 4
    bad = tmp_path / "bad.json"
    bad.write_text('{"alphabet": [0, 1], "arity": 1, "values": [0, 5]}')
    assert _cli("synthesize", str(bad))[0] == 2
    degenerate = tmp_path / "deg.json"
    degenerate.write_text('{"alphabet": [0, 0], "arity": 1, "values": [0, 0]}')
    assert _cli("synthesize", str(degenerate))[0] == 3
    record("exit-code contract violations", 0, 1)
