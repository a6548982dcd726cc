"""Named operators and the alternative constructions available for each.

A route is one way of building an operator. ``canonical`` is always the
directly written matrix; every other route goes through one of the
interpolation, Householder, exponential or T-gate constructions and should
agree with it.
"""
from __future__ import annotations

import re

import numpy as np

from . import gates, multivalued

TERNARY_NAMES = ("MIN3", "MAX3", "HA_SUM", "HA_CARRY")
_PARAM_RE = re.compile(r"^(IM|QFT)\((\d+)\)$", re.IGNORECASE)


class InapplicableRouteError(ValueError):
    """The requested route does not exist for this operator."""


def _ternary_canonical(rows):
    return np.diag([complex(v) for row in rows for v in row])


def _gate_routes(name):
    target_n = {"CZ": 2, "CNOT": 2, "CCZ": 3, "TOFFOLI": 3}
    routes = {"canonical": lambda root: gates.standard_gate(name)}
    if name == "Z":
        routes["householder"] = lambda root: gates.householder(gates.PI_ONE)
    elif name == "X":
        routes["householder"] = lambda root: gates.householder(gates.PI_X)
        routes["conjugation"] = lambda root: gates.H @ gates.Z @ gates.H
    elif name == "CZ":
        routes["polynomial"] = lambda root: gates.cz_polynomial()
        routes["householder"] = lambda root: gates.cz_householder()
    elif name == "CNOT":
        routes["polynomial"] = lambda root: gates.cnot_construction("polynomial")
        routes["householder"] = lambda root: gates.cnot_construction("householder")
        routes["conjugation"] = lambda root: gates.cnot_construction("conjugation")
    elif name == "CCZ":
        routes["polynomial"] = lambda root: gates.ccz_construction("polynomial")
        routes["householder"] = lambda root: gates.ccz_construction("householder")
        routes["t-product"] = lambda root: gates.evaluate_t_product(gates.t_product_ccz())
        routes["t-polynomial"] = lambda root: gates.t_polynomial_ccz(
            gates.OMEGA if root is None else root)
    elif name == "TOFFOLI":
        routes["polynomial"] = lambda root: gates.toffoli_construction("polynomial")
        routes["controlled"] = lambda root: gates.toffoli_construction("controlled")
        routes["householder"] = lambda root: gates.toffoli_construction("householder")
        routes["conjugation"] = lambda root: gates.toffoli_construction("conjugation")
        routes["t-product"] = lambda root: gates.conjugate_target(
            gates.evaluate_t_product(gates.t_product_ccz()), 3)
        routes["t-polynomial"] = lambda root: gates.conjugate_target(
            gates.t_polynomial_ccz(gates.OMEGA if root is None else root), 3)
    if name in target_n:
        routes["exp"] = lambda root: gates.exp_factorization(name).evaluate()
    return routes


def _ternary_routes(name):
    if name == "MIN3":
        return {
            "canonical": lambda root: _ternary_canonical(multivalued.MIN_TABLE),
            "polynomial": lambda root: multivalued.min_operator("polynomial"),
            "interpolation": lambda root: multivalued.min_operator("interpolation"),
        }
    if name == "MAX3":
        return {
            "canonical": lambda root: _ternary_canonical(multivalued.MAX_TABLE),
            "polynomial": lambda root: multivalued.max_operator("polynomial"),
            "interpolation": lambda root: multivalued.max_operator("interpolation"),
        }
    k = 0 if name == "HA_SUM" else 1
    rows = multivalued.HA_SUM_TABLE if k == 0 else multivalued.HA_CARRY_TABLE
    return {
        "canonical": lambda root: _ternary_canonical(rows),
        "polynomial": lambda root: multivalued.half_adder_operators("polynomial")[k],
        "interpolation": lambda root: multivalued.half_adder_operators("interpolation")[k],
    }


def _parametric_routes(kind, n):
    if kind == "IM":
        return {
            "canonical": lambda root: multivalued.im_operator(n),
            "projector": lambda root: multivalued.im_from_projectors(n),
            "jz": lambda root: multivalued.im_from_jz(n),
        }
    return {
        "canonical": lambda root: multivalued.qft_matrix(n, "direct"),
        "columns": lambda root: multivalued.qft_matrix(n, "columns"),
    }


def normalize_name(name: str) -> str:
    m = _PARAM_RE.match(name.strip())
    if m:
        return f"{m.group(1).upper()}({int(m.group(2))})"
    key = name.strip()
    if key.upper() in TERNARY_NAMES:
        return key.upper()
    return gates.canonical_name(key)


def available_routes(name: str) -> dict:
    """Route name to builder for the operator ``name``; KeyError if unknown."""
    key = normalize_name(name)
    m = _PARAM_RE.match(key)
    if m:
        n = int(m.group(2))
        multivalued._check_qubits(n)
        return _parametric_routes(m.group(1).upper(), n)
    if key in TERNARY_NAMES:
        return _ternary_routes(key)
    return _gate_routes(key)


def build(name: str, route: str = "canonical", root=None) -> np.ndarray:
    routes = available_routes(name)
    if route not in routes:
        raise InapplicableRouteError(
            f"route {route!r} does not apply to {name}; available: {', '.join(routes)}"
        )
    if root is not None and route != "t-polynomial":
        raise InapplicableRouteError("a root only applies to the t-polynomial route")
    return routes[route](root)


def catalog() -> dict:
    """Every fixed operator name with its routes (parametric ones shown for n=2)."""
    names = list(gates.GATE_NAMES) + list(TERNARY_NAMES) + ["IM(2)", "QFT(2)"]
    return {n: list(available_routes(n)) for n in names}
