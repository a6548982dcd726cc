"""Table-spec documents in, matrix reports out.

A table spec is a JSON object::

    {"name": "AND", "alphabet": [0, 1], "arity": 2, "values": [0, 0, 0, 1]}

Value literals are JSON numbers or strings: a decimal float, a complex
``"a+bi"``, or ``"root(k,m)"`` for ``exp(2 pi i k / m)``.

Reports are encoded with sorted keys and every float printed with 17
significant digits, so decoding and re-encoding gives the same bytes.
"""
from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

import numpy as np

from .interpolation import Alphabet, SeedOperator, TruthTable


class SpecError(ValueError):
    """A table spec could not be parsed or failed validation."""

    def __init__(self, message, line=None, column=None):
        where = f" (line {line}, column {column})" if line is not None else ""
        super().__init__(message + where)
        self.line = line
        self.column = column


_ROOT_RE = re.compile(r"^root\(\s*(-?\d+)\s*,\s*(\d+)\s*\)$")
_IMAG_RE = re.compile(r"^([+-]?)(\d*\.?\d*(?:[eE][+-]?\d+)?)i$")


def parse_value(literal) -> complex:
    """One value literal to a complex number."""
    if isinstance(literal, bool):
        raise SpecError(f"booleans are not value literals: {literal!r}")
    if isinstance(literal, (int, float)):
        value = complex(literal)
    elif isinstance(literal, str):
        value = _parse_string_literal(literal.strip().replace(" ", ""))
    else:
        raise SpecError(f"unsupported value literal {literal!r}")
    if not (math.isfinite(value.real) and math.isfinite(value.imag)):
        raise SpecError(f"non-finite value literal {literal!r}")
    return value


def _parse_string_literal(s: str) -> complex:
    m = _ROOT_RE.match(s)
    if m:
        k, order = int(m.group(1)), int(m.group(2))
        if order < 1:
            raise SpecError(f"root order must be positive in {s!r}")
        return complex(np.exp(2j * np.pi * k / order))
    pure = _IMAG_RE.match(s)
    if pure:
        sign, mag = pure.groups()
        try:
            value = 1.0 if mag == "" else float(mag)
        except ValueError:
            raise SpecError(f"cannot parse value literal {s!r}") from None
        return complex(0, -value if sign == "-" else value)
    if "i" in s:
        s = s.replace("i", "j")
        if s.endswith(("+j", "-j")):
            s = s[:-1] + "1j"
    elif "j" in s:
        raise SpecError(f"use 'i' for the imaginary unit: {s!r}")
    try:
        return complex(s)
    except ValueError:
        raise SpecError(f"cannot parse value literal {s!r}") from None


@dataclass(frozen=True)
class TableSpec:
    alphabet: Alphabet
    table: TruthTable
    name: str = "table"

    def seed(self) -> SeedOperator:
        return SeedOperator(self.alphabet)


def loads_spec(text: str, default_name: str = "table") -> TableSpec:
    """Parse and validate a table spec. DegenerateAlphabetError passes through."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecError(f"invalid JSON: {exc.msg}", exc.lineno, exc.colno) from None
    if not isinstance(doc, dict):
        raise SpecError("table spec must be a JSON object")
    missing = [k for k in ("alphabet", "arity", "values") if k not in doc]
    if missing:
        raise SpecError(f"table spec is missing {', '.join(missing)}")
    arity = doc["arity"]
    if not isinstance(arity, int) or isinstance(arity, bool) or arity < 1:
        raise SpecError(f"arity must be a positive integer, got {arity!r}")
    if not isinstance(doc["alphabet"], list) or not isinstance(doc["values"], list):
        raise SpecError("alphabet and values must be lists")
    raw_alphabet = [parse_value(v) for v in doc["alphabet"]]
    # Alphabet raises DegenerateAlphabetError for colliding values; let it through.
    if len(raw_alphabet) < 2:
        raise SpecError("alphabet needs at least two values")
    alphabet = Alphabet(tuple(raw_alphabet))
    values = [parse_value(v) for v in doc["values"]]
    try:
        table = TruthTable(alphabet, arity, tuple(values))
    except ValueError as exc:
        raise SpecError(str(exc)) from None
    name = doc.get("name", default_name)
    return TableSpec(alphabet, table, str(name))


def load_spec(path) -> TableSpec:
    path = Path(path)
    return loads_spec(path.read_text(encoding="utf-8"), default_name=path.stem)


def bundled_spec_names() -> list:
    folder = resources.files("eigensynth") / "specs"
    return sorted(p.name[:-5] for p in folder.iterdir() if p.name.endswith(".json"))


def bundled_spec_text(name: str) -> str:
    folder = resources.files("eigensynth") / "specs"
    for p in folder.iterdir():
        if p.name.lower() == f"{name.lower()}.json":
            return p.read_text(encoding="utf-8")
    raise FileNotFoundError(f"no bundled spec named {name!r}")


# -- reports -------------------------------------------------------------------

def _clean_float(x: float) -> float:
    x = float(x)
    return 0.0 if x == 0 else x


def complex_pair(z) -> list:
    z = complex(z)
    return [_clean_float(z.real), _clean_float(z.imag)]


def matrix_to_entries(mat) -> list:
    mat = np.asarray(mat, dtype=complex)
    return [[complex_pair(z) for z in row] for row in mat]


def entries_to_matrix(entries) -> np.ndarray:
    return np.array([[complex(re_, im_) for re_, im_ in row] for row in entries], dtype=complex)


def matrix_report(name: str, mat, metadata: dict | None = None, verdict: dict | None = None) -> dict:
    mat = np.asarray(mat, dtype=complex)
    report = {
        "name": name,
        "dim": int(mat.shape[0]),
        "entries": matrix_to_entries(mat),
        "metadata": metadata or {},
    }
    if verdict is not None:
        report["verdict"] = verdict
    return report


def make_verdict(target: str, diff: float, tol: float) -> dict:
    return {"target": target, "max_abs_diff": float(diff), "tol": float(tol), "pass": bool(diff < tol)}


def _encode(obj, indent: int, level: int) -> str:
    pad = " " * (indent * (level + 1))
    end = " " * (indent * level)
    if obj is None:
        return "null"
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        if not math.isfinite(obj):
            raise ValueError(f"cannot encode non-finite float {obj!r}")
        return format(_clean_float(obj), ".17g")
    if isinstance(obj, str):
        return json.dumps(obj, ensure_ascii=False)
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        # Numeric leaves (complex pairs, coefficient rows) stay on one line.
        if all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in obj):
            return "[" + ", ".join(_encode(v, indent, level + 1) for v in obj) + "]"
        if all(isinstance(v, (list, tuple)) and all(isinstance(u, (int, float)) for u in v) for v in obj):
            return "[" + ", ".join(_encode(v, indent, level + 1) for v in obj) + "]"
        inner = (",\n").join(pad + _encode(v, indent, level + 1) for v in obj)
        return "[\n" + inner + "\n" + end + "]"
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = []
        for key in sorted(obj):
            items.append(pad + json.dumps(str(key)) + ": " + _encode(obj[key], indent, level + 1))
        return "{\n" + ",\n".join(items) + "\n" + end + "}"
    if isinstance(obj, (np.floating, np.integer, np.bool_)):
        return _encode(obj.item(), indent, level)
    raise TypeError(f"cannot encode {type(obj).__name__}")


def dumps(obj, indent: int = 2) -> str:
    """Canonical JSON: sorted keys, 17 significant digits, trailing newline."""
    return _encode(obj, indent, 0) + "\n"
