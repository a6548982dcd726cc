"""``eigensynth`` command-line front end.

Exit codes: 0 pass, 1 verification failed, 2 parse or validation error,
3 degenerate alphabet, 4 incompatible request.
"""
from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

import numpy as np

from . import fourier, interpolation, routes, serialize
from .matrix_core import DEFAULT_TOL, max_abs_diff

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_PARSE = 2
EXIT_DEGENERATE = 3
EXIT_INCOMPATIBLE = 4


class CliError(Exception):
    def __init__(self, message, code):
        super().__init__(message)
        self.code = code


# -- input resolution ----------------------------------------------------------

def read_spec(arg: str) -> serialize.TableSpec:
    """A spec file path, or the name of a bundled spec such as ``AND``."""
    path = Path(arg)
    try:
        if path.is_file():
            return serialize.load_spec(path)
        try:
            text = serialize.bundled_spec_text(arg)
        except FileNotFoundError:
            raise CliError(f"no such spec file or bundled spec: {arg}", EXIT_PARSE) from None
        return serialize.loads_spec(text, default_name=arg)
    except interpolation.DegenerateAlphabetError as exc:
        raise CliError(str(exc), EXIT_DEGENERATE) from None
    except serialize.SpecError as exc:
        raise CliError(str(exc), EXIT_PARSE) from None


def parse_route_spec(text: str):
    """``NAME[:route[:root]]`` or ``spec:PATH``."""
    if text.startswith("spec:"):
        return ("spec", text[5:], None)
    parts = text.split(":")
    if len(parts) > 3:
        raise CliError(f"cannot parse route spec {text!r}", EXIT_PARSE)
    name = parts[0]
    route = parts[1] if len(parts) > 1 and parts[1] else "canonical"
    root = parts[2] if len(parts) > 2 else None
    return (name, route, root)


def resolve_operator(name: str, route: str, root):
    try:
        return routes.build(name, route, root)
    except routes.InapplicableRouteError as exc:
        raise CliError(str(exc), EXIT_INCOMPATIBLE) from None
    except KeyError as exc:
        raise CliError(str(exc.args[0]), EXIT_PARSE) from None
    except ValueError as exc:
        raise CliError(str(exc), EXIT_INCOMPATIBLE) from None


def resolve_route_spec(text: str):
    name, route, root = parse_route_spec(text)
    if name == "spec":
        spec = read_spec(route)
        return interpolation.synthesize(spec.table, spec.seed()).matrix
    return resolve_operator(name, route, root)


# -- output -------------------------------------------------------------------

def _use_color(stream) -> bool:
    return "NO_COLOR" not in os.environ and hasattr(stream, "isatty") and stream.isatty()


def _fmt_complex(z: complex) -> str:
    re_, im_ = round(z.real, 6) + 0.0, round(z.imag, 6) + 0.0
    if im_ == 0:
        return f"{re_:g}"
    if re_ == 0:
        return f"{im_:g}i"
    return f"{re_:g}{im_:+g}i"


def format_matrix(mat) -> str:
    cells = [[_fmt_complex(z) for z in row] for row in np.asarray(mat, dtype=complex)]
    width = max(len(c) for row in cells for c in row)
    return "\n".join("  ".join(c.rjust(width) for c in row) for row in cells)


def _fmt_verdict(verdict, stream) -> str:
    word = "PASS" if verdict["pass"] else "FAIL"
    if _use_color(stream):
        word = ("\033[32m" if verdict["pass"] else "\033[31m") + word + "\033[0m"
    return f"{word} vs {verdict['target']}: max_abs_diff = {verdict['max_abs_diff']:.3e} (tol {verdict['tol']:g})"


def emit_report(report: dict, as_json: bool, stream):
    if as_json:
        stream.write(serialize.dumps(report))
        return
    out = [f"{report['name']}  ({report['dim']}x{report['dim']})"]
    for key in sorted(report["metadata"]):
        out.append(f"  {key}: {report['metadata'][key]}")
    out.append(format_matrix(serialize.entries_to_matrix(report["entries"])))
    if "verdict" in report:
        out.append(_fmt_verdict(report["verdict"], stream))
    stream.write("\n".join(out) + "\n")


# -- commands -------------------------------------------------------------------

def cmd_synthesize(args, stream) -> int:
    spec = read_spec(args.spec)
    seed = spec.seed()
    op = interpolation.synthesize(spec.table, seed)
    metadata = {
        "alphabet": [serialize.complex_pair(v) for v in spec.alphabet.values],
        "arity": spec.table.arity,
        "route": "interpolation",
    }
    code = EXIT_OK
    verdict = None
    if args.oracle:
        deviation = interpolation.verify_eigenlogic(op)
        metadata["oracle_deviation"] = deviation
        verdict = serialize.make_verdict("eigenlogic-oracle", deviation, args.tol)
        code = EXIT_OK if verdict["pass"] else EXIT_FAIL
    emit_report(serialize.matrix_report(spec.name, op.matrix, metadata, verdict), args.json, stream)
    return code


def cmd_gate(args, stream) -> int:
    mat = resolve_operator(args.name, args.route, args.root)
    name = routes.normalize_name(args.name)
    metadata = {"route": args.route}
    if args.root is not None:
        metadata["root"] = args.root
    verdict = None
    code = EXIT_OK
    if args.verify:
        canonical = routes.build(name, "canonical")
        verdict = serialize.make_verdict(f"{name}:canonical", max_abs_diff(mat, canonical), args.tol)
        code = EXIT_OK if verdict["pass"] else EXIT_FAIL
    emit_report(serialize.matrix_report(name, mat, metadata, verdict), args.json, stream)
    return code


def cmd_fourier(args, stream) -> int:
    spec = read_spec(args.spec)
    try:
        g = fourier.BooleanFunction(spec.table.arity, spec.table.entries)
    except ValueError as exc:
        raise CliError(f"fourier needs a +1/-1 valued table: {exc}", EXIT_PARSE) from None
    spectrum = fourier.walsh_transform(g)
    op = fourier.quantum_boolean_operator(g)
    residual = max_abs_diff(op, np.diag(np.array(g.values, dtype=complex)))
    n = g.arity
    coeffs = {fourier.format_bits(fourier.bits_of(p, n)): int(c) for p, c in enumerate(spectrum.coeffs)}
    report = {
        "name": spec.name,
        "arity": n,
        "walsh": coeffs,
        "character_expansion": {k: float(v) for k, v in fourier.character_expansion(g).items()},
        "parseval": int(spectrum.parseval_sum()),
        "residual": residual,
    }
    if args.json:
        stream.write(serialize.dumps(report))
    else:
        lines = [f"{spec.name}  (arity {n})", "  p" + " " * max(0, n - 1) + "  g^_p"]
        lines += [f"  {p}  {c:+d}" for p, c in coeffs.items()]
        lines.append(f"  parseval sum = {report['parseval']} (4^n = {4 ** n})")
        lines.append(f"  reconstruction residual = {residual:.3e}")
        stream.write("\n".join(lines) + "\n")
    return EXIT_OK


def cmd_verify(args, stream) -> int:
    left = resolve_route_spec(args.left)
    right = resolve_route_spec(args.right)
    if left.shape != right.shape:
        raise CliError(f"dimension mismatch: {left.shape} vs {right.shape}", EXIT_INCOMPATIBLE)
    verdict = serialize.make_verdict(args.right, max_abs_diff(left, right), args.tol)
    verdict["source"] = args.left
    if args.json:
        stream.write(serialize.dumps(verdict))
    else:
        stream.write(f"{args.left}: " + _fmt_verdict(verdict, stream) + "\n")
    return EXIT_OK if verdict["pass"] else EXIT_FAIL


def cmd_list(args, stream) -> int:
    doc = {"operators": routes.catalog(), "specs": serialize.bundled_spec_names()}
    if args.json:
        stream.write(serialize.dumps(doc))
    else:
        for name, rs in doc["operators"].items():
            stream.write(f"{name:10s} {', '.join(rs)}\n")
        stream.write("bundled specs: " + ", ".join(doc["specs"]) + "\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="json", action="store_true", default=True,
                     help="emit JSON (default)")
    fmt.add_argument("--text", dest="json", action="store_false", help="emit aligned text")
    common.add_argument("--tol", type=float, default=DEFAULT_TOL,
                        help="max_abs_diff threshold for a pass (default 1e-10)")

    parser = argparse.ArgumentParser(
        prog="eigensynth",
        description="Synthesize logical quantum operators from truth tables and verify gate constructions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("synthesize", parents=[common], help="operator for a truth-table spec")
    p.add_argument("spec", help="spec file, or the name of a bundled spec (see `list`)")
    p.add_argument("--oracle", action="store_true", help="check every interpretation eigenvalue")
    p.set_defaults(func=cmd_synthesize)

    p = sub.add_parser("gate", parents=[common], help="a named operator built by a chosen route")
    p.add_argument("name", help="Z X H S T Tdg CZ CNOT SWAP CCZ TOFFOLI MIN3 MAX3 HA_SUM HA_CARRY IM(n) QFT(n)")
    p.add_argument("--route", default="canonical")
    p.add_argument("--root", default=None, help="t-polynomial root: omega, omega_s or -1")
    p.add_argument("--verify", action="store_true", help="compare with the canonical matrix")
    p.set_defaults(func=cmd_gate)

    p = sub.add_parser("fourier", parents=[common], help="Walsh spectrum of a +1/-1 table spec")
    p.add_argument("spec")
    p.set_defaults(func=cmd_fourier)

    p = sub.add_parser("verify", parents=[common], help="compare two operators")
    p.add_argument("left", help="NAME[:route[:root]] or spec:PATH")
    p.add_argument("right", help="NAME[:route[:root]] or spec:PATH")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("list", parents=[common], help="operators, routes and bundled specs")
    p.set_defaults(func=cmd_list)
    return parser


def main(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code else EXIT_OK
    try:
        return args.func(args, stdout)
    except CliError as exc:
        stderr.write(f"eigensynth: {exc}\n")
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
