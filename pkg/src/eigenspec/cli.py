"""Command-line front end.

Every subcommand prints one JSON document (``--format json``, the default)
or a plain-text rendering of the same document (``--format table``).
Exit status: 0 on success, 1 when the computation does not apply to the
input, 2 on usage or parse errors.  Diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import __version__
from .bounds import WeightedHypersurfaceConfig, best_node_bound, registry_rows, shared_factor_warning
from .covers import CoverConfig, eigenspace_ranks, full_rank, hyperplane_cover_hodge, lmhs
from .errors import NotApplicableError
from .milnor import WeightVector, infer_weights, standard_monomial_basis
from .parsing import format_polynomial, parse_polynomial, scan_variables
from .spectra import (
    DiagonalAutomorphism,
    Spectrum,
    base_change,
    bp_eigenspectrum,
    eigenspectrum,
    hodge_deligne_table,
    mixed_spectrum,
)
from .symrep import sign_multiplicity_total

SCHEMA = 1

EXIT_OK = 0
EXIT_NOT_APPLICABLE = 1
EXIT_USAGE = 2


class UsageError(Exception):
    pass


class _EarlyExit(Exception):
    """--help or --version: carries the text argparse wanted to print."""


class _Parser(argparse.ArgumentParser):
    # never touch sys.stdout / sys.exit, so run_command stays reentrant
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")

    def _print_message(self, message, file=None):
        if message:
            raise _EarlyExit(message)


def _int_list(text: str) -> list:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _rational_list(text: str) -> list:
    try:
        return [Fraction(x.strip()) for x in text.split(",") if x.strip()]
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected comma-separated rationals, got {text!r}")


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected a rational number, got {text!r}")


def _names(text: str) -> list:
    return [x.strip() for x in text.split(",") if x.strip()]


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("json", "table"), default="json")

    parser = _Parser(prog="eigenspec", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"eigenspec {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("spectrum", parents=[common],
                       help="mixed spectrum / eigenspectrum of a quasi-homogeneous polynomial")
    p.add_argument("--poly", required=True, help='e.g. "x^3 + y^2"')
    p.add_argument("--vars", type=_names, help="variable names in order (default: order of appearance)")
    p.add_argument("--weights", type=_rational_list,
                   help="rational weights w_i, e.g. 1/3,1/2 (default: inferred)")
    p.add_argument("--c", type=_int_list, help="diagonal automorphism exponents c_i")
    p.add_argument("--l", type=int, help="order of the diagonal automorphism")

    p = sub.add_parser("bp", parents=[common], help="Brieskorn-Pham eigenspectrum by convolution")
    p.add_argument("--lambdas", type=_int_list, required=True)
    p.add_argument("--c", type=_int_list)
    p.add_argument("--l", type=int, default=1)

    p = sub.add_parser("basechange", parents=[common], help="base change t -> t^k of a spectrum")
    p.add_argument("--spectrum", required=True, help="JSON file written by 'spectrum' or 'bp' ('-' for stdin)")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--nvars", type=int, help="number of variables, if the file does not record it")

    p = sub.add_parser("bound", parents=[common], help="node bounds in weighted projective space")
    p.add_argument("--weights", type=_int_list, required=True, help="ambient integer weights e_i")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--chi", type=int, help="chi(O_X) of the associated surface")
    p.add_argument("--ksq", type=_rational, help="K_X^2 of the associated surface")

    p = sub.add_parser("symcheck", parents=[common], help="sign-character obstruction for symmetric CY")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--orbits", action="store_true", help="include the orbit table")

    p = sub.add_parser("hassett", parents=[common], help="limit Hodge-Deligne diamond for cyclic covers")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--j", type=int, required=True)
    p.add_argument("--stratum", choices=("A", "B"), required=True)

    p = sub.add_parser("hodge-cover", parents=[common], help="Hodge numbers of hyperplane double covers")
    p.add_argument("--n", type=int, required=True)

    sub.add_parser("registry", parents=[common], help="record nodal examples with their bounds")
    return parser


# -- subcommand handlers ----------------------------------------------------

def _cmd_spectrum(args, diagnostics: list) -> dict:
    names = args.vars or scan_variables(args.poly)
    if not names:
        raise UsageError("polynomial has no variables; pass --vars")
    F = parse_polynomial(args.poly, names)
    if not F:
        raise UsageError("the polynomial is zero")
    w = WeightVector(args.weights) if args.weights is not None else infer_weights(F)
    if len(w) != F.nvars:
        raise UsageError(f"{len(w)} weights given for {F.nvars} variables")
    order = w.order()
    basis = standard_monomial_basis(F, w, order)
    doc = {
        "polynomial": format_polynomial(F, names, order),
        "variables": names,
        "nvars": F.nvars,
        "weights": [str(x) for x in w.w],
        "kappaF": w.kappaF,
        "kappa": list(w.kappa),
        "milnor_number": basis.milnor_number,
        "basis": [list(b) for b in basis],
    }
    if args.c is not None or args.l is not None:
        if args.c is None or args.l is None:
            raise UsageError("--c and --l must be given together")
        g = DiagonalAutomorphism(args.l, args.c)
        if len(g.c) != F.nvars:
            raise UsageError(f"--c has {len(g.c)} entries for {F.nvars} variables")
        spec = eigenspectrum(F, w, g, order)
        doc["automorphism"] = {"l": g.order, "c": list(g.c)}
    else:
        spec = mixed_spectrum(F, w, order)
        doc["automorphism"] = None
    doc["spectrum"] = spec.to_json()
    doc["hodge_deligne"] = hodge_deligne_table(spec).to_json()
    return doc


def _cmd_bp(args, diagnostics: list) -> dict:
    lambdas = args.lambdas
    c = args.c if args.c is not None else [0] * len(lambdas)
    if len(c) != len(lambdas):
        raise UsageError("--c and --lambdas must have the same length")
    if args.l < 1:
        raise UsageError("--l must be positive")
    spec = bp_eigenspectrum(lambdas, c, args.l)
    return {
        "lambdas": lambdas,
        "c": [x % args.l for x in c],
        "l": args.l,
        "nvars": spec.nvars,
        "milnor_number": spec.total(),
        "spectrum": spec.to_json(),
        "hodge_deligne": hodge_deligne_table(spec).to_json(),
    }


def _cmd_basechange(args, diagnostics: list) -> dict:
    try:
        if args.spectrum == "-":
            data = json.load(sys.stdin)
        else:
            with open(args.spectrum, encoding="utf-8") as fh:
                data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read spectrum file: {exc}")
    if isinstance(data, dict):
        entries = data.get("spectrum")
        nvars = args.nvars or data.get("nvars")
    else:
        entries, nvars = data, args.nvars
    if not isinstance(entries, list) or not nvars:
        raise UsageError("spectrum file needs a 'spectrum' list and 'nvars' (or pass --nvars)")
    if args.k < 1:
        raise UsageError("--k must be positive")
    try:
        spec = Spectrum.from_json(entries, int(nvars))
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"malformed spectrum entry: {exc}")
    out = base_change(spec, args.k)
    return {
        "k": args.k,
        "nvars": out.nvars,
        "spectrum": out.to_json(),
        "hodge_deligne": hodge_deligne_table(out).to_json(),
    }


def _cmd_bound(args, diagnostics: list) -> dict:
    if (args.chi is None) != (args.ksq is None):
        raise UsageError("--chi and --ksq must be given together")
    cfg = WeightedHypersurfaceConfig(args.weights, args.degree, warn=False)
    note = shared_factor_warning(cfg.e)
    if note:
        diagnostics.append(note)
    return best_node_bound(cfg, args.chi, args.ksq).to_json()


def _cmd_symcheck(args, diagnostics: list) -> dict:
    return sign_multiplicity_total(args.n).to_json(include_orbits=args.orbits)


def _cmd_hassett(args, diagnostics: list) -> dict:
    cfg = CoverConfig(args.m, args.j)
    ranks = eigenspace_ranks(cfg)
    doc = lmhs(cfg, args.stratum).to_json()
    doc["smooth_ranks"] = {"h10": ranks.h10, "h01": ranks.h01, "total": ranks.total,
                           "full_rank": full_rank(args.m)}
    return doc


def _cmd_hodge_cover(args, diagnostics: list) -> dict:
    h = hyperplane_cover_hodge(args.n)
    return {"n": args.n, "hodge": h, "total": sum(h)}


def _cmd_registry(args, diagnostics: list) -> dict:
    return {"examples": registry_rows()}


HANDLERS = {
    "spectrum": _cmd_spectrum,
    "bp": _cmd_bp,
    "basechange": _cmd_basechange,
    "bound": _cmd_bound,
    "symcheck": _cmd_symcheck,
    "hassett": _cmd_hassett,
    "hodge-cover": _cmd_hodge_cover,
    "registry": _cmd_registry,
}


# -- rendering --------------------------------------------------------------

def _cell(v) -> str:
    if v is None:
        return "-"
    if isinstance(v, (list, tuple)):
        return "[" + ",".join(_cell(x) for x in v) + "]"
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def render_table(doc: dict) -> str:
    lines = []
    for key in sorted(doc):
        value = doc[key]
        if isinstance(value, list) and value and all(isinstance(x, dict) for x in value):
            cols = sorted({k for row in value for k in row})
            rows = [[_cell(row.get(c)) for c in cols] for row in value]
            widths = [max(len(c), *(len(r[i]) for r in rows)) for i, c in enumerate(cols)]
            lines.append(f"{key}:")
            lines.append("  " + "  ".join(c.ljust(w) for c, w in zip(cols, widths)).rstrip())
            for r in rows:
                lines.append("  " + "  ".join(x.ljust(w) for x, w in zip(r, widths)).rstrip())
        elif isinstance(value, dict):
            lines.append(f"{key}:")
            for k in sorted(value):
                lines.append(f"  {k}: {_cell(value[k])}")
        else:
            lines.append(f"{key}: {_cell(value)}")
    return "\n".join(lines) + "\n"


def render(doc: dict, fmt: str) -> str:
    if fmt == "table":
        return render_table(doc)
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def run_command(argv, stderr=None) -> tuple:
    """Run one CLI invocation; returns ``(exit_code, stdout_text)``.

    Diagnostics are written to ``stderr`` (default ``sys.stderr``).
    """
    stderr = stderr if stderr is not None else sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
    except UsageError as exc:
        stderr.write(f"{exc}\n")
        return EXIT_USAGE, ""
    except _EarlyExit as exc:
        return EXIT_OK, str(exc)

    diagnostics: list = []
    try:
        doc = HANDLERS[args.command](args, diagnostics)
        for note in diagnostics:
            stderr.write(f"warning: {note}\n")
    except NotApplicableError as exc:
        stderr.write(f"not applicable: {exc}\n")
        return EXIT_NOT_APPLICABLE, ""
    except (UsageError, ValueError, TypeError) as exc:
        stderr.write(f"error: {exc}\n")
        return EXIT_USAGE, ""
    doc = {"schema": SCHEMA, "command": args.command, **doc}
    return EXIT_OK, render(doc, args.format)


def main(argv=None) -> int:
    code, out = run_command(sys.argv[1:] if argv is None else argv)
    if out:
        sys.stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
