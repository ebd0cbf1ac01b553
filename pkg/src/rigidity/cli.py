"""Command line interface.

Exit codes: 0 success or positive verdict, 1 negative mathematical verdict,
2 malformed input, 3 refused because the search space is too large.
"""
from __future__ import annotations

import argparse
import json
import random
import sys

from . import kernels
from .classify import (
    DEFAULT_CEILING,
    as_signed_permutation,
    enumerate_automorphisms,
    verify_structure_theorem,
)
from .errors import NotAnAutomorphismError, RigidityError, SearchSpaceTooLargeError
from .expr import parse_element
from .factor import factor_isomorphism
from .morphism import LinearSubstitution, determinant, is_well_defined_endomorphism
from .ring import (
    RingSpec,
    degree_one_element,
    format_element,
    nilpotency_order,
    verify_nonvanishing_powers,
)

EXIT_OK, EXIT_NEGATIVE, EXIT_INPUT, EXIT_REFUSED = 0, 1, 2, 3


class InputError(Exception):
    pass


def _render(obj, depth: int) -> str:
    # JSON with lists of scalars kept on one line, so matrices print row by row
    pad, inner = "  " * depth, "  " * (depth + 1)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{inner}{json.dumps(k)}: {_render(v, depth + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(obj, list) and any(isinstance(v, (dict, list)) for v in obj):
        items = [inner + _render(v, depth + 1) for v in obj]
        return "[\n" + ",\n".join(items) + "\n" + pad + "]"
    return json.dumps(obj)


def dumps(data) -> str:
    return _render(data, 0) + "\n"


def read_matrix(source: str, spec: RingSpec) -> LinearSubstitution:
    """Rows on separate lines, entries separated by whitespace; ``-`` is stdin."""
    try:
        if source == "-":
            text = sys.stdin.read()
        else:
            with open(source) as fh:
                text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read matrix: {exc}") from None
    try:
        rows = [tuple(int(tok) for tok in line.split()) for line in text.splitlines() if line.strip()]
    except ValueError as exc:
        raise InputError(f"matrix entries must be integers: {exc}") from None
    widths = {len(r) for r in rows}
    if len(widths) > 1:
        raise InputError(f"ragged matrix: row lengths {sorted(widths)}")
    if len(rows) != spec.m or widths != {spec.m}:
        raise InputError(f"matrix must be {spec.m}x{spec.m} for spec {spec}")
    return LinearSubstitution(tuple(rows), spec)


def _spec(text: str) -> RingSpec:
    try:
        return RingSpec.parse(text)
    except RigidityError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _onoff(text: str) -> bool:
    if text not in ("on", "off"):
        raise argparse.ArgumentTypeError("expected 'on' or 'off'")
    return text == "on"


def cmd_ring_eval(args):
    element = parse_element(args.expression, args.spec)
    if args.format == "json":
        return EXIT_OK, dumps({"spec": args.spec.to_data(), "terms": element.to_data()})
    return EXIT_OK, format_element(element) + "\n"


def cmd_nonvanishing(args):
    if len(args.coeffs) != args.spec.m:
        raise InputError(f"{len(args.coeffs)} coefficients for {args.spec.m} generators")
    report = verify_nonvanishing_powers(args.coeffs, args.spec)
    y = degree_one_element(args.coeffs, args.spec)
    lines = [f"y = {format_element(y)}"]
    for i, ok in report.items():
        lines.append(f"y^{args.spec.exponents[i]} (index {i + 1}): {'nonzero' if ok else 'ZERO'}")
    if not y.is_zero():
        lines.append(f"nilpotency order: {nilpotency_order(y)}")
    return (EXIT_OK if all(report.values()) else EXIT_NEGATIVE), "\n".join(lines) + "\n"


def cmd_check_endo(args):
    psi = read_matrix(args.matrix, args.spec)
    check = is_well_defined_endomorphism(psi)
    if not check:
        return EXIT_NEGATIVE, f"well-defined: no\nwitness: {check.explain(psi)}\n"
    det = determinant(psi)
    auto = abs(det) == 1
    out = f"well-defined: yes\ndeterminant: {det}\ngraded automorphism: {'yes' if auto else 'no'}\n"
    return EXIT_OK, out


def cmd_classify(args):
    report = verify_structure_theorem(args.spec, args.bound, args.pruning, args.ceiling)
    code = EXIT_OK if report.biconditional_holds else EXIT_NEGATIVE
    return code, dumps(report.to_data())


def cmd_enumerate(args):
    autos = enumerate_automorphisms(args.spec, args.bound, args.pruning, args.ceiling)
    data = {
        "spec": args.spec.to_data(),
        "bound": args.bound,
        "pruning": "on" if args.pruning else "off",
        "automorphisms": [],
    }
    for psi in autos:
        sp = as_signed_permutation(psi)
        data["automorphisms"].append({
            "rows": [[str(x) for x in r] for r in psi.matrix],
            "permutation": None if sp is None else [i + 1 for i in sp.sigma],
            "signs": None if sp is None else list(sp.signs),
        })
    return EXIT_OK, dumps(data)


def cmd_factor(args):
    phi = read_matrix(args.matrix, args.spec)
    h_star = read_matrix(args.h_star, args.spec) if args.h_star else None
    try:
        result = factor_isomorphism(phi, h_star)
    except NotAnAutomorphismError as exc:
        return EXIT_NEGATIVE, f"{exc}\n"
    return EXIT_OK, dumps(result.to_data())


def cmd_selfcheck(args):
    from .selfcheck import run_selfcheck

    results = run_selfcheck(args.spec, random.Random(args.seed), args.trials)
    lines = [f"{'PASS' if ok else 'FAIL'} {name}" for name, ok in results]
    return (EXIT_OK if all(ok for _, ok in results) else EXIT_NEGATIVE), "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rigidity",
        description="Arithmetic and graded automorphisms of H*(CP^n1 x ... x CP^nm).",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s 0.1.0 ({kernels.BACKEND} kernels)")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help):
        p = sub.add_parser(name, help=help)
        p.add_argument("--spec", type=_spec, required=True, help="truncation exponents, e.g. 1,2,3")
        p.add_argument("--out", help="write output to this file instead of stdout")
        p.set_defaults(func=func)
        return p

    p = add("ring-eval", cmd_ring_eval, "evaluate an expression in x1..xm")
    p.add_argument("expression")
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = add("nonvanishing", cmd_nonvanishing, "check y^n_i != 0 for y = sum a_j x_j")
    p.add_argument("--coeffs", type=_ints, required=True)

    p = add("check-endo", cmd_check_endo, "is a substitution matrix a well-defined endomorphism")
    p.add_argument("--matrix", required=True, help="matrix file, or - for stdin")

    for name, func, help in (
        ("classify", cmd_classify, "exhaustively verify automorphism <=> signed permutation"),
        ("enumerate", cmd_enumerate, "list all automorphisms with entries in [-bound, bound]"),
    ):
        p = add(name, func, help)
        p.add_argument("--bound", type=int, default=1)
        p.add_argument("--pruning", type=_onoff, default=name == "enumerate", metavar="on|off")
        p.add_argument("--ceiling", type=int, default=DEFAULT_CEILING)

    p = add("factor", cmd_factor, "factor phi through h_star and realize the result")
    p.add_argument("--matrix", required=True, help="phi, as a matrix file or - for stdin")
    p.add_argument("--h-star", help="matrix file of h_star (default: identity)")

    p = add("selfcheck", cmd_selfcheck, "randomized property checks")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=200)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        code, output = args.func(args)
    except SearchSpaceTooLargeError as exc:
        print(f"rigidity: search-space-too-large: {exc}", file=sys.stderr)
        return EXIT_REFUSED
    except (InputError, RigidityError) as exc:
        print(f"rigidity: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(output)
    else:
        sys.stdout.write(output)
    return code


if __name__ == "__main__":
    sys.exit(main())
