"""Command-line front end.

Exit codes: 0 ok, 1 verification mismatch, 2 parse error, 3 insufficient
precision, 4 degenerate cone, 5 cone not strictly convex, 6 I/O error.
"""

from __future__ import annotations

import argparse
import sys

from . import io
from .contfrac import DEFAULT_MAX_TERMS, cf_expand, normalize_even, second_convergents
from .cones import Sector
from .errors import DegenerateCone, InsufficientPrecision, NotStrictlyConvex, SpecError
from .exact import parse_number
from .lattice import ORIGIN
from .normalize import atoms_of_cone, classify_and_normalize, monoid_properties
from .oracle import is_unit, oracle_atoms_in_box, oracle_split
from .special import FAMILY_ALIASES, SpecialMonoidSpec, enumerate_atoms

EXIT_OK, EXIT_MISMATCH, EXIT_PARSE, EXIT_PRECISION, EXIT_DEGENERATE, EXIT_NOT_CONVEX, EXIT_IO = range(7)


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be at least 1, got {v}")
    return v


def _out(text: str):
    sys.stdout.write(text)


def _maybe_plot(args, cone, atoms, title):
    if getattr(args, "plot", None):
        from .plotting import cone_figure, save_svg

        save_svg(cone_figure(cone, args.bound, atoms, title), args.plot)


def cmd_cf(args) -> int:
    x = parse_number(args.value)
    cf = cf_expand(x, max(args.terms, DEFAULT_MAX_TERMS))
    if args.even and cf.is_finite:
        cf = normalize_even(cf)
    quotients = cf.terms(args.terms)
    k = len(quotients)
    table = cf.table
    doc: dict = {"partial_quotients": quotients, "kind": cf.kind}
    if cf.period:
        doc["periodic"] = {"head": list(cf.head), "period": list(cf.period)}
    doc["convergents"] = [list(table.entry(n)) for n in range(k)]
    seconds = {}
    for n in range(-2, k - 2, 2):
        if n == -2 and cf.term(0) < 0:
            continue
        seconds[str(n)] = [list(pq) for pq in second_convergents(table, n)]
    doc["second_convergents"] = seconds
    _out(io.dump_json(doc))
    return EXIT_OK


def cmd_atoms(args) -> int:
    if args.family not in FAMILY_ALIASES:
        raise SpecError(f"--family: expected one of M, Mo, Mgt0, Mogt0, got {args.family!r}")
    spec = SpecialMonoidSpec(FAMILY_ALIASES[args.family], parse_number(args.alpha))
    rep = enumerate_atoms(spec, args.bound)
    if args.format == "csv":
        _out(io.report_to_csv(rep))
    else:
        _out(io.dump_json(io.report_to_json(rep)))
    if args.plot:
        from .cones import special_cone

        _maybe_plot(args, special_cone(spec), rep.atoms, str(spec))
    return EXIT_OK


def cmd_cone(args) -> int:
    cone = io.load_cone_spec(args.spec)
    show_all = not (args.classify or args.properties or args.atoms)
    doc: dict = {}
    if args.classify or show_all:
        doc["classification"] = io.classification_to_json(classify_and_normalize(cone))
    if args.properties or show_all:
        doc["properties"] = io.properties_to_json(monoid_properties(cone))
    rep = None
    if args.atoms or show_all or args.plot:
        rep = atoms_of_cone(cone, args.bound)
    if args.atoms or show_all:
        rdoc = io.report_to_json(rep)
        doc["atoms"] = rdoc.pop("atoms")
        doc.update(rdoc)
    _out(io.dump_json(doc))
    if rep is not None:
        _maybe_plot(args, cone, rep.atoms, "")
    return EXIT_OK


def _fmt(points) -> str:
    return "[" + ", ".join(f"({p[0]},{p[1]})" for p in sorted(points, key=lambda p: (p[1], p[0]))) + "]"


def _verify_split_only(cone, bound: int, theorem) -> int:
    """Non-strictly-convex cones whose theorem atom set in the box is empty.

    Atomhood cannot be decided by a finite scan there, but the absence of
    atoms can: every nonzero box element is either a unit or splits into two
    non-units, and such a split is a finite certificate.
    """
    if theorem.atoms:
        raise NotStrictlyConvex(
            "the cone is not strictly convex; its atoms cannot be certified by a finite scan"
        )
    radius = 8 * bound
    failed = []
    checked = 0
    for x in range(-bound, bound + 1):
        for y in range(-bound, bound + 1):
            h = (x, y)
            if h == ORIGIN or not cone.contains(h) or is_unit(cone, h):
                continue
            checked += 1
            if oracle_split(cone, h, radius) is None:
                failed.append(h)
    if failed:
        _out(f"theorem: {_fmt(())}\n")
        _out(f"unsplit elements (possible atoms): {_fmt(failed)}\n")
        return EXIT_MISMATCH
    _out(f"agree: 0 atoms in box {bound}; {checked} non-unit elements split\n")
    return EXIT_OK


def cmd_verify(args) -> int:
    cone = io.load_cone_spec(args.spec)
    case = classify_and_normalize(cone).case
    theorem = atoms_of_cone(cone, args.bound)
    if not isinstance(cone, Sector):
        return _verify_split_only(cone, args.bound, theorem)
    oracle = oracle_atoms_in_box(cone, args.bound)
    t, o = theorem.atom_set(), oracle.atom_set()
    if t == o:
        _out(f"agree: {len(t)} atoms in box {args.bound} (case {case})\n")
        return EXIT_OK
    _out(f"theorem: {_fmt(t)}\n")
    _out(f"oracle: {_fmt(o)}\n")
    _out(f"theorem only: {_fmt(t - o)}\n")
    _out(f"oracle only: {_fmt(o - t)}\n")
    return EXIT_MISMATCH


def cmd_oracle(args) -> int:
    cone = io.load_cone_spec(args.spec)
    rep = oracle_atoms_in_box(cone, args.bound)
    _out(io.dump_json({"atoms": io.points_to_json(rep.atoms), "bound": rep.bound}))
    return EXIT_OK


def cmd_plot(args) -> int:
    from .plotting import cone_figure, save_svg

    cone = io.load_cone_spec(args.spec)
    rep = atoms_of_cone(cone, args.bound)
    save_svg(cone_figure(cone, args.bound, rep.atoms), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="rcmonoid", description="Atoms of root-closed monoids in Z^2.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("cf", help="continued fraction, convergents, second convergents")
    s.add_argument("--value", required=True)
    s.add_argument("--terms", type=_positive, required=True)
    s.add_argument("--even", action="store_true", help="even-normalize a finite expansion")
    s.set_defaults(func=cmd_cf)

    s = sub.add_parser("atoms", help="atoms of a special monoid M, Mo, Mgt0 or Mogt0")
    s.add_argument("--family", required=True)
    s.add_argument("--alpha", required=True)
    s.add_argument("--bound", type=_positive, required=True)
    s.add_argument("--format", choices=("json", "csv"), default="json")
    s.add_argument("--plot", metavar="PATH.svg")
    s.set_defaults(func=cmd_atoms)

    s = sub.add_parser("cone", help="classify a cone file, list properties and atoms")
    s.add_argument("--spec", required=True)
    s.add_argument("--bound", type=_positive, required=True)
    s.add_argument("--classify", action="store_true")
    s.add_argument("--properties", action="store_true")
    s.add_argument("--atoms", action="store_true")
    s.add_argument("--plot", metavar="PATH.svg")
    s.set_defaults(func=cmd_cone)

    s = sub.add_parser("verify", help="compare theorem atoms with the brute-force oracle")
    s.add_argument("--spec", required=True)
    s.add_argument("--bound", type=_positive, required=True)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("oracle", help="brute-force atoms of a strictly convex cone")
    s.add_argument("--spec", required=True)
    s.add_argument("--bound", type=_positive, required=True)
    s.set_defaults(func=cmd_oracle)

    s = sub.add_parser("plot", help="write an SVG picture of a cone and its atoms")
    s.add_argument("--spec", required=True)
    s.add_argument("--bound", type=_positive, required=True)
    s.add_argument("--out", required=True)
    s.set_defaults(func=cmd_plot)
    return p


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        # usage errors (exit 2) and --help (exit 0) come back as return values
        return e.code if isinstance(e.code, int) else EXIT_PARSE
    try:
        return args.func(args)
    except SpecError as e:
        code, msg = EXIT_PARSE, f"parse error: {e}"
    except InsufficientPrecision as e:
        code, msg = EXIT_PRECISION, f"insufficient precision: {e}"
    except DegenerateCone as e:
        code, msg = EXIT_DEGENERATE, f"degenerate cone: {e}"
    except NotStrictlyConvex as e:
        code, msg = EXIT_NOT_CONVEX, f"not strictly convex: {e}"
    except OSError as e:
        code, msg = EXIT_IO, f"I/O error: {e}"
    except ValueError as e:
        code, msg = EXIT_PARSE, f"invalid input: {e}"
    print(msg, file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
