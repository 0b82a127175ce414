"""Command-line front end: build codes, inspect them, list logicals, run
merges and measurements, compute distances, emit benchmark reports.

Exit codes: 0 ok, 2 parse/spec error, 3 no monic span, 4 not irreducible,
5 overlapping logicals, 6 no logicals. QSURG_SEED sets the default seed.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import codefile, families
from .css import k_of, stats_of
from .distance import DEFAULT_TRIALS, distance_exact, distance_upper_random
from .errors import (
    CapExceeded,
    InvalidSpec,
    NoLogicals,
    NoSpan,
    NotALogical,
    NotIrreducible,
    Overlap,
    ParseError,
    QsurgError,
    ShapeError,
)
from .logicals import logical_basis
from .surgery import external_merge, internal_merge, single_qubit_measure

EXIT_PARSE = 2
EXIT_NO_SPAN = 3
EXIT_NOT_IRREDUCIBLE = 4
EXIT_OVERLAP = 5
EXIT_NO_LOGICALS = 6


def _default_seed() -> int:
    return int(os.environ.get("QSURG_SEED", "0"))


def _build_params(args) -> dict:
    params = {}
    for key in ("n", "d", "l", "m", "L", "a", "b", "A", "B"):
        value = getattr(args, key, None)
        if value is not None:
            params[key] = value
    return params


def cmd_build(args) -> int:
    family = args.family
    params = _build_params(args)
    if family == "toric":
        if "a" in params:
            params["a"] = int(params["a"])
        if "b" in params:
            params["b"] = int(params["b"])
    code = families.build(families.FamilySpec(family, params))
    codefile.save_code(code, args.out)
    stats = stats_of(code)
    print(f"wrote {args.out}: n={stats.n} k={stats.k} mz={code.mz} mx={code.mx}")
    return 0


def cmd_info(args) -> int:
    code = codefile.load_code(args.code)
    kwargs = {}
    if args.distance == "random":
        kwargs = {"method": "random_is", "trials": args.trials, "seed": args.seed}
    elif args.distance == "exact":
        kwargs = {"max_weight": args.max_weight}
    stats = stats_of(code, with_distance=args.distance is not None, **kwargs)
    line = (
        f"n={stats.n} k={stats.k} mz={code.mz} mx={code.mx} "
        f"wz={stats.w_z} wx={stats.w_x} qz={stats.q_z} qx={stats.q_x} omega={stats.omega}"
    )
    if stats.d_z is not None:
        line += f" dz={stats.d_z} dx={stats.d_x}"
    print(line)
    return 0


def cmd_logicals(args) -> int:
    code = codefile.load_code(args.code)
    basis = logical_basis(code)
    if not basis.z_reps:
        raise NoLogicals("code has k = 0")
    if args.basis in (None, "both"):
        for v in basis.z_reps:
            print("Z " + codefile.dumps_logical(v).strip())
        for v in basis.x_reps:
            print("X " + codefile.dumps_logical(v).strip())
    else:
        reps = basis.z_reps if args.basis == "Z" else basis.x_reps
        for v in reps:
            print(codefile.dumps_logical(v).strip())
    return 0


def _distance_line(code, basis, args) -> str:
    if args.random:
        rep = distance_upper_random(code, basis, trials=args.trials, seed=args.seed)
        return f"d_{basis}<={rep.value} (random_is trials={rep.trials} seed={rep.seed})"
    rep = distance_exact(code, basis, max_weight=args.max_weight)
    return f"d_{basis}={rep.value}"


def cmd_distance(args) -> int:
    code = codefile.load_code(args.code)
    bases = ["Z", "X"] if args.basis in (None, "both") else [args.basis]
    print(" ".join(_distance_line(code, b, args) for b in bases))
    return 0


def _merge_report(result, k_before, n_initial, distance_entries) -> str:
    merged = result.merged
    stats = stats_of(merged)
    n_ancilla = len(result.new_qubits)
    lines = [
        f"basis = {result.basis}",
        f"r = {result.depth}",
        f"n_initial = {n_initial}",
        f"n_ancilla = {n_ancilla}",
        f"n_total = {n_initial + n_ancilla}",
        f"omega = {stats.omega}",
        f"k_before = {k_before}",
        f"k_after = {stats.k}",
        f"old_logicals = {len(result.old_z_logicals)}",
        f"new_logicals = {len(result.new_z_logicals)}",
        "new_qubits = " + " ".join(str(q) for q in result.new_qubits),
        "new_z_checks = " + " ".join(str(q) for q in result.new_z_checks),
        "new_x_checks = " + " ".join(str(q) for q in result.new_x_checks),
    ]
    lines.extend(distance_entries)
    return "\n".join(lines) + "\n"


def _distance_entries(result, args):
    if not args.distance:
        return []
    merged = result.merged
    entries = []
    for basis in ("Z", "X"):
        if args.distance == "random":
            rep = distance_upper_random(merged, basis, trials=args.trials, seed=args.seed)
        else:
            rep = distance_exact(merged, basis, max_weight=args.max_weight)
        entries.append(f"d_{basis} = {rep.value}")
        entries.append(f"d_{basis}_method = {rep.method}")
        entries.append(f"d_{basis}_exact = {int(rep.exact)}")
        if rep.trials is not None:
            entries.append(f"d_{basis}_trials = {rep.trials}")
            entries.append(f"d_{basis}_seed = {rep.seed}")
    return entries


def _emit_report(text, path):
    if path:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_merge(args) -> int:
    if args.internal:
        if len(args.codes) != 1:
            raise ParseError("--internal takes exactly one code file")
        code = codefile.load_code(args.codes[0])
        u = codefile.load_logical(args.la, code.n)
        v = codefile.load_logical(args.lb, code.n)
        k_before = k_of(code)
        n_initial = code.n
        result = internal_merge(code, u, v, args.basis, args.depth)
    else:
        if len(args.codes) != 2:
            raise ParseError("external merge takes exactly two code files")
        code_a = codefile.load_code(args.codes[0])
        code_b = codefile.load_code(args.codes[1])
        u = codefile.load_logical(args.la, code_a.n)
        v = codefile.load_logical(args.lb, code_b.n)
        k_before = k_of(code_a) + k_of(code_b)
        n_initial = code_a.n + code_b.n
        result = external_merge(code_a, code_b, u, v, args.basis, args.depth)
    if args.out:
        codefile.save_code(result.merged, args.out)
    _emit_report(_merge_report(result, k_before, n_initial, _distance_entries(result, args)), args.report)
    return 0


def cmd_measure(args) -> int:
    code = codefile.load_code(args.code)
    u = codefile.load_logical(args.logical, code.n)
    result = single_qubit_measure(code, u, args.basis, args.depth)
    if args.out:
        codefile.save_code(result.merged, args.out)
    _emit_report(
        _merge_report(result, k_of(code), code.n, _distance_entries(result, args)), args.report
    )
    return 0


def _parse_depths(text):
    if ":" in text:
        lo, hi = text.split(":", 1)
        return list(range(int(lo), int(hi) + 1))
    return [int(text)]


def cmd_report(args) -> int:
    """Figures of merit (r, n_ancilla/n_initial, omega) across depths."""
    blocks = []
    for r in _parse_depths(args.depths):
        if args.measure:
            code = codefile.load_code(args.codes[0])
            u = codefile.load_logical(args.la, code.n)
            result = single_qubit_measure(code, u, args.basis, r)
            n_initial = code.n
        elif args.internal:
            code = codefile.load_code(args.codes[0])
            u = codefile.load_logical(args.la, code.n)
            v = codefile.load_logical(args.lb, code.n)
            result = internal_merge(code, u, v, args.basis, r)
            n_initial = code.n
        else:
            code_a = codefile.load_code(args.codes[0])
            code_b = codefile.load_code(args.codes[1])
            u = codefile.load_logical(args.la, code_a.n)
            v = codefile.load_logical(args.lb, code_b.n)
            result = external_merge(code_a, code_b, u, v, args.basis, r)
            n_initial = code_a.n + code_b.n
        stats = stats_of(result.merged)
        n_anc = len(result.new_qubits)
        entries = [
            f"r = {r}",
            f"n_ancilla = {n_anc}",
            f"ratio = {n_anc / n_initial:.4f}",
            f"omega = {stats.omega}",
            f"k_after = {stats.k}",
        ]
        entries.extend(_distance_entries(result, args))
        blocks.append("\n".join(entries))
    _emit_report("\n\n".join(blocks) + "\n", args.report)
    return 0


def _add_distance_opts(parser, default_none=True):
    parser.add_argument(
        "--distance", choices=["exact", "random"], default=None if default_none else "exact"
    )
    parser.add_argument("--trials", type=int, default=DEFAULT_TRIALS)
    parser.add_argument("--seed", type=int, default=_default_seed())
    parser.add_argument("--max-weight", type=int, default=None)


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qsurg", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="construct a family member and save it")
    p.add_argument("family", choices=families.FAMILIES)
    p.add_argument("out")
    p.add_argument("--n")
    p.add_argument("--d")
    p.add_argument("--l")
    p.add_argument("--m")
    p.add_argument("--L")
    p.add_argument("--a")
    p.add_argument("--b")
    p.add_argument("--A")
    p.add_argument("--B")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("info", help="print parameters and check weights")
    p.add_argument("code")
    _add_distance_opts(p)
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("logicals", help="print a logical operator basis")
    p.add_argument("code")
    p.add_argument("--basis", choices=["Z", "X", "both"], default=None)
    p.set_defaults(func=cmd_logicals)

    p = sub.add_parser("distance", help="compute or bound the code distance")
    p.add_argument("code")
    p.add_argument("--basis", choices=["Z", "X", "both"], default=None)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--exact", action="store_true", default=True)
    group.add_argument("--random", action="store_true")
    p.add_argument("--trials", type=int, default=DEFAULT_TRIALS)
    p.add_argument("--seed", type=int, default=_default_seed())
    p.add_argument("--max-weight", type=int, default=None)
    p.set_defaults(func=cmd_distance)

    p = sub.add_parser("merge", help="merge two logicals (external or --internal)")
    p.add_argument("codes", nargs="+")
    p.add_argument("--la", required=True, help="first logical vector file")
    p.add_argument("--lb", required=True, help="second logical vector file")
    p.add_argument("--basis", choices=["Z", "X"], default="Z")
    p.add_argument("-r", "--depth", type=int, default=1)
    p.add_argument("-o", "--out", default=None, help="merged code file")
    p.add_argument("--report", default=None, help="report file (default stdout)")
    p.add_argument("--internal", action="store_true")
    _add_distance_opts(p)
    p.set_defaults(func=cmd_merge)

    p = sub.add_parser("measure", help="single-qubit logical measurement patch")
    p.add_argument("code")
    p.add_argument("--logical", required=True)
    p.add_argument("--basis", choices=["Z", "X"], default="Z")
    p.add_argument("-r", "--depth", type=int, default=1)
    p.add_argument("-o", "--out", default=None)
    p.add_argument("--report", default=None)
    _add_distance_opts(p)
    p.set_defaults(func=cmd_measure)

    p = sub.add_parser("report", help="figures of merit across a depth range")
    p.add_argument("codes", nargs="+")
    p.add_argument("--la", required=True)
    p.add_argument("--lb", default=None)
    p.add_argument("--basis", choices=["Z", "X"], default="Z")
    p.add_argument("--depths", default="1:3", help="single depth or lo:hi range")
    p.add_argument("--internal", action="store_true")
    p.add_argument("--measure", action="store_true")
    p.add_argument("--report", default=None)
    _add_distance_opts(p)
    p.set_defaults(func=cmd_report)

    return parser


def main(argv=None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except NoSpan as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NO_SPAN
    except NotIrreducible as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NOT_IRREDUCIBLE
    except Overlap as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_OVERLAP
    except NoLogicals as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NO_LOGICALS
    except (ParseError, InvalidSpec, NotALogical, ShapeError, CapExceeded, QsurgError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
