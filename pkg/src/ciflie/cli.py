"""Command-line surface: validate, check, compute, verify.

Exit codes: 0 success/pass, 1 usage error, 2 load/validation error,
3 property/check failure.  Results go to stdout (or --out), diagnostics
to stderr.  Set COLOR=0 to disable ANSI in text reports.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from . import __version__
from .bracket import bracket_product, bracket_product_oracle
from .cifset import (
    CIFSet,
    cif_sum,
    first_difference,
    image,
    intersection,
    is_cif_ideal,
    is_cif_subspace,
    is_direct_sum,
    is_homogeneous,
    is_z2_graded,
    pair_homogeneous,
    preimage,
    scalar_action,
)
from .generators import make_config
from .jsonio import cifset_rows, emit_json, input_digest, rat_str, report_payload
from .specfile import SpecError, Workspace, parse_spec
from .superalgebra import validate_map, validate_superalgebra
from .theorems import ANTI_IDEAL_STUB, CATALOG, check_theorem, negative_controls

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_LOAD = 2
EXIT_CHECK = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # exit 1, not argparse's 2
        raise UsageError(message)


def _color_enabled() -> bool:
    if os.environ.get("COLOR") == "0":
        return False
    return sys.stdout.isatty()


def _verdict(passed: bool) -> str:
    word = "PASS" if passed else "FAIL"
    if _color_enabled():
        code = "32" if passed else "31"
        return f"\x1b[{code}m{word}\x1b[0m"
    return word


def build_parser() -> _Parser:
    parser = _Parser(prog="ciflie", description=__doc__)
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_validate = sub.add_parser("validate", help="load a file and check all axioms")
    p_validate.add_argument("file")

    p_check = sub.add_parser("check", help="run a structural predicate")
    p_check.add_argument(
        "predicate",
        choices=["subspace", "ideal", "graded", "homogeneous", "direct-sum", "anti-hom"],
    )
    p_check.add_argument("file")
    p_check.add_argument("--name", required=True)
    p_check.add_argument("--with", dest="with_name")

    p_compute = sub.add_parser("compute", help="evaluate a set-level operation")
    p_compute.add_argument(
        "operation",
        choices=["sum", "scalar", "bracket", "image", "preimage", "intersection"],
    )
    p_compute.add_argument("file")
    p_compute.add_argument("--left", required=True)
    p_compute.add_argument("--right")
    p_compute.add_argument("--alpha", type=int)
    p_compute.add_argument("--map", dest="map_name")
    p_compute.add_argument("--oracle", action="store_true")
    p_compute.add_argument("--format", choices=["text", "json"], default="text")
    p_compute.add_argument("--out")

    p_verify = sub.add_parser("verify", help="run a theorem-suite entry")
    p_verify.add_argument("theorem")
    p_verify.add_argument("file")
    p_verify.add_argument("--trials", type=int, default=50)
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--format", choices=["text", "json"], default="text")
    p_verify.add_argument("--out")

    return parser


def _load(path: str) -> tuple[Workspace, bytes]:
    try:
        data = Path(path).read_bytes()
    except OSError as exc:
        raise SpecError(0, f"cannot read '{path}': {exc}") from None
    text = data.decode("utf-8", errors="replace")
    return parse_spec(text), data


def _validate_workspace(ws: Workspace) -> list[str]:
    problems = []
    for name, alg in ws.algebras.items():
        rep = validate_superalgebra(alg)
        if not rep.ok:
            for failure in rep.failures:
                problems.append(f"space {name}: {failure}")
    for name, decl in ws.maps.items():
        rep = validate_map(decl.map)
        if not rep.ok:
            for failure in rep.failures:
                problems.append(f"map {name}: {failure}")
    return problems


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _cifset_text(A: CIFSet, notes: tuple[str, ...]) -> str:
    lines = ["# vector | mem r w | non r w"]
    for note in notes:
        lines.append(f"# note: {note}")
    for v in sorted(A.table):
        d = A.table[v]
        coords = " ".join(str(c) for c in v)
        lines.append(
            f"{coords} | {rat_str(d.mem.r)} {rat_str(d.mem.w)}"
            f" | {rat_str(d.non.r)} {rat_str(d.non.w)}"
        )
    return "\n".join(lines) + "\n"


def _cmd_validate(args) -> int:
    ws, _ = _load(args.file)
    problems = _validate_workspace(ws)
    for name in sorted(ws.algebras):
        ok = not any(p.startswith(f"space {name}:") for p in problems)
        print(f"space {name}: {'valid' if ok else 'INVALID'}")
    for name, decl in sorted(ws.maps.items()):
        rep = validate_map(decl.map)
        surj = "surjective" if rep.surjective else "not surjective"
        print(f"map {name}: {'valid' if rep.ok else 'INVALID'} ({surj})")
    for name in sorted(ws.sets):
        print(f"cifset {name}: loaded on {ws.sets[name].space}")
    if problems:
        for p in problems:
            print(p, file=sys.stderr)
        return EXIT_LOAD
    return EXIT_OK


def _require_set(ws: Workspace, name: str) -> CIFSet:
    if name not in ws.sets:
        raise SpecError(0, f"unknown cifset '{name}'")
    return ws.sets[name].cifset


def _require_map(ws: Workspace, name: str | None):
    if name is None:
        raise UsageError("this operation needs --map")
    if name not in ws.maps:
        raise SpecError(0, f"unknown map '{name}'")
    return ws.maps[name].map


def _cmd_check(args) -> int:
    ws, _ = _load(args.file)
    problems = _validate_workspace(ws)
    if problems:
        for p in problems:
            print(p, file=sys.stderr)
        return EXIT_LOAD
    pred = args.predicate
    if pred == "anti-hom":
        if args.name not in ws.maps:
            raise SpecError(0, f"unknown map '{args.name}'")
        rep = validate_map(ws.maps[args.name].map)
        surj = "surjective" if rep.surjective else "not surjective"
        print(f"anti-hom {args.name}: {_verdict(rep.ok)} ({surj})")
        for failure in rep.failures:
            print(failure, file=sys.stderr)
        return EXIT_OK if rep.ok else EXIT_CHECK
    A = _require_set(ws, args.name)
    if pred in ("homogeneous", "direct-sum") and args.with_name:
        B = _require_set(ws, args.with_name)
    else:
        B = None
    if pred == "subspace":
        rep = is_cif_subspace(A)
    elif pred == "ideal":
        rep = is_cif_ideal(A)
    elif pred == "graded":
        rep = is_z2_graded(A)
    elif pred == "homogeneous":
        rep = pair_homogeneous(A, B) if B is not None else is_homogeneous(A)
    else:  # direct-sum
        if B is None:
            raise UsageError("direct-sum needs --with")
        ok = is_direct_sum(A, B)
        print(f"direct-sum {args.name},{args.with_name}: {_verdict(ok)}")
        return EXIT_OK if ok else EXIT_CHECK
    label = f"{pred} {args.name}" + (f",{args.with_name}" if B is not None else "")
    print(f"{label}: {_verdict(rep.ok)}")
    if not rep.ok:
        print(rep.witness, file=sys.stderr)
    return EXIT_OK if rep.ok else EXIT_CHECK


def _cmd_compute(args) -> int:
    ws, data = _load(args.file)
    problems = _validate_workspace(ws)
    if problems:
        for p in problems:
            print(p, file=sys.stderr)
        return EXIT_LOAD
    op = args.operation
    A = _require_set(ws, args.left)
    oracle_checked = False
    if op == "sum":
        if args.right is None:
            raise UsageError("sum needs --right")
        result = cif_sum(A, _require_set(ws, args.right))
    elif op == "intersection":
        if args.right is None:
            raise UsageError("intersection needs --right")
        result = intersection(A, _require_set(ws, args.right))
    elif op == "scalar":
        if args.alpha is None:
            raise UsageError("scalar needs --alpha")
        result = scalar_action(args.alpha, A)
    elif op == "bracket":
        if args.right is None:
            raise UsageError("bracket needs --right")
        B = _require_set(ws, args.right)
        result = bracket_product(A, B)
        if args.oracle:
            oracle_checked = True
            other = bracket_product_oracle(A, B)
            diff = first_difference(result, other)
            if diff is not None:
                print(
                    f"oracle mismatch at vector {diff}: ladder and fixpoint disagree",
                    file=sys.stderr,
                )
                return EXIT_CHECK
    elif op == "image":
        result = image(_require_map(ws, args.map_name), A)
    else:  # preimage
        result = preimage(_require_map(ws, args.map_name), A)

    if args.format == "json":
        arg_block = {"left": args.left}
        if args.right is not None:
            arg_block["right"] = args.right
        if args.alpha is not None:
            arg_block["alpha"] = args.alpha
        if args.map_name is not None:
            arg_block["map"] = args.map_name
        payload = {
            "tool": "ciflie",
            "version": __version__,
            "input_digest": input_digest(data),
            "operation": op,
            "args": arg_block,
            "oracle_checked": oracle_checked,
            "notes": list(result.notes),
            "result": cifset_rows(result),
        }
        _emit(emit_json(payload), args.out)
    else:
        _emit(_cifset_text(result, result.notes), args.out)
    return EXIT_OK


def _cmd_verify(args) -> int:
    ws, data = _load(args.file)
    problems = _validate_workspace(ws)
    if problems:
        for p in problems:
            print(p, file=sys.stderr)
        return EXIT_LOAD
    theorem = args.theorem
    known = set(CATALOG) | {"neg-controls", ANTI_IDEAL_STUB}
    if theorem not in known:
        raise UsageError(
            f"unknown theorem id '{theorem}'; known: {', '.join(sorted(known))}"
        )
    runs = []
    all_passed = True
    for name in sorted(ws.algebras):
        cfg = make_config(args.seed, ws.algebras[name])
        if theorem == "neg-controls":
            report = negative_controls(cfg, trials=args.trials)
        else:
            report = check_theorem(theorem, cfg, args.trials)
        all_passed = all_passed and report.passed
        runs.append((name, report))
    if args.format == "json":
        payload = {
            "tool": "ciflie",
            "version": __version__,
            "input_digest": input_digest(data),
            "theorem": theorem,
            "seed": args.seed,
            "trials": args.trials,
            "runs": [
                {"space": name, **report_payload(report)} for name, report in runs
            ],
            "passed": all_passed,
        }
        _emit(emit_json(payload), args.out)
    else:
        lines = []
        for name, report in runs:
            lines.append(
                f"{theorem} on {name}: {_verdict(report.passed)} "
                f"({report.trials} trials, {len(report.failures)} failures)"
            )
            if report.note:
                lines.append(f"  note: {report.note}")
            for failure in report.failures[:5]:
                lines.append(f"  seed {failure.seed}: {failure.witness}")
        _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK if all_passed else EXIT_CHECK


def run_cli(argv: list[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        if args.command == "validate":
            return _cmd_validate(args)
        if args.command == "check":
            return _cmd_check(args)
        if args.command == "compute":
            return _cmd_compute(args)
        return _cmd_verify(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SpecError as exc:
        print(f"load error: {exc}", file=sys.stderr)
        return EXIT_LOAD
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_LOAD


def main() -> None:
    sys.exit(run_cli(sys.argv[1:]))


if __name__ == "__main__":
    main()
