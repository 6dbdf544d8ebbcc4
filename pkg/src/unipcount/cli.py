"""Command-line front end: parse group and orbit inputs, dispatch to the
engine, and emit deterministic tables or JSON.

Exit codes: 0 on success, 1 on domain errors (size mismatch, unsupported
kind, failed verification), 2 on usage errors.
"""

import argparse
import json
import os
import sys

from .diagrams import all_diagrams, coset_signature, diagram_text, format_diagram, parse_orbit
from .errors import EngineError, UnsupportedGroupError
from .oracle import run_checks
from .symreps import character_table
from .unipotent import (
    COMPLEX_KINDS,
    HERMITIAN_KINDS,
    GroupKind,
    GroupSpec,
    OrbitSpec,
    cell_rep,
    count_record,
    enumeration_record,
    group_record,
    make_group,
    orbit_record,
)
from .weylmodules import coh_gl_complex, coh_sl_complex, coh_su, coh_u_cover

CACHE_ENV = "UNIPCOUNT_CACHE_DIR"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="unipcount",
        description="Count and enumerate special unipotent representations "
        "of type A real groups attached to a nilpotent orbit.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser, with_group: bool = True) -> None:
        if with_group:
            p.add_argument(
                "--group", required=True, choices=[k.value for k in GroupKind]
            )
            p.add_argument("--n", type=int)
            p.add_argument("--p", type=int)
            p.add_argument("--q", type=int)
            p.add_argument("--orbit", required=True, help="comma-separated row lengths, e.g. 3,1,1")
            p.add_argument("--orbit2", help="second orbit factor for the complex kinds (defaults to --orbit)")
        p.add_argument("--format", choices=("table", "json"), default="table")
        p.add_argument("--cache-dir")

    add_common(sub.add_parser("count", help="count the attached special unipotent representations"))
    add_common(sub.add_parser("enumerate", help="list the induced parameters (gl-r and sl-r)"))
    add_common(sub.add_parser("coh", help="coherent continuation decomposition at the orbit's coset"))
    add_common(sub.add_parser("cell", help="cell label tuple attached to the orbit"))

    chart = sub.add_parser("chartable", help="symmetric group character table")
    chart.add_argument("--n", type=int, required=True)
    add_common(chart, with_group=False)

    verify = sub.add_parser("verify", help="run the brute-force cross-validation sweeps")
    verify.add_argument("--max-size", type=int, default=8)
    add_common(verify, with_group=False)

    return parser


def _resolve_group(parser: argparse.ArgumentParser, args) -> GroupSpec:
    kind = GroupKind(args.group)
    if kind in HERMITIAN_KINDS:
        if args.p is None or args.q is None:
            parser.error(f"--group {kind.value} requires --p and --q")
        return make_group(kind, n=args.n, p=args.p, q=args.q)
    if args.p is not None or args.q is not None:
        parser.error(f"--group {kind.value} takes --n, not --p/--q")
    n = args.n if args.n is not None else sum(parse_orbit(args.orbit))
    return make_group(kind, n=n)


def _resolve_orbit(parser: argparse.ArgumentParser, args, kind: GroupKind) -> OrbitSpec:
    first = parse_orbit(args.orbit)
    if kind in COMPLEX_KINDS:
        second = parse_orbit(args.orbit2) if args.orbit2 else first
        return OrbitSpec(first, second)
    if args.orbit2:
        parser.error(f"--orbit2 is only meaningful for the complex kinds, not {kind.value}")
    return OrbitSpec(first)


def _emit(obj: dict) -> None:
    print(json.dumps(obj))


def _cmd_count(parser, args) -> int:
    group = _resolve_group(parser, args)
    orbit = _resolve_orbit(parser, args, group.kind)
    record = count_record(group, orbit)
    if args.format == "json":
        _emit(record)
    else:
        print(record["count"])
    return 0


def _cmd_enumerate(parser, args) -> int:
    group = _resolve_group(parser, args)
    orbit = _resolve_orbit(parser, args, group.kind)
    record = enumeration_record(group, orbit)
    if args.format == "json":
        _emit(record)
        return 0
    for row in record["params"]:
        sizes = format_diagram(tuple(size for size, _ in row["blocks"]))
        tags = ",".join(tag for _, tag in row["blocks"])
        line = f"{row['index']}  {sizes}  {tags}"
        if row.get("sign"):
            line += f"  {row['sign']}"
        print(line)
    return 0


def _coherent_module(group: GroupSpec, orbit: OrbitSpec):
    sig = coset_signature(orbit.first)
    if group.kind is GroupKind.SU:
        return coh_su(group.p, group.q, sig)
    if group.kind is GroupKind.U_COVER:
        return coh_u_cover(group.p, group.q, sig)
    if group.kind is GroupKind.GL_C:
        return coh_gl_complex(sig)
    if group.kind is GroupKind.SL_C:
        return coh_sl_complex(sig)
    raise UnsupportedGroupError(
        f"no coherent continuation decomposition for kind {group.kind.value}"
    )


def _cmd_coh(parser, args) -> int:
    group = _resolve_group(parser, args)
    orbit = _resolve_orbit(parser, args, group.kind)
    module = _coherent_module(group, orbit)
    if args.format == "json":
        record = {
            "group": group_record(group),
            "orbit": orbit_record(orbit),
            **module.to_json_obj(),
        }
        if module.parts:
            record["parts"] = {
                name: module.parts[name].to_json_obj()
                for name in sorted(module.parts)
            }
        _emit(record)
        return 0
    print("shape: " + ",".join(str(s) for s in module.shape))
    for key, m in module.entries():
        print(f"{m}  " + " ".join(format_diagram(d) for d in key))
    return 0


def _cmd_cell(parser, args) -> int:
    group = _resolve_group(parser, args)
    orbit = _resolve_orbit(parser, args, group.kind)
    cell = cell_rep(group.kind, orbit)
    if args.format == "json":
        _emit(
            {
                "group": group_record(group),
                "orbit": orbit_record(orbit),
                "cell": [list(d) for d in cell],
            }
        )
    else:
        print(" ".join(format_diagram(d) for d in cell))
    return 0


def _cmd_chartable(parser, args) -> int:
    cache_dir = args.cache_dir or os.environ.get(CACHE_ENV)
    table = character_table(args.n, cache_dir=cache_dir)
    classes = all_diagrams(args.n)
    if args.format == "json":
        _emit(
            {
                "degree": args.n,
                "classes": [list(mu) for mu in classes],
                "table": {
                    diagram_text(lam): [table[lam][mu] for mu in classes]
                    for lam in classes
                },
            }
        )
        return 0
    names = [diagram_text(mu) or "-" for mu in classes]
    width = max(
        [len(name) for name in names]
        + [len(str(table[lam][mu])) for lam in classes for mu in classes]
    )
    print("  ".join(["label".ljust(width)] + [name.rjust(width) for name in names]))
    for lam in classes:
        row = [str(table[lam][mu]).rjust(width) for mu in classes]
        print("  ".join([(diagram_text(lam) or "-").ljust(width)] + row))
    return 0


def _cmd_verify(parser, args) -> int:
    cache_dir = args.cache_dir or os.environ.get(CACHE_ENV)
    if cache_dir:
        for n in range(1, min(args.max_size, 8) + 1):
            character_table(n, cache_dir=cache_dir)
    checks = run_checks(args.max_size)
    all_passed = all(c["pass"] for c in checks)
    if args.format == "json":
        _emit({"max_size": args.max_size, "checks": checks, "all_passed": all_passed})
        return 0 if all_passed else 1
    by_check: dict[str, list[dict]] = {}
    for c in checks:
        by_check.setdefault(c["check"], []).append(c)
    for name, group in by_check.items():
        failed = [c for c in group if not c["pass"]]
        if failed:
            for c in failed:
                print(
                    f"FAIL {name} {c['instance']}: expected {c['expected']}, got {c['actual']}"
                )
        else:
            print(f"ok {name}: {len(group)} instances")
    if all_passed:
        print("all checks passed")
        return 0
    print(f"{sum(1 for c in checks if not c['pass'])} checks failed")
    return 1


_COMMANDS = {
    "count": _cmd_count,
    "enumerate": _cmd_enumerate,
    "coh": _cmd_coh,
    "cell": _cmd_cell,
    "chartable": _cmd_chartable,
    "verify": _cmd_verify,
}


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](parser, args)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    except EngineError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
