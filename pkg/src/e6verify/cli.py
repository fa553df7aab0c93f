"""Command-line entry point: ``e6verify <command> ...``.

Exit codes are 0 when every reported check passes, 1 when a verification
fails and 2 for unusable input.  With ``--json`` the output is a single
JSON document whose key order is fixed by the code, so repeated runs are
byte-identical.
"""
from __future__ import annotations

import argparse
import json
import sys
import warnings
from fractions import Fraction
from pathlib import Path
from typing import Any, Sequence

from . import __version__
from .errors import E6VerifyError
from .lattice import Root, line_labels, parse_roots
from .presets import ROOT_PRESETS, preset_points, preset_roots

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_INPUT = 2


class InputError(Exception):
    """Bad command-line input detected after argument parsing."""


# ------------------------------------------------------------- helpers


def read_text(arg: str) -> str:
    """``-`` reads stdin; an existing file is read; anything else is literal text."""
    if arg == "-":
        return sys.stdin.read()
    p = Path(arg)
    if p.is_file():
        return p.read_text()
    return arg


def read_roots(arg: str) -> list[Root]:
    roots = parse_roots(read_text(arg))
    if not roots:
        raise InputError("no roots given")
    return roots


def read_points(arg: str) -> list[Fraction]:
    text = read_text(arg)
    try:
        return [Fraction(t.strip()) for t in text.replace("\n", ",").split(",") if t.strip()]
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"bad point list: {exc}") from None


def _roots_or_preset(args: argparse.Namespace, default: str) -> list[Root]:
    if getattr(args, "roots", None):
        return read_roots(args.roots)
    return preset_roots(args.preset or default)


def _text(obj: Any, indent: int = 0) -> list[str]:
    pad = "  " * indent
    if isinstance(obj, dict):
        lines = []
        for k, v in obj.items():
            if isinstance(v, (dict, list)) and v and not _flat(v):
                lines.append(f"{pad}{k}:")
                lines += _text(v, indent + 1)
            else:
                lines.append(f"{pad}{k}: {_inline(v)}")
        return lines
    if isinstance(obj, list):
        lines = []
        for v in obj:
            if isinstance(v, (dict, list)) and not _flat(v):
                lines.append(f"{pad}-")
                lines += _text(v, indent + 1)
            else:
                lines.append(f"{pad}- {_inline(v)}")
        return lines
    return [pad + _inline(obj)]


def _flat(v: Any) -> bool:
    return isinstance(v, list) and all(not isinstance(x, (dict, list)) for x in v)


def _inline(v: Any) -> str:
    if isinstance(v, list):
        return "[" + ", ".join(_inline(x) for x in v) + "]"
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return "none"
    return str(v)


def emit(args: argparse.Namespace, payload: Any, text: str | None = None) -> None:
    if args.json:
        out = json.dumps(payload, indent=2, ensure_ascii=False) + "\n"
    else:
        out = text if text is not None else "\n".join(_text(payload)) + "\n"
    if args.out:
        Path(args.out).write_text(out)
    else:
        sys.stdout.write(out)


# ------------------------------------------------------------ commands


def cmd_weyl(args: argparse.Namespace) -> int:
    from .verification import check_table1
    from .weyl import conjugacy_classes

    if args.action == "classes":
        table = conjugacy_classes(args.fast)
        payload = {
            "order": sum(c.size for c in table),
            "classes": [c.as_dict() for c in table],
            "notes": [{"class": n.name, "note": n.message} for n in table.notes],
        }
        emit(args, payload)
        return EXIT_OK
    res = check_table1(args.fast)
    emit(args, res.to_json())
    return EXIT_OK if res.passed else EXIT_FAIL


def cmd_incidence(args: argparse.Namespace) -> int:
    from .incidence import build_incidence
    from .verification import check_incidence

    if args.action == "dump":
        D = build_incidence()
        payload = {"labels": list(line_labels()), "matrix": D.rows}
        emit(args, payload, text=D.to_csv())
        return EXIT_OK
    res = check_incidence()
    emit(args, res.to_json())
    return EXIT_OK if res.passed else EXIT_FAIL


def cmd_monodromy(args: argparse.Namespace) -> int:
    from .degeneration import build_tree, load_tree, monodromy

    roots = _roots_or_preset(args, "thm-dominance")
    if args.tree and Path(args.tree).is_file():
        tree = load_tree(args.tree)
    else:
        tree = build_tree(args.tree or "cherries")
    if args.base:
        tree = tree.with_base(args.base)
    res = monodromy(roots, tree)
    payload = res.to_json()
    text = (
        f"roots: {' '.join(r.token for r in res.roots)}\n"
        f"tree: {tree.shape}\n"
        f"divisible by 6: {'yes' if res.divisible_by_6 else 'no'}\n"
        f"determinant: {res.determinant}\n"
        f"certificate: {payload['certificate']}\n"
    )
    emit(args, payload, text)
    return EXIT_OK if res.dominant else EXIT_FAIL


def cmd_boundary(args: argparse.Namespace) -> int:
    from . import boundary as bd
    from .verification import check_table2, check_table3, check_toric_ranks
    from .weyl import word

    if args.action == "orbits":
        roots = read_roots(args.roots)
        P = bd.orbits(roots)
        labels = line_labels()
        payload = {
            "roots": [r.token for r in roots],
            "type": bd.sublattice_type(roots).dynkin if roots else "0",
            "degrees": list(P.degrees),
            "orbits": [sorted(s, key=labels.index) for s in P.label_sets],
        }
        emit(args, payload)
        return EXIT_OK
    if args.action == "toric-rank":
        L = read_roots(args.roots)
        comp = read_roots(args.complement)[0] if args.complement else None
        u = word(read_roots(args.u)) if args.u else None
        cfg = bd.boundary_configuration(L, comp, u)
        payload = {
            "lattice": cfg.lattice,
            "complement": cfg.complement.token,
            "u": cfg.u.cycle_notation(),
            "toric_rank": cfg.toric_rank(),
        }
        emit(args, payload)
        return EXIT_OK
    check = {"table2": lambda: check_table2(args.fast), "table3": check_table3,
             "e-l": check_toric_ranks}[args.action]
    res = check()
    emit(args, res.to_json())
    return EXIT_OK if res.passed else EXIT_FAIL


def cmd_sections(args: argparse.Namespace) -> int:
    from .sections import MODES, build_curve, petri_check

    roots = _roots_or_preset(args, "thm-2k5")
    points = read_points(args.points) if args.points else preset_points(args.preset or "thm-2k5")
    curve = build_curve(roots, points)
    if args.mode == "petri":
        res = petri_check(curve)
        payload = {"curve": curve.to_json(), **res.to_json()}
        emit(args, payload)
        return EXIT_OK if res.ok else EXIT_FAIL
    with warnings.catch_warnings(record=True):
        warnings.simplefilter("always")
        space = MODES[args.mode](curve)
    payload = {"curve": curve.to_json(), **space.to_json(with_basis=args.basis)}
    emit(args, payload)
    return EXIT_OK


def cmd_divisors(args: argparse.Namespace) -> int:
    from .divisors import evaluate
    from .verification import check_divisors

    if args.action == "eval":
        if not args.expr:
            raise InputError("divisors eval needs --expr")
        cls = evaluate(read_text(args.expr))
        emit(args, {"class": cls.to_json(), "text": str(cls)}, text=str(cls) + "\n")
        return EXIT_OK
    res = check_divisors()
    if not args.json:
        lines = [f"{i['status']}  {i['identity']}" for i in res.data["identities"]]
        emit(args, None, text="\n".join(lines) + "\n")
    else:
        emit(args, res.to_json())
    return EXIT_OK if res.passed else EXIT_FAIL


def cmd_verify_paper(args: argparse.Namespace) -> int:
    from .verification import ledger_json, run_all

    results = run_all(args.fast)
    payload = ledger_json(results, timings=args.timings)
    lines = []
    for r in results:
        t = f" ({r.seconds:.2f} s)" if args.timings else ""
        lines.append(f"[{r.status}] {r.criterion:2d} {r.name}{t}")
        lines += [f"       {f}" for f in r.findings]
    lines.append(f"{payload['passed']} passed, {payload['failed']} failed")
    emit(args, payload, text="\n".join(lines) + "\n")
    return EXIT_OK if not payload["failures"] else EXIT_FAIL


# -------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON")
    common.add_argument("--out", metavar="PATH", help="write output to a file")

    roots_help = "root tokens, a file of tokens, or - for stdin"
    p = argparse.ArgumentParser(prog="e6verify", description="Exact computations for E6-covers.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    w = sub.add_parser("weyl", parents=[common], help="W(E6) classes and reflection products")
    w.add_argument("action", choices=["classes", "table1"])
    w.add_argument("--fast", action="store_true", help="skip the full enumeration")
    w.set_defaults(func=cmd_weyl)

    i = sub.add_parser("incidence", parents=[common], help="the incidence correspondence on lines")
    i.add_argument("action", choices=["dump", "check"])
    i.set_defaults(func=cmd_incidence)

    m = sub.add_parser("monodromy", parents=[common], help="monodromy forms and their determinant")
    m.add_argument("--preset", choices=sorted(ROOT_PRESETS))
    m.add_argument("--roots", help=roots_help)
    m.add_argument("--tree", help="tree shape name or JSON file")
    m.add_argument("--base", help="base vertex for edge functionals")
    m.set_defaults(func=cmd_monodromy)

    b = sub.add_parser("boundary", parents=[common], help="orbits, toric ranks and boundary tables")
    b.add_argument("action", choices=["orbits", "toric-rank", "table2", "table3", "e-l"])
    b.add_argument("--roots", help=roots_help)
    b.add_argument("--complement", help="the extra reflection root")
    b.add_argument("--u", help="gluing element as a word in reflection roots")
    b.add_argument("--fast", action="store_true")
    b.set_defaults(func=cmd_boundary)

    s = sub.add_parser("sections", parents=[common], help="sections on the nodal cover")
    s.add_argument("--preset", choices=sorted(ROOT_PRESETS))
    s.add_argument("--roots", help=roots_help)
    s.add_argument("--points", help="comma separated rationals, or a file")
    s.add_argument("--mode", choices=["omega", "omega2", "2k5l", "L", "petri"], default="omega")
    s.add_argument("--basis", action="store_true", help="include a basis of the space")
    s.set_defaults(func=cmd_sections)

    d = sub.add_parser("divisors", parents=[common], help="divisor class identities")
    d.add_argument("action", choices=["verify", "eval"])
    d.add_argument("--expr", help="class expression, or a file containing one")
    d.set_defaults(func=cmd_divisors)

    v = sub.add_parser("verify-paper", parents=[common], help="run every acceptance check")
    v.add_argument("--fast", action="store_true", help="class lookup instead of full enumeration")
    v.add_argument("--timings", action="store_true", help="report wall-clock times")
    v.set_defaults(func=cmd_verify_paper)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "boundary" and args.action in ("orbits", "toric-rank") and not args.roots:
        parser.error(f"boundary {args.action} needs --roots")
    try:
        return args.func(args)
    except (E6VerifyError, InputError, KeyError, ValueError, OSError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"e6verify: error: {msg}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
