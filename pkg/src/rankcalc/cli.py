"""Command-line surface with stable text and JSON output.

Commands:
    stanley <w>
    affine-stanley <window;n=N>
    rank-class <rankset> [--gr K,N]
    diagram-specht <diagram> [--family skew|perm:<w>|product|dual]
    schubert mult <lam> <mu> --gr K,N
    schubert degree <class-or-partition> [--gr K,N]
    verify paper|suite [--max-n N]

Exit codes: 0 success, 1 check failure, 2 parse error (including unknown
flags), 3 domain error.  --json switches any command to a single JSON
object on stdout (verify streams one JSON object per line).
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import ParseError, RankCalcError
from .diagrams import parse_diagram, specht_schur
from .grassmann import (
    class_degree,
    class_product,
    parse_class,
    phi,
    schubert_class,
)
from .partitions import parse_partition
from .perms import (
    affine_stanley,
    parse_permutation,
    parse_window,
    permutation_text,
    stanley,
    window_text,
)
from .rankset import parse_rank_set, w_of_rank_set
from .verify import replay_counterexample, run_all


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rankcalc",
        description="Exact combinatorics of Grassmannian rank varieties.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("stanley", help="Schur expansion of a Stanley symmetric function")
    p.add_argument("w", help="one-line permutation, e.g. 31524")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("affine-stanley", help="monomial expansion for an affine window")
    p.add_argument("window", help="window text, e.g. 5,2,7,4;n=4")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("rank-class", help="permutation, class, and degree of a rank set")
    p.add_argument("rankset", help="rank set text, e.g. [1,3],[3,6],[4,5];n=6")
    p.add_argument("--gr", help="override the Grassmannian context as K,N")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("diagram-specht", help="Schur expansion of a diagram module")
    p.add_argument("diagram", help="diagram text, e.g. (1,1),(2,2);box=4x4")
    p.add_argument("--family", help="skew | perm:<w> | product | dual")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("schubert", help="Schubert class arithmetic")
    schub_sub = p.add_subparsers(dest="schubert_command", required=True)
    pm = schub_sub.add_parser("mult", help="product of two Schubert classes")
    pm.add_argument("first", help="partition text, e.g. 1")
    pm.add_argument("second", help="partition text")
    pm.add_argument("--gr", required=True, help="Grassmannian context K,N")
    pm.add_argument("--json", action="store_true")
    pd = schub_sub.add_parser("degree", help="degree of a class")
    pd.add_argument("cls", help="class text (with @Gr(k,n)) or a partition")
    pd.add_argument("--gr", help="context K,N when a bare partition is given")
    pd.add_argument("--json", action="store_true")

    p = sub.add_parser("verify", help="run the verification checks")
    p.add_argument("scope", choices=["paper", "suite"])
    p.add_argument("--max-n", type=int, default=4)
    p.add_argument("--json", action="store_true")

    return parser


def _parse_gr(text: str) -> tuple[int, int]:
    try:
        ktext, ntext = text.split(",")
        k, n = int(ktext), int(ntext)
    except ValueError:
        raise ParseError(f"context must be K,N: {text!r}") from None
    if not 0 <= k <= n:
        raise ParseError(f"need 0 <= K <= N in context {text!r}")
    return k, n


def _emit(payload: dict, text: str, as_json: bool) -> None:
    if as_json:
        print(json.dumps(payload))
    else:
        print(text)


def _cmd_stanley(args) -> int:
    w = parse_permutation(args.w)
    rendered = stanley(w).text()
    _emit(
        {"command": "stanley", "w": permutation_text(w), "schur": rendered},
        rendered,
        args.json,
    )
    return 0


def _cmd_affine_stanley(args) -> int:
    f = parse_window(args.window)
    rendered = affine_stanley(f).text()
    _emit(
        {
            "command": "affine-stanley",
            "window": window_text(f),
            "monomial": rendered,
        },
        rendered,
        args.json,
    )
    return 0


def _cmd_rank_class(args) -> int:
    m = parse_rank_set(args.rankset)
    k, n = (m.k, m.ambient_n) if args.gr is None else _parse_gr(args.gr)
    w = w_of_rank_set(m)
    cls = phi(stanley(w), k, n)
    degree = class_degree(cls)
    payload = {
        "command": "rank-class",
        "rank_set": args.rankset.strip(),
        "w": permutation_text(w),
        "class": cls.text(),
        "degree": degree,
    }
    text = f"w_M = {permutation_text(w)}\nclass = {cls.text()}\ndegree = {degree}"
    _emit(payload, text, args.json)
    return 0


def _cmd_diagram_specht(args) -> int:
    d = parse_diagram(args.diagram)
    expansion = specht_schur(d, args.family)
    payload = {
        "command": "diagram-specht",
        "diagram": args.diagram.strip(),
        "family": args.family or "auto",
        "schur": expansion.text(),
    }
    _emit(payload, expansion.text(), args.json)
    return 0


def _class_from_partition(text: str, k: int, n: int):
    try:
        return schubert_class(parse_partition(text), k, n)
    except ValueError as exc:
        raise ParseError(f"partition {text!r} does not fit Gr({k},{n}): {exc}") from None


def _cmd_schubert(args) -> int:
    if args.schubert_command == "mult":
        k, n = _parse_gr(args.gr)
        first = _class_from_partition(args.first, k, n)
        second = _class_from_partition(args.second, k, n)
        result = class_product(first, second)
        payload = {
            "command": "schubert-mult",
            "first": args.first.strip(),
            "second": args.second.strip(),
            "class": result.text(),
        }
        _emit(payload, result.text(), args.json)
        return 0
    # degree
    text = args.cls.strip()
    if "@Gr(" in text:
        cls = parse_class(text)
    else:
        if args.gr is None:
            raise ParseError("a bare partition needs --gr K,N")
        k, n = _parse_gr(args.gr)
        cls = _class_from_partition(text, k, n)
    degree = class_degree(cls)
    payload = {
        "command": "schubert-degree",
        "class": cls.text(),
        "degree": degree,
    }
    _emit(payload, str(degree), args.json)
    return 0


def _cmd_verify(args) -> int:
    reports = (
        replay_counterexample() if args.scope == "paper" else run_all(args.max_n)
    )
    for report in reports:
        if args.json:
            print(json.dumps(report.to_dict()))
        else:
            status = "PASS" if report.passed else "FAIL"
            print(
                f"{status} {report.name}: expected {report.expected}, "
                f"actual {report.actual}"
            )
    return 0 if all(r.passed for r in reports) else 1


_HANDLERS = {
    "stanley": _cmd_stanley,
    "affine-stanley": _cmd_affine_stanley,
    "rank-class": _cmd_rank_class,
    "diagram-specht": _cmd_diagram_specht,
    "schubert": _cmd_schubert,
    "verify": _cmd_verify,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on unknown flags or missing arguments
        return int(exc.code or 0)
    try:
        return _HANDLERS[args.command](args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except RankCalcError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
