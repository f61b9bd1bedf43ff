"""Command line interface: ``nocode <subcommand> ...``.

Exit codes: 0 success, 1 semantic violation (overlapping input, broken
invariant), 2 input error, 3 cap or node budget exceeded.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence, TextIO

from .bounds import InvariantViolation, bound_report, length_report
from .codes import (
    Code,
    CodeFormatError,
    OverlapError,
    find_prefix_violation,
    find_violation,
    is_maximal,
    read_code,
    render_code,
)
from .extension import extend, extension_size
from .search import (
    SearchCapError,
    SearchConfig,
    SearchIncomplete,
    classic_construction,
    greedy_maximal,
    max_fixed,
    max_variable,
)

EXIT_OK, EXIT_VIOLATION, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3


class _Exit(Exception):
    def __init__(self, status: int, message: str = "", payload: dict | None = None):
        self.status = status
        self.message = message
        self.payload = payload
        super().__init__(message)


def _load(path: str) -> Code:
    try:
        if path == "-":
            return read_code(sys.stdin)
        return read_code(path)
    except OSError as exc:
        raise _Exit(EXIT_INPUT, f"cannot read {path}: {exc.strerror}") from None
    except CodeFormatError as exc:
        raise _Exit(EXIT_INPUT, f"{path}: {exc}", {"error": str(exc), "line": exc.line}) from None


def _save(code: Code, path: str | None, out: TextIO) -> None:
    if path is None:
        return
    if path == "-":
        out.write(render_code(code))
        return
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(render_code(code))


def _emit(args, out: TextIO, payload: dict, text: str) -> None:
    if args.format == "json":
        out.write(json.dumps(payload) + "\n")
    else:
        out.write(text + ("\n" if text and not text.endswith("\n") else ""))


def _overlap_exit(code: Code) -> None:
    wit = find_violation(code)
    if wit is not None:
        raise _Exit(EXIT_VIOLATION, f"overlapping: {wit.describe()}",
                    {"non_overlapping": False, "witness": wit.to_json()})


def _config(args) -> SearchConfig:
    return SearchConfig(node_budget=args.node_budget, strategy=args.strategy)


def cmd_verify(args, out: TextIO) -> int:
    code = _load(args.input)
    wit = find_violation(code)
    pwit = find_prefix_violation(code)
    payload = {
        "q": code.q,
        "size": len(code),
        "non_overlapping": wit is None,
        "prefix_code": pwit is None,
    }
    if wit is not None:
        payload["witness"] = wit.to_json()
    lines = [f"{'non-overlapping' if wit is None else 'overlapping'}"
             f" ({len(code)} words, q={code.q})"]
    if wit is not None:
        lines.append(f"witness: {wit.describe()}")
    lines.append(f"prefix code: {'yes' if pwit is None else 'no'}")
    _emit(args, out, payload, "\n".join(lines))
    return EXIT_OK if wit is None else EXIT_VIOLATION


def cmd_extend(args, out: TextIO) -> int:
    code = _load(args.input)
    if not code.words:
        raise _Exit(EXIT_INPUT, "cannot extend the empty code")
    if not args.force:
        _overlap_exit(code)
    ext = extend(code, force=args.force)
    predicted = extension_size(code, force=args.force)
    if args.output != "-":
        _save(ext, args.output, out)
    payload = {"n": code.max_len, "size": len(code), "extended_size": len(ext),
               "extension_size": predicted, "code": ext.render()}
    text = f"{len(code)} → {len(ext)} (n={code.max_len}, size formula {predicted})"
    if args.output == "-":
        text = render_code(ext) + text
    _emit(args, out, payload, text)
    if predicted != len(ext):
        raise _Exit(EXIT_VIOLATION, f"size formula gave {predicted}, construction gave {len(ext)}")
    return EXIT_OK


def _search_payload(res) -> dict:
    return res.to_json()


def cmd_search(args, out: TextIO) -> int:
    cfg = _config(args)
    try:
        if args.command == "max-fixed":
            res = max_fixed(args.n, args.q, cfg)
            fixed = None
        else:
            res = max_variable(args.n, args.q, cfg)
            fixed = max_fixed(args.n, args.q, cfg)
    except SearchCapError as exc:
        raise _Exit(EXIT_BUDGET, str(exc), {"error": str(exc)}) from None
    except SearchIncomplete as exc:
        raise _Exit(EXIT_BUDGET, str(exc), {"error": str(exc), "lower_bound": len(exc.best),
                                            "nodes_expanded": exc.nodes}) from None
    payload = _search_payload(res)
    text = (f"{args.command} n={args.n} q={args.q}: {res.cardinality}"
            f" ({res.nodes_expanded} nodes, {res.elapsed * 1000:.0f} ms)")
    if fixed is not None:
        payload["fixed_cardinality"] = fixed.cardinality
        text += f"\nfixed-length maximum: {fixed.cardinality}"
    _save(res.code, args.output, out)
    if args.output != "-":
        text += "\n" + "\n".join(res.code.render())
    _emit(args, out, payload, text)
    if fixed is not None and res.cardinality > fixed.cardinality:
        raise _Exit(EXIT_VIOLATION, "variable-length maximum exceeds fixed-length maximum")
    return EXIT_OK


def cmd_maximal(args, out: TextIO) -> int:
    try:
        code = greedy_maximal(args.n, args.q, args.seed)
    except SearchCapError as exc:
        raise _Exit(EXIT_BUDGET, str(exc), {"error": str(exc)}) from None
    maximal = is_maximal(code, args.n)
    return _emit_code(args, out, code, {"maximal": maximal})


def cmd_classic(args, out: TextIO) -> int:
    return _emit_code(args, out, classic_construction(args.n, args.q), {})


def _emit_code(args, out: TextIO, code: Code, extra: dict) -> int:
    if args.output and args.output != "-":
        _save(code, args.output, out)
    if args.format == "json":
        _emit(args, out, {"q": code.q, "size": len(code), "code": code.render(), **extra}, "")
    else:
        out.write(render_code(code))
    return EXIT_OK


def cmd_bounds(args, out: TextIO) -> int:
    try:
        rep = bound_report(args.n, args.q, exact=args.exact, cfg=_config(args))
    except SearchCapError as exc:
        raise _Exit(EXIT_BUDGET, str(exc), {"error": str(exc)}) from None
    except SearchIncomplete as exc:
        raise _Exit(EXIT_BUDGET, str(exc), {"error": str(exc), "lower_bound": len(exc.best)}) from None
    except InvariantViolation as exc:
        raise _Exit(EXIT_VIOLATION, str(exc)) from None
    data = rep.to_json()
    text = "\n".join(f"{k}: {v}" for k, v in data.items())
    _emit(args, out, data, text)
    return EXIT_OK


def cmd_stats(args, out: TextIO) -> int:
    code = _load(args.input)
    if not code.words:
        raise _Exit(EXIT_INPUT, f"{args.input}: no codewords")
    try:
        rep = length_report(code)
    except OverlapError as exc:
        raise _Exit(EXIT_VIOLATION, f"overlapping: {exc.witness.describe()}",
                    {"non_overlapping": False, "witness": exc.witness.to_json()}) from None
    except InvariantViolation as exc:
        raise _Exit(EXIT_VIOLATION, str(exc)) from None
    data = rep.to_json()
    text = "\n".join([
        f"size: {rep.code_size}",
        f"q: {rep.q}",
        f"L = {rep.avg_length}",
        f"ceil(log_q size) = {rep.entropy_floor}",
        f"n = {rep.n}",
        f"n - 2 = {rep.bracket_low}",
    ])
    _emit(args, out, data, text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="nocode", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", parents=[common], help="check a code file")
    p.add_argument("input", help="code file, or - for stdin")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("extend", parents=[common], help="extend to a fixed-length code")
    p.add_argument("input")
    p.add_argument("-o", "--output", default=None, help="write the extended code here (- for stdout)")
    p.add_argument("--force", action="store_true", help="run on overlapping input anyway")
    p.set_defaults(func=cmd_extend)

    searches = argparse.ArgumentParser(add_help=False)
    searches.add_argument("--node-budget", type=int, default=None)
    searches.add_argument("--strategy", choices=("branch_and_bound", "exhaustive"),
                          default="branch_and_bound")
    for name, helptext in (("max-fixed", "maximum fixed-length code"),
                           ("max-variable", "maximum code with lengths 2..n")):
        p = sub.add_parser(name, parents=[common, searches], help=helptext)
        p.add_argument("n", type=int)
        p.add_argument("q", type=int)
        p.add_argument("-o", "--output", default=None, help="write the code found here")
        p.set_defaults(func=cmd_search)

    p = sub.add_parser("maximal", parents=[common], help="greedy maximal code")
    p.add_argument("n", type=int)
    p.add_argument("q", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_maximal)

    p = sub.add_parser("classic", parents=[common], help="0 followed by nonzero symbols")
    p.add_argument("n", type=int)
    p.add_argument("q", type=int)
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_classic)

    p = sub.add_parser("bounds", parents=[common, searches], help="bounds on C(n, q)")
    p.add_argument("n", type=int)
    p.add_argument("q", type=int)
    p.add_argument("--exact", action="store_true", help="also search for C(i, q), i <= n")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("stats", parents=[common], help="average length report")
    p.add_argument("input")
    p.set_defaults(func=cmd_stats)
    return parser


def _validate(args) -> None:
    for name in ("n", "q"):
        value = getattr(args, name, None)
        if value is not None and value < 2:
            raise _Exit(EXIT_INPUT, f"{name} must be >= 2")
    budget = getattr(args, "node_budget", None)
    if budget is not None and budget < 1:
        raise _Exit(EXIT_INPUT, "--node-budget must be >= 1")


def main(argv: Sequence[str] | None = None, out: TextIO | None = None,
         err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        _validate(args)
        return args.func(args, out)
    except _Exit as exc:
        if args.format == "json" and exc.payload is not None:
            out.write(json.dumps(exc.payload) + "\n")
        if exc.message:
            err.write(exc.message + "\n")
        return exc.status


if __name__ == "__main__":
    sys.exit(main())
