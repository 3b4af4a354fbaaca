"""Command line front end.

Subcommands::

    rankin bound SPACE                      weighted Rankin bound of a space
    rankin verify FAMILY [--functional]     check a family against its bound
    rankin optimize SPACE --dim D           search for a low-coherence family
    rankin make --simplex N D | --circle N | --sphere N | --counting N

Reports go to stdout (aligned text, or JSON with ``--json``); files are only
written to an explicit ``--out`` path.

Exit codes:

    0  success
    2  unreadable input or invalid flags
    3  undefined bound (single atom) or impossible construction
    4  the bound is violated (points at a bug or corrupted input)
    5  the input fails the hypotheses (non-normalized family, or conditions
       (i)-(iii) for a functional family)
"""

from __future__ import annotations

import argparse
import hashlib
import sys
import time

from . import __version__
from .banach import check_functional_rankin
from .bounds import rankin_bound
from .errors import (InvalidArgumentError, NormalizationError,
                     PreconditionViolation, UndefinedBoundError)
from .family import discretize
from .formats import (REPORT, FormatError, dumps, parse_family,
                      parse_functional_family, parse_space, space_document,
                      family_document, to_jsonable)
from .measure import counting_space
from .optimizer import OptimizerConfig, minimize_coherence, simplex_family
from .verify import SLACK_TOLERANCE, check_rankin, proof_decomposition

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_UNDEFINED = 3
EXIT_VIOLATED = 4
EXIT_PRECONDITION = 5


class _Exit(Exception):
    def __init__(self, code, message, payload=None):
        super().__init__(message)
        self.code = code
        self.payload = payload


def _digest(data: bytes) -> str:
    return "sha256:" + hashlib.sha256(data).hexdigest()


def _read(path):
    try:
        if path == "-":
            return sys.stdin.buffer.read()
        with open(path, "rb") as fh:
            return fh.read()
    except OSError as exc:
        raise _Exit(EXIT_USAGE, f"cannot read {path}: {exc.strerror}") from None


def _write(path, text):
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        raise _Exit(EXIT_USAGE, f"cannot write {path}: {exc.strerror}") from None


def _flatten(obj, prefix=""):
    if isinstance(obj, dict):
        for k, v in obj.items():
            yield from _flatten(v, f"{prefix}.{k}" if prefix else k)
    elif isinstance(obj, list) and any(isinstance(v, (dict, list)) for v in obj):
        for i, v in enumerate(obj):
            yield from _flatten(v, f"{prefix}[{i}]")
    else:
        yield prefix, obj


def render_text(report: dict) -> str:
    rows = [(k, v if isinstance(v, str) else repr(v) if isinstance(v, float)
             else str(v).replace("'", '"')) for k, v in _flatten(report)]
    width = max(len(k) for k, _ in rows)
    return "\n".join(f"{k:<{width}}  {v}" for k, v in rows) + "\n"


def render(report: dict, as_json: bool) -> str:
    return dumps(report) if as_json else render_text(report)


def _cmd_bound(args, data):
    try:
        space = parse_space(data)
    except FormatError as exc:
        raise _Exit(EXIT_USAGE, str(exc)) from None
    try:
        return EXIT_OK, {"bound": rankin_bound(space)}
    except UndefinedBoundError as exc:
        raise _Exit(EXIT_UNDEFINED, str(exc)) from None


def _cmd_verify(args, data):
    tol = args.tolerance
    try:
        fam = parse_functional_family(data) if args.functional else parse_family(data)
    except FormatError as exc:
        raise _Exit(EXIT_USAGE, str(exc)) from None
    try:
        if args.functional:
            report = check_functional_rankin(fam, tolerance=tol)
            payload = {"functional": report}
        else:
            report = check_rankin(fam, tolerance=tol)
            payload = {"coherence": report, "decomposition": proof_decomposition(fam)}
    except UndefinedBoundError as exc:
        raise _Exit(EXIT_UNDEFINED, str(exc)) from None
    except NormalizationError as exc:
        raise _Exit(EXIT_PRECONDITION, str(exc),
                    {"status": "precondition-violation",
                     "failures": {"normalized": str(exc)}}) from None
    except PreconditionViolation as exc:
        raise _Exit(EXIT_PRECONDITION, str(exc),
                    {"status": "precondition-violation", "failures": exc.failures}) from None
    return (EXIT_OK if report.satisfied else EXIT_VIOLATED), payload


def _cmd_optimize(args, data):
    try:
        space = parse_space(data)
        cfg = OptimizerConfig(restarts=args.restarts, max_iters=args.iters,
                              seed=args.seed, threads=args.threads,
                              temperature=args.temperature, step=args.step)
    except (FormatError, InvalidArgumentError) as exc:
        raise _Exit(EXIT_USAGE, str(exc)) from None
    if args.dim < 1:
        raise _Exit(EXIT_USAGE, f"--dim must be >= 1, got {args.dim}")
    try:
        result = minimize_coherence(space, args.dim, cfg)
    except UndefinedBoundError as exc:
        raise _Exit(EXIT_UNDEFINED, str(exc)) from None
    if args.out:
        _write(args.out, dumps(family_document(result.best_family)))
    return EXIT_OK, {"optimizer": result, "config": cfg}


def _cmd_make(args, data):
    try:
        if args.simplex:
            n, d = args.simplex
            doc = family_document(simplex_family(n, d))
        elif args.circle is not None:
            doc = family_document(discretize("circle", args.circle))
        elif args.sphere is not None:
            doc = family_document(discretize("sphere", args.sphere))
        else:
            doc = space_document(counting_space(args.counting))
    except InvalidArgumentError as exc:
        raise _Exit(EXIT_UNDEFINED, str(exc)) from None
    text = dumps(doc)
    if not args.out:
        sys.stdout.write(text)
        return EXIT_OK, None
    _write(args.out, text)
    return EXIT_OK, {"written": {"path": args.out, "format": doc["format"],
                                 "atoms": len(doc["atoms"]),
                                 "digest": _digest(text.encode("utf-8"))}}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rankin", description=__doc__.split("\n\n")[0])
    parser.add_argument("--version", action="version", version=f"rankin {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--json", action="store_true", help="machine-readable report")

    p = sub.add_parser("bound", help="weighted Rankin bound of a space or family file")
    p.add_argument("file")
    common(p)

    p = sub.add_parser("verify", help="check a family file against its bound")
    p.add_argument("file")
    p.add_argument("--functional", action="store_true",
                   help="the file holds an l^p functional family")
    p.add_argument("--tolerance", type=float, default=SLACK_TOLERANCE)
    common(p)

    p = sub.add_parser("optimize", help="minimize coherence over a space")
    p.add_argument("file")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--restarts", type=int, default=16)
    p.add_argument("--iters", type=int, default=5000)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--temperature", type=float, default=1.0)
    p.add_argument("--step", type=float, default=0.05)
    p.add_argument("--out", help="write the best family here")
    common(p)

    p = sub.add_parser("make", help="write a simplex, discretized or counting-measure file")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--simplex", nargs=2, type=int, metavar=("N", "D"))
    g.add_argument("--circle", type=int, metavar="N")
    g.add_argument("--sphere", type=int, metavar="N")
    g.add_argument("--counting", type=int, metavar="N", help="counting-measure space file")
    p.add_argument("--out")
    common(p)
    return parser


_COMMANDS = {"bound": _cmd_bound, "verify": _cmd_verify,
             "optimize": _cmd_optimize, "make": _cmd_make}


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    args = build_parser().parse_args(argv)
    start = time.perf_counter()
    data = b""
    try:
        if args.command != "make":
            data = _read(args.file)
        code, payload = _COMMANDS[args.command](args, data)
    except _Exit as exc:
        print(f"rankin {args.command}: {exc}", file=sys.stderr)
        code, payload = exc.code, exc.payload
        if payload is None:
            return code
    if payload is None:
        return code
    report = {
        "format": REPORT,
        "version": 1,
        "command": ["rankin"] + argv,
        "input_digest": _digest(data),
        "tool_version": __version__,
        "exit_code": code,
        "payload": to_jsonable(payload),
        "wall_time": time.perf_counter() - start,
    }
    sys.stdout.write(render(report, args.json))
    return code


if __name__ == "__main__":
    sys.exit(main())
