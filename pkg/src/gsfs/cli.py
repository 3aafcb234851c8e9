"""Command-line front end.

Exit status: 0 success / affirmative, 1 negative answer or validation
failure (diagnostics on stderr), 2 usage or parse error.  In batch mode
(``--file PATH`` or ``-`` for stdin) the worst per-line status wins.
"""

from __future__ import annotations

import argparse
import contextlib
import sys
from typing import Callable, TextIO

from .census import EnumBounds, build_census, write_census
from .cover import double_cover
from .errors import BoundsError, InvalidSymbol, NotBranched, NotInImage, ParseError
from .local_action import (
    LocalActionSymbol,
    equivalent_local,
    from_local_action,
    local_sing_count,
    normalize_local,
    to_local_action,
    validate_local,
)
from .notation import parse_gsfs, parse_local, parse_symbol, render_symbol
from .symbols import (
    Epsilon,
    GsfsSymbol,
    OrientationPolicy,
    equivalent,
    normalize_gsfs,
    sing_count,
    validate_gsfs,
)

OK, NEGATIVE, USAGE = 0, 1, 2


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(f"{self.prog}: {message} (try '{self.prog} --help')")


class _Failure(Exception):
    """Per-item failure carrying an exit status and a stderr message."""

    def __init__(self, status: int, message: str):
        self.status = status
        super().__init__(message)


def _violations(symbol) -> list:
    if isinstance(symbol, LocalActionSymbol):
        return validate_local(symbol)
    return validate_gsfs(symbol)


def _require_valid(symbol) -> None:
    problems = _violations(symbol)
    if problems:
        raise _Failure(NEGATIVE, "\n".join(str(v) for v in problems))


def _cmd_validate(symbol, args):
    _require_valid(symbol)
    return None


def _cmd_normalize(symbol, args):
    if isinstance(symbol, LocalActionSymbol):
        return render_symbol(normalize_local(symbol))
    return render_symbol(normalize_gsfs(symbol))


def _cmd_cover(symbol, args):
    if not isinstance(symbol, GsfsSymbol):
        raise _Failure(USAGE, "cover expects a GSFS symbol")
    return render_symbol(double_cover(symbol))


def _cmd_sing(symbol, args):
    _require_valid(symbol)
    if isinstance(symbol, LocalActionSymbol):
        return str(local_sing_count(symbol))
    return str(sing_count(symbol))


def _cmd_convert(symbol, args):
    if args.to_local:
        if not isinstance(symbol, GsfsSymbol):
            raise _Failure(USAGE, "--to-local expects a GSFS symbol")
        return render_symbol(to_local_action(symbol))
    if not isinstance(symbol, LocalActionSymbol):
        raise _Failure(USAGE, "--from-local expects an LSA symbol")
    return render_symbol(from_local_action(symbol))


def _cmd_equiv(a, b, args) -> bool:
    if type(a) is not type(b):
        raise _Failure(USAGE, "cannot compare a GSFS symbol with an LSA symbol")
    if isinstance(a, LocalActionSymbol):
        return equivalent_local(a, b)
    policy = OrientationPolicy.UP_TO_ORIENTATION if args.up_to_orientation else OrientationPolicy.STRICT
    return equivalent(a, b, policy)


def _parse(text: str, kind: str):
    if kind == "gsfs":
        return parse_gsfs(text)
    if kind == "local":
        return parse_local(text)
    return parse_symbol(text)


class _Runner:
    def __init__(self, args, stdin: TextIO, stdout: TextIO, stderr: TextIO):
        self.args = args
        self.stdin, self.stdout, self.stderr = stdin, stdout, stderr

    def out(self, text: str) -> None:
        if not self.args.quiet:
            print(text, file=self.stdout)

    def err(self, text: str, where: str | None) -> None:
        for line in text.splitlines() or [""]:
            print(f"{where}: {line}" if where else line, file=self.stderr)

    def items(self) -> list[tuple[str | None, list[str]]]:
        """``(location, fields)`` per input; location is None for argv input."""
        args = self.args
        if args.file is None and args.symbols != ["-"]:
            return [(None, list(args.symbols))]
        if args.file is not None and args.symbols:
            raise _UsageError("give symbols either as arguments or via --file, not both")
        if args.file in (None, "-"):
            lines, name = self.stdin.read().splitlines(), "<stdin>"
        else:
            with open(args.file, encoding="utf-8") as fh:
                lines, name = fh.read().splitlines(), args.file
        out = []
        for n, line in enumerate(lines, start=1):
            if not line.strip() or line.startswith("#"):
                continue
            out.append((f"{name}:{n}", [f.strip() for f in line.split("\t")]))
        return out

    def each(self, arity: int, kind: str, handle: Callable) -> int:
        worst = OK
        for where, fields in self.items():
            if len(fields) < arity or (where is None and len(fields) != arity):
                raise _UsageError(f"expected {arity} symbol(s), got {len(fields)}")
            status = self.one(where, fields[:arity], kind, handle)
            worst = max(worst, status)
        return worst

    def one(self, where, fields, kind, handle) -> int:
        try:
            symbols = [_parse(f, kind) for f in fields]
            result = handle(*symbols, self.args)
        except (ParseError, OverflowError) as exc:
            self.err(str(exc), where)
            return USAGE
        except _Failure as exc:
            self.err(str(exc), where)
            return exc.status
        except InvalidSymbol as exc:
            self.err("\n".join(map(str, exc.violations)) or str(exc), where)
            return NEGATIVE
        except (NotBranched, NotInImage) as exc:
            self.err(str(exc), where)
            return NEGATIVE
        if isinstance(result, bool):
            self.out("equivalent" if result else "not-equivalent")
            return OK if result else NEGATIVE
        if result is not None:
            self.out(result)
        return OK


def _census(args, stdout: TextIO) -> int:
    try:
        lo, hi = (int(x) for x in args.b.split(":"))
        eps = tuple(Epsilon(e.strip()) for e in args.eps.split(","))
    except ValueError:
        raise _UsageError(f"bad --b {args.b!r} or --eps {args.eps!r}") from None
    bounds = EnumBounds(args.max_g, args.max_i, args.max_pairs, args.max_alpha, lo, hi, eps)
    try:
        records = build_census(bounds)
    except BoundsError as exc:
        raise _UsageError(str(exc)) from None
    write_census(records, args.out, bounds)
    if not args.quiet:
        print(len(records), file=stdout)
    return OK


def _build_parser() -> _Parser:
    common = _Parser(add_help=False)
    common.add_argument("--quiet", action="store_true", help="suppress stdout")

    symbols = _Parser(add_help=False)
    symbols.add_argument("symbols", nargs="*", metavar="SYMBOL",
                         help="symbol text, or '-' to read one per line from stdin")
    symbols.add_argument("--file", metavar="PATH", help="read symbols one per line")

    parser = _Parser(prog="gsfs", description="Generalized Seifert fiber space symbols.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name, help_ in [
        ("validate", "report admissibility violations"),
        ("normalize", "print the canonical form"),
        ("cover", "print the double branched cover"),
        ("sing", "print the number of topologically singular points"),
    ]:
        sub.add_parser(name, parents=[common, symbols], help=help_)

    eq = sub.add_parser("equiv", parents=[common, symbols], help="decide equivalence of two symbols")
    eq.add_argument("--up-to-orientation", action="store_true")

    conv = sub.add_parser("convert", parents=[common, symbols], help="GSFS <-> local-action bridge")
    direction = conv.add_mutually_exclusive_group(required=True)
    direction.add_argument("--to-local", action="store_true")
    direction.add_argument("--from-local", action="store_true")

    cen = sub.add_parser("census", parents=[common], help="write a bounded census file")
    cen.add_argument("--max-g", type=int, required=True)
    cen.add_argument("--max-i", type=int, required=True)
    cen.add_argument("--max-pairs", type=int, required=True)
    cen.add_argument("--max-alpha", type=int, required=True)
    cen.add_argument("--b", default="0:0", metavar="LO:HI", help="canonical b range (use --b=-2:2 for negatives)")
    cen.add_argument("--eps", default=",".join(e.value for e in Epsilon), metavar="LIST")
    cen.add_argument("--out", required=True, metavar="FILE")
    return parser


_SINGLE = {
    "validate": _cmd_validate,
    "normalize": _cmd_normalize,
    "cover": _cmd_cover,
    "sing": _cmd_sing,
    "convert": _cmd_convert,
}


def run(argv: list[str], stdin: TextIO = None, stdout: TextIO = None, stderr: TextIO = None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = _build_parser()
    try:
        with contextlib.redirect_stdout(stdout), contextlib.redirect_stderr(stderr):
            try:
                args = parser.parse_args(argv)
            except SystemExit as exc:  # --help
                return int(exc.code or 0)
        if args.command == "census":
            return _census(args, stdout)
        runner = _Runner(args, stdin, stdout, stderr)
        if args.command == "equiv":
            return runner.each(2, "any", _cmd_equiv)
        kind = "any"
        if args.command == "convert":
            kind = "gsfs" if args.to_local else "local"
        return runner.each(1, kind, _SINGLE[args.command])
    except _UsageError as exc:
        print(str(exc), file=stderr)
        return USAGE
    except OSError as exc:
        print(f"gsfs: {exc}", file=stderr)
        return USAGE


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
