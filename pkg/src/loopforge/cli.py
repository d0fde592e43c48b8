"""Command-line interface: ``loopforge {analyze,isotopes,thalf,check}``."""
import argparse
import os
import sys

from .datasets import BUILTINS, builtin
from .errors import LoopforgeError, OrderCapExceeded, UnknownDataset
from .report import AnalysisOptions, analyze, emit, isotopy_summary, to_json
from .structure import commutant, nucleus_left
from .tableloop import DEFAULT_MAX_ORDER, LoopTable
from .tablefile import format_table, parse_table_file
from .twisted import as_group, t_half

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_CAP = 2
EXIT_USAGE = 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: error: {message}")


def _max_order():
    raw = os.environ.get("LOOPFORGE_MAX_ORDER")
    if raw is None:
        return DEFAULT_MAX_ORDER
    try:
        value = int(raw)
    except ValueError:
        raise UsageError(f"LOOPFORGE_MAX_ORDER must be an integer, got {raw!r}") from None
    if value < 1:
        raise UsageError("LOOPFORGE_MAX_ORDER must be positive")
    return value


def _source(parser):
    parser.add_argument("file", nargs="?", help="table file (1-based labels)")
    parser.add_argument("--builtin", metavar="NAME", help=f"embedded dataset: {', '.join(BUILTINS)}")


def build_parser():
    p = _Parser(prog="loopforge", description="Analyse finite loops given by Cayley tables.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    a = sub.add_parser("analyze", help="full structural report")
    _source(a)
    a.add_argument("--json", action="store_true", help="machine-readable output")
    a.add_argument("--isotopes", action="store_true", help="include isotopy classes")
    a.add_argument("--no-timings", action="store_true", help="omit per-phase timings")

    i = sub.add_parser("isotopes", help="isotopy classes of principal isotopes")
    _source(i)
    i.add_argument("--json", action="store_true")
    i.add_argument("--compare", metavar="FILE_OR_NAME",
                   help="report which class contains a loop isomorphic to this one")

    t = sub.add_parser("thalf", help="Bruck loop T(1/2) of a twisted subgroup")
    _source(t)
    t.add_argument("--subset", metavar="a,b,c", help="1-based group labels of the twisted subgroup")

    c = sub.add_parser("check", help="validate a table")
    _source(c)
    return p


def _load(args, max_order):
    if (args.file is None) == (args.builtin is None):
        raise UsageError("give exactly one of FILE or --builtin NAME")
    if args.builtin is not None:
        L = builtin(args.builtin)
        if L.n > max_order:
            raise OrderCapExceeded(f"order {L.n} exceeds the configured cap {max_order}")
        return L, args.builtin
    return parse_table_file(args.file, max_order=max_order), args.file


def _load_named(source, max_order):
    if source in BUILTINS:
        return builtin(source)
    return parse_table_file(source, max_order=max_order)


def _cmd_analyze(args, max_order, out):
    L, _ = _load(args, max_order)
    rep = analyze(L, AnalysisOptions(isotopes=args.isotopes, timings=not args.no_timings))
    out.write(emit(rep, "json" if args.json else "text"))
    return EXIT_CAP if rep.errors else EXIT_OK


def _cmd_isotopes(args, max_order, out):
    L, _ = _load(args, max_order)
    other = _load_named(args.compare, max_order) if args.compare else None
    summary = isotopy_summary(L, compare=other)
    if args.json:
        out.write(to_json(summary).encode())
        return EXIT_OK
    lines = [f"{summary['class_count']} isotopy classes among {L.n} principal isotopes"]
    for k, c in enumerate(summary["classes"]):
        members = ",".join(map(str, c["members"]))
        lines.append(f"class {k}: representative {c['representative']}; a in {{{members}}}")
    if other is not None:
        match = summary["match"]
        lines.append("comparison loop: " + ("not isotopic" if match is None else f"class {match}"))
    out.write(("\n".join(lines) + "\n").encode())
    return EXIT_OK


def _cmd_thalf(args, max_order, out):
    G, name = _load(args, max_order)
    G = as_group(G)
    if args.subset:
        try:
            T = sorted({int(v) - 1 for v in args.subset.split(",") if v.strip()})
        except ValueError:
            raise UsageError(f"bad --subset {args.subset!r}") from None
        if any(t < 0 or t >= G.n for t in T):
            raise UsageError(f"--subset labels must lie in 1..{G.n}")
    else:
        T = list(range(G.n))
    Q = t_half(G, T)
    comments = [
        f"T(1/2) of {name} on {len(T)} elements",
        "element i is group element " + ",".join(str(t + 1) for t in T) + " (in order)",
        "left nucleus: " + ",".join(str(x + 1) for x in nucleus_left(Q)),
        "commutant: " + ",".join(str(x + 1) for x in commutant(Q)),
    ]
    out.write(format_table(Q, comments).encode())
    return EXIT_OK


def _cmd_check(args, max_order, out):
    L, name = _load(args, max_order)
    out.write(f"ok: {name} is a loop of order {L.n} with identity {L.identity + 1}\n".encode())
    return EXIT_OK


COMMANDS = {
    "analyze": _cmd_analyze,
    "isotopes": _cmd_isotopes,
    "thalf": _cmd_thalf,
    "check": _cmd_check,
}


def run(argv=None, stdout=None, stderr=None):
    """Run the CLI and return its exit code."""
    out = stdout or sys.stdout.buffer
    err = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            parser.print_help(err)
            return EXIT_USAGE
        return COMMANDS[args.command](args, _max_order(), out)
    except UsageError as exc:
        print(exc, file=err)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    except UnknownDataset as exc:
        print(f"loopforge: {exc}", file=err)
        return EXIT_USAGE
    except OrderCapExceeded as exc:
        print(f"loopforge: {exc}", file=err)
        return EXIT_CAP
    except (LoopforgeError, OSError) as exc:
        print(f"loopforge: {type(exc).__name__}: {exc}", file=err)
        return EXIT_INVALID


def main():
    sys.exit(run())


__all__ = ["run", "main", "build_parser", "LoopTable"]
