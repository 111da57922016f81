"""Command line: ``mdsl repl``, ``mdsl run``, ``mdsl pp`` and ``mdsl app``."""

import argparse
import sys

from . import apps
from .frontend import preprocess, repl, run_source


def build_parser():
    parser = argparse.ArgumentParser(prog="mdsl", description="Discrete mathematics DSL")
    parser.add_argument("--seed", type=int, default=0, help="seed for shuffle and randomInts")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("repl", help="interactive session")
    p.add_argument("--prompt", default="mdsl> ")

    p = sub.add_parser("run", help="evaluate a source file line by line")
    p.add_argument("file")

    p = sub.add_parser("pp", help="translate a source file to core form")
    p.add_argument("original_name")
    p.add_argument("input")
    p.add_argument("output")

    p = sub.add_parser("app", help="demonstration programs")
    p.add_argument("name", choices=sorted(apps.PROGRAMS))
    p.add_argument("--batch", action="store_true", help="read answers from stdin and echo them")
    return parser


def main(argv=None, stdin=None, stdout=None, stderr=None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    args = build_parser().parse_args(argv)

    if args.command == "repl":
        return repl(stdin, stdout, prompt=args.prompt, seed=args.seed)
    if args.command == "run":
        try:
            with open(args.file, encoding="utf-8") as f:
                source = f.read()
        except OSError as exc:
            print(f"mdsl: cannot read {args.file}: {exc}", file=stderr)
            return 2
        return run_source(source, args.file, stdout, stderr, seed=args.seed)
    if args.command == "pp":
        return preprocess(args.original_name, args.input, args.output, stderr)

    con = apps.Console(stdin, stdout, echo=args.batch)
    try:
        return apps.PROGRAMS[args.name](con)
    except (ValueError, ArithmeticError, SyntaxError, EOFError) as exc:
        print(f"mdsl app {args.name}: error: {exc}", file=stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
