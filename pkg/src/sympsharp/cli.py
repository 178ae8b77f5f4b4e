"""Command-line front end: run a script and print its report."""

from __future__ import annotations

import argparse
import sys

from sympsharp.dsl import ScriptSyntaxError, UnknownName, parse
from sympsharp.grading import GradingContext
from sympsharp.runner import run


def _modulus(text: str) -> int:
    try:
        n = int(text)
        GradingContext(n)
    except ValueError:
        raise argparse.ArgumentTypeError("modulus must be an even integer >= 2") from None
    return n


def _seed(text: str) -> int:
    n = int(text)
    if not 0 <= n < 2 ** 64:
        raise argparse.ArgumentTypeError("seed must fit in 64 unsigned bits")
    return n


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="sympsharp", description="Run a linear symplectic category script.")
    p.add_argument("--script", help="script file (default: read standard input)")
    p.add_argument("--format", choices=("text", "machine"), default="text")
    p.add_argument("--seed", type=_seed, default=0, help="seed for check-axioms sampling")
    p.add_argument("--modulus", type=_modulus, default=2, help="grading modulus N (even)")
    return p


def main(argv=None, stdin=None, stdout=None, stderr=None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    args = build_parser().parse_args(argv)
    if args.script:
        with open(args.script, encoding="utf-8") as fh:
            text = fh.read()
        where = args.script
    else:
        text = stdin.read()
        where = "<stdin>"
    try:
        script = parse(text, strict=False)
    except (ScriptSyntaxError, UnknownName) as exc:
        stderr.write("%s:%s\n" % (where, exc))
        return 2
    report = run(script, seed=args.seed, modulus=args.modulus)
    stdout.write(report.to_machine() if args.format == "machine" else report.to_text())
    return 0


if __name__ == "__main__":
    sys.exit(main())
