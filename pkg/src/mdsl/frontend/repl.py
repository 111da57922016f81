"""Read-parse-evaluate-render loop and file runner."""

import sys

from . import ast as A
from .evaluator import Environment, EvalError, evaluate
from .lexer import LexError
from .parser import ParseError, parse
from .render import render

DEFAULT_PROMPT = "mdsl> "


class Session:
    """One interactive session; ``let`` bindings persist between lines."""

    def __init__(self, seed: int = 0):
        self.env = Environment(seed)

    def run_line(self, text: str, line: int = 1):
        """Evaluate one line. Returns the rendered result, or None for a
        ``let``, a blank line or a comment."""
        text = text.rstrip("\r\n")
        stripped = text.strip()
        if not stripped or stripped.startswith("--"):
            return None
        node = parse(text, line=line)
        value = evaluate(node, self.env)
        if isinstance(node, A.Let):
            return None
        return render(value)


ERRORS = (ParseError, LexError, EvalError)


def repl(instream=None, outstream=None, prompt=DEFAULT_PROMPT, seed=0) -> int:
    instream = instream or sys.stdin
    outstream = outstream or sys.stdout
    session = Session(seed)
    lineno = 0
    while True:
        if prompt:
            outstream.write(prompt)
            outstream.flush()
        text = instream.readline()
        if not text:
            if prompt:
                outstream.write("\n")
            return 0
        lineno += 1
        try:
            out = session.run_line(text, lineno)
        except ERRORS as exc:
            outstream.write(f"error: {exc}\n")
            continue
        if out is not None:
            outstream.write(out + "\n")


def run_source(source: str, name="<input>", outstream=None, errstream=None, seed=0) -> int:
    outstream = outstream or sys.stdout
    errstream = errstream or sys.stderr
    session = Session(seed)
    for lineno, text in enumerate(source.splitlines(), start=1):
        try:
            out = session.run_line(text, lineno)
        except ERRORS as exc:
            errstream.write(f"{name}:{exc}\n" if str(exc)[:1].isdigit() else f"{name}: {exc}\n")
            return 1
        if out is not None:
            outstream.write(out + "\n")
    return 0
