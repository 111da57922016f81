"""Source-to-core translation.

The core form is the surface language with every operator, backtick infix,
composition and negation rewritten as an ordinary call, printed in ASCII with
explicit parentheses. Core text parses back to exactly the tree it was
printed from, so translating core text again changes nothing.
"""

import json
import sys

from . import ast as A
from .lexer import LexError
from .parser import ParseError, parse


def core(node):
    """Desugar a surface tree into core form."""
    if isinstance(node, (A.Lit, A.Var)):
        return node
    if isinstance(node, A.ListLit):
        return A.ListLit(tuple(core(x) for x in node.items), node.pos)
    if isinstance(node, A.TupleLit):
        return A.TupleLit(tuple(core(x) for x in node.items), node.pos)
    if isinstance(node, A.Range):
        second = None if node.second is None else core(node.second)
        return A.Range(core(node.start), second, core(node.end), node.pos)
    if isinstance(node, A.Ctor):
        return A.Ctor(node.name, tuple(core(x) for x in node.args), node.pos)
    if isinstance(node, A.BinOp):
        fn = A.Var(A.operator_function(node.op), node.pos)
        return _apply(fn, [core(node.lhs), core(node.rhs)], node.pos)
    if isinstance(node, A.Neg):
        operand = core(node.operand)
        if isinstance(operand, A.Lit) and type(operand.value) in (int, float):
            return A.Lit(-operand.value, node.pos)
        return _apply(A.Var("neg", node.pos), [operand], node.pos)
    if isinstance(node, A.Compose):
        return _apply(A.Var("compose", node.pos), [core(node.outer), core(node.inner)], node.pos)
    if isinstance(node, A.Apply):
        return _apply(core(node.callee), [core(x) for x in node.args], node.pos)
    if isinstance(node, A.Let):
        return A.Let(node.name, core(node.expr), node.pos)
    raise TypeError(f"not a syntax tree node: {node!r}")


def _apply(callee, args, pos):
    if isinstance(callee, A.Apply):
        return A.Apply(callee.callee, callee.args + tuple(args), pos)
    return A.Apply(callee, tuple(args), pos)


def _lit(value):
    if isinstance(value, bool):
        return "True" if value else "False"
    if isinstance(value, str):
        return json.dumps(value, ensure_ascii=True)
    return repr(value)


def _join(items):
    return ", ".join(to_text(x) for x in items)


def to_text(node) -> str:
    """Print a tree as core text (desugaring it first)."""
    node = core(node)
    if isinstance(node, A.Lit):
        return _lit(node.value)
    if isinstance(node, A.Var):
        return node.name
    if isinstance(node, A.ListLit):
        return f"[{_join(node.items)}]"
    if isinstance(node, A.TupleLit):
        return f"({_join(node.items)})"
    if isinstance(node, A.Range):
        head = to_text(node.start)
        if node.second is not None:
            head += ", " + to_text(node.second)
        return f"[{head}..{to_text(node.end)}]"
    if isinstance(node, A.Ctor):
        return node.name if not node.args else f"{node.name}({_join(node.args)})"
    if isinstance(node, A.Apply):
        callee = node.callee
        head = callee.name if isinstance(callee, A.Var) else f"({to_text(callee)})"
        return f"{head}({_join(node.args)})"
    if isinstance(node, A.Let):
        return f"let {node.name} = {to_text(node.expr)}"
    raise TypeError(f"not a syntax tree node: {node!r}")


def translate_line(text: str, line: int = 1) -> str:
    return to_text(parse(text, line=line))


def translate(source: str) -> str:
    """Translate a whole program, one statement per line.

    Blank lines and whole-line comments are copied through; trailing comments
    are dropped.
    """
    out = []
    for lineno, text in enumerate(source.splitlines(), start=1):
        stripped = text.strip()
        if not stripped or stripped.startswith("--"):
            out.append(text.rstrip())
            continue
        out.append(translate_line(text, lineno))
    return "\n".join(out) + ("\n" if out else "")


def preprocess(original_name, input_path, output_path, stderr=None) -> int:
    """Three-argument preprocessor entry: original name, input file, output file."""
    stderr = stderr or sys.stderr
    try:
        with open(input_path, encoding="utf-8") as f:
            source = f.read()
    except (OSError, UnicodeDecodeError) as exc:
        print(f"{original_name}: error: cannot read {input_path}: {exc}", file=stderr)
        return 2
    try:
        result = translate(source)
    except (ParseError, LexError) as exc:
        print(f"{original_name}:{exc.line}:{exc.col}: error: {_message(exc)}", file=stderr)
        return 1
    try:
        with open(output_path, "w", encoding="utf-8", newline="\n") as f:
            f.write(result)
    except OSError as exc:
        print(f"{original_name}: error: cannot write {output_path}: {exc}", file=stderr)
        return 2
    return 0


def _message(exc):
    return getattr(exc, "message", None) or str(exc).split(": ", 1)[-1]
