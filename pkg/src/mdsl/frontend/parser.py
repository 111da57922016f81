"""Recursive-descent parser for the DSL.

Precedence, loosest first: ``<=>``, ``==>``, ``\\/``, ``/\\``, backtick infix,
additive operators, multiplicative operators, composition ``.``, unary minus,
function application.

``f(a, b)`` with no space before the parenthesis is a call with two
arguments, equivalent to ``f a b``; ``f (a, b)`` passes one tuple.
"""

from . import ast as A
from .lexer import LexError, tokenize


class ParseError(ValueError):
    def __init__(self, message, line, col):
        super().__init__(f"{line}:{col}: {message}")
        self.message = message
        self.line = line
        self.col = col


# (operators, right associative)
_LEVELS = [
    ({"<=>"}, True),
    ({"==>"}, True),
    ({"\\/"}, False),
    ({"/\\"}, False),
    ("backtick", False),
    ({"<+>", "<->", "|+|", "|-|", "+", "-"}, False),
    ({"<.>", "><", "<*>", "|*|", "|><|", "|/|", "*", "/"}, False),
]


class Parser:
    def __init__(self, tokens, arities=None):
        self.tokens = tokens
        self.i = 0
        self.arities = arities or {}

    # -- token helpers -------------------------------------------------------

    @property
    def tok(self):
        return self.tokens[self.i]

    def peek(self, k=1):
        return self.tokens[min(self.i + k, len(self.tokens) - 1)]

    def advance(self):
        t = self.tokens[self.i]
        if t.kind != "eof":
            self.i += 1
        return t

    def at(self, kind, text=None):
        t = self.tok
        return t.kind == kind and (text is None or t.text == text)

    def error(self, message, tok=None):
        tok = tok or self.tok
        return ParseError(message, tok.line, tok.col)

    def expect(self, kind, text=None, hint=None):
        if not self.at(kind, text):
            want = hint or repr(text or kind)
            got = self.tok.text or "end of input"
            raise self.error(f"expected {want}, found {got!r}")
        return self.advance()

    @staticmethod
    def pos(tok):
        return (tok.line, tok.col)

    # -- statements ----------------------------------------------------------

    def statement(self):
        if self.at("keyword", "let"):
            start = self.advance()
            name = self.expect("ident", hint="a name after 'let'")
            if name.text in A.CONSTRUCTORS:
                raise self.error(f"cannot bind constructor name {name.text!r}", name)
            self.expect("op", "=", hint="'='")
            node = A.Let(name.text, self.expression(), self.pos(start))
        else:
            node = self.expression()
        if not self.at("eof"):
            raise self.error(f"unexpected {self.tok.text!r} after expression")
        return node

    # -- expressions ---------------------------------------------------------

    def expression(self):
        return self.binary(0)

    def _matches(self, level):
        ops, _ = _LEVELS[level]
        if ops == "backtick":
            return self.at("backtick")
        return self.at("op") and self.tok.text in ops

    def _operator(self, level):
        if _LEVELS[level][0] == "backtick":
            self.advance()
            name = self.expect("ident", hint="a function name inside backticks")
            self.expect("backtick", hint="closing '`'")
            return f"`{name.text}`"
        return self.advance().text

    def binary(self, level):
        if level == len(_LEVELS):
            return self.compose()
        _, right = _LEVELS[level]
        lhs = self.binary(level + 1)
        while self._matches(level):
            tok = self.tok
            op = self._operator(level)
            rhs = self.binary(level if right else level + 1)
            lhs = A.BinOp(op, lhs, rhs, self.pos(tok))
            if right:
                break
        return lhs

    def compose(self):
        lhs = self.unary()
        if self.at("op", "."):
            tok = self.advance()
            return A.Compose(lhs, self.compose(), self.pos(tok))
        return lhs

    def unary(self):
        if self.at("op", "-"):
            tok = self.advance()
            operand = self.unary()
            if isinstance(operand, A.Lit) and type(operand.value) in (int, float):
                return A.Lit(-operand.value, self.pos(tok))
            return A.Neg(operand, self.pos(tok))
        return self.application()

    def _starts_atom(self):
        t = self.tok
        if t.kind in ("int", "float", "string", "bool", "ident"):
            return True
        return t.kind == "bracket" and t.text in "([{"

    def _call_args(self):
        self.expect("bracket", "(")
        args = []
        if not self.at("bracket", ")"):
            args.append(self.expression())
            while self.at("comma"):
                self.advance()
                args.append(self.expression())
        self.expect("bracket", ")", hint="',' or ')'")
        return args

    def application(self):
        start = self.tok
        if start.kind == "ident" and start.text in A.CONSTRUCTORS:
            return self.constructor()
        callee = self.atom()
        args = []
        if self.at("bracket", "(") and not self.tok.spaced:
            args += self._call_args()
        while self._starts_atom():
            args.append(self.atom())
        if not args:
            return callee
        if isinstance(callee, A.Ctor):
            raise self.error(f"constructor {callee.name} is not a function", start)
        if isinstance(callee, A.Apply):
            callee, args = callee.callee, list(callee.args) + args
        self._check_arity(callee, args, start)
        return A.Apply(callee, tuple(args), self.pos(start))

    def _check_arity(self, callee, args, tok):
        if isinstance(callee, A.Var) and callee.name in self.arities:
            arity = self.arities[callee.name]
            if len(args) > arity:
                raise self.error(
                    f"{callee.name} takes {arity} argument{'s' * (arity != 1)}, given {len(args)}",
                    tok,
                )

    def constructor(self):
        tok = self.advance()
        name = tok.text
        arity = A.CONSTRUCTORS[name]
        args = []
        if arity:
            if self.at("bracket", "(") and not self.tok.spaced:
                args = self._call_args()
            elif self.at("bracket", "{") or self.at("bracket", "["):
                args = [self.group()]
            else:
                while len(args) < arity and self._starts_atom():
                    args.append(self.atom())
                # Graph (Vertices .., Edges ..) passes both parts as one tuple
                if len(args) == 1 and arity > 1 and isinstance(args[0], A.TupleLit):
                    args = list(args[0].items)
            if len(args) != arity:
                raise self.error(
                    f"constructor {name} takes {arity} argument{'s' * (arity != 1)}, given {len(args)}",
                    tok,
                )
        return A.Ctor(name, tuple(args), self.pos(tok))

    def group(self):
        """A ``[...]`` or ``{...}`` group: list items or an arithmetic range."""
        open_ = self.advance()
        close = "]" if open_.text == "[" else "}"
        items = []
        if self.at("bracket", close):
            self.advance()
            return A.ListLit((), self.pos(open_))
        items.append(self.expression())
        while True:
            if self.at("comma"):
                self.advance()
                items.append(self.expression())
            elif self.at("range"):
                if len(items) > 2:
                    raise self.error("a range takes at most two leading terms")
                self.advance()
                end = self.expression()
                self.expect("bracket", close, hint=repr(close))
                second = items[1] if len(items) == 2 else None
                return A.Range(items[0], second, end, self.pos(open_))
            else:
                self.expect("bracket", close, hint=f"',' or {close!r}")
                return A.ListLit(tuple(items), self.pos(open_))

    def atom(self):
        t = self.tok
        pos = self.pos(t)
        if t.kind == "int":
            self.advance()
            return A.Lit(int(t.text), pos)
        if t.kind == "float":
            self.advance()
            return A.Lit(float(t.text), pos)
        if t.kind == "string":
            self.advance()
            return A.Lit(t.text, pos)
        if t.kind == "bool":
            self.advance()
            return A.Lit(t.text == "True", pos)
        if t.kind == "ident":
            if t.text in A.CONSTRUCTORS:
                # constructors as arguments need all their own arguments
                return self.constructor()
            self.advance()
            return A.Var(t.text, pos)
        if t.kind == "bracket" and t.text == "[":
            return self.group()
        if t.kind == "bracket" and t.text == "{":
            group = self.group()
            return A.Ctor("Set", (group,), pos)
        if t.kind == "bracket" and t.text == "(":
            self.advance()
            first = self.expression()
            if self.at("comma"):
                items = [first]
                while self.at("comma"):
                    self.advance()
                    items.append(self.expression())
                self.expect("bracket", ")", hint="',' or ')'")
                return A.TupleLit(tuple(items), pos)
            self.expect("bracket", ")", hint="')'")
            return first
        got = t.text or "end of input"
        raise self.error(f"expected an expression, found {got!r}")


def parse(source_or_tokens, arities=None, line: int = 1):
    """Parse one statement (an expression or ``let name = expr``)."""
    if isinstance(source_or_tokens, str):
        tokens = tokenize(source_or_tokens, line)
    else:
        tokens = source_or_tokens
    if arities is None:
        from .builtins import ARITIES as arities
    return Parser(tokens, arities).statement()


__all__ = ["parse", "ParseError", "LexError", "Parser"]
