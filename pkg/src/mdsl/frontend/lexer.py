"""Tokenizer for the DSL surface syntax."""

from dataclasses import dataclass, field

# longest first, so that e.g. "|><|" wins over "><"
OPERATORS = sorted(
    [
        "/\\", "\\/", "==>", "<=>",
        "<+>", "<->", "<.>", "><", "<*>",
        "|+|", "|-|", "|*|", "|><|", "|/|",
        "+", "-", "*", "/", ".", "=",
    ],
    key=len,
    reverse=True,
)

UNICODE_ALIASES = {
    "∧": "/\\",
    "∨": "\\/",
    "⇒": "==>",
    "⇔": "<=>",
    "∘": ".",
    "·": ".",
}

BRACKETS = "()[]{}"
KEYWORDS = {"let"}
_ESCAPES = {"n": "\n", "t": "\t", "r": "\r", "b": "\b", "f": "\f", '"': '"', "\\": "\\", "/": "/"}


class LexError(ValueError):
    def __init__(self, message, line, col):
        super().__init__(f"{line}:{col}: {message}")
        self.line = line
        self.col = col


@dataclass(frozen=True)
class Token:
    kind: str  # ident, int, float, string, bool, op, bracket, comma, backtick, range, keyword, eof
    text: str
    line: int = field(default=1, compare=False)
    col: int = field(default=1, compare=False)
    # whether whitespace separates this token from the previous one
    spaced: bool = field(default=True, compare=False)


def _ident_char(ch):
    return ch.isalnum() or ch in "_'"


def tokenize(source: str, line: int = 1) -> list:
    tokens = []
    i, n = 0, len(source)
    col_base = 0  # index of the first character of the current line
    spaced = True

    def add(kind, text, start):
        nonlocal spaced
        tokens.append(Token(kind, text, line, start - col_base + 1, spaced))
        spaced = False

    while i < n:
        ch = source[i]
        if ch == "\n":
            line += 1
            i += 1
            col_base = i
            spaced = True
            continue
        if ch.isspace():
            i += 1
            spaced = True
            continue
        if source.startswith("--", i) and not source.startswith("-->", i):
            while i < n and source[i] != "\n":
                i += 1
            spaced = True
            continue
        start = i
        if ch.isdigit():
            while i < n and source[i].isdigit():
                i += 1
            is_float = False
            # a '.' followed by a digit is a decimal point; ".." is a range
            if i + 1 < n and source[i] == "." and source[i + 1].isdigit():
                is_float = True
                i += 1
                while i < n and source[i].isdigit():
                    i += 1
            if i < n and source[i] in "eE":
                j = i + 1
                if j < n and source[j] in "+-":
                    j += 1
                if j < n and source[j].isdigit():
                    is_float = True
                    i = j
                    while i < n and source[i].isdigit():
                        i += 1
            add("float" if is_float else "int", source[start:i], start)
            continue
        if ch.isalpha() or ch == "_":
            while i < n and _ident_char(source[i]):
                i += 1
            word = source[start:i]
            if word in ("True", "False"):
                add("bool", word, start)
            elif word in KEYWORDS:
                add("keyword", word, start)
            else:
                add("ident", word, start)
            continue
        if ch == '"':
            i += 1
            buf = []
            while True:
                if i >= n or source[i] == "\n":
                    raise LexError("unterminated string", line, start - col_base + 1)
                c = source[i]
                if c == '"':
                    i += 1
                    break
                if c == "\\" and i + 1 < n:
                    esc = source[i + 1]
                    if esc == "u":
                        digits = source[i + 2 : i + 6]
                        if len(digits) != 4 or any(d not in "0123456789abcdefABCDEF" for d in digits):
                            raise LexError("\\u needs four hex digits", line, i - col_base + 1)
                        buf.append(chr(int(digits, 16)))
                        i += 6
                        continue
                    buf.append(_ESCAPES.get(esc, "\\" + esc))
                    i += 2
                    continue
                buf.append(c)
                i += 1
            add("string", "".join(buf), start)
            continue
        if ch in BRACKETS:
            add("bracket", ch, start)
            i += 1
            continue
        if ch == ",":
            add("comma", ch, start)
            i += 1
            continue
        if ch == "`":
            add("backtick", ch, start)
            i += 1
            continue
        if source.startswith("..", i):
            add("range", "..", start)
            i += 2
            continue
        if ch in UNICODE_ALIASES:
            add("op", UNICODE_ALIASES[ch], start)
            i += 1
            continue
        for op in OPERATORS:
            if source.startswith(op, i):
                add("op", op, start)
                i += len(op)
                break
        else:
            raise LexError(f"unexpected character {ch!r}", line, start - col_base + 1)
    tokens.append(Token("eof", "", line, i - col_base + 1, True))
    return tokens
