"""Lexer, parser, core translator, evaluator, renderer and REPL of the DSL."""

from .ast import CONSTRUCTORS, OPERATOR_FUNCTIONS
from .evaluator import Environment, EvalError, evaluate
from .lexer import LexError, Token, tokenize
from .parser import ParseError, parse
from .render import render
from .repl import Session, repl, run_source
from .translate import core, preprocess, to_text, translate

__all__ = [
    "CONSTRUCTORS", "OPERATOR_FUNCTIONS", "Environment", "EvalError", "evaluate",
    "LexError", "Token", "tokenize", "ParseError", "parse", "render", "Session",
    "repl", "run_source", "core", "preprocess", "to_text", "translate",
]
