"""
函数表达式的词法与递归下降语法分析。

文法（优先级 ^ > 一元负号 > *,/ > +,−；+ − * / 左结合，^ 右结合）::

    expr  := term (("+" | "-") term)*
    term  := unary (("*" | "/") unary)*
    unary := "-" unary | power
    power := atom ("^" unary)?
    atom  := NUMBER | "pi" | "e" | "t" | "x" | FUNC "(" expr ")" | "(" expr ")"

一元负号作用于常量时直接折叠为负常量，与导数中出现的负常量保持同一结构。
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass

from gaussrs.core.exceptions import ExprSyntaxError, UnknownIdentifierError
from gaussrs.services.expression import UNARY_FUNCTIONS, Binary, Constant, Expr, Unary, Variable

NAMED_CONSTANTS = {"pi": math.pi, "e": math.e}
VARIABLE_NAMES = frozenset({"t", "x"})

_TOKEN_PATTERN = re.compile(
    r"""
    (?P<space>\s+)
  | (?P<number>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)
  | (?P<name>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<op>[-+*/^()])
    """,
    re.VERBOSE,
)


@dataclass(frozen=True, slots=True)
class Token:
    kind: str
    text: str
    offset: int
    """在 UTF-8 编码文本中的字节偏移"""


def tokenize(text: str) -> list[Token]:
    tokens: list[Token] = []
    position = 0
    while position < len(text):
        match = _TOKEN_PATTERN.match(text, position)
        if match is None:
            raise ExprSyntaxError(f"无法识别的字符 {text[position]!r}", _byte_offset(text, position))
        kind = match.lastgroup or ""
        if kind != "space":
            tokens.append(Token(kind, match.group(), _byte_offset(text, position)))
        position = match.end()
    tokens.append(Token("end", "", _byte_offset(text, len(text))))
    return tokens


def _byte_offset(text: str, index: int) -> int:
    return len(text[:index].encode("utf-8"))


class _Parser:
    def __init__(self, tokens: list[Token]) -> None:
        self.tokens = tokens
        self.index = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.index]

    def advance(self) -> Token:
        token = self.tokens[self.index]
        self.index += 1
        return token

    def expect(self, text: str) -> Token:
        token = self.current
        if token.text != text or token.kind == "end":
            found = "输入结尾" if token.kind == "end" else repr(token.text)
            raise ExprSyntaxError(f"期望 {text!r}，但遇到 {found}", token.offset)
        return self.advance()

    def parse(self) -> Expr:
        expr = self.expr()
        if self.current.kind != "end":
            raise ExprSyntaxError(f"多余的符号 {self.current.text!r}", self.current.offset)
        return expr

    def expr(self) -> Expr:
        node = self.term()
        while self.current.kind == "op" and self.current.text in ("+", "-"):
            op = self.advance().text
            node = Binary(op, node, self.term())
        return node

    def term(self) -> Expr:
        node = self.unary()
        while self.current.kind == "op" and self.current.text in ("*", "/"):
            op = self.advance().text
            node = Binary(op, node, self.unary())
        return node

    def unary(self) -> Expr:
        if self.current.kind == "op" and self.current.text == "-":
            self.advance()
            operand = self.unary()
            if isinstance(operand, Constant):
                return Constant(-operand.value)
            return Unary("neg", operand)
        return self.power()

    def power(self) -> Expr:
        base = self.atom()
        if self.current.kind == "op" and self.current.text == "^":
            self.advance()
            return Binary("^", base, self.unary())
        return base

    def atom(self) -> Expr:
        token = self.current
        if token.kind == "number":
            self.advance()
            return Constant(float(token.text))
        if token.kind == "name":
            return self.named(token)
        if token.kind == "op" and token.text == "(":
            self.advance()
            inner = self.expr()
            self.expect(")")
            return inner
        found = "输入结尾" if token.kind == "end" else repr(token.text)
        raise ExprSyntaxError(f"期望数字、变量、函数或 '('，但遇到 {found}", token.offset)

    def named(self, token: Token) -> Expr:
        name = token.text
        self.advance()
        if name in UNARY_FUNCTIONS:
            self.expect("(")
            argument = self.expr()
            self.expect(")")
            return Unary(name, argument)
        if name in VARIABLE_NAMES:
            return Variable()
        if name in NAMED_CONSTANTS:
            return Constant(NAMED_CONSTANTS[name])
        raise UnknownIdentifierError(name, token.offset)


def parse(text: str) -> Expr:
    """把函数定义文本解析为 Expr；t 与 x 是同一个自变量的两个名字。"""
    if not text or not text.strip():
        raise ExprSyntaxError("表达式为空", 0)
    return _Parser(tokenize(text)).parse()
