"""
函数表达式的抽象语法树：求值、符号求导与回写为文本。

节点均为不可变 dataclass，结构相等即 dataclass 相等；同一棵树可以在多个线程中并发求值。
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, ClassVar

import numpy as np
from numpy.typing import ArrayLike

from gaussrs.core.exceptions import ExprDomainError, NonDifferentiableError

UNARY_FUNCTIONS: dict[str, Callable[[np.ndarray], np.ndarray]] = {
    "sin": np.sin,
    "cos": np.cos,
    "exp": np.exp,
    "log": np.log,
    "abs": np.abs,
    "sqrt": np.sqrt,
}

BINARY_OPERATORS: dict[str, Callable[[np.ndarray, np.ndarray], np.ndarray]] = {
    "+": np.add,
    "-": np.subtract,
    "*": np.multiply,
    "/": np.divide,
    "^": np.power,
}

# 打印时的优先级：数值越大结合越紧
_PRECEDENCE = {"+": 1, "-": 1, "*": 2, "/": 2, "neg": 3, "^": 4}
_ATOM = 5


class Expr:
    """表达式节点基类。"""

    precedence: ClassVar[int] = _ATOM

    def evaluate(self, xs: ArrayLike) -> np.ndarray:
        """在 xs（标量或数组）处求值；任何节点越出定义域都会抛出 ExprDomainError。"""
        points = np.asarray(xs, dtype=float)
        with np.errstate(divide="raise", invalid="raise", over="raise", under="ignore"):
            return np.asarray(self._evaluate(points), dtype=float)

    def _evaluate(self, xs: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def derivative(self) -> Expr:
        raise NotImplementedError

    def has_variable(self) -> bool:
        raise NotImplementedError

    def _apply(self, op: Callable[..., np.ndarray], *args: np.ndarray) -> np.ndarray:
        try:
            result = op(*args)
        except (FloatingPointError, ZeroDivisionError) as exc:
            raise ExprDomainError(unparse(self), str(exc)) from exc
        if not np.all(np.isfinite(result)):
            raise ExprDomainError(unparse(self), "结果不是有限实数")
        return result


@dataclass(frozen=True)
class Constant(Expr):
    value: float

    def _evaluate(self, xs: np.ndarray) -> np.ndarray:
        return np.full_like(xs, self.value)

    def derivative(self) -> Expr:
        return ZERO

    def has_variable(self) -> bool:
        return False

    @property
    def precedence(self) -> int:  # type: ignore[override]
        return _PRECEDENCE["neg"] if self.value < 0 else _ATOM


@dataclass(frozen=True)
class Variable(Expr):
    """唯一的自变量，文本中写作 t 或 x。"""

    def _evaluate(self, xs: np.ndarray) -> np.ndarray:
        return xs

    def derivative(self) -> Expr:
        return ONE

    def has_variable(self) -> bool:
        return True


@dataclass(frozen=True)
class Unary(Expr):
    """一元节点：op 为 neg 或 UNARY_FUNCTIONS 中的函数名。"""

    op: str
    child: Expr

    def __post_init__(self) -> None:
        if self.op != "neg" and self.op not in UNARY_FUNCTIONS:
            raise ValueError(f"不支持的一元运算 {self.op!r}")

    @property
    def precedence(self) -> int:  # type: ignore[override]
        return _PRECEDENCE["neg"] if self.op == "neg" else _ATOM

    def _evaluate(self, xs: np.ndarray) -> np.ndarray:
        inner = self.child._evaluate(xs)
        if self.op == "neg":
            return -inner
        return self._apply(UNARY_FUNCTIONS[self.op], inner)

    def has_variable(self) -> bool:
        return self.child.has_variable()

    def derivative(self) -> Expr:
        u = self.child
        du = u.derivative()
        match self.op:
            case "neg":
                return neg(du)
            case "sin":
                return mul(Unary("cos", u), du)
            case "cos":
                return mul(neg(Unary("sin", u)), du)
            case "exp":
                return mul(self, du)
            case "log":
                return div(du, u)
            case "sqrt":
                return div(du, mul(Constant(2.0), self))
            case _:
                raise NonDifferentiableError(unparse(self))


@dataclass(frozen=True)
class Binary(Expr):
    op: str
    left: Expr
    right: Expr

    def __post_init__(self) -> None:
        if self.op not in BINARY_OPERATORS:
            raise ValueError(f"不支持的二元运算 {self.op!r}")

    @property
    def precedence(self) -> int:  # type: ignore[override]
        return _PRECEDENCE[self.op]

    def _evaluate(self, xs: np.ndarray) -> np.ndarray:
        left = self.left._evaluate(xs)
        right = self.right._evaluate(xs)
        return self._apply(BINARY_OPERATORS[self.op], left, right)

    def has_variable(self) -> bool:
        return self.left.has_variable() or self.right.has_variable()

    def derivative(self) -> Expr:
        u, v = self.left, self.right
        match self.op:
            case "+":
                return add(u.derivative(), v.derivative())
            case "-":
                return sub(u.derivative(), v.derivative())
            case "*":
                return add(mul(u.derivative(), v), mul(u, v.derivative()))
            case "/":
                numerator = sub(mul(u.derivative(), v), mul(u, v.derivative()))
                return div(numerator, power(v, Constant(2.0)))
            case _:
                return self._power_derivative()

    def _power_derivative(self) -> Expr:
        u, v = self.left, self.right
        if not v.has_variable():
            # 幂法则 d(u^c) = c·u^(c−1)·u'
            return mul(mul(v, power(u, sub(v, ONE))), u.derivative())
        if not u.has_variable():
            # d(c^v) = c^v·log(c)·v'
            return mul(mul(self, Unary("log", u)), v.derivative())
        # d(u^v) = u^v·(v'·log(u) + v·u'/u)
        inner = add(mul(v.derivative(), Unary("log", u)), div(mul(v, u.derivative()), u))
        return mul(self, inner)


ZERO = Constant(0.0)
ONE = Constant(1.0)


# 带常量折叠的构造函数，只做折叠，不做其它化简


def _is(e: Expr, value: float) -> bool:
    return isinstance(e, Constant) and e.value == value


def neg(u: Expr) -> Expr:
    if isinstance(u, Constant):
        return Constant(-u.value)
    return Unary("neg", u)


def add(u: Expr, v: Expr) -> Expr:
    if isinstance(u, Constant) and isinstance(v, Constant):
        return Constant(u.value + v.value)
    if _is(u, 0.0):
        return v
    if _is(v, 0.0):
        return u
    return Binary("+", u, v)


def sub(u: Expr, v: Expr) -> Expr:
    if isinstance(u, Constant) and isinstance(v, Constant):
        return Constant(u.value - v.value)
    if _is(v, 0.0):
        return u
    if _is(u, 0.0):
        return neg(v)
    return Binary("-", u, v)


def mul(u: Expr, v: Expr) -> Expr:
    if isinstance(u, Constant) and isinstance(v, Constant):
        return Constant(u.value * v.value)
    if _is(u, 0.0) or _is(v, 0.0):
        return ZERO
    if _is(u, 1.0):
        return v
    if _is(v, 1.0):
        return u
    return Binary("*", u, v)


def div(u: Expr, v: Expr) -> Expr:
    if isinstance(u, Constant) and isinstance(v, Constant) and v.value != 0.0:
        return Constant(u.value / v.value)
    if _is(u, 0.0):
        return ZERO
    if _is(v, 1.0):
        return u
    return Binary("/", u, v)


def power(u: Expr, v: Expr) -> Expr:
    if _is(v, 0.0):
        return ONE
    if _is(v, 1.0):
        return u
    return Binary("^", u, v)


def evaluate(e: Expr, x: float) -> float:
    """表达式 e 在实数 x 处的值。"""
    return float(e.evaluate(x))


def differentiate(e: Expr) -> Expr:
    """对唯一自变量的符号导数；包含 abs 节点时抛出 NonDifferentiableError。"""
    _reject_abs(e)
    return e.derivative()


def _reject_abs(e: Expr) -> None:
    if isinstance(e, Unary):
        if e.op == "abs":
            raise NonDifferentiableError(unparse(e))
        _reject_abs(e.child)
    elif isinstance(e, Binary):
        _reject_abs(e.left)
        _reject_abs(e.right)


def unparse(e: Expr) -> str:
    """把表达式写回文本，只在优先级或结合性需要时加括号；parse(unparse(e)) 与 e 结构一致。"""
    match e:
        case Constant(value=value):
            if value.is_integer() and abs(value) < 1e15:
                return str(int(value))
            return repr(value)
        case Variable():
            return "t"
        case Unary(op="neg", child=child):
            return "-" + _wrap(child, child.precedence < _PRECEDENCE["neg"])
        case Unary(op=op, child=child):
            return f"{op}({unparse(child)})"
        case Binary(op="^", left=left, right=right):
            # 底数只能是原子；指数位置允许一元负号与更紧的结构
            base = _wrap(left, left.precedence < _ATOM)
            exponent = _wrap(right, right.precedence < _PRECEDENCE["neg"])
            return f"{base}^{exponent}"
        case Binary(op=op, left=left, right=right):
            p = _PRECEDENCE[op]
            lhs = _wrap(left, left.precedence < p)
            rhs = _wrap(right, right.precedence <= p)
            return f"{lhs} {op} {rhs}"
    raise TypeError(f"未知的表达式节点 {e!r}")


def _wrap(e: Expr, needed: bool) -> str:
    text = unparse(e)
    return f"({text})" if needed else text
