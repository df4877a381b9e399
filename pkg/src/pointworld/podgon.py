"""The podgon definition-guessing game.

Shapes are feature records; definitions are boolean predicates over those
features, written in a small keyword language::

    polygon and equilateral and odd(straight)
    closed and odd(straight)
"""

from __future__ import annotations

import re
from dataclasses import dataclass, fields
from itertools import product
from typing import Iterable, Iterator, Union

from .errors import DefinitionSyntaxError

COUNTERS = ("straight", "curved", "sides", "vertices")
COMPARISONS = ("=", "!=", "<", "<=", ">", ">=")


@dataclass(frozen=True, order=True)
class ShapeDescription:
    closed: bool = False
    straight: int = 0
    curved: int = 0
    equal: bool = False
    vertices: int = 0

    def __post_init__(self) -> None:
        for name in ("straight", "curved", "vertices"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int) or value < 0:
                raise ValueError(f"{name} must be a nonnegative integer, got {value!r}")
        if self.equal and self.straight == 0:
            raise ValueError("equal needs at least one straight side")

    def counter(self, name: str) -> int:
        if name == "sides":
            return self.straight + self.curved
        return getattr(self, name)

    def __str__(self) -> str:
        return format_shape(self)


def parse_shape(text: str) -> ShapeDescription:
    """Read a literal like ``closed,straight=3,curved=1,vertices=4``."""
    values: dict[str, object] = {}
    booleans = {"closed", "equal"}
    counters = {"straight", "curved", "vertices"}
    for item in filter(None, (p.strip() for p in text.split(","))):
        if item in booleans:
            values[item] = True
            continue
        key, sep, raw = item.partition("=")
        key = key.strip()
        if not sep or key not in counters or not raw.strip().isdigit():
            raise ValueError(f"bad shape feature {item!r}")
        values[key] = int(raw)
    return ShapeDescription(**values)  # type: ignore[arg-type]


def format_shape(shape: ShapeDescription) -> str:
    parts = []
    if shape.closed:
        parts.append("closed")
    for name in ("straight", "curved"):
        if getattr(shape, name):
            parts.append(f"{name}={getattr(shape, name)}")
    if shape.equal:
        parts.append("equal")
    if shape.vertices:
        parts.append(f"vertices={shape.vertices}")
    return ",".join(parts) or "open"


# --------------------------------------------------------------------- AST


@dataclass(frozen=True)
class Flag:
    name: str  # closed | polygon | equilateral


@dataclass(frozen=True)
class Parity:
    odd: bool
    counter: str


@dataclass(frozen=True)
class Compare:
    counter: str
    op: str
    value: int


@dataclass(frozen=True)
class Not:
    arg: "Expr"


@dataclass(frozen=True)
class And:
    args: tuple["Expr", ...]


@dataclass(frozen=True)
class Or:
    args: tuple["Expr", ...]


Expr = Union[Flag, Parity, Compare, Not, And, Or]

_TOKEN_RE = re.compile(r"\s*(?:(!=|<=|>=|=|<|>|\(|\))|([A-Za-z_]+)|([0-9]+))")


def _tokenize(text: str) -> list[tuple[str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN_RE.match(text, pos)
        if not m:
            raise DefinitionSyntaxError(f"unexpected character {text[pos:].lstrip()[0]!r}", pos, text)
        start = m.start(m.lastindex or 0)
        tokens.append((m.group(m.lastindex or 0), start))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> str | None:
        return self.tokens[self.i][0] if self.i < len(self.tokens) else None

    def pos(self) -> int:
        return self.tokens[self.i][1] if self.i < len(self.tokens) else len(self.text)

    def fail(self, message: str) -> DefinitionSyntaxError:
        return DefinitionSyntaxError(message, self.pos(), self.text)

    def take(self, expected: str | None = None) -> str:
        tok = self.peek()
        if tok is None:
            raise self.fail(f"expected {expected!r}, got end of input" if expected else "unexpected end of input")
        if expected is not None and tok != expected:
            raise self.fail(f"expected {expected!r}, got {tok!r}")
        self.i += 1
        return tok

    def parse(self) -> Expr:
        expr = self.expr()
        if self.peek() is not None:
            raise self.fail(f"unexpected {self.peek()!r}")
        return expr

    def expr(self) -> Expr:
        items = [self.term()]
        while self.peek() == "or":
            self.take()
            items.append(self.term())
        return items[0] if len(items) == 1 else Or(tuple(items))

    def term(self) -> Expr:
        items = [self.factor()]
        while self.peek() == "and":
            self.take()
            items.append(self.factor())
        return items[0] if len(items) == 1 else And(tuple(items))

    def factor(self) -> Expr:
        tok = self.peek()
        if tok == "not":
            self.take()
            return Not(self.factor())
        if tok == "(":
            self.take()
            inner = self.expr()
            self.take(")")
            return inner
        return self.atom()

    def counter(self) -> str:
        tok = self.peek()
        if tok not in COUNTERS:
            raise self.fail(f"expected a counter ({', '.join(COUNTERS)}), got {tok!r}")
        return self.take()

    def atom(self) -> Expr:
        tok = self.peek()
        if tok in ("closed", "polygon", "equilateral"):
            return Flag(self.take())
        if tok in ("odd", "even"):
            self.take()
            self.take("(")
            name = self.counter()
            self.take(")")
            return Parity(tok == "odd", name)
        if tok in COUNTERS:
            name = self.take()
            op = self.peek()
            if op not in COMPARISONS:
                raise self.fail(f"expected a comparison after {name!r}")
            self.take()
            num = self.peek()
            if num is None or not num.isdigit():
                raise self.fail("expected a natural number")
            self.take()
            return Compare(name, op, int(num))
        if tok is None:
            raise self.fail("unexpected end of input")
        raise self.fail(f"unexpected {tok!r}")


def parse_definition(text: str) -> Expr:
    return _Parser(text).parse()


def format_definition(expr: Expr) -> str:
    """Canonical text: minimal parentheses, single spaces."""
    if isinstance(expr, Flag):
        return expr.name
    if isinstance(expr, Parity):
        return f"{'odd' if expr.odd else 'even'}({expr.counter})"
    if isinstance(expr, Compare):
        return f"{expr.counter} {expr.op} {expr.value}"
    if isinstance(expr, Not):
        inner = format_definition(expr.arg)
        return f"not ({inner})" if isinstance(expr.arg, (And, Or)) else f"not {inner}"
    if isinstance(expr, And):
        return " and ".join(
            f"({format_definition(a)})" if isinstance(a, (And, Or)) else format_definition(a)
            for a in expr.args
        )
    return " or ".join(
        f"({format_definition(a)})" if isinstance(a, Or) else format_definition(a) for a in expr.args
    )


_CMP = {
    "=": lambda a, b: a == b,
    "!=": lambda a, b: a != b,
    "<": lambda a, b: a < b,
    "<=": lambda a, b: a <= b,
    ">": lambda a, b: a > b,
    ">=": lambda a, b: a >= b,
}


def evaluate(expr: Expr, shape: ShapeDescription) -> bool:
    if isinstance(expr, Flag):
        if expr.name == "closed":
            return shape.closed
        if expr.name == "equilateral":
            return shape.equal
        return shape.closed and shape.curved == 0 and shape.straight >= 3
    if isinstance(expr, Parity):
        return (shape.counter(expr.counter) % 2 == 1) == expr.odd
    if isinstance(expr, Compare):
        return _CMP[expr.op](shape.counter(expr.counter), expr.value)
    if isinstance(expr, Not):
        return not evaluate(expr.arg, shape)
    if isinstance(expr, And):
        return all(evaluate(a, shape) for a in expr.args)
    return any(evaluate(a, shape) for a in expr.args)


# -------------------------------------------------------------- the game


@dataclass(frozen=True)
class LabeledExample:
    shape: ShapeDescription
    is_member: bool


@dataclass(frozen=True)
class Counterexample:
    shape: ShapeDescription
    expected: bool
    got: bool

    def __str__(self) -> str:
        label = lambda b: "member" if b else "nonmember"  # noqa: E731
        return f"COUNTEREXAMPLE {format_shape(self.shape)} expected={label(self.expected)} got={label(self.got)}"


def parse_table(text: str) -> list[LabeledExample]:
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        shape_text, arrow, verdict = line.partition("->")
        verdict = verdict.strip()
        if not arrow or verdict not in ("member", "nonmember"):
            raise ValueError(f"line {lineno}: expected '<shape> -> member|nonmember'")
        try:
            shape = parse_shape(shape_text.strip())
        except ValueError as exc:
            raise ValueError(f"line {lineno}: {exc}") from exc
        rows.append(LabeledExample(shape, verdict == "member"))
    return rows


def consistent(expr: Expr, examples: Iterable[LabeledExample]) -> Counterexample | None:
    """None when the definition agrees with every label, else the first disagreement."""
    for ex in examples:
        got = evaluate(expr, ex.shape)
        if got != ex.is_member:
            return Counterexample(ex.shape, ex.is_member, got)
    return None


@dataclass(frozen=True)
class Bounds:
    straight: int = 6
    curved: int = 3
    vertices: int = 8

    def __post_init__(self) -> None:
        for f in fields(self):
            if getattr(self, f.name) < 0:
                raise ValueError(f"{f.name} bound must be nonnegative")


def parse_bounds(text: str) -> Bounds:
    values = {}
    for item in filter(None, (p.strip() for p in text.split(","))):
        key, sep, raw = item.partition("=")
        if not sep or key.strip() not in ("straight", "curved", "vertices") or not raw.strip().isdigit():
            raise ValueError(f"bad bound {item!r}")
        values[key.strip()] = int(raw)
    return Bounds(**values)


def shape_grid(bounds: Bounds = Bounds()) -> Iterator[ShapeDescription]:
    """Every drawable shape within the bounds, in canonical (field-tuple) order."""
    for closed, straight, curved, equal, vertices in product(
        (False, True),
        range(bounds.straight + 1),
        range(bounds.curved + 1),
        (False, True),
        range(bounds.vertices + 1),
    ):
        if equal and straight == 0:
            continue
        if closed and curved == 0 and straight < 3:
            continue  # one or two straight strokes cannot enclose a region
        yield ShapeDescription(closed, straight, curved, equal, vertices)


def discriminating_shapes(e1: Expr, e2: Expr, bounds: Bounds = Bounds()) -> list[ShapeDescription]:
    return [s for s in shape_grid(bounds) if evaluate(e1, s) != evaluate(e2, s)]


def entails(e1: Expr, e2: Expr, bounds: Bounds = Bounds()) -> tuple[bool, ShapeDescription | None]:
    """(True, None) when every bounded shape meeting e1 meets e2, else (False, witness)."""
    for s in shape_grid(bounds):
        if evaluate(e1, s) and not evaluate(e2, s):
            return False, s
    return True, None


DEFINITION_A = "polygon and equilateral and odd(straight)"
DEFINITION_B = "closed and odd(straight)"
