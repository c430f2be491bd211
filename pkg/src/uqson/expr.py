"""Expression surface syntax for algebra elements.

Grammar (precedence low to high: +/- then * then unary minus):

    expr    := term (('+' | '-') term)*
    term    := factor ('*' factor)*
    factor  := '-' factor | primary
    primary := '(' expr ')' | generator | scalar
    generator := 'I' d d | 'Ip' d d | 'Im' d d          (row digit, col digit)
    scalar  := INT ('/' INT)? | 'q' ('^' qexp)?
    qexp    := INT | '(' '-'? INT ('/' '2')? ')'

Ip/Im force the plus/minus variant of a composite generator; plain I names a
neighbor generator or the ambient-variant composite. Parsing is
rank-agnostic; index bounds are enforced at evaluation (or at parse time
when a rank is supplied).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .coeffring import LaurentPoly
from .errors import ExpressionSyntaxError, IndexOutOfRange, VariantMismatch
from .pbw import MINUS, PLUS
from .pbw.algebra import AlgebraElement

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<gen>I[pm]?\d{2})|(?P<num>\d+)|(?P<q>q)|(?P<op>[-+*/^()]))"
)


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    column: int


def tokenize(src):
    tokens = []
    pos = 0
    while pos < len(src):
        m = _TOKEN_RE.match(src, pos)
        if m is None:
            rest = src[pos:].lstrip()
            if not rest:
                break
            col = len(src) - len(src[pos:].lstrip()) + 1
            raise ExpressionSyntaxError(
                f"unexpected character {rest[0]!r}", column=col
            )
        for kind in ("gen", "num", "q", "op"):
            text = m.group(kind)
            if text is not None:
                tokens.append(Token(kind, text, m.start(kind) + 1))
                break
        pos = m.end()
    return tokens


# -- AST -----------------------------------------------------------------------


@dataclass(frozen=True)
class Gen:
    row: int
    col: int
    marker: str  # "", "p", or "m"
    column: int


@dataclass(frozen=True)
class Scalar:
    value: LaurentPoly


@dataclass(frozen=True)
class Neg:
    inner: object


@dataclass(frozen=True)
class Mul:
    left: object
    right: object


@dataclass(frozen=True)
class Add:
    left: object
    right: object


@dataclass(frozen=True)
class Sub:
    left: object
    right: object


class _Parser:
    def __init__(self, tokens, n=None):
        self.tokens = tokens
        self.i = 0
        self.n = n

    def _fail(self, message, column=None):
        if column is None:
            column = self.tokens[-1].column if self.tokens else 1
        raise ExpressionSyntaxError(message, column=column)

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def take(self):
        tok = self.peek()
        if tok is None:
            self._fail("unexpected end of input")
        self.i += 1
        return tok

    def expect_op(self, text, context_col=None):
        tok = self.peek()
        if tok is None:
            self._fail("unexpected end of input", column=context_col)
        if tok.kind != "op" or tok.text != text:
            self._fail(f"expected {text!r}, found {tok.text!r}", column=tok.column)
        self.i += 1
        return tok

    def at_op(self, *texts):
        tok = self.peek()
        return tok is not None and tok.kind == "op" and tok.text in texts

    # grammar rules

    def parse(self):
        node = self.expr()
        tok = self.peek()
        if tok is not None:
            self._fail(f"unexpected {tok.text!r}", column=tok.column)
        return node

    def expr(self):
        node = self.term()
        while self.at_op("+", "-"):
            op = self.take()
            rhs = self.term()
            node = Add(node, rhs) if op.text == "+" else Sub(node, rhs)
        return node

    def term(self):
        node = self.factor()
        while self.at_op("*"):
            self.take()
            node = Mul(node, self.factor())
        return node

    def factor(self):
        if self.at_op("-"):
            self.take()
            return Neg(self.factor())
        return self.primary()

    def primary(self):
        tok = self.peek()
        if tok is None:
            self._fail("unexpected end of input")
        if tok.kind == "op" and tok.text == "(":
            self.take()
            node = self.expr()
            closing = self.peek()
            if closing is None:
                self._fail("unclosed parenthesis", column=tok.column)
            self.expect_op(")")
            return node
        if tok.kind == "gen":
            self.take()
            text = tok.text
            marker = text[1] if text[1] in "pm" else ""
            digits = text[1 + len(marker):]
            row, col = int(digits[0]), int(digits[1])
            if row <= col or col < 1:
                self._fail(
                    f"generator {text!r} needs row > col >= 1", column=tok.column
                )
            if self.n is not None and row > self.n:
                raise IndexOutOfRange(
                    f"generator {text!r} exceeds rank {self.n}"
                )
            return Gen(row, col, marker, tok.column)
        if tok.kind == "num":
            self.take()
            value = Fraction(int(tok.text))
            if self.at_op("/"):
                self.take()
                den = self.take()
                if den.kind != "num":
                    self._fail("expected an integer denominator", column=den.column)
                if int(den.text) == 0:
                    self._fail("zero denominator", column=den.column)
                value = Fraction(int(tok.text), int(den.text))
            return Scalar(LaurentPoly.const(value))
        if tok.kind == "q":
            self.take()
            if not self.at_op("^"):
                return Scalar(LaurentPoly.q(1))
            self.take()
            return Scalar(LaurentPoly.from_exp2({self._q_exponent2(): 1}))
        self._fail(f"unexpected {tok.text!r}", column=tok.column)

    def _q_exponent2(self):
        """Doubled exponent after 'q^': INT or (-INT), (INT/2), (-INT/2)."""
        tok = self.peek()
        if tok is None:
            self._fail("unexpected end of input")
        if tok.kind == "num":
            self.take()
            return 2 * int(tok.text)
        if tok.kind == "op" and tok.text == "(":
            self.take()
            sign = 1
            if self.at_op("-"):
                self.take()
                sign = -1
            num = self.take()
            if num.kind != "num":
                self._fail("expected an integer exponent", column=num.column)
            e2 = 2 * int(num.text)
            if self.at_op("/"):
                self.take()
                den = self.take()
                if den.kind != "num" or den.text != "2":
                    self._fail(
                        "only half-integer exponents are supported",
                        column=den.column,
                    )
                e2 //= 2
            self.expect_op(")", context_col=tok.column)
            return sign * e2
        self._fail(f"expected an exponent, found {tok.text!r}", column=tok.column)


def parse_expression(src, n=None):
    """Parse to an AST; rank bounds are checked when n is given."""
    if not src or not src.strip():
        raise ExpressionSyntaxError("empty expression", column=1)
    tokens = tokenize(src)
    if not tokens:
        raise ExpressionSyntaxError("empty expression", column=1)
    return _Parser(tokens, n=n).parse()


def _collect_markers(node, found):
    if isinstance(node, Gen):
        if node.marker:
            found.add(node.marker)
    elif isinstance(node, Neg):
        _collect_markers(node.inner, found)
    elif isinstance(node, (Mul, Add, Sub)):
        _collect_markers(node.left, found)
        _collect_markers(node.right, found)


def infer_variant(node, default=PLUS):
    """Variant from explicit Ip/Im markers; mixing both is an error."""
    found = set()
    _collect_markers(node, found)
    if found == {"p", "m"}:
        raise VariantMismatch("expression mixes plus- and minus-variant generators")
    if "p" in found:
        return PLUS
    if "m" in found:
        return MINUS
    return default


def _eval(node, n, variant):
    if isinstance(node, Gen):
        return AlgebraElement.generator(n, node.row, node.col, variant)
    if isinstance(node, Scalar):
        return node.value
    if isinstance(node, Neg):
        return -_eval(node.inner, n, variant)
    if isinstance(node, Mul):
        return _eval(node.left, n, variant) * _eval(node.right, n, variant)
    if isinstance(node, Add):
        return _lift(_eval(node.left, n, variant), n, variant) + _eval(
            node.right, n, variant
        )
    if isinstance(node, Sub):
        return _lift(_eval(node.left, n, variant), n, variant) - _eval(
            node.right, n, variant
        )
    raise TypeError(f"not an expression node: {node!r}")


def _lift(value, n, variant):
    if isinstance(value, LaurentPoly):
        return AlgebraElement.scalar(n, value, variant)
    return value


def evaluate_expression(src_or_ast, n, variant=PLUS):
    """Evaluate source text or an AST to a normal-form AlgebraElement."""
    node = (
        parse_expression(src_or_ast, n)
        if isinstance(src_or_ast, str)
        else src_or_ast
    )
    use = infer_variant(node, default=variant)
    return _lift(_eval(node, n, use), n, use)
