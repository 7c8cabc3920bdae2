"""Sparse multivariate polynomials over an exact field.

Terms are kept as a tuple of ``(exponents, coefficient)`` pairs sorted in
strictly descending graded reverse lexicographic (grevlex) order with
``x0 > x1 > ... > x{n-1}``.  Everything is immutable; a :class:`PolyRing`
fixes the coefficient field and the number of variables and acts as the
factory for all values.

The expression parser accepts ``+ - * ^``, parentheses, integer and
``a/b`` rational literals, and variables ``x0 .. x{n-1}``.  Multiplication
is always explicit (``2*x1``, never ``2x1``).
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .fields import check_same_field


def grevlex_key(exps: tuple[int, ...]):
    """Sort key realizing grevlex: bigger key means bigger monomial."""
    return (sum(exps), tuple(-e for e in reversed(exps)))


def monomial_mul(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(x + y for x, y in zip(a, b))


def monomial_divides(a: tuple[int, ...], b: tuple[int, ...]) -> bool:
    return all(x <= y for x, y in zip(a, b))


def monomial_div(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(x - y for x, y in zip(a, b))


def monomial_lcm(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(max(x, y) for x, y in zip(a, b))


def monomials_of_degree(nvars: int, degree: int) -> Iterator[tuple[int, ...]]:
    """All exponent tuples of the given total degree, in no particular order."""
    if degree < 0:
        return
    if nvars == 1:
        yield (degree,)
        return
    for head in range(degree, -1, -1):
        for tail in monomials_of_degree(nvars - 1, degree - head):
            yield (head,) + tail


class ParseError(ValueError):
    """Syntax problem in a polynomial expression; carries the byte offset."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at offset {offset})")
        self.offset = offset


class PolyRing:
    """Polynomial ring context: coefficient field plus a fixed variable count."""

    __slots__ = ("field", "nvars", "_zero_exps")

    def __init__(self, field, nvars: int = 4):
        if nvars < 1:
            raise ValueError("need at least one variable")
        self.field = field
        self.nvars = nvars
        self._zero_exps = (0,) * nvars

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and other.field == self.field
            and other.nvars == self.nvars
        )

    def __hash__(self):
        return hash((self.field, self.nvars))

    def __repr__(self):
        return f"PolyRing({self.field!r}, nvars={self.nvars})"

    def poly(self, items: Iterable[tuple[tuple[int, ...], object]]) -> "Polynomial":
        """Build a polynomial from (exponents, coefficient) pairs, merging duplicates."""
        acc: dict[tuple[int, ...], object] = {}
        add = self.field.add
        for exps, c in items:
            if exps in acc:
                acc[exps] = add(acc[exps], c)
            else:
                acc[exps] = c
        terms = tuple(
            sorted(
                ((e, c) for e, c in acc.items() if c),
                key=lambda t: grevlex_key(t[0]),
                reverse=True,
            )
        )
        return Polynomial(self, terms)

    def zero(self) -> "Polynomial":
        return Polynomial(self, ())

    def one(self) -> "Polynomial":
        return self.constant(self.field.one)

    def constant(self, c) -> "Polynomial":
        if not c:
            return self.zero()
        return Polynomial(self, (((self._zero_exps), c),))

    def variable(self, i: int) -> "Polynomial":
        if not 0 <= i < self.nvars:
            raise ValueError(f"variable index out of range: {i}")
        exps = tuple(1 if j == i else 0 for j in range(self.nvars))
        return Polynomial(self, ((exps, self.field.one),))

    def monomial(self, exps: tuple[int, ...], coeff=None) -> "Polynomial":
        if len(exps) != self.nvars or any(e < 0 for e in exps):
            raise ValueError(f"bad exponent tuple: {exps}")
        c = self.field.one if coeff is None else coeff
        if not c:
            return self.zero()
        return Polynomial(self, ((tuple(exps), c),))

    def from_int(self, n: int) -> "Polynomial":
        return self.constant(self.field.of(n))

    def parse(self, text: str) -> "Polynomial":
        return _parse(self, text)

    def random_homogeneous(self, degree: int, rng, coeff_bound: int | None = None) -> "Polynomial":
        """Dense random homogeneous polynomial with uniform coefficients.

        Over a prime field every coefficient is uniform in [0, p); over the
        rationals, uniform integers in [-coeff_bound, coeff_bound].
        """
        items = []
        for exps in monomials_of_degree(self.nvars, degree):
            if self.field.characteristic:
                c = self.field.of(rng.randrange(self.field.characteristic))
            else:
                bound = 9 if coeff_bound is None else coeff_bound
                c = self.field.of(rng.randint(-bound, bound))
            if c:
                items.append((exps, c))
        return self.poly(items)


class Polynomial:
    """Immutable sparse polynomial; terms strictly descending in grevlex."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms: tuple):
        self.ring = ring
        self.terms = terms

    # -- structure ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self) -> int | None:
        """Total degree, or None for the zero polynomial."""
        if not self.terms:
            return None
        return max(sum(e) for e, _ in self.terms)

    def is_homogeneous(self) -> bool:
        if not self.terms:
            return True
        d = sum(self.terms[0][0])
        return all(sum(e) == d for e, _ in self.terms)

    @property
    def leading_exponents(self) -> tuple[int, ...]:
        return self.terms[0][0]

    @property
    def leading_coefficient(self):
        return self.terms[0][1]

    def coefficient(self, exps: tuple[int, ...]):
        for e, c in self.terms:
            if e == exps:
                return c
        return self.ring.field.zero

    def monic(self) -> "Polynomial":
        if not self.terms:
            return self
        lc = self.terms[0][1]
        if lc == self.ring.field.one:
            return self
        inv = self.ring.field.inv(lc)
        mul = self.ring.field.mul
        return Polynomial(self.ring, tuple((e, mul(c, inv)) for e, c in self.terms))

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        return self.ring.poly(self.terms + other.terms)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        neg = self.ring.field.neg
        return self.ring.poly(self.terms + tuple((e, neg(c)) for e, c in other.terms))

    def __neg__(self) -> "Polynomial":
        neg = self.ring.field.neg
        return Polynomial(self.ring, tuple((e, neg(c)) for e, c in self.terms))

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scaled(self.ring.field.of(other))
        self._check(other)
        mul = self.ring.field.mul
        add = self.ring.field.add
        acc: dict[tuple[int, ...], object] = {}
        for ea, ca in self.terms:
            for eb, cb in other.terms:
                e = monomial_mul(ea, eb)
                c = mul(ca, cb)
                if e in acc:
                    acc[e] = add(acc[e], c)
                else:
                    acc[e] = c
        return self.ring.poly(acc.items())

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.scaled(self.ring.field.of(other))
        return NotImplemented

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise ValueError("negative exponent")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def scaled(self, c) -> "Polynomial":
        if not c:
            return self.ring.zero()
        mul = self.ring.field.mul
        return Polynomial(self.ring, tuple((e, mul(coef, c)) for e, coef in self.terms))

    def term_mul(self, exps: tuple[int, ...], c) -> "Polynomial":
        """Multiply by the single term c * x^exps (order preserving)."""
        if not c:
            return self.ring.zero()
        mul = self.ring.field.mul
        return Polynomial(
            self.ring,
            tuple((monomial_mul(e, exps), mul(coef, c)) for e, coef in self.terms),
        )

    def partial(self, i: int) -> "Polynomial":
        """Formal partial derivative with respect to x_i."""
        if not 0 <= i < self.ring.nvars:
            raise ValueError(f"variable index out of range: {i}")
        of = self.ring.field.of
        mul = self.ring.field.mul
        items = []
        for e, c in self.terms:
            k = e[i]
            if k:
                items.append((e[:i] + (k - 1,) + e[i + 1:], mul(c, of(k))))
        return self.ring.poly(items)

    def compose_linear(self, matrix: list[list]) -> "Polynomial":
        """Substitute x_i -> sum_j matrix[i][j] * x_j (field entries)."""
        n = self.ring.nvars
        images = [
            self.ring.poly(
                [
                    (tuple(1 if k == j else 0 for k in range(n)), matrix[i][j])
                    for j in range(n)
                    if matrix[i][j]
                ]
            )
            for i in range(n)
        ]
        out = self.ring.zero()
        for e, c in self.terms:
            term = self.ring.constant(c)
            for i, k in enumerate(e):
                if k:
                    term = term * images[i] ** k
            out = out + term
        return out

    # -- comparison / display ----------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, Polynomial)
            and other.ring == self.ring
            and other.terms == self.terms
        )

    def __hash__(self):
        return hash((self.ring, self.terms))

    def __str__(self):
        return format_polynomial(self)

    def __repr__(self):
        return f"<poly {format_polynomial(self)}>"

    def _check(self, other):
        if not isinstance(other, Polynomial):
            raise TypeError(f"expected Polynomial, got {type(other).__name__}")
        check_same_field(self.ring.field, other.ring.field)
        if other.ring.nvars != self.ring.nvars:
            raise ValueError("mixed variable counts")


# ---------------------------------------------------------------------------
# canonical printer


def _format_term(exps: tuple[int, ...], coeff) -> str:
    factors = []
    for i, e in enumerate(exps):
        if e == 1:
            factors.append(f"x{i}")
        elif e > 1:
            factors.append(f"x{i}^{e}")
    body = "*".join(factors)
    cs = str(coeff)
    if not body:
        return cs
    if cs == "1":
        return body
    return f"{cs}*{body}"


def format_polynomial(p: Polynomial) -> str:
    """Canonical text form: descending grevlex terms, explicit * and ^."""
    if not p.terms:
        return "0"
    pieces = []
    for idx, (e, c) in enumerate(p.terms):
        negative = c < 0
        mag = -c if negative else c
        body = _format_term(e, mag)
        if idx == 0:
            pieces.append(f"-{body}" if negative else body)
        else:
            pieces.append(f" - {body}" if negative else f" + {body}")
    return "".join(pieces)


# ---------------------------------------------------------------------------
# parser

_TOK_INT = "int"
_TOK_VAR = "var"
_TOK_OP = "op"
_TOK_END = "end"


def _tokenize(ring: PolyRing, text: str):
    tokens = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append((_TOK_INT, int(text[i:j]), i))
            i = j
            continue
        if ch == "x":
            j = i + 1
            while j < n and text[j].isdigit():
                j += 1
            if j == i + 1:
                raise ParseError("unknown variable 'x'", i)
            idx = int(text[i + 1 : j])
            if idx >= ring.nvars:
                raise ParseError(f"unknown variable 'x{idx}'", i)
            tokens.append((_TOK_VAR, idx, i))
            i = j
            continue
        if ch.isalpha():
            raise ParseError(f"unknown variable {ch!r}", i)
        if ch in "+-*^()/":
            tokens.append((_TOK_OP, ch, i))
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", i)
    tokens.append((_TOK_END, None, n))
    return tokens


class _Parser:
    def __init__(self, ring: PolyRing, text: str):
        self.ring = ring
        self.tokens = _tokenize(ring, text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def advance(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expression(self) -> Polynomial:
        kind, val, off = self.peek()
        if kind == _TOK_OP and val in "+-":
            self.advance()
            result = self.term()
            if val == "-":
                result = -result
        else:
            result = self.term()
        while True:
            kind, val, off = self.peek()
            if kind == _TOK_OP and val in "+-":
                self.advance()
                rhs = self.term()
                result = result + rhs if val == "+" else result - rhs
            else:
                return result

    def term(self) -> Polynomial:
        result = self.factor()
        while True:
            kind, val, off = self.peek()
            if kind == _TOK_OP and val == "*":
                self.advance()
                result = result * self.factor()
            elif kind in (_TOK_INT, _TOK_VAR) or (kind == _TOK_OP and val == "("):
                raise ParseError("missing '*' between factors", off)
            else:
                return result

    def factor(self) -> Polynomial:
        kind, val, off = self.peek()
        if kind == _TOK_OP and val in "+-":
            self.advance()
            inner = self.factor()
            return -inner if val == "-" else inner
        base = self.primary()
        kind, val, off = self.peek()
        if kind == _TOK_OP and val == "^":
            self.advance()
            kind, exp, off2 = self.peek()
            if kind != _TOK_INT:
                raise ParseError("exponent must be a non-negative integer", off2)
            self.advance()
            return base**exp
        return base

    def primary(self) -> Polynomial:
        kind, val, off = self.advance()
        if kind == _TOK_INT:
            kind2, val2, off2 = self.peek()
            if kind2 == _TOK_OP and val2 == "/":
                self.advance()
                kind3, den, off3 = self.peek()
                if kind3 != _TOK_INT:
                    raise ParseError("division is only allowed in rational literals", off2)
                self.advance()
                if den == 0:
                    raise ParseError("zero denominator", off3)
                return self.ring.constant(self.ring.field.of(val, den))
            return self.ring.from_int(val)
        if kind == _TOK_VAR:
            return self.ring.variable(val)
        if kind == _TOK_OP and val == "(":
            inner = self.expression()
            kind2, val2, off2 = self.advance()
            if not (kind2 == _TOK_OP and val2 == ")"):
                raise ParseError("expected ')'", off2)
            return inner
        if kind == _TOK_OP and val == "/":
            raise ParseError("division is only allowed in rational literals", off)
        raise ParseError("expected a number, variable or '('", off)


def _parse(ring: PolyRing, text: str) -> Polynomial:
    parser = _Parser(ring, text)
    result = parser.expression()
    kind, val, off = parser.peek()
    if kind != _TOK_END:
        if kind == _TOK_OP and val == "/":
            raise ParseError("division is only allowed in rational literals", off)
        raise ParseError(f"unexpected trailing input {val!r}", off)
    return result
