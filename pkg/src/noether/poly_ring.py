"""Exact multivariate polynomials over the rationals.

Polynomials are immutable.  Terms are kept in a dict keyed by exponent tuples
and are always presented sorted descending under lexicographic order, which is
the canonical internal order independent of whatever order a Groebner
computation uses.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Iterator, Mapping, Optional, Sequence, Tuple, Union

Monomial = Tuple[int, ...]
Coefficient = Union[int, Fraction]

MAX_VARIABLES = 16
_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


class RingMismatchError(ValueError):
    """Raised when polynomials from different rings are combined."""


class PolynomialSyntaxError(ValueError):
    """Raised by :func:`parse_polynomial`; ``pos`` is a 0-based offset into the text."""

    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at offset {pos})")
        self.message = message
        self.pos = pos


# ---------------------------------------------------------------------------
# rings and monomial orders


@dataclass(frozen=True)
class RingContext:
    """The polynomial ring Q[x_1, ..., x_n] with named, ordered variables."""

    variables: Tuple[str, ...]

    def __init__(self, variables: Union[str, Iterable[str]]):
        if isinstance(variables, str):
            variables = [v.strip() for v in variables.split(",") if v.strip()]
        names = tuple(variables)
        if not 1 <= len(names) <= MAX_VARIABLES:
            raise ValueError(f"a ring needs between 1 and {MAX_VARIABLES} variables, got {len(names)}")
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")
        for name in names:
            if not _NAME_RE.match(name):
                raise ValueError(f"invalid variable name {name!r}")
        object.__setattr__(self, "variables", names)

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def index(self, name: str) -> int:
        try:
            return self.variables.index(name)
        except ValueError:
            raise KeyError(f"unknown variable {name!r}") from None

    def gens(self) -> Tuple["Polynomial", ...]:
        return tuple(self.var(v) for v in self.variables)

    def var(self, name: str) -> "Polynomial":
        exp = [0] * self.nvars
        exp[self.index(name)] = 1
        return Polynomial(self, {tuple(exp): Fraction(1)})

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.constant(1)

    def constant(self, c: Coefficient) -> "Polynomial":
        c = Fraction(c)
        return Polynomial(self, {(0,) * self.nvars: c} if c else {})

    def monomial(self, exp: Sequence[int], coeff: Coefficient = 1) -> "Polynomial":
        exp = tuple(int(e) for e in exp)
        if len(exp) != self.nvars or any(e < 0 for e in exp):
            raise ValueError(f"bad exponent vector {exp} for {self.nvars} variables")
        coeff = Fraction(coeff)
        return Polynomial(self, {exp: coeff} if coeff else {})

    def parse(self, text: str) -> "Polynomial":
        return parse_polynomial(text, self)

    def fresh_name(self, stem: str) -> str:
        name = stem
        i = 0
        while name in self.variables:
            i += 1
            name = f"{stem}{i}"
        return name

    def with_leading(self, count: int = 1, stem: str = "t") -> "RingContext":
        """Ring with ``count`` fresh variables prepended (used for elimination tricks)."""
        taken = set(self.variables)
        new = []
        for _ in range(count):
            name, i = stem, 0
            while name in taken:
                i += 1
                name = f"{stem}{i}"
            taken.add(name)
            new.append(name)
        return RingContext(new + list(self.variables))

    def __str__(self) -> str:
        return "Q[" + ", ".join(self.variables) + "]"


@dataclass(frozen=True)
class MonomialOrder:
    """A monomial order: ``lex``, ``grevlex`` or ``block`` (first ``k`` variables eliminated)."""

    kind: str
    k: int = 0

    def __post_init__(self):
        if self.kind not in ("lex", "grevlex", "block"):
            raise ValueError(f"unknown monomial order {self.kind!r}")
        if self.kind == "block" and self.k < 1:
            raise ValueError("block order needs k >= 1")

    def key(self, exp: Monomial):
        """Sort key; a larger key means a larger monomial."""
        if self.kind == "lex":
            return exp
        if self.kind == "grevlex":
            return _grevlex_key(exp)
        return (_grevlex_key(exp[: self.k]), _grevlex_key(exp[self.k :]))

    def __str__(self) -> str:
        return f"block({self.k})" if self.kind == "block" else self.kind


def _grevlex_key(exp: Monomial):
    return (sum(exp), tuple(-e for e in reversed(exp)))


LEX = MonomialOrder("lex")
GREVLEX = MonomialOrder("grevlex")


def block_order(k: int) -> MonomialOrder:
    return MonomialOrder("block", k)


def order_from_name(name: str) -> MonomialOrder:
    name = name.strip().lower()
    if name == "lex":
        return LEX
    if name == "grevlex":
        return GREVLEX
    m = re.fullmatch(r"block\((\d+)\)", name)
    if m:
        return block_order(int(m.group(1)))
    raise ValueError(f"unknown monomial order {name!r}")


def compare(m1: Sequence[int], m2: Sequence[int], order: MonomialOrder = LEX) -> int:
    """Return 1, 0 or -1 as ``m1`` is greater than, equal to, or less than ``m2``."""
    if len(m1) != len(m2):
        raise ValueError("monomials of different arity")
    k1, k2 = order.key(tuple(m1)), order.key(tuple(m2))
    return (k1 > k2) - (k1 < k2)


# monomial helpers shared by the Groebner and monomial-ideal code

def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x - y for x, y in zip(a, b))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    """True if ``a`` divides ``b``."""
    return all(x <= y for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_gcd(a: Monomial, b: Monomial) -> Monomial:
    return tuple(min(x, y) for x, y in zip(a, b))


# ---------------------------------------------------------------------------
# polynomials


class Polynomial:
    """An element of a :class:`RingContext` with exact rational coefficients."""

    __slots__ = ("_ring", "_terms", "_hash")

    def __init__(self, ring: RingContext, terms: Optional[Mapping[Monomial, Coefficient]] = None):
        self._ring = ring
        clean: Dict[Monomial, Fraction] = {}
        if terms:
            n = ring.nvars
            for exp, c in terms.items():
                c = Fraction(c)
                if not c:
                    continue
                exp = tuple(exp)
                if len(exp) != n:
                    raise ValueError(f"exponent {exp} does not match {n} variables")
                clean[exp] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, ring: RingContext, terms: Dict[Monomial, Fraction]) -> "Polynomial":
        # trusted constructor: terms already normalized (no zeros)
        p = cls.__new__(cls)
        p._ring = ring
        p._terms = terms
        p._hash = None
        return p

    # -- inspection --------------------------------------------------------

    @property
    def ring(self) -> RingContext:
        return self._ring

    @property
    def terms(self) -> Tuple[Tuple[Fraction, Monomial], ...]:
        """(coefficient, monomial) pairs sorted descending under lex."""
        return tuple((self._terms[e], e) for e in sorted(self._terms, reverse=True))

    def as_dict(self) -> Dict[Monomial, Fraction]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and not any(next(iter(self._terms))))

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[Tuple[Fraction, Monomial]]:
        return iter(self.terms)

    def coefficient(self, exp: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(exp), Fraction(0))

    def total_degree(self) -> int:
        if not self._terms:
            return -1
        return max(sum(e) for e in self._terms)

    def support(self) -> Tuple[int, ...]:
        """Indices of variables that occur in some term."""
        used = set()
        for exp in self._terms:
            used.update(i for i, e in enumerate(exp) if e)
        return tuple(sorted(used))

    def leading_monomial(self, order: MonomialOrder = LEX) -> Monomial:
        if not self._terms:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self._terms, key=order.key)

    def leading_coefficient(self, order: MonomialOrder = LEX) -> Fraction:
        return self._terms[self.leading_monomial(order)]

    def monic(self, order: MonomialOrder = LEX) -> "Polynomial":
        if not self._terms:
            return self
        lc = self.leading_coefficient(order)
        return Polynomial._raw(self.ring, {e: c / lc for e, c in self._terms.items()})

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise RingMismatchError(f"{self.ring} vs {other.ring}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Polynomial._raw(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.ring, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: Dict[Monomial, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    del out[e]
        return Polynomial._raw(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def mul_term(self, exp: Monomial, coeff: Coefficient = 1) -> "Polynomial":
        coeff = Fraction(coeff)
        if not coeff:
            return self.ring.zero()
        return Polynomial._raw(
            self.ring, {tuple(a + b for a, b in zip(e, exp)): c * coeff for e, c in self._terms.items()}
        )

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self._terms.items())))
        return self._hash

    # -- ring changes ------------------------------------------------------

    def embed(self, ring: RingContext) -> "Polynomial":
        """Map into ``ring`` by variable name; every used variable must exist there."""
        if ring == self.ring:
            return self
        idx = []
        for i, name in enumerate(self.ring.variables):
            idx.append(ring.variables.index(name) if name in ring.variables else None)
        out = {}
        for exp, c in self._terms.items():
            new = [0] * ring.nvars
            for i, e in enumerate(exp):
                if e:
                    if idx[i] is None:
                        raise RingMismatchError(f"variable {self.ring.variables[i]!r} not in {ring}")
                    new[idx[i]] = e
            out[tuple(new)] = c
        return Polynomial._raw(ring, out)

    def substitute(self, values: Mapping[str, "Polynomial"]) -> "Polynomial":
        """Substitute polynomials (in the same ring) for named variables."""
        result = self.ring.zero()
        for c, exp in self.terms:
            term = self.ring.constant(c)
            for i, e in enumerate(exp):
                if not e:
                    continue
                name = self.ring.variables[i]
                base = values[name] if name in values else self.ring.var(name)
                term = term * base ** e
            result = result + term
        return result

    # -- text --------------------------------------------------------------

    def __str__(self) -> str:
        return format_polynomial(self)

    def __repr__(self) -> str:
        return f"Polynomial({format_polynomial(self)!r}, ring={','.join(self.ring.variables)})"


def format_monomial(exp: Sequence[int], variables: Sequence[str]) -> str:
    parts = []
    for name, e in zip(variables, exp):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) if parts else "1"


def format_polynomial(p: Polynomial) -> str:
    """Render ``p`` in the text grammar accepted by :func:`parse_polynomial`."""
    if p.is_zero():
        return "0"
    out = []
    for i, (c, exp) in enumerate(p.terms):
        sign = "-" if c < 0 else "+"
        c = abs(c)
        mono = format_monomial(exp, p.ring.variables)
        if mono == "1":
            body = str(c)
        elif c == 1:
            body = mono
        else:
            body = f"{c}*{mono}"
        if i == 0:
            out.append(("-" if sign == "-" else "") + body)
        else:
            out.append(f" {sign} {body}")
    return "".join(out)


# ---------------------------------------------------------------------------
# parsing

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<num>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<pow>\*\*|\^)|(?P<op>[-+*/()]))"
)


def _tokenize(text: str):
    pos = 0
    tokens = []
    n = len(text)
    while pos < n:
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN_RE.match(text, pos)
        if not m:
            raise PolynomialSyntaxError(f"unexpected character {text[pos]!r}", pos)
        kind = m.lastgroup
        start = m.start(kind)
        tokens.append((kind, m.group(kind), start))
        pos = m.end()
    tokens.append(("end", "", n))
    return tokens


class _Parser:
    def __init__(self, text: str, ring: RingContext):
        self.ring = ring
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, value):
        tok = self.take()
        if tok[1] != value:
            raise PolynomialSyntaxError(f"expected {value!r}, found {tok[1] or 'end of input'!r}", tok[2])
        return tok

    def parse(self) -> Polynomial:
        if self.peek()[0] == "end":
            raise PolynomialSyntaxError("empty polynomial", self.peek()[2])
        p = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise PolynomialSyntaxError(f"unexpected {tok[1]!r}", tok[2])
        return p

    def expr(self) -> Polynomial:
        sign = 1
        tok = self.peek()
        if tok[1] in "+-" and tok[0] == "op":
            self.take()
            sign = -1 if tok[1] == "-" else 1
        p = self.term() * sign
        while True:
            tok = self.peek()
            if tok[0] == "op" and tok[1] in ("+", "-"):
                self.take()
                q = self.term()
                p = p + q if tok[1] == "+" else p - q
            else:
                return p

    def _starts_factor(self, tok) -> bool:
        return tok[0] in ("num", "name") or (tok[0] == "op" and tok[1] == "(")

    def term(self) -> Polynomial:
        p = self.power()
        while True:
            tok = self.peek()
            if tok[0] == "op" and tok[1] == "*":
                self.take()
                p = p * self.power()
            elif tok[0] == "op" and tok[1] == "/":
                self.take()
                q = self.power()
                if not q.is_constant() or q.is_zero():
                    raise PolynomialSyntaxError("division only by nonzero constants", tok[2])
                p = p * self.ring.constant(1 / q.coefficient((0,) * self.ring.nvars))
            elif self._starts_factor(tok):
                p = p * self.power()
            else:
                return p

    def power(self) -> Polynomial:
        base = self.atom()
        tok = self.peek()
        if tok[0] == "pow":
            self.take()
            etok = self.take()
            if etok[0] != "num":
                raise PolynomialSyntaxError("exponent must be a non-negative integer", etok[2])
            return base ** int(etok[1])
        return base

    def atom(self) -> Polynomial:
        tok = self.take()
        kind, value, pos = tok
        if kind == "num":
            return self.ring.constant(int(value))
        if kind == "name":
            if value not in self.ring.variables:
                raise PolynomialSyntaxError(f"unknown variable {value!r}", pos)
            return self.ring.var(value)
        if kind == "op" and value == "(":
            p = self.expr()
            self.expect(")")
            return p
        if kind == "op" and value == "-":
            return -self.power()
        raise PolynomialSyntaxError(f"unexpected {value or 'end of input'!r}", pos)


def parse_polynomial(text: str, ring: RingContext) -> Polynomial:
    """Parse text such as ``"(y-1)*x^2*y"`` or ``"x^3 + 2/3*y"`` into a polynomial of ``ring``."""
    return _Parser(text, ring).parse()


def infer_ring(texts: Iterable[str]) -> RingContext:
    """Ring over every identifier appearing in ``texts``, sorted alphabetically."""
    names = set()
    for text in texts:
        names.update(re.findall(r"[A-Za-z_][A-Za-z0-9_]*", text))
    if not names:
        names = {"x"}
    return RingContext(sorted(names))
