"""Exact sparse polynomials in x, y, z with rational coefficients.

A polynomial is a mapping from exponent triples to nonzero coefficients.
Coefficients are kept as ``int`` whenever they are integral and as
``Fraction`` otherwise, so the common all-integer case stays fast.

Text format::

    poly   := ['-'] term (('+'|'-') term)*
    term   := coeff | [coeff ['*']] factor (['*'] factor)*
    coeff  := uint ['/' uint]
    factor := ('x'|'y'|'z') ['^' uint]

Whitespace is ignored and factors may be juxtaposed (``zy^3``).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, Mapping, NamedTuple, Optional, Tuple, Union

from .errors import MissingVariable, NotThreeMonomials, PolynomialSyntaxError, VariableError

Coeff = Union[int, Fraction]
VARS = ("x", "y", "z")


class Monomial(NamedTuple):
    ex: int
    ey: int
    ez: int

    @property
    def degree(self) -> int:
        return self.ex + self.ey + self.ez

    def render(self) -> str:
        out = []
        for name, e in zip(VARS, self):
            if e == 1:
                out.append(name)
            elif e > 1:
                out.append(f"{name}^{e}")
        return "".join(out)


ONE = Monomial(0, 0, 0)


def _normalize(c) -> Coeff:
    c = Fraction(c)
    return c.numerator if c.denominator == 1 else c


def grlex_key(m: Monomial) -> Tuple[int, int, int, int]:
    """Sort key; ascending order of this key is graded-lex *descending*."""
    return (-m.degree, -m.ex, -m.ey, -m.ez)


class Polynomial:
    """Immutable canonical sparse polynomial."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Optional[Mapping] = None):
        clean: Dict[Monomial, Coeff] = {}
        for mono, c in (terms or {}).items():
            mono = Monomial(*mono)
            if min(mono) < 0:
                raise ValueError(f"negative exponent in {tuple(mono)}")
            c = _normalize(c)
            if c != 0:
                clean[mono] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: Dict[Monomial, Coeff]) -> "Polynomial":
        # terms already canonical
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def constant(cls, c) -> "Polynomial":
        return cls({ONE: c})

    @classmethod
    def var(cls, name: str) -> "Polynomial":
        exps = [0, 0, 0]
        exps[VARS.index(name)] = 1
        return cls({Monomial(*exps): 1})

    @classmethod
    def monomial(cls, exps: Iterable[int], c=1) -> "Polynomial":
        return cls({Monomial(*exps): c})

    @property
    def terms(self) -> Dict[Monomial, Coeff]:
        return dict(self._terms)

    def items(self):
        """(monomial, coefficient) pairs in graded-lex descending order."""
        return sorted(self._terms.items(), key=lambda kv: grlex_key(kv[0]))

    def support(self) -> frozenset:
        return frozenset(self._terms)

    def coeff(self, mono) -> Coeff:
        return self._terms.get(Monomial(*mono), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __contains__(self, mono) -> bool:
        return Monomial(*mono) in self._terms

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == Polynomial.constant(other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other) -> "Polynomial":
        other = _coerce(other)
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = _normalize(s) if isinstance(s, Fraction) else s
            else:
                out.pop(m, None)
        return Polynomial._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other) -> "Polynomial":
        return self + (-_coerce(other))

    def __rsub__(self, other) -> "Polynomial":
        return _coerce(other) - self

    def __mul__(self, other) -> "Polynomial":
        other = _coerce(other)
        out: Dict[Monomial, Coeff] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = Monomial(m1[0] + m2[0], m1[1] + m2[1], m1[2] + m2[2])
                out[m] = out.get(m, 0) + c1 * c2
        return Polynomial._raw({m: _normalize(c) if isinstance(c, Fraction) else c
                                for m, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise ValueError("negative power")
        result = Polynomial.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def substitute(self, mapping: Mapping[str, "Polynomial"]) -> "Polynomial":
        return substitute(self, mapping)

    def render(self) -> str:
        return render(self)

    def __str__(self) -> str:
        return render(self)

    def __repr__(self) -> str:
        return f"Polynomial({render(self)!r})"


def _coerce(p) -> Polynomial:
    if isinstance(p, Polynomial):
        return p
    if isinstance(p, (int, Fraction)):
        return Polynomial.constant(p)
    raise TypeError(f"cannot use {type(p).__name__} as a polynomial")


def render(p: Polynomial) -> str:
    """Canonical text: graded-lex descending, no '*', no '^1', no unit coefficients."""
    if p.is_zero():
        return "0"
    parts = []
    for i, (mono, c) in enumerate(p.items()):
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        body = mono.render()
        if not body:
            text = str(mag)
        elif mag == 1:
            text = body
        else:
            text = f"{mag}{body}"
        if i == 0:
            parts.append(text if sign == "+" else "-" + text)
        else:
            parts.append(sign + text)
    return "".join(parts)


class _Parser:
    def __init__(self, text: str):
        self.text = text
        # keep original offsets so errors point into the caller's string
        self.toks = [(ch, i) for i, ch in enumerate(text) if not ch.isspace()]
        self.i = 0

    def peek(self) -> Optional[str]:
        return self.toks[self.i][0] if self.i < len(self.toks) else None

    def pos(self) -> int:
        return self.toks[self.i][1] if self.i < len(self.toks) else len(self.text)

    def fail(self, msg: str):
        raise PolynomialSyntaxError(msg, self.text, self.pos())

    def uint(self) -> int:
        start = self.i
        while self.peek() is not None and self.peek().isdigit():
            self.i += 1
        if self.i == start:
            self.fail("expected an unsigned integer")
        return int("".join(ch for ch, _ in self.toks[start:self.i]))

    def parse(self) -> Polynomial:
        if not self.toks:
            self.fail("empty polynomial")
        terms: Dict[Monomial, Fraction] = {}
        sign = 1
        if self.peek() == "-":
            sign = -1
            self.i += 1
        while True:
            mono, c = self.term()
            terms[mono] = terms.get(mono, 0) + sign * c
            ch = self.peek()
            if ch is None:
                break
            if ch == "+":
                sign = 1
            elif ch == "-":
                sign = -1
            else:
                self.fail(f"unexpected character {ch!r}")
            self.i += 1
        return Polynomial(terms)

    def term(self):
        coeff = Fraction(1)
        ch = self.peek()
        have_coeff = False
        if ch is not None and ch.isdigit():
            coeff = Fraction(self.uint())
            have_coeff = True
            if self.peek() == "/":
                self.i += 1
                den = self.uint()
                if den == 0:
                    self.i -= 1
                    self.fail("zero denominator")
                coeff /= den
            if self.peek() == "*":
                self.i += 1
                if not self._at_factor():
                    self.fail("expected a variable after '*'")
        exps = [0, 0, 0]
        nfactors = 0
        while self._at_factor():
            name = self.peek()
            if name not in VARS:
                raise VariableError(f"unknown variable {name!r}", self.text, self.pos())
            self.i += 1
            e = 1
            if self.peek() == "^":
                self.i += 1
                e = self.uint()
            exps[VARS.index(name)] += e
            nfactors += 1
            if self.peek() == "*":
                self.i += 1
                if not self._at_factor():
                    self.fail("expected a variable after '*'")
        if not have_coeff and nfactors == 0:
            self.fail("expected a term")
        return Monomial(*exps), coeff

    def _at_factor(self) -> bool:
        ch = self.peek()
        return ch is not None and ch.isalpha()


def parse_polynomial(text: str) -> Polynomial:
    """Parse polynomial text into canonical sparse form.

    >>> render(parse_polynomial("x^2 + zy^3"))
    'y^3z+x^2'
    """
    return _Parser(text).parse()


def substitute(p: Polynomial, mapping: Mapping[str, Polynomial]) -> Polynomial:
    """Replace each variable by a polynomial (identity for missing keys)."""
    images = [mapping.get(v, Polynomial.var(v)) for v in VARS]
    cache = [{0: Polynomial.constant(1)} for _ in VARS]

    def power(k: int, e: int) -> Polynomial:
        got = cache[k].get(e)
        if got is None:
            got = images[k] ** e
            cache[k][e] = got
        return got

    result = Polynomial()
    for mono, c in p.items():
        term = Polynomial.constant(c)
        for k, e in enumerate(mono):
            if e:
                term = term * power(k, e)
        result = result + term
    return result


def exponent_matrix(p: Polynomial) -> Tuple[Tuple[int, int, int], ...]:
    """Rows are the exponent vectors of the three terms, graded-lex descending."""
    if len(p) != 3:
        raise NotThreeMonomials(f"expected 3 monomials, got {len(p)}: {render(p)}")
    rows = tuple(tuple(m) for m, _ in p.items())
    for j, name in enumerate(VARS):
        if all(r[j] == 0 for r in rows):
            raise MissingVariable(f"variable {name} does not occur in {render(p)}")
    return rows
