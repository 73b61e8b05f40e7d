"""Monomials and polynomials with F2 coefficients, plus the expression grammar.

A :class:`PolyF2` is a finite set of monomials; a monomial is present iff its
coefficient is 1, so addition is symmetric difference.

Grammar (whitespace insensitive)::

    expr   := term ('+' term)*
    term   := factor ('*' factor)*
    factor := atom ('^' INT)?
    atom   := INT | IDENT | '(' expr ')'
    IDENT  := [A-Za-z][A-Za-z0-9_]*

Integer literals are reduced mod 2.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Optional, Sequence

from charclass.errors import ContractViolation

IDENTIFIER = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")
_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<ident>[A-Za-z][A-Za-z0-9_]*)|(?P<op>[+*^()]))")


@dataclass(frozen=True)
class Monomial:
    """Product of generator powers, stored as ``(name, exponent)`` pairs sorted by name."""

    exponents: tuple[tuple[str, int], ...] = ()

    def __post_init__(self) -> None:
        names = [name for name, _ in self.exponents]
        if names != sorted(set(names)):
            raise ContractViolation(f"monomial exponents must be sorted and unique: {self.exponents}")
        if any(e <= 0 for _, e in self.exponents):
            raise ContractViolation(f"monomial exponents must be positive: {self.exponents}")

    @classmethod
    def from_mapping(cls, mapping: Mapping[str, int]) -> Monomial:
        return cls(tuple(sorted((k, int(v)) for k, v in mapping.items() if v)))

    @classmethod
    def generator(cls, name: str, power: int = 1) -> Monomial:
        return cls(((name, power),)) if power else cls()

    def as_dict(self) -> dict[str, int]:
        return dict(self.exponents)

    def exponent(self, name: str) -> int:
        for n, e in self.exponents:
            if n == name:
                return e
        return 0

    @property
    def names(self) -> frozenset[str]:
        return frozenset(n for n, _ in self.exponents)

    def is_one(self) -> bool:
        return not self.exponents

    def degree(self, degrees: Mapping[str, int]) -> int:
        try:
            return sum(degrees[n] * e for n, e in self.exponents)
        except KeyError as e:
            raise ContractViolation(f"unknown generator {e.args[0]!r}") from None

    def __mul__(self, other: Monomial) -> Monomial:
        merged = self.as_dict()
        for n, e in other.exponents:
            merged[n] = merged.get(n, 0) + e
        return Monomial.from_mapping(merged)

    def __pow__(self, k: int) -> Monomial:
        if k < 0:
            raise ContractViolation("negative exponent")
        return Monomial.from_mapping({n: e * k for n, e in self.exponents})

    def rename(self, mapping: Mapping[str, str]) -> Monomial:
        return Monomial.from_mapping({mapping.get(n, n): e for n, e in self.exponents})

    def exponent_vector(self, order: Sequence[str]) -> tuple[int, ...]:
        exps = self.as_dict()
        return tuple(exps.get(n, 0) for n in order)


ONE_MONOMIAL = Monomial()


@dataclass(frozen=True)
class PolyF2:
    """Formal sum of distinct monomials with F2 coefficients."""

    terms: frozenset[Monomial] = frozenset()

    @classmethod
    def zero(cls) -> PolyF2:
        return cls()

    @classmethod
    def one(cls) -> PolyF2:
        return cls(frozenset({ONE_MONOMIAL}))

    @classmethod
    def gen(cls, name: str) -> PolyF2:
        return cls(frozenset({Monomial.generator(name)}))

    @classmethod
    def from_monomial(cls, m: Monomial) -> PolyF2:
        return cls(frozenset({m}))

    @classmethod
    def from_monomials(cls, monomials: Iterable[Monomial]) -> PolyF2:
        """Sum of monomials; repeated monomials cancel in pairs."""
        acc: set[Monomial] = set()
        for m in monomials:
            acc ^= {m}
        return cls(frozenset(acc))

    def __iter__(self) -> Iterator[Monomial]:
        return iter(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return self.terms == frozenset({ONE_MONOMIAL})

    def __add__(self, other: PolyF2) -> PolyF2:
        return PolyF2(self.terms ^ other.terms)

    __sub__ = __add__

    def __mul__(self, other: PolyF2) -> PolyF2:
        return PolyF2.from_monomials(a * b for a in self.terms for b in other.terms)

    def __pow__(self, k: int) -> PolyF2:
        if k < 0:
            raise ContractViolation("negative exponent")
        result = PolyF2.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    @property
    def names(self) -> frozenset[str]:
        out: frozenset[str] = frozenset()
        for m in self.terms:
            out |= m.names
        return out

    def degrees(self, degrees: Mapping[str, int]) -> set[int]:
        return {m.degree(degrees) for m in self.terms}

    def rename(self, mapping: Mapping[str, str]) -> PolyF2:
        return PolyF2.from_monomials(m.rename(mapping) for m in self.terms)

    def substitute(self, images: Mapping[str, PolyF2]) -> PolyF2:
        """Replace generators by polynomials; names without an image stay."""
        total: set[Monomial] = set()
        for m in self.terms:
            term = PolyF2.one()
            for name, e in m.exponents:
                term = term * (images[name] ** e if name in images else PolyF2.gen(name) ** e)
            total ^= set(term.terms)
        return PolyF2(frozenset(total))


def format_monomial(m: Monomial, order: Optional[Sequence[str]] = None) -> str:
    if m.is_one():
        return "1"
    exps = m.as_dict()
    names = list(order) if order is not None else sorted(exps)
    names += sorted(n for n in exps if n not in names)
    parts = []
    for n in names:
        e = exps.get(n, 0)
        if e == 1:
            parts.append(n)
        elif e > 1:
            parts.append(f"{n}^{e}")
    return "*".join(parts)


def monomial_sort_key(
    m: Monomial, order: Sequence[str], degrees: Optional[Mapping[str, int]] = None
) -> tuple[int, tuple[int, ...]]:
    """Graded lexicographic key in declaration order; larger key = larger monomial."""
    deg = m.degree(degrees) if degrees is not None else sum(e for _, e in m.exponents)
    return deg, m.exponent_vector(order)


def format_poly(
    p: PolyF2,
    order: Optional[Sequence[str]] = None,
    degrees: Optional[Mapping[str, int]] = None,
) -> str:
    """Render ``p`` with terms in decreasing graded-lex order; zero prints as ``0``."""
    if p.is_zero():
        return "0"
    names = list(order) if order is not None else sorted(p.names)
    names += sorted(n for n in p.names if n not in names)
    known = degrees if degrees is not None and p.names <= set(degrees) else None
    terms = sorted(p.terms, key=lambda m: monomial_sort_key(m, names, known), reverse=True)
    return " + ".join(format_monomial(m, names) for m in terms)


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = self._tokenize(text)
        self.pos = 0

    def _tokenize(self, text: str) -> list[tuple[str, str, int]]:
        tokens = []
        i = 0
        stripped = text.rstrip()
        while i < len(stripped):
            match = _TOKEN.match(stripped, i)
            if not match:
                raise ContractViolation(f"unexpected character {stripped[i:].lstrip()[:1]!r} in {text!r}")
            kind = match.lastgroup
            assert kind is not None
            tokens.append((kind, match.group(kind), match.start(kind)))
            i = match.end()
        return tokens

    def _peek(self) -> Optional[tuple[str, str, int]]:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def _take(self, value: Optional[str] = None) -> tuple[str, str, int]:
        tok = self._peek()
        if tok is None:
            raise ContractViolation(f"unexpected end of expression in {self.text!r}")
        if value is not None and tok[1] != value:
            raise ContractViolation(f"expected {value!r} at position {tok[2]} in {self.text!r}")
        self.pos += 1
        return tok

    def parse(self) -> PolyF2:
        if not self.tokens:
            raise ContractViolation("empty expression")
        result = self._expr()
        if self._peek() is not None:
            tok = self._peek()
            assert tok is not None
            raise ContractViolation(f"unexpected {tok[1]!r} at position {tok[2]} in {self.text!r}")
        return result

    def _expr(self) -> PolyF2:
        result = self._term()
        while (tok := self._peek()) is not None and tok[1] == "+":
            self._take("+")
            result = result + self._term()
        return result

    def _term(self) -> PolyF2:
        result = self._factor()
        while (tok := self._peek()) is not None and tok[1] == "*":
            self._take("*")
            result = result * self._factor()
        return result

    def _factor(self) -> PolyF2:
        base = self._atom()
        tok = self._peek()
        if tok is not None and tok[1] == "^":
            self._take("^")
            kind, value, where = self._take()
            if kind != "int":
                raise ContractViolation(f"exponent must be a nonnegative integer at position {where}")
            return base ** int(value)
        return base

    def _atom(self) -> PolyF2:
        kind, value, where = self._take()
        if kind == "int":
            return PolyF2.one() if int(value) % 2 else PolyF2.zero()
        if kind == "ident":
            return PolyF2.gen(value)
        if value == "(":
            inner = self._expr()
            self._take(")")
            return inner
        raise ContractViolation(f"unexpected {value!r} at position {where} in {self.text!r}")


def parse_poly(text: str) -> PolyF2:
    """Parse an expression in the polynomial grammar."""
    return _Parser(text).parse()
