"""Exact coefficient fields of characteristic != 2 and their square classes."""

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Literal, Optional, Union

from sympy import GF, QQ, Integer, Rational, factorint, isprime
from sympy.ntheory import legendre_symbol

from charclass.errors import ContractViolation

Scalar = Union[int, str, Fraction]


@dataclass(frozen=True)
class CoefficientField:
    """The rationals or a prime field ``F_p`` with ``p`` odd."""

    kind: Literal["Q", "Fp"]
    p: Optional[int] = None

    def __post_init__(self) -> None:
        if self.kind == "Q":
            if self.p is not None:
                raise ContractViolation("the rationals take no modulus")
        elif self.kind == "Fp":
            if self.p is None or self.p == 2 or not isprime(self.p):
                raise ContractViolation(f"F_p needs an odd prime p, got {self.p}")
        else:
            raise ContractViolation(f"unknown field kind {self.kind!r}")

    @classmethod
    def rationals(cls) -> "CoefficientField":
        return cls("Q")

    @classmethod
    def prime(cls, p: int) -> "CoefficientField":
        return cls("Fp", p)

    def __str__(self) -> str:
        return "Q" if self.kind == "Q" else f"F{self.p}"

    @property
    def domain(self) -> Any:
        return QQ if self.kind == "Q" else GF(self.p)

    @property
    def is_finite(self) -> bool:
        return self.kind == "Fp"

    def element(self, value: Scalar) -> Any:
        """Domain element from an int, a ``"p/q"`` string or a Fraction."""
        try:
            frac = Fraction(value)
        except (ValueError, ZeroDivisionError, TypeError) as e:
            raise ContractViolation(f"not a rational number: {value!r}") from e
        k = self.domain
        den = k.convert(frac.denominator)
        if k.is_zero(den):
            raise ContractViolation(f"{value!r} has a denominator divisible by {self.p}")
        return k.convert(frac.numerator) / den

    def to_plain(self, x: Any) -> Union[int, str]:
        """JSON-friendly value: an int in ``[0, p)`` over F_p, an int or ``"p/q"`` over Q."""
        value = self.domain.to_sympy(x)
        if self.kind == "Fp":
            return int(value) % int(self.p)  # type: ignore[arg-type]
        r = Rational(value)
        return int(r.p) if r.q == 1 else f"{r.p}/{r.q}"

    def is_square(self, x: Any) -> bool:
        if self.domain.is_zero(x):
            return True
        if self.kind == "Fp":
            return legendre_symbol(int(self.to_plain(x)), int(self.p)) == 1  # type: ignore[arg-type]
        return self.square_class(x) == 1

    def square_class(self, x: Any) -> int:
        """
        Canonical representative of ``x`` modulo squares.

        Over F_p this is 1 or the least non-residue; over Q the squarefree
        integer with the sign of ``x``.
        """
        k = self.domain
        if k.is_zero(x):
            raise ContractViolation("zero has no square class")
        if self.kind == "Fp":
            return 1 if self.is_square(x) else self.least_nonresidue()
        r = Rational(k.to_sympy(x))
        n = int(r.p) * int(r.q)
        sign = -1 if n < 0 else 1
        out = 1
        for prime, exp in factorint(abs(n)).items():
            if exp % 2:
                out *= int(prime)
        return sign * out

    def least_nonresidue(self) -> int:
        p = int(self.p)  # type: ignore[arg-type]
        for a in range(2, p):
            if legendre_symbol(a, p) == -1:
                return a
        raise ContractViolation(f"no quadratic non-residue mod {p}")

    def from_sympy(self, value: Any) -> Any:
        return self.domain.from_sympy(Integer(value) if isinstance(value, int) else value)
