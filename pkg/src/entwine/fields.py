"""Exact scalar arithmetic: arbitrary-precision rationals and prime fields GF(p).

Scalars are plain ``Fraction`` values over the rationals and canonical
representatives ``0..p-1`` (Python ints) over GF(p).  Bijectivity questions
downstream are decided by exact rank computations, so no floating point
appears anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

Scalar = Union[int, Fraction]

RATIONAL = "rational"
PRIME = "prime"


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Ground field of a computation.

    All scalars inside one computation share one FieldSpec; mixing fields is
    rejected at the matrix level with FieldMismatch.
    """

    kind: str
    p: int | None = None

    def __post_init__(self):
        if self.kind == RATIONAL:
            if self.p is not None:
                raise ValueError("rational field carries no modulus")
        elif self.kind == PRIME:
            if self.p is None or not _is_prime(self.p):
                raise ValueError(f"field modulus must be prime, got {self.p!r}")
        else:
            raise ValueError(f"unknown field kind {self.kind!r}")

    @property
    def is_prime_field(self) -> bool:
        return self.kind == PRIME

    @property
    def zero(self) -> Scalar:
        return 0 if self.kind == PRIME else Fraction(0)

    @property
    def one(self) -> Scalar:
        return 1 if self.kind == PRIME else Fraction(1)

    def coerce(self, value) -> Scalar:
        """Bring an int/Fraction/str into canonical form for this field."""
        if self.kind == PRIME:
            if isinstance(value, Fraction):
                if value.denominator != 1:
                    return self.mul(value.numerator % self.p, self.invert(value.denominator % self.p))
                value = value.numerator
            return int(value) % self.p
        return Fraction(value)

    def add(self, a: Scalar, b: Scalar) -> Scalar:
        return (a + b) % self.p if self.kind == PRIME else a + b

    def sub(self, a: Scalar, b: Scalar) -> Scalar:
        return (a - b) % self.p if self.kind == PRIME else a - b

    def mul(self, a: Scalar, b: Scalar) -> Scalar:
        return (a * b) % self.p if self.kind == PRIME else a * b

    def neg(self, a: Scalar) -> Scalar:
        return (-a) % self.p if self.kind == PRIME else -a

    def invert(self, a: Scalar) -> Scalar:
        if self.kind == PRIME:
            a %= self.p
            if a == 0:
                raise ZeroDivisionError("inverse of zero in prime field")
            return pow(a, self.p - 2, self.p)
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / Fraction(a)

    def div(self, a: Scalar, b: Scalar) -> Scalar:
        return self.mul(a, self.invert(b))

    def parse(self, raw) -> Scalar:
        """Parse a document coefficient. Raises ValueError on malformed input."""
        if self.kind == PRIME:
            if isinstance(raw, bool) or not isinstance(raw, int):
                raise ValueError(f"prime-field coefficient must be an integer, got {raw!r}")
            return raw % self.p
        if isinstance(raw, bool):
            raise ValueError(f"rational coefficient must be a string or integer, got {raw!r}")
        if isinstance(raw, int):
            return Fraction(raw)
        if isinstance(raw, str):
            try:
                return Fraction(raw)
            except (ValueError, ZeroDivisionError) as exc:
                raise ValueError(f"malformed rational coefficient {raw!r}: {exc}") from None
        raise ValueError(f"rational coefficient must be a string or integer, got {raw!r}")

    def format(self, a: Scalar):
        """Canonical JSON value: lowest-terms string over Q, int 0..p-1 over GF(p)."""
        if self.kind == PRIME:
            return int(a) % self.p
        return str(Fraction(a))


QQ = FieldSpec(RATIONAL)


def GF(p: int) -> FieldSpec:
    return FieldSpec(PRIME, p)
