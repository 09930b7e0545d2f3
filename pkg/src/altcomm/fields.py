"""Exact scalar fields: the rationals and prime residue fields.

Scalars are plain Python values, `fractions.Fraction` for the rationals and
canonical residues (ints in [0, p)) for a prime field, so every scalar is
exact, hashable and comparable with ==.  A field object supplies the
arithmetic; generic code keeps a field reference and never inspects the
representation.  No floating point appears anywhere.

Characteristics 2 and 3 are rejected at construction: the algebraic
machinery built on top divides by 2 in its linearization arguments and by
2 and 3 when splitting elements into components, so small characteristic
would silently corrupt results.
"""

from __future__ import annotations

import operator
from fractions import Fraction


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


class RationalField:
    """The rational numbers; scalars are `Fraction` values.

    Fractions normalize themselves to lowest terms with positive
    denominator, which keeps equality and string round-trips canonical.
    """

    kind = "rational"
    characteristic = 0
    zero = Fraction(0)
    one = Fraction(1)

    add = staticmethod(operator.add)
    sub = staticmethod(operator.sub)
    mul = staticmethod(operator.mul)
    neg = staticmethod(operator.neg)

    @staticmethod
    def inv(a: Fraction) -> Fraction:
        if not a:
            raise ZeroDivisionError("inverse of zero")
        return Fraction(1) / a

    @staticmethod
    def div(a: Fraction, b: Fraction) -> Fraction:
        if not b:
            raise ZeroDivisionError("division by zero")
        return a / b

    @staticmethod
    def from_int(n: int) -> Fraction:
        return Fraction(n)

    @staticmethod
    def parse(text: str) -> Fraction:
        return Fraction(text.strip())

    @staticmethod
    def fmt(a: Fraction) -> str:
        return str(a)

    @property
    def label(self) -> str:
        return "Q"

    def to_dict(self) -> dict:
        return {"kind": "rational"}

    def __eq__(self, other: object) -> bool:
        return isinstance(other, RationalField)

    def __hash__(self) -> int:
        return hash("rational")

    def __repr__(self) -> str:
        return "RationalField()"


class PrimeField:
    """The residue field F_p for a prime p >= 5; scalars are ints in [0, p)."""

    kind = "prime"

    def __init__(self, p: int) -> None:
        if not isinstance(p, int) or not _is_prime(p):
            raise ValueError(f"modulus {p!r} is not prime")
        if p in (2, 3):
            raise ValueError(f"characteristic {p} is not supported; it must differ from 2 and 3")
        self.p = p
        self.characteristic = p
        self.zero = 0
        self.one = 1
        # Bound closures once; arithmetic runs in tight loops.
        self.add = lambda a, b: (a + b) % p
        self.sub = lambda a, b: (a - b) % p
        self.mul = lambda a, b: (a * b) % p
        self.neg = lambda a: (-a) % p

    def inv(self, a: int) -> int:
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, self.p - 2, self.p)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def from_int(self, n: int) -> int:
        return n % self.p

    def parse(self, text: str) -> int:
        return int(text.strip(), 10) % self.p

    def fmt(self, a: int) -> str:
        return str(a)

    @property
    def label(self) -> str:
        return f"F{self.p}"

    def to_dict(self) -> dict:
        return {"kind": "prime", "p": self.p}

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self) -> int:
        return hash(("prime", self.p))

    def __repr__(self) -> str:
        return f"PrimeField({self.p})"


def field_from_dict(d: dict):
    """Build a field from its serialized form, {"kind": "rational"} or {"kind": "prime", "p": p}."""
    if not isinstance(d, dict) or "kind" not in d:
        raise ValueError(f"malformed field descriptor: {d!r}")
    kind = d["kind"]
    if kind == "rational":
        return RationalField()
    if kind == "prime":
        if "p" not in d:
            raise ValueError("prime field descriptor is missing the modulus 'p'")
        return PrimeField(d["p"])
    raise ValueError(f"unknown field kind {kind!r}")
