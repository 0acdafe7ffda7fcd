"""Coefficient fields: the rationals or a prime field GF(p).

Field elements are plain Python objects: ``int`` reduced into ``[0, p)`` for
prime fields and :class:`fractions.Fraction` for the rationals.  The hot
elimination loops in :mod:`osforge.exactla` branch on :attr:`FieldContext.p`
instead of calling methods per operation.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from sympy import isprime

DEFAULT_PRIME = 32003


@dataclass(frozen=True)
class FieldContext:
    """An exact coefficient field.

    ``p is None`` means the rationals; otherwise GF(p).
    """

    p: int | None = DEFAULT_PRIME

    def __post_init__(self):
        if self.p is not None and not isprime(self.p):
            raise ValueError(f"{self.p} is not prime")

    @classmethod
    def rationals(cls) -> FieldContext:
        return cls(None)

    @classmethod
    def prime(cls, p: int = DEFAULT_PRIME) -> FieldContext:
        return cls(p)

    @classmethod
    def parse(cls, text: str) -> FieldContext:
        """Parse ``q`` (rationals) or ``p:<prime>``."""
        t = text.strip().lower()
        if t in ("q", "qq", "rationals"):
            return cls(None)
        if t.startswith("p:"):
            return cls(int(t[2:]))
        raise ValueError(f"unknown field {text!r}; expected 'q' or 'p:<prime>'")

    @property
    def kind(self) -> str:
        return "rationals" if self.p is None else "prime"

    @property
    def name(self) -> str:
        return "QQ" if self.p is None else f"GF({self.p})"

    def __call__(self, x):
        p = self.p
        if p is None:
            return Fraction(x)
        if isinstance(x, Fraction):
            return x.numerator * pow(x.denominator, -1, p) % p
        return int(x) % p

    @property
    def zero(self):
        return Fraction(0) if self.p is None else 0

    @property
    def one(self):
        return Fraction(1) if self.p is None else 1

    def add(self, a, b):
        return a + b if self.p is None else (a + b) % self.p

    def sub(self, a, b):
        return a - b if self.p is None else (a - b) % self.p

    def mul(self, a, b):
        return a * b if self.p is None else a * b % self.p

    def neg(self, a):
        return -a if self.p is None else -a % self.p

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        return 1 / Fraction(a) if self.p is None else pow(a, -1, self.p)

    def random_element(self, rng: random.Random, bound: int = 9):
        """Uniform element of GF(p); for QQ a uniform integer in [-bound, bound]."""
        if self.p is None:
            return Fraction(rng.randint(-bound, bound))
        return rng.randrange(self.p)

    def lift(self, a) -> int | Fraction:
        """Readable representative: symmetric residue for GF(p)."""
        if self.p is None:
            return a
        a %= self.p
        return a - self.p if a > self.p // 2 else a

    def render(self, a) -> str:
        return str(self.lift(a))
