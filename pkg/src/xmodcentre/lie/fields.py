"""Exact scalar fields: the rationals and ``F_p`` for odd primes ``p``.

Rationals are plain :class:`fractions.Fraction` values. Residues mod ``p`` are
:class:`Residue` instances, which support the usual arithmetic operators so
that the linear algebra can be written once for both fields.
"""

from __future__ import annotations

from fractions import Fraction

from sympy import isprime

from ..errors import UnsupportedSpec


class Residue:
    __slots__ = ("p", "v")

    def __init__(self, v: int, p: int):
        self.v = v % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, Residue):
            if other.p != self.p:
                raise ValueError("residues modulo different primes")
            return other.v
        if isinstance(other, int):
            return other
        if isinstance(other, Fraction):
            return other.numerator * pow(other.denominator, -1, self.p)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else Residue(self.v + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else Residue(self.v - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else Residue(o - self.v, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else Residue(self.v * o, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if o % self.p == 0:
            raise ZeroDivisionError("division by zero in F_p")
        return Residue(self.v * pow(o, -1, self.p), self.p)

    def __rtruediv__(self, other):
        return Residue(self._coerce(other), self.p) / self

    def __neg__(self):
        return Residue(-self.v, self.p)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return (self.v - o) % self.p == 0

    def __hash__(self):
        return hash((self.v, self.p))

    def __bool__(self):
        return self.v != 0

    def __int__(self):
        return self.v

    def __repr__(self):
        return f"{self.v} (mod {self.p})"

    def __str__(self):
        return str(self.v)


class Field:
    """``Field(0)`` is ``Q``; ``Field(p)`` is ``F_p``."""

    def __init__(self, char: int = 0):
        if char == 2:
            raise UnsupportedSpec("characteristic 2 is not allowed")
        if char != 0 and (char < 0 or not isprime(char)):
            raise UnsupportedSpec(f"{char} is not a prime")
        self.char = char

    @property
    def name(self) -> str:
        return "Q" if self.char == 0 else f"F{self.char}"

    def __call__(self, value):
        if self.char == 0:
            if isinstance(value, Residue):
                raise ValueError("cannot read a residue as a rational")
            return Fraction(value)
        if isinstance(value, Residue):
            if value.p != self.char:
                raise ValueError("residue modulo a different prime")
            return value
        return Residue(Residue(1, self.char)._coerce(Fraction(value)), self.char)

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def vector(self, values):
        return [self(v) for v in values]

    def zeros(self, n):
        return [self(0) for _ in range(n)]

    def to_json(self):
        return "Q" if self.char == 0 else {"Fp": self.char}

    def __eq__(self, other):
        return isinstance(other, Field) and other.char == self.char

    def __hash__(self):
        return hash(("Field", self.char))

    def __repr__(self):
        return f"Field({self.char})"


QQ = Field(0)


def GF(p: int) -> Field:
    return Field(p)
