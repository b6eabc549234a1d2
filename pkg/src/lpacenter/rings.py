"""Exact commutative unital coefficient rings.

Ring elements are plain hashable Python values (int, Fraction); a Ring
object supplies the operations, parsing, and formatting.  Shipped
instances: the integers, the rationals, and the integers modulo n.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any


class Ring:
    """Operations on a commutative unital ring with exact equality."""

    name: str = "?"
    is_field: bool = False

    def zero(self):
        raise NotImplementedError

    def one(self):
        raise NotImplementedError

    def from_int(self, n: int):
        raise NotImplementedError

    def add(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def is_zero(self, a) -> bool:
        return a == self.zero()

    def divide(self, a, b):
        """Exact division; raises ZeroDivisionError or ValueError when undefined."""
        raise NotImplementedError(f"{self.name} does not support division")

    def format(self, a) -> str:
        return str(a)

    def parse(self, text: str):
        raise NotImplementedError

    def __eq__(self, other):
        return type(self) is type(other) and self.name == other.name

    def __hash__(self):
        return hash((type(self), self.name))

    def __repr__(self):
        return f"Ring({self.name})"


class IntegerRing(Ring):
    name = "z"

    def zero(self):
        return 0

    def one(self):
        return 1

    def from_int(self, n):
        return int(n)

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def parse(self, text):
        return int(text)


class RationalRing(Ring):
    name = "q"
    is_field = True

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def from_int(self, n):
        return Fraction(n)

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def divide(self, a, b):
        return Fraction(a) / b

    def parse(self, text):
        return Fraction(text)


class ModularRing(Ring):
    """Integers modulo n, elements canonicalized to 0..n-1."""

    def __init__(self, modulus: int):
        if not isinstance(modulus, int) or modulus < 2:
            raise ValueError(f"modulus must be an integer >= 2, got {modulus!r}")
        self.modulus = modulus
        self.name = f"zmod:{modulus}"
        self.is_field = _is_prime(modulus)

    def zero(self):
        return 0

    def one(self):
        return 1 % self.modulus

    def from_int(self, n):
        return n % self.modulus

    def add(self, a, b):
        return (a + b) % self.modulus

    def neg(self, a):
        return (-a) % self.modulus

    def mul(self, a, b):
        return (a * b) % self.modulus

    def divide(self, a, b):
        return (a * pow(b, -1, self.modulus)) % self.modulus

    def parse(self, text):
        return int(text) % self.modulus

    def __eq__(self, other):
        return isinstance(other, ModularRing) and other.modulus == self.modulus

    def __hash__(self):
        return hash(("zmod", self.modulus))


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


ZZ = IntegerRing()
QQ = RationalRing()


def Zmod(n: int) -> ModularRing:
    return ModularRing(n)


def ring_from_spec(spec: str) -> Ring:
    """Parse a ring selector: ``z``, ``q``, or ``zmod:N``."""
    s = spec.strip().lower()
    if s == "z":
        return ZZ
    if s == "q":
        return QQ
    if s.startswith("zmod:"):
        try:
            n = int(s.split(":", 1)[1])
        except ValueError:
            raise ValueError(f"bad modulus in ring spec {spec!r}") from None
        return ModularRing(n)
    raise ValueError(f"unknown ring spec {spec!r} (use z, q, or zmod:N)")
