"""Commutative unital coefficient rings: integers, rationals, integers mod n.

Elements are plain Python values (int, Fraction, reduced int) compared
with ==; the ring object supplies the operations and string codecs used
by the JSON element format.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


class Ring:
    name: str

    def zero(self):
        raise NotImplementedError

    def one(self):
        raise NotImplementedError

    def add(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def coerce(self, n: int):
        raise NotImplementedError

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def is_zero(self, a) -> bool:
        return a == self.zero()

    def parse(self, text: str):
        raise NotImplementedError

    def fmt(self, a) -> str:
        return str(a)

    def nonzero_samples(self):
        """1, -1 and the smallest positive non-unit when one exists."""
        raise NotImplementedError

    def __repr__(self) -> str:
        return self.name


class Integers(Ring):
    name = "Z"

    def zero(self):
        return 0

    def one(self):
        return 1

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def coerce(self, n):
        return int(n)

    def parse(self, text):
        return int(text)

    def nonzero_samples(self):
        return (1, -1, 2)


class Rationals(Ring):
    name = "Q"

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def coerce(self, n):
        return Fraction(n)

    def parse(self, text):
        return Fraction(text)

    def nonzero_samples(self):
        return (Fraction(1), Fraction(-1))


class IntegersMod(Ring):
    """Z/n with elements reduced to 0..n-1. 1 = 0 only when n = 1."""

    def __init__(self, n: int):
        if n < 1:
            raise ValueError("modulus must be >= 1")
        self.n = n
        self.name = f"Zmod:{n}"

    def zero(self):
        return 0

    def one(self):
        return 1 % self.n

    def add(self, a, b):
        return (a + b) % self.n

    def neg(self, a):
        return (-a) % self.n

    def mul(self, a, b):
        return (a * b) % self.n

    def coerce(self, n):
        return int(n) % self.n

    def parse(self, text):
        return int(text) % self.n

    def nonzero_samples(self):
        out = [x for x in (1 % self.n, (-1) % self.n) if x != 0]
        for d in range(2, self.n):
            if gcd(d, self.n) != 1:
                out.append(d)
                break
        seen: list[int] = []
        for x in out:
            if x not in seen:
                seen.append(x)
        return tuple(seen)


ZZ = Integers()
QQ = Rationals()


def ring_by_name(name: str) -> Ring:
    if name == "Z":
        return ZZ
    if name == "Q":
        return QQ
    if name.startswith("Zmod:"):
        return IntegersMod(int(name[len("Zmod:"):]))
    raise ValueError(f"unknown ring {name!r} (expected Z, Q or Zmod:n)")
