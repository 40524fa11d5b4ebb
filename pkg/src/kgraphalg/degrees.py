"""Degree vectors: elements of N^k under the componentwise lattice order."""

from __future__ import annotations

from itertools import product


class Degree(tuple):
    """An element of N^k.

    Immutable. `+` and `-` are componentwise (subtraction is partial and
    raises unless the subtrahend is componentwise below). The partial
    order is exposed as `le`, the lattice operations as `join`/`meet`.
    Plain tuple comparison (lexicographic) is kept for deterministic
    sorting and must not be confused with `le`.
    """

    def __new__(cls, coords):
        coords = tuple(int(c) for c in coords)
        if any(c < 0 for c in coords):
            raise ValueError(f"negative degree coordinate in {coords}")
        return super().__new__(cls, coords)

    @classmethod
    def zero(cls, rank: int) -> Degree:
        return cls((0,) * rank)

    @classmethod
    def basis(cls, rank: int, color: int) -> Degree:
        """The standard basis vector e_color (colors are 1-based)."""
        if not 1 <= color <= rank:
            raise ValueError(f"color {color} out of range 1..{rank}")
        return cls(1 if i == color - 1 else 0 for i in range(rank))

    @property
    def rank(self) -> int:
        return len(self)

    def __add__(self, other) -> Degree:
        return Degree(a + b for a, b in zip(self, other, strict=True))

    def __sub__(self, other) -> Degree:
        if not Degree(other).le(self):
            raise ValueError(f"{other} is not componentwise below {self}")
        return Degree(a - b for a, b in zip(self, other, strict=True))

    def le(self, other) -> bool:
        return all(a <= b for a, b in zip(self, other, strict=True))

    def join(self, other) -> Degree:
        return Degree(max(a, b) for a, b in zip(self, other, strict=True))

    def meet(self, other) -> Degree:
        return Degree(min(a, b) for a, b in zip(self, other, strict=True))

    def total(self) -> int:
        return sum(self)

    def __repr__(self) -> str:
        return "(" + ",".join(str(c) for c in self) + ")"


def degrees_up_to(bound: Degree):
    """All m in N^k with m <= bound, in sorted (tuple) order."""
    for coords in product(*(range(b + 1) for b in bound)):
        yield Degree(coords)


def join_all(degrees, rank: int) -> Degree:
    out = Degree.zero(rank)
    for d in degrees:
        out = out.join(d)
    return out


def parse_degree(text: str, rank: int | None = None) -> Degree:
    """Parse a comma-separated degree vector such as "2,2"."""
    coords = [int(part) for part in text.split(",")]
    if rank is not None and len(coords) != rank:
        raise ValueError(f"degree {text!r} has rank {len(coords)}, expected {rank}")
    return Degree(coords)
