"""Characters of the group of roots of unity, identified with Q/Z.

A character is stored as a reduced fraction a/d with 0 <= a < d; the
group law is addition mod 1, the trivial character is 0/1 and the order
of a/d is d.  ``gamma`` is the canonical section Q/Z -> [0, 1).
"""

from __future__ import annotations

from fractions import Fraction


class Character:
    """An element of Q/Z written multiplicatively (alpha * beta adds the fractions)."""

    __slots__ = ("value",)

    def __init__(self, value):
        v = Fraction(value)
        self.value = v - (v.numerator // v.denominator)  # reduce into [0, 1)

    @staticmethod
    def trivial() -> "Character":
        return Character(0)

    @staticmethod
    def parse(text: str) -> "Character":
        return Character(Fraction(text))

    @property
    def order(self) -> int:
        return self.value.denominator

    def is_trivial(self) -> bool:
        return self.value == 0

    def inverse(self) -> "Character":
        return Character(-self.value)

    def __mul__(self, other: "Character") -> "Character":
        return Character(self.value + other.value)

    def __pow__(self, k: int) -> "Character":
        return Character(k * self.value)

    def __eq__(self, other) -> bool:
        return isinstance(other, Character) and self.value == other.value

    def __hash__(self) -> int:
        return hash(self.value)

    def __lt__(self, other: "Character") -> bool:
        return self.value < other.value

    def __repr__(self) -> str:
        return f"Character({self.value.numerator}/{self.value.denominator})"

    def __str__(self) -> str:
        return f"{self.value.numerator}/{self.value.denominator}"


def gamma(alpha: Character) -> Fraction:
    """The representative of alpha in [0, 1); gamma(trivial) = 0."""
    return alpha.value


def characters_of_order_dividing(d: int) -> list[Character]:
    """All characters alpha with alpha**d trivial, i.e. the fractions a/d."""
    if d < 1:
        raise ValueError("order bound must be >= 1")
    return [Character(Fraction(a, d)) for a in range(d)]
