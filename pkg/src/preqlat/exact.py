"""Exact scalars of the form q * (2*pi)**d with q rational.

Every integral computed by the torus calculus and every lattice prefactor
is of this shape, so identities can be asserted as exact equalities
instead of float comparisons.  The zero scalar is canonically (0, 0).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class ExactScalar:
    """An exact value ``q * (2*pi)**pi_power``."""

    q: Fraction
    pi_power: int = 0

    def __post_init__(self):
        object.__setattr__(self, "q", Fraction(self.q))
        if self.q == 0:
            object.__setattr__(self, "pi_power", 0)

    @staticmethod
    def zero() -> "ExactScalar":
        return ExactScalar(Fraction(0), 0)

    def is_zero(self) -> bool:
        return self.q == 0

    def __add__(self, other: "ExactScalar") -> "ExactScalar":
        if not isinstance(other, ExactScalar):
            return NotImplemented
        if self.q == 0:
            return other
        if other.q == 0:
            return self
        if self.pi_power != other.pi_power:
            raise ValueError(
                f"cannot add scalars with (2*pi) powers {self.pi_power} and {other.pi_power}"
            )
        return ExactScalar(self.q + other.q, self.pi_power)

    def __neg__(self) -> "ExactScalar":
        return ExactScalar(-self.q, self.pi_power)

    def __sub__(self, other: "ExactScalar") -> "ExactScalar":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, ExactScalar):
            return ExactScalar(self.q * other.q, self.pi_power + other.pi_power)
        if isinstance(other, (int, Fraction)):
            return ExactScalar(self.q * other, self.pi_power)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, ExactScalar):
            if other.q == 0:
                raise ZeroDivisionError("division by zero ExactScalar")
            return ExactScalar(self.q / other.q, self.pi_power - other.pi_power)
        if isinstance(other, (int, Fraction)):
            return ExactScalar(self.q / other, self.pi_power)
        return NotImplemented

    def scale_pi(self, d: int) -> "ExactScalar":
        """Multiply by (2*pi)**d."""
        if self.q == 0:
            return self
        return ExactScalar(self.q, self.pi_power + d)

    def __float__(self) -> float:
        return float(self.q) * (2.0 * math.pi) ** self.pi_power

    def __str__(self) -> str:
        if self.q == 0:
            return "0"
        if self.pi_power == 0:
            return str(self.q)
        if self.pi_power == 1:
            return f"{self.q}*(2*pi)"
        if self.pi_power == -1:
            return f"{self.q}/(2*pi)"
        return f"{self.q}*(2*pi)**{self.pi_power}"

    def to_json(self) -> dict:
        """Serialize with arbitrary-precision num/den as decimal strings."""
        return {
            "num": str(self.q.numerator),
            "den": str(self.q.denominator),
            "pi_power": self.pi_power,
        }

    @staticmethod
    def from_json(obj: dict) -> "ExactScalar":
        return ExactScalar(
            Fraction(int(obj["num"]), int(obj["den"])), int(obj["pi_power"])
        )
