"""Exact numbers of the form m * 2^(e/2) with m an odd positive integer.

Every count identity in this package is checked with this type; no
floating point is involved anywhere.  Addition is only defined between
values whose half-exponents agree mod 2 (otherwise the sum would leave
the representable set), which is guaranteed wherever the type is used
because all exponents in one identity share parity.
"""
from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True, order=False)
class HalfPow:
    mantissa: int  # odd positive, or 0 for the zero value
    halfexp: int  # value is mantissa * 2**(halfexp/2)

    def __post_init__(self):
        if not isinstance(self.mantissa, int) or not isinstance(self.halfexp, int):
            raise TypeError("mantissa and half exponent must be integers")
        if self.mantissa < 0:
            raise ValueError("mantissa must be nonnegative")
        if self.mantissa == 0:
            object.__setattr__(self, "halfexp", 0)
        elif self.mantissa % 2 == 0:
            raise ValueError(f"mantissa {self.mantissa} not normalized (even)")

    @staticmethod
    def zero() -> "HalfPow":
        return HalfPow(0, 0)

    @staticmethod
    def from_int(n: int) -> "HalfPow":
        if n < 0:
            raise ValueError("only nonnegative values are representable")
        if n == 0:
            return HalfPow.zero()
        e = 0
        while n % 2 == 0:
            n //= 2
            e += 2
        return HalfPow(n, e)

    @staticmethod
    def pow2_half(e: int) -> "HalfPow":
        """2**(e/2) as an exact value."""
        return HalfPow(1, e)

    def shift(self, e: int) -> "HalfPow":
        """Multiply by 2**(e/2)."""
        if self.mantissa == 0:
            return self
        return HalfPow(self.mantissa, self.halfexp + e)

    def __add__(self, other: "HalfPow") -> "HalfPow":
        if not isinstance(other, HalfPow):
            return NotImplemented
        if self.mantissa == 0:
            return other
        if other.mantissa == 0:
            return self
        if (self.halfexp - other.halfexp) % 2 != 0:
            raise ValueError(
                f"cannot add {self} and {other}: half-exponents differ in parity"
            )
        e = min(self.halfexp, other.halfexp)
        total = self.mantissa * 2 ** ((self.halfexp - e) // 2) + other.mantissa * 2 ** (
            (other.halfexp - e) // 2
        )
        return HalfPow.from_int(total).shift(e)

    def __float__(self) -> float:
        return self.mantissa * 2.0 ** (self.halfexp / 2)

    def __str__(self) -> str:
        if self.mantissa == 0:
            return "0"
        if self.halfexp % 2 == 0:
            k = self.halfexp // 2
            if k >= 0:
                return str(self.mantissa * 2**k)
            return f"{self.mantissa}/{2 ** (-k)}"
        head = "" if self.mantissa == 1 else f"{self.mantissa}*"
        return f"{head}2^({self.halfexp}/2)"

    def to_json_dict(self) -> dict:
        return {"mantissa": self.mantissa, "half_exponent": self.halfexp, "display": str(self)}


def halfpow_sum(values) -> HalfPow:
    total = HalfPow.zero()
    for v in values:
        total = total + v
    return total
