"""The coefficient rings Z/p^mZ (and the field F_p when m = 1)."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotInvertible

# products of two residues must stay exact in a signed 64-bit word
MAX_MODULUS = 2**31


def is_prime(n: int) -> bool:
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
class RingSpec:
    """The ring Z/p^mZ. ``m == 1`` is the prime field F_p."""

    p: int
    m: int = 1

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"p = {self.p} is not prime")
        if self.m < 1:
            raise ValueError(f"m = {self.m} must be at least 1")
        if self.p**self.m >= MAX_MODULUS:
            raise ValueError(f"modulus {self.p}^{self.m} is too large")

    @property
    def modulus(self) -> int:
        return self.p**self.m

    @property
    def is_field(self) -> bool:
        return self.m == 1

    @property
    def residue_field(self) -> "RingSpec":
        return RingSpec(self.p, 1)

    def reduce(self, x: int) -> int:
        return x % self.modulus

    def valuation(self, x: int) -> int:
        """Largest k <= m with p^k dividing x; zero has valuation m."""
        x %= self.modulus
        if x == 0:
            return self.m
        k = 0
        while x % self.p == 0:
            x //= self.p
            k += 1
        return k

    def is_unit(self, x: int) -> bool:
        return x % self.p != 0

    def inverse(self, x: int) -> int:
        if not self.is_unit(x):
            raise NotInvertible(f"{x} is not a unit modulo {self.modulus}")
        return pow(x, -1, self.modulus)

    def signed(self, x: int) -> int:
        """Representative in (-q/2, q/2], handy for printing."""
        q = self.modulus
        x %= q
        return x - q if x > q // 2 else x

    def __str__(self):
        return f"F_{self.p}" if self.m == 1 else f"Z/{self.modulus}Z"
