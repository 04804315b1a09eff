"""Small integer routines: factorization, multiplicative orders, totient."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd


@dataclass(frozen=True)
class Factorization:
    value: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        prod = 1
        last = 1
        for p, e in self.factors:
            if p <= last or e < 1:
                raise ValueError(f"malformed factorization {self.factors}")
            last = p
            prod *= p**e
        if prod != self.value:
            raise ValueError(f"factors multiply to {prod}, not {self.value}")

    def prime_powers(self) -> list[int]:
        return [p**e for p, e in self.factors]

    def primes(self) -> list[int]:
        return [p for p, _ in self.factors]

    def divisors(self) -> list[int]:
        divs = [1]
        for p, e in self.factors:
            divs = [d * p**k for d in divs for k in range(e + 1)]
        return sorted(divs)


@lru_cache(maxsize=4096)
def factorize(n: int) -> Factorization:
    """Trial-division factorization; ``factorize(1)`` has no factors."""
    if n < 1:
        raise ValueError(f"factorize needs n >= 1, got {n}")
    value = n
    factors = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            factors.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        factors.append((n, 1))
    return Factorization(value, tuple(factors))


def divisors(n: int) -> list[int]:
    return factorize(n).divisors()


def is_prime(n: int) -> bool:
    return n >= 2 and factorize(n).factors == ((n, 1),)


def _check_coprime(n: int, s: int) -> None:
    if s < 1:
        raise ValueError(f"modulus must be >= 1, got {s}")
    if gcd(n, s) != 1:
        raise ValueError(f"gcd({n}, {s}) != 1")


def mult_order(n: int, s: int) -> int:
    """Least j >= 1 with n**j == 1 (mod s)."""
    _check_coprime(n, s)
    if s == 1:
        return 1
    base = n % s
    x = base
    j = 1
    while x != 1:
        x = x * base % s
        j += 1
    return j


def neg_order(n: int, s: int) -> int | None:
    """Least j >= 1 with n**j == -1 (mod s), or None if -1 is not a power of n."""
    order = mult_order(n, s)
    target = (-1) % s
    base = n % s
    x = base
    for j in range(1, order + 1):
        if x == target:
            return j
        x = x * base % s
    return None


def mod_inverse(n: int, s: int) -> int:
    """The m in [1, s) with n*m == 1 (mod s).

    For s == 1 every integer is an inverse; 1 is returned so that exponent
    inverses stay positive in degenerate fields such as F_2.
    """
    _check_coprime(n, s)
    if s == 1:
        return 1
    return pow(n, -1, s)


def euler_phi(n: int) -> int:
    result = n
    for p, _ in factorize(n).factors:
        result -= result // p
    return result
