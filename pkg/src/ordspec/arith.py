"""Exact integer arithmetic: factorizations, prime parts, multiplicative orders.

Thin, validated wrappers around sympy's number theory.  Everything works on
arbitrary-precision ints; nothing here is probabilistic in a way that can
return a wrong answer silently (sympy's isprime is strong BPSW + Miller-Rabin,
with no known pseudoprime, and is proven deterministic well past every value
this package feeds it).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from sympy import divisors as _sympy_divisors
from sympy import factorint, isprime
from sympy.ntheory.residue_ntheory import n_order
from sympy.polys.specialpolys import cyclotomic_poly

from .errors import DomainError


@dataclass(frozen=True)
class Factorization:
    """A positive integer together with its full prime factorization.

    `factors` maps prime -> exponent and multiplies out to `value`; both are
    checked at construction so a Factorization in hand is always consistent.
    """

    value: int
    factors: dict[int, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.value < 1:
            raise DomainError(f"factorization of non-positive value {self.value}")
        prod = 1
        for p, e in self.factors.items():
            if e < 1 or not isprime(p):
                raise DomainError(f"bad factor entry {p}^{e}")
            prod *= p**e
        if prod != self.value:
            raise DomainError(
                f"factors multiply to {prod}, not {self.value}"
            )

    @property
    def primes(self) -> tuple[int, ...]:
        """The distinct prime divisors, ascending."""
        return tuple(sorted(self.factors))

    def exponent(self, p: int) -> int:
        return self.factors.get(p, 0)

    def __str__(self) -> str:
        if not self.factors:
            return "1"
        return " * ".join(
            f"{p}^{e}" if e > 1 else f"{p}"
            for p, e in sorted(self.factors.items())
        )


def factorize(a: int) -> Factorization:
    """Full prime factorization of a positive integer."""
    if a < 1:
        raise DomainError(f"cannot factorize {a}")
    return Factorization(a, {int(p): int(e) for p, e in factorint(a).items()})


def is_prime(n: int) -> bool:
    return bool(isprime(n))


def prime_divisors(a: int) -> tuple[int, ...]:
    """Distinct primes dividing a, ascending."""
    return factorize(a).primes


def divisors(a: int) -> list[int]:
    """All positive divisors of a, ascending."""
    if a < 1:
        raise DomainError(f"divisors of non-positive value {a}")
    return [int(d) for d in _sympy_divisors(a)]


def gcd_lcm(values: tuple[int, ...] | list[int]) -> tuple[int, int]:
    """(gcd, lcm) of a non-empty collection of positive integers."""
    vals = list(values)
    if not vals:
        raise DomainError("gcd_lcm of empty collection")
    if any(v < 1 for v in vals):
        raise DomainError(f"gcd_lcm needs positive integers, got {vals}")
    return math.gcd(*vals) if len(vals) > 1 else vals[0], math.lcm(*vals)


def r_part(a: int, r: int) -> int:
    """The r-part of a: the largest power of the prime r dividing a."""
    if a < 1:
        raise DomainError(f"r_part of non-positive value {a}")
    if not isprime(r):
        raise DomainError(f"r_part needs a prime, got r={r}")
    part = 1
    while a % r == 0:
        a //= r
        part *= r
    return part


def coprime_part(a: int, r: int) -> int:
    """The r'-part of a: a with every factor of the prime r removed."""
    return a // r_part(a, r)


def mult_order(q: int, r: int) -> int:
    """Multiplicative order of q modulo the prime r (requires r coprime to q)."""
    if not isprime(r):
        raise DomainError(f"mult_order needs a prime modulus, got r={r}")
    if q % r == 0:
        raise DomainError(f"{q} is divisible by {r}, order undefined")
    return int(n_order(q, r))


def cyclotomic_value(n: int, q: int) -> int:
    """The n-th cyclotomic polynomial evaluated at the integer q >= 2."""
    if n < 1 or q < 2:
        raise DomainError(f"cyclotomic_value needs n >= 1, q >= 2, got ({n}, {q})")
    return int(cyclotomic_poly(n, q))
