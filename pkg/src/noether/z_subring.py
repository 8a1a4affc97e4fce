"""Ideals in the ring gZ of all integers divisible by a fixed g >= 2.

Every ideal is principal, (g*a) with a >= 1, and (g*a) is contained in (g*b)
exactly when b divides a.  All four decompositions follow from factoring a
and splitting its primes into those dividing g and those coprime to g.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Dict, List, Tuple, Union

KINDS = ("irreducible", "primary", "relprime", "coprime")
_KIND_ALIASES = {"maximal-primary": "primary", "relatively-prime": "relprime"}


def factorize(n: int) -> List[Tuple[int, int]]:
    """Prime factorization by trial division, as sorted (prime, exponent) pairs."""
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if n > 1:
        out.append((n, 1))
    return out


def is_prime(n: int) -> bool:
    return n >= 2 and factorize(n) == [(n, 1)]


def lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b


@dataclass(frozen=True)
class GRing:
    g: int

    def __post_init__(self):
        if self.g < 2:
            raise ValueError("g must be at least 2")

    @property
    def factorization(self) -> List[Tuple[int, int]]:
        return factorize(self.g)

    @property
    def primes(self) -> Tuple[int, ...]:
        return tuple(p for p, _ in self.factorization)

    def ideal(self, generator: int) -> "GIdeal":
        """The ideal generated by ``generator``, which must be a positive multiple of g."""
        if generator <= 0 or generator % self.g:
            raise ValueError(f"{generator} is not a positive multiple of {self.g}")
        return GIdeal(self, generator // self.g)

    def __str__(self):
        return f"{self.g}Z"


@dataclass(frozen=True)
class GIdeal:
    """The ideal (g*a) of gZ."""

    ring: GRing
    a: int

    def __post_init__(self):
        if self.a < 1:
            raise ValueError("a must be a positive integer (a = 0 is rejected)")

    @property
    def generator(self) -> int:
        return self.ring.g * self.a

    @property
    def is_trivial(self) -> bool:
        """True for (g) itself, the whole ring."""
        return self.a == 1

    def split_factorization(self) -> Tuple[Dict[int, int], List[Tuple[int, int]]]:
        """Exponents of a at the primes of g, and the prime powers of a coprime to g."""
        shared = {p: 0 for p in self.ring.primes}
        other = []
        for p, e in factorize(self.a):
            if p in shared:
                shared[p] = e
            else:
                other.append((p, e))
        return shared, other

    def contains(self, other: "GIdeal") -> bool:
        return other.a % self.a == 0

    def __str__(self):
        return f"({self.generator})"


@dataclass(frozen=True)
class GComponent:
    generator: int
    kind: str
    associated_prime: int
    isolated: bool

    def as_dict(self) -> dict:
        return {
            "generators": [str(self.generator)],
            "associated_prime": [str(self.associated_prime)],
            "exponent": None,
            "isolated": self.isolated,
        }


def ideal_lcm(I: GIdeal, J: GIdeal) -> GIdeal:
    if I.ring != J.ring:
        raise ValueError("ideals from different rings")
    g = I.ring.g
    return GIdeal(I.ring, lcm(I.generator, J.generator) // g)


def ideal_gcd(I: GIdeal, J: GIdeal) -> GIdeal:
    if I.ring != J.ring:
        raise ValueError("ideals from different rings")
    return GIdeal(I.ring, gcd(I.generator, J.generator) // I.ring.g)


def decompose(I: GIdeal, kind: str) -> List[GComponent]:
    """Components of (g*a) for one of the four decomposition kinds.

    The trivial ideal (g) decomposes to the empty list.
    """
    kind = _KIND_ALIASES.get(kind, kind)
    if kind not in KINDS:
        raise ValueError(f"unknown decomposition kind {kind!r}")
    if I.is_trivial:
        return []
    g = I.ring.g
    shared, other = I.split_factorization()
    has_base = any(shared.values())
    # primes coexisting with the base prime (g) make its component embedded
    base_isolated = not other

    if kind == "irreducible":
        comps = [
            GComponent(g * p**mu, "irreducible", g, base_isolated)
            for p, mu in sorted(shared.items())
            if mu
        ]
        comps += [GComponent(g * q**r, "irreducible", g * q, True) for q, r in other]
        return comps

    primary = []
    if has_base:
        base = 1
        for p, mu in shared.items():
            base *= p**mu
        primary.append(GComponent(g * base, "primary", g, base_isolated))
    primary += [GComponent(g * q**r, "primary", g * q, True) for q, r in other]
    if kind == "primary":
        return primary
    if kind == "relprime":
        if has_base:
            return [GComponent(I.generator, "relprime", g, True)]
        return [GComponent(c.generator, "relprime", c.associated_prime, True) for c in primary]
    # no units in gZ, so no two proper ideals are coprime
    return [GComponent(I.generator, "coprime", g, True)]


def is_prime_ideal(P: Union[GComponent, GIdeal, int], ring: GRing) -> bool:
    """Prime ideals of gZ are (g) and (g*p) for primes p not dividing g."""
    gen = P.generator if not isinstance(P, int) else P
    g = ring.g
    if gen <= 0 or gen % g:
        raise ValueError(f"{gen} is not a positive multiple of {g}")
    if gen == g:
        return True
    p = gen // g
    return is_prime(p) and g % p != 0


def reconstruct(components: List[GComponent], ring: GRing) -> int:
    """lcm of the component generators (g for an empty list)."""
    out = ring.g
    for c in components:
        out = lcm(out, c.generator)
    return out
