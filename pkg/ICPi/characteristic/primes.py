#!/usr/bin/env python3
# -*- coding: utf-8 -*-

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator, Tuple, Union

from sympy import isprime, primefactors

from ..errors import ICPiError
from ..perm.group import Group


class PrimeRole(Enum):
    PI_OF_GROUP = "pi-of-group"
    PI_OF_SECTION = "pi-of-section"
    PARAMETER = "parameter"


@dataclass(frozen=True)
class PrimeSet:
    """A finite set of primes, kept sorted.

    Attributes:
        primes (tuple): Increasing primes.
        role (PrimeRole): Where the set comes from.
    """
    primes: Tuple[int, ...]
    role: PrimeRole = PrimeRole.PARAMETER

    def __post_init__(self) -> None:
        primes = tuple(sorted(set(int(p) for p in self.primes)))
        for p in primes:
            if not isprime(p):
                raise ICPiError(f"{p} is not a prime")
        object.__setattr__(self, 'primes', primes)

    @classmethod
    def of_number(cls, n: int, role: PrimeRole = PrimeRole.PI_OF_SECTION) -> 'PrimeSet':
        return cls(tuple(primefactors(n)), role)

    @classmethod
    def of_group(cls, G: Group) -> 'PrimeSet':
        """``pi(G)``, the primes dividing ``|G|``."""
        return cls(tuple(primefactors(G.order)), PrimeRole.PI_OF_GROUP)

    def __contains__(self, p: int) -> bool:
        return p in self.primes

    def __iter__(self) -> Iterator[int]:
        return iter(self.primes)

    def __len__(self) -> int:
        return len(self.primes)

    def __str__(self) -> str:
        return "{" + ", ".join(str(p) for p in self.primes) + "}"

    def is_pi_number(self, n: int) -> bool:
        """True iff every prime divisor of ``n`` is in the set; only 1 is an empty-set number."""
        return all(q in self.primes for q in primefactors(n))

    def without(self, p: int) -> 'PrimeSet':
        return PrimeSet(tuple(q for q in self.primes if q != p), self.role)


PrimesLike = Union[PrimeSet, Iterable[int], int]


def as_prime_set(pi: PrimesLike) -> PrimeSet:
    if isinstance(pi, PrimeSet):
        return pi
    if isinstance(pi, int):
        return PrimeSet((pi,))
    return PrimeSet(tuple(pi))


def check_prime(p: int) -> int:
    if isinstance(p, bool) or int(p) != p or not isprime(int(p)):
        raise ICPiError(f"{p!r} is not a prime")
    return int(p)


def p_part(n: int, p: int) -> int:
    """Largest power of ``p`` dividing ``n``."""
    result = 1
    while n % p == 0:
        n //= p
        result *= p
    return result


def pi_part(n: int, pi: PrimesLike) -> int:
    pi = as_prime_set(pi)
    result = 1
    for p in pi:
        result *= p_part(n, p)
    return result


def is_p_number(n: int, p: int) -> bool:
    return p_part(n, p) == n


def is_p_prime_number(n: int, p: int) -> bool:
    return n % p != 0
