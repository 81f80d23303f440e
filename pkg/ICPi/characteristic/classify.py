#!/usr/bin/env python3
# -*- coding: utf-8 -*-

from dataclasses import asdict, dataclass
from typing import Dict

from ..lattice.chief_factors import chief_factor_pairs
from ..perm.group import Group
from .primes import check_prime, p_part
from .radicals import fitting, is_p_soluble, o_p_prime


@dataclass(frozen=True)
class Classification:
    """Membership of a group in the formations the theorems talk about, for one prime."""
    p: int
    supersoluble: bool
    p_supersoluble: bool
    p_nilpotent: bool
    p_soluble: bool
    nilpotent: bool

    def to_dict(self) -> Dict:
        return asdict(self)


def is_supersoluble(G: Group) -> bool:
    """All chief factors have prime order."""
    return all(pair.is_cyclic for pair in chief_factor_pairs(G))


def is_p_supersoluble(G: Group, p: int) -> bool:
    """Every chief factor of order divisible by ``p`` has order exactly ``p``."""
    return all(pair.factor_order == p for pair in chief_factor_pairs(G) if pair.is_p_chief(p))


def is_p_nilpotent(G: Group, p: int) -> bool:
    """``O_p'(G)`` has order the ``p'``-part of ``|G|``."""
    return o_p_prime(G, p).order == G.order // p_part(G.order, p)


def classify(G: Group, p: int) -> Classification:
    """Formation memberships of ``G`` at the prime ``p``.

    Raises:
        CapacityError: If ``|G|`` exceeds the enumeration bound.
    """
    p = check_prime(p)

    def compute():
        return Classification(
            p=p,
            supersoluble=is_supersoluble(G),
            p_supersoluble=is_p_supersoluble(G, p),
            p_nilpotent=is_p_nilpotent(G, p),
            p_soluble=is_p_soluble(G, p),
            nilpotent=fitting(G).order == G.order,
        )

    return G.memo('classify', p, compute)


def quotient_in_U(G: Group, N: Group) -> bool:
    """True iff ``G/N`` is supersoluble: every chief factor ``L/K`` with ``N <= K`` is cyclic.

    The normal lattice of ``G/N`` is the interval above ``N``, so no quotient is formed.
    """
    return all(pair.is_cyclic for pair in chief_factor_pairs(G) if N.is_subgroup_of(pair.K))
