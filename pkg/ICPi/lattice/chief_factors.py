#!/usr/bin/env python3
# -*- coding: utf-8 -*-

from dataclasses import dataclass
from typing import Dict, List, Tuple

from sympy import isprime, primefactors

from ..perm.group import Group
from ..perm.permutation import commutator_elem
from .normal_subgroups import normal_subgroups


@dataclass(frozen=True)
class ChiefFactorPair:
    """Covering pair ``K < L`` of the normal subgroup lattice of an ambient group.

    ``L/K`` is a minimal normal subgroup of ``G/K``.

    Attributes:
        K (Group): Lower normal subgroup.
        L (Group): Upper normal subgroup.
        factor_order (int): ``|L/K|``.
        primes (tuple): Primes dividing ``factor_order``, increasing.
        is_abelian (bool): Whether ``L/K`` is abelian, i.e. elementary abelian.
    """
    K: Group
    L: Group
    factor_order: int
    primes: Tuple[int, ...]
    is_abelian: bool

    @property
    def is_cyclic(self) -> bool:
        """A chief factor is cyclic exactly when it has prime order."""
        return bool(isprime(self.factor_order))

    def is_p_chief(self, p: int) -> bool:
        return self.factor_order % p == 0

    def to_dict(self) -> Dict:
        return {
            'K': {'order': self.K.order, 'generators': self.K.cycle_strings()},
            'L': {'order': self.L.order, 'generators': self.L.cycle_strings()},
            'factor_order': self.factor_order,
        }


def _factor_is_abelian(K: Group, L: Group) -> bool:
    gens = L.generators
    return all(K.contains(commutator_elem(a, b)) for i, a in enumerate(gens) for b in gens[i + 1:])


def chief_factor_pairs(G: Group) -> List[ChiefFactorPair]:
    """All covering pairs of the normal subgroup lattice of ``G``.

    Every pair ``(K, L)`` of normal subgroups with ``K < L`` and no normal
    subgroup strictly between them is returned, not only those of one chief
    series. Pairs are ordered by the positions of ``K`` and then ``L`` in
    :func:`normal_subgroups`.

    Raises:
        CapacityError: If ``|G|`` exceeds the enumeration bound.
    """
    def compute():
        normals = normal_subgroups(G)
        contained = normals.containment_matrix()
        k = len(normals)
        pairs = []
        for i in range(k):
            for j in range(i + 1, k):
                if not contained[i, j]:
                    continue
                if any(contained[i, m] and contained[m, j] for m in range(i + 1, j)):
                    continue
                K, L = normals[i], normals[j]
                factor_order = L.order // K.order
                pairs.append(ChiefFactorPair(K, L, factor_order, tuple(primefactors(factor_order)),
                                             _factor_is_abelian(K, L)))
        return pairs

    return G.memo('chief_factor_pairs', None, compute)


def pairs_below(G: Group, H: Group) -> List[ChiefFactorPair]:
    """Chief factor pairs ``(K, L)`` of ``G`` with ``L <= H``."""
    return [pair for pair in chief_factor_pairs(G) if pair.L.is_subgroup_of(H)]
