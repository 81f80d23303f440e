#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""Bounded enumeration of subgroups through the multiplication table of the ambient group."""

import itertools
import logging
from typing import Callable, Dict, List, Optional, Tuple

import numpy as np
from sympy import primefactors

from ..errors import CapacityError, ICPiError, NotAPGroupError, verify
from ..perm.group import Group, close_under_conjugation
from ..perm.permutation import Permutation, commutator_elem
from ..settings import params
from .subgroup_set import SubgroupSet

logger = logging.getLogger(__name__)

_Found = Tuple[np.ndarray, Tuple[int, ...]]


class _ElementTable:
    """Multiplication table of a small group over its sorted element array.

    Subgroups are handled as boolean masks over the element indices together
    with a tuple of generating indices. Index 0 is the identity.
    """

    def __init__(self, G: Group) -> None:
        rows = G.element_array()
        n, degree = rows.shape
        # products[j, i] = compose(rows[i], rows[j])
        products = rows[:, rows].reshape(-1, degree)
        _, inverse = np.unique(products, axis=0, return_inverse=True)
        self.ambient = G
        self.rows = rows
        self.size = n
        self.mult = np.asarray(inverse, dtype=np.int64).reshape(n, n).T.copy()

    def closure(self, gens: Tuple[int, ...]) -> np.ndarray:
        mask = np.zeros(self.size, dtype=bool)
        mask[0] = True
        frontier = np.array([0], dtype=np.int64)
        gens = np.asarray(gens, dtype=np.int64)
        while frontier.size and gens.size:
            reached = np.unique(self.mult[np.ix_(frontier, gens)])
            frontier = reached[~mask[reached]]
            mask[frontier] = True
        return mask

    def cyclic(self) -> List[_Found]:
        """One entry per cyclic subgroup, generated by its least-index generator."""
        seen: Dict[bytes, _Found] = {}
        for i in range(self.size):
            mask = self.closure((i,))
            seen.setdefault(np.packbits(mask).tobytes(), (mask, (i,) if i else ()))
        return list(seen.values())

    def enumerate(self, keep: Callable[[int], bool]) -> List[_Found]:
        """Subgroups whose order satisfies ``keep``, grown by joining cyclic subgroups.

        ``keep`` must be closed under taking divisors, so that every kept
        subgroup is reached through kept intermediate joins.
        """
        cyclics = [c for c in self.cyclic() if keep(int(c[0].sum()))]
        found: Dict[bytes, _Found] = {np.packbits(mask).tobytes(): (mask, gens) for mask, gens in cyclics}
        frontier = [c for c in cyclics if c[1]]
        while frontier:
            fresh = []
            for mask, gens in frontier:
                for cmask, cgens in cyclics:
                    if not cgens or not (cmask & ~mask).any():
                        continue
                    joined = self.closure(gens + cgens)
                    if not keep(int(joined.sum())):
                        continue
                    key = np.packbits(joined).tobytes()
                    if key not in found:
                        found[key] = (joined, gens + cgens)
                        fresh.append(found[key])
            frontier = fresh
        return list(found.values())

    def as_group(self, gens: Tuple[int, ...]) -> Group:
        G = self.ambient
        if len(gens) and self.closure(gens).sum() == G.order:
            return G
        return Group(G.degree, [Permutation._from_array(self.rows[i]) for i in gens])


def _check_subgroup_bound(G: Group) -> None:
    if G.order > params.limits.subgroup_bound:
        raise CapacityError('subgroup_bound', params.limits.subgroup_bound, G.order)


def _element_table(G: Group) -> _ElementTable:
    _check_subgroup_bound(G)
    return G.memo('element_table', None, lambda: _ElementTable(G))


def cyclic_subgroups(G: Group) -> SubgroupSet:
    """Every cyclic subgroup of ``G``, one per distinct element set.

    Raises:
        CapacityError: If ``|G|`` exceeds the enumeration bound.
    """
    def compute():
        rows = G.element_array()
        index = {row.tobytes(): i for i, row in enumerate(rows)}
        covered = np.zeros(rows.shape[0], dtype=bool)
        members = []
        for i in range(rows.shape[0]):
            if covered[i]:
                continue
            g = Permutation._from_array(rows[i])
            k = g.order()
            power = g
            for e in range(1, k + 1):
                if np.gcd(e, k) == 1:
                    covered[index[power.key()]] = True
                power = power * g
            members.append(Group(G.degree, [g]))
        return SubgroupSet(G, members, verify=False)

    return G.memo('cyclic_subgroups', None, compute)


def all_subgroups(G: Group) -> SubgroupSet:
    """Every subgroup of ``G``.

    Raises:
        CapacityError: If ``|G|`` exceeds the subgroup enumeration bound.
    """
    def compute():
        table = _element_table(G)
        found = table.enumerate(lambda order: True)
        logger.debug("%d subgroups in group of order %d", len(found), G.order)
        return SubgroupSet(G, [table.as_group(gens) for _, gens in found], verify=False)

    _check_subgroup_bound(G)
    return G.memo('all_subgroups', None, compute)


def subgroups_of_order(G: Group, n: int) -> SubgroupSet:
    """Every subgroup of ``G`` of order ``n``.

    Only joins whose order divides ``n`` are explored.

    Args:
        G (Group): Ambient group.
        n (int): Positive divisor of ``|G|``.

    Returns:
        SubgroupSet: The subgroups of order ``n``.

    Raises:
        ICPiError: If ``n`` does not divide ``|G|``.
        CapacityError: If ``|G|`` exceeds the subgroup enumeration bound.
    """
    if n < 1 or G.order % n:
        raise ICPiError(f"{n} does not divide the group order {G.order}")
    if n == G.order:
        return SubgroupSet(G, [G], verify=False)
    if n == 1:
        return SubgroupSet(G, [Group(G.degree)], verify=False)

    def compute():
        table = _element_table(G)
        found = table.enumerate(lambda order: n % order == 0)
        members = [table.as_group(gens) for mask, gens in found if mask.sum() == n]
        return SubgroupSet(G, members, verify=False)

    _check_subgroup_bound(G)
    return G.memo('subgroups_of_order', n, compute)


def maximal_subgroups(G: Group) -> SubgroupSet:
    """Maximal subgroups of ``G`` from the exhaustive subgroup list; empty for the trivial group."""
    def compute():
        subgroups = [H for H in all_subgroups(G) if H.order < G.order]
        maximal = []
        for i, H in enumerate(subgroups):
            larger = (K for K in subgroups[i + 1:] if K.order > H.order and K.order % H.order == 0)
            if not any(H.is_subgroup_of(K) for K in larger):
                maximal.append(H)
        return SubgroupSet(G, maximal, verify=False)

    return G.memo('maximal_subgroups', None, compute)


def p_group_prime(G: Group) -> Optional[int]:
    """The prime ``p`` when ``G`` is a nontrivial ``p``-group, else None."""
    primes = primefactors(G.order)
    return int(primes[0]) if len(primes) == 1 else None


def frattini_of_p_group(P: Group, p: int) -> Group:
    """``Phi(P)``, the normal closure of the ``p``-th powers and commutators of the generators."""
    gens = P.generators
    seeds = [g ** p for g in gens] + [commutator_elem(a, b) for i, a in enumerate(gens) for b in gens[i + 1:]]
    return close_under_conjugation(P, seeds)


def maximal_subgroups_p_group(P: Group) -> SubgroupSet:
    """All index-``p`` subgroups of a ``p``-group, as preimages of hyperplanes of ``P/Phi(P)``.

    A basis ``x_1, ..., x_r`` of ``P/Phi(P)`` is chosen greedily among the
    generators of ``P``. Each hyperplane is the kernel of a functional ``f``
    normalised so that its first nonzero coordinate ``f_i`` is 1; its preimage
    is generated by ``Phi(P)`` and ``x_j x_i^(-f_j)`` for ``j != i``.

    Raises:
        NotAPGroupError: If ``P`` is not a ``p``-group.
    """
    if P.is_trivial():
        return SubgroupSet(P, [], verify=False)
    p = p_group_prime(P)
    if p is None:
        raise NotAPGroupError(f"group of order {P.order} is not a p-group")

    def compute():
        phi = frattini_of_p_group(P, p)
        basis, span = [], phi
        for g in P.generators:
            if not span.contains(g):
                basis.append(g)
                span = Group(P.degree, span.generators + (g,))
        r = len(basis)
        verify(p ** r * phi.order == P.order, "generator basis does not span the Frattini quotient")
        members = []
        for f in itertools.product(range(p), repeat=r):
            nonzero = [j for j in range(r) if f[j]]
            if not nonzero or f[nonzero[0]] != 1:
                continue
            i0 = nonzero[0]
            gens = list(phi.generators)
            gens += [basis[j] * basis[i0] ** (-f[j]) for j in range(r) if j != i0]
            members.append(Group(P.degree, gens))
        return SubgroupSet(P, members, verify=False)

    return P.memo('maximal_subgroups_p_group', None, compute)
