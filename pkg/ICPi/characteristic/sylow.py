#!/usr/bin/env python3
# -*- coding: utf-8 -*-

import logging
from typing import List

import numpy as np

from ..lattice.subgroup_set import Completeness, SubgroupSet
from ..lattice.subgroups import all_subgroups, cyclic_subgroups
from ..perm.group import Group, element_orders, power_rows, trivial_group
from ..perm.permutation import Permutation
from ..settings import params
from .closures import conjugates, normalizer
from .primes import check_prime, is_p_number, p_part

logger = logging.getLogger(__name__)


def sylow(G: Group, p: int) -> Group:
    """A Sylow ``p``-subgroup of ``G``; trivial when ``p`` does not divide ``|G|``.

    Starts from a ``p``-element of largest order and climbs: while the current
    ``p``-subgroup ``Q`` is not Sylow, it is extended by the first element
    ``x`` of ``N_G(Q)`` outside ``Q`` with ``x^p`` in ``Q``. Such an element
    exists because ``p`` divides ``|N_G(Q) : Q|``.

    Args:
        G (Group): Ambient group.
        p (int): A prime.

    Returns:
        Group: Subgroup of order the ``p``-part of ``|G|``.

    Raises:
        CapacityError: If ``|G|`` exceeds the enumeration bound.
    """
    p = check_prime(p)
    target = p_part(G.order, p)
    if target == 1:
        return trivial_group(G.degree)
    if target == G.order:
        return G

    def compute():
        rows = G.element_array()
        orders = element_orders(rows)
        p_elements = np.flatnonzero([o > 1 and is_p_number(int(o), p) for o in orders])
        start = p_elements[np.argmax(orders[p_elements])]
        Q = Group(G.degree, [Permutation._from_array(rows[start])])
        while Q.order < target:
            candidates = normalizer(G, Q).element_array()
            outside = ~Q.contains_rows(candidates)
            climbing = outside & Q.contains_rows(power_rows(candidates, p))
            x = candidates[np.flatnonzero(climbing)[0]]
            Q = Group(G.degree, Q.generators + (Permutation._from_array(x),))
        logger.debug("Sylow %d-subgroup of order %d", p, Q.order)
        return Q

    return G.memo('sylow', p, compute)


def sylow_conjugates(G: Group, p: int) -> List[Group]:
    """All Sylow ``p``-subgroups of ``G``."""
    return G.memo('sylow_conjugates', p, lambda: conjugates(G, sylow(G, p)))


def p_subgroup_pool(G: Group, p: int) -> SubgroupSet:
    """Nontrivial ``p``-subgroups used as test instances.

    The pool holds every cyclic ``p``-subgroup and every Sylow ``p``-subgroup;
    for ``|G|`` up to the exhaustive pool bound it holds every nontrivial
    ``p``-subgroup and is certified exhaustive.
    """
    p = check_prime(p)

    def compute():
        if G.order <= params.limits.exhaustive_pool_bound:
            members = [H for H in all_subgroups(G) if H.order > 1 and is_p_number(H.order, p)]
            return SubgroupSet(G, members, Completeness.EXHAUSTIVE, verify=False)
        members = [H for H in cyclic_subgroups(G) if H.order > 1 and is_p_number(H.order, p)]
        members += [P for P in sylow_conjugates(G, p) if P.order > 1]
        return SubgroupSet(G, members, Completeness.BOUNDED_INCOMPLETE, verify=False)

    return G.memo('p_subgroup_pool', p, compute)
