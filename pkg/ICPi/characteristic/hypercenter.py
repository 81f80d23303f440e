#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""The supersoluble and p-supersoluble hypercenters ``Z_U(G)`` and ``Z_pU(G)``."""

import logging
from typing import Callable

from ..errors import verify
from ..lattice.chief_factors import ChiefFactorPair, chief_factor_pairs
from ..lattice.normal_subgroups import normal_subgroups
from ..perm.group import Group, join, trivial_group
from ..settings import params
from .primes import check_prime

logger = logging.getLogger(__name__)


def _ascend(G: Group, admissible: Callable[[ChiefFactorPair], bool]) -> Group:
    """Grows ``Z_0 = 1`` by every chief factor ``L/Z_i`` that is admissible, until a fixpoint.

    Each step joins all ``L`` covering ``Z_i`` in the normal lattice with an
    admissible factor, which is the product of the admissible minimal normal
    subgroups of ``G/Z_i``. The result is checked against every covering pair
    below it when self checks are enabled.
    """
    normals = normal_subgroups(G)
    pairs = chief_factor_pairs(G)
    Z = trivial_group(G.degree)
    steps = 0
    while True:
        covers = [pair.L for pair in pairs if pair.K.fingerprint == Z.fingerprint and admissible(pair)]
        if not covers:
            break
        Z = normals[normals.index_of(join(Z, *covers))]
        steps += 1
    logger.debug("hypercenter of order %d reached in %d steps", Z.order, steps)
    if params.checks.self_check:
        verify(all(admissible(pair) for pair in pairs if pair.L.is_subgroup_of(Z)),
               "a chief factor below the hypercenter is not admissible")
    return Z


def hypercenter_u(G: Group) -> Group:
    """``Z_U(G)``: the largest normal subgroup all of whose ``G``-chief factors below it are cyclic.

    Raises:
        CapacityError: If ``|G|`` exceeds the enumeration bound.
    """
    return G.memo('z_u', None, lambda: _ascend(G, lambda pair: pair.is_cyclic))


def hypercenter_pu(G: Group, p: int) -> Group:
    """``Z_pU(G)``: as :func:`hypercenter_u`, with chief factors that are ``p'``-groups or of order ``p``.

    Raises:
        CapacityError: If ``|G|`` exceeds the enumeration bound.
    """
    p = check_prime(p)
    return G.memo('z_pu', p, lambda: _ascend(G, lambda pair: pair.factor_order == p or not pair.is_p_chief(p)))
