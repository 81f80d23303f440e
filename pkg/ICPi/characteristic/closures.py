#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""Normal closures, commutator subgroups, cores, normalizers and centralizers."""

import logging
from typing import List

import numpy as np

from ..errors import ContainmentError, DegreeMismatchError, verify
from ..perm.group import Group, close_under_conjugation, conjugate_rows, group_from_rows, intersection, join
from ..perm.permutation import commutator_elem
from ..settings import params

logger = logging.getLogger(__name__)


def _require_subgroup(G: Group, H: Group, name: str = "H") -> None:
    if not H.is_subgroup_of(G):
        raise ContainmentError(f"{name} is not a subgroup of the ambient group")


def normal_closure(G: Group, H: Group) -> Group:
    """``H^G``, the smallest normal subgroup of ``G`` containing ``H``.

    Raises:
        ContainmentError: If ``H`` is not a subgroup of ``G``.
    """
    _require_subgroup(G, H)
    if G.normalizes(H):
        return H
    return G.memo('normal_closure', H.fingerprint, lambda: close_under_conjugation(G, H.generators))


def commutator_subgroup(G: Group, H: Group, K: Group) -> Group:
    """``[H, K]``, generated by the commutators of generators and closed under conjugation by ``<H, K>``.

    When ``K = G`` the result is normal in ``G`` and ``H^G = H[H, G]``;
    both are asserted when self checks are enabled.

    Raises:
        ContainmentError: If ``H`` or ``K`` is not a subgroup of ``G``.
    """
    _require_subgroup(G, H)
    _require_subgroup(G, K, "K")
    seeds = [commutator_elem(h, k) for h in H.generators for k in K.generators]
    result = close_under_conjugation(join(H, K), seeds)
    if params.checks.self_check and K.order == G.order:
        verify(G.normalizes(result), "[H, G] is not normal in G")
        verify(join(H, result) == normal_closure(G, H), "H^G differs from H[H, G]")
    return result


def derived_subgroup(G: Group) -> Group:
    return G.memo('derived', None, lambda: commutator_subgroup(G, G, G))


def conjugates(G: Group, H: Group) -> List[Group]:
    """Distinct conjugates ``H^g`` of ``H`` under ``G``, starting with ``H`` itself."""
    if G.normalizes(H):
        return [H]
    found = {H.fingerprint: H}
    queue = [H]
    while queue:
        X = queue.pop(0)
        for g in G.generators:
            Y = X.conjugate(g)
            if Y.fingerprint not in found:
                found[Y.fingerprint] = Y
                queue.append(Y)
    return list(found.values())


def core(G: Group, H: Group) -> Group:
    """``Core_G(H)``, the largest normal subgroup of ``G`` inside ``H``.

    Computed as the intersection of the conjugates of ``H``, which is the
    kernel of the action of ``G`` on the right cosets of ``H``.

    Raises:
        ContainmentError: If ``H`` is not a subgroup of ``G``.
        CapacityError: If an intersection exceeds the enumeration bound.
    """
    _require_subgroup(G, H)

    def compute():
        result = H
        for X in conjugates(G, H)[1:]:
            result = intersection(result, X)
            if result.is_trivial():
                break
        return result

    return G.memo('core', H.fingerprint, compute)


def normalizer(G: Group, H: Group) -> Group:
    """``N_G(H)`` by a scan over the elements of ``G``.

    Raises:
        ContainmentError: If ``H`` is not a subgroup of ``G``.
        CapacityError: If ``|G|`` exceeds the enumeration bound.
    """
    _require_subgroup(G, H)
    if G.normalizes(H):
        return G

    def compute():
        rows = G.element_array()
        mask = np.ones(rows.shape[0], dtype=bool)
        for h in H.generators:
            mask &= H.contains_rows(conjugate_rows(rows, h))
        return group_from_rows(G.degree, rows[mask])

    return G.memo('normalizer', H.fingerprint, compute)


def centralizer(G: Group, H: Group) -> Group:
    """``C_G(H)``: elements of ``G`` commuting with every generator of ``H``.

    Raises:
        CapacityError: If ``|G|`` exceeds the enumeration bound.
    """
    if H.degree != G.degree:
        raise DegreeMismatchError(G.degree, H.degree)

    def compute():
        rows = G.element_array()
        mask = np.ones(rows.shape[0], dtype=bool)
        for h in H.generators:
            mask &= np.all(h.images[rows] == rows[:, h.images], axis=1)
        if mask.all():
            return G
        return group_from_rows(G.degree, rows[mask])

    return G.memo('centralizer', H.fingerprint, compute)


def center(G: Group) -> Group:
    if G.is_abelian():
        return G
    return centralizer(G, G)
