#!/usr/bin/env python3
# -*- coding: utf-8 -*-

import logging
from typing import Dict, List

import numpy as np

from ..perm.element_sets import canonical_rows
from ..perm.group import Group, conjugate_rows, group_from_rows, join, trivial_group
from ..perm.permutation import Permutation
from .subgroup_set import SubgroupSet

logger = logging.getLogger(__name__)


def conjugacy_classes(G: Group) -> List[np.ndarray]:
    """Conjugacy classes of ``G`` as sorted row stacks; the identity class comes first.

    Raises:
        CapacityError: If ``|G|`` exceeds the enumeration bound.
    """
    def compute():
        rows = G.element_array()
        index = {row.tobytes(): i for i, row in enumerate(rows)}
        assigned = np.zeros(rows.shape[0], dtype=bool)
        classes = []
        for i in range(rows.shape[0]):
            if assigned[i]:
                continue
            cls = canonical_rows(conjugate_rows(rows, Permutation._from_array(rows[i])))
            assigned[[index[row.tobytes()] for row in cls]] = True
            cls.setflags(write=False)
            classes.append(cls)
        return classes

    return G.memo('conjugacy_classes', None, compute)


def class_representatives(G: Group) -> List[Permutation]:
    return [Permutation._from_array(cls[0]) for cls in conjugacy_classes(G)]


def _class_closures(G: Group) -> List[Group]:
    closures: Dict[str, Group] = {}
    for cls in conjugacy_classes(G)[1:]:
        N = group_from_rows(G.degree, cls)
        closures.setdefault(N.fingerprint, N)
    return list(closures.values())


def normal_subgroups(G: Group) -> SubgroupSet:
    """Every normal subgroup of ``G``, including ``1`` and ``G``.

    The normal closures of the conjugacy classes are joined with each other
    until no new subgroup appears; the group generated by a class is already
    normal, so joins of them stay normal.

    Args:
        G (Group): Ambient group.

    Returns:
        SubgroupSet: The normal subgroups, sorted by ``(order, fingerprint)``.

    Raises:
        CapacityError: If ``|G|`` exceeds the enumeration bound.
    """
    def compute():
        closures = _class_closures(G)
        found: Dict[str, Group] = {}
        trivial = trivial_group(G.degree)
        found[trivial.fingerprint] = trivial
        frontier = []
        for N in closures:
            if N.fingerprint not in found:
                found[N.fingerprint] = N
                frontier.append(N)
        while frontier:
            fresh = []
            for N in frontier:
                for C in closures:
                    if C.is_subgroup_of(N):
                        continue
                    J = join(N, C)
                    if J.fingerprint not in found:
                        found[J.fingerprint] = J
                        fresh.append(J)
            frontier = fresh
        found[G.fingerprint] = G
        logger.debug("%d normal subgroups in group of order %d", len(found), G.order)
        return SubgroupSet(G, found.values(), verify=False)

    return G.memo('normal_subgroups', None, compute)


def minimal_normal_subgroups(G: Group) -> SubgroupSet:
    """Atoms of the normal subgroup lattice; empty for the trivial group."""
    def compute():
        normals = normal_subgroups(G)
        contained = normals.containment_matrix()
        atoms = [N for j, N in enumerate(normals)
                 if N.order > 1 and not any(contained[i, j] for i in range(1, j) if normals[i].order < N.order)]
        return SubgroupSet(G, atoms, verify=False)

    return G.memo('minimal_normal_subgroups', None, compute)
