#!/usr/bin/env python3
# -*- coding: utf-8 -*-

import logging
from typing import Tuple

import numpy as np

from ..errors import CapacityError, ContainmentError, NormalityError
from ..perm.group import Group
from ..perm.permutation import POINT_DTYPE, Permutation
from ..settings import params
from .epimorphism import Epimorphism

logger = logging.getLogger(__name__)


def _coset_labels(G: Group, N: Group) -> Tuple[np.ndarray, list, dict]:
    """Labels every element of ``G`` by its coset ``gN``; cosets are numbered by their least element."""
    rows = G.element_array()
    index = {row.tobytes(): i for i, row in enumerate(rows)}
    kernel_rows = N.element_array()
    labels = np.full(rows.shape[0], -1, dtype=np.int64)
    reps = []
    for i in range(rows.shape[0]):
        if labels[i] >= 0:
            continue
        for row in kernel_rows[:, rows[i]]:
            labels[index[row.tobytes()]] = len(reps)
        reps.append(i)
    return labels, reps, index


def _build_quotient(G: Group, N: Group) -> Tuple[Group, Epimorphism]:
    if N.is_trivial():
        return G, Epimorphism.identity(G)
    labels, reps, index = _coset_labels(G, N)
    rep_rows = G.element_array()[reps]
    images = []
    for s in G.generators:
        moved = s.images[rep_rows]
        images.append(Permutation._from_array(
            np.array([labels[index[row.tobytes()]] for row in moved], dtype=POINT_DTYPE)))
    Q = Group(max(len(reps), 1), images)
    logger.debug("quotient of order %d by order %d: %d cosets", G.order, N.order, len(reps))
    return Q, Epimorphism(G, Q, images, kernel=N, check=False)


def quotient_group(G: Group, N: Group) -> Tuple[Group, Epimorphism]:
    """Regular action of ``G/N`` on the cosets of ``N``, with the natural epimorphism.

    Pushing a subgroup ``H`` forward with ``epi.image(H)`` yields ``HN/N``.
    The quotient by the trivial subgroup is ``G`` itself with the identity map.

    Args:
        G (Group): Ambient group.
        N (Group): Normal subgroup of ``G``.

    Returns:
        Tuple[Group, Epimorphism]: The quotient group and the natural epimorphism.

    Raises:
        ContainmentError: If ``N`` is not a subgroup of ``G``.
        NormalityError: If ``N`` is not normal in ``G``.
        CapacityError: If the index or ``|G|`` exceeds the enumeration bound.
    """
    if not N.is_subgroup_of(G):
        raise ContainmentError("the kernel is not a subgroup of the ambient group")
    if not G.normalizes(N):
        raise NormalityError("the kernel is not normal in the ambient group")
    index = G.order // N.order
    if index > params.limits.enumeration_bound:
        raise CapacityError('enumeration_bound', params.limits.enumeration_bound, index)
    return G.memo('quotient', N.fingerprint, lambda: _build_quotient(G, N))
