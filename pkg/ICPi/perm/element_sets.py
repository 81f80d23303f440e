#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""Element sets stored as sorted, duplicate-free stacks of image arrays."""

import numpy as np

from ..errors import CapacityError, DegreeMismatchError
from ..settings import params
from .group import Group
from .permutation import POINT_DTYPE


def canonical_rows(rows: np.ndarray) -> np.ndarray:
    """Sorts rows lexicographically and drops duplicates."""
    rows = np.asarray(rows, dtype=POINT_DTYPE)
    if rows.shape[0] == 0:
        return rows
    return np.unique(rows, axis=0)


def element_set(G: Group) -> np.ndarray:
    return G.element_array()


def set_product(A: np.ndarray, B: np.ndarray) -> np.ndarray:
    """The set ``{ab : a in A, b in B}`` of two element stacks.

    Raises:
        CapacityError: If ``|A||B|`` exceeds the product bound.
    """
    A = np.asarray(A, dtype=POINT_DTYPE)
    B = np.asarray(B, dtype=POINT_DTYPE)
    if A.shape[1] != B.shape[1]:
        raise DegreeMismatchError(A.shape[1], B.shape[1])
    size = A.shape[0] * B.shape[0]
    if size > params.limits.product_bound:
        raise CapacityError('product_bound', params.limits.product_bound, size)
    # product[j, r] = compose(A[r], B[j]) = B[j][A[r]]
    return canonical_rows(B[:, A].reshape(-1, A.shape[1]))


def set_intersection(A: np.ndarray, B: np.ndarray) -> np.ndarray:
    A = canonical_rows(A)
    B = canonical_rows(B)
    if A.shape[0] == 0 or B.shape[0] == 0:
        return A[:0]
    keys = {row.tobytes() for row in B}
    mask = np.fromiter((row.tobytes() in keys for row in A), dtype=bool, count=A.shape[0])
    return A[mask]


def same_set(A: np.ndarray, B: np.ndarray) -> bool:
    A = canonical_rows(A)
    B = canonical_rows(B)
    return A.shape == B.shape and bool(np.array_equal(A, B))


def groups_permute(H: Group, K: Group) -> bool:
    """Set-level test of ``HK = KH``, used as an oracle for the order criterion."""
    hk = set_product(H.element_array(), K.element_array())
    kh = set_product(K.element_array(), H.element_array())
    return same_set(hk, kh)
