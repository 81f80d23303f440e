#!/usr/bin/env python3
# -*- coding: utf-8 -*-

from ..errors import DegreeMismatchError
from ..perm.group import Group, intersection, join


def products_permute(H: Group, K: Group) -> bool:
    """True iff ``HK = KH``.

    ``HK`` is a set of ``|H||K|/|H n K|`` elements and ``HK = KH`` exactly
    when it is a subgroup, that is when ``<H, K>`` has that order.

    Raises:
        DegreeMismatchError: If the degrees differ.
        CapacityError: If the intersection exceeds the enumeration bound.
    """
    if H.degree != K.degree:
        raise DegreeMismatchError(H.degree, K.degree)
    if H.is_trivial() or K.is_trivial():
        return True
    if H.is_subgroup_of(K) or K.is_subgroup_of(H) or H.normalizes(K) or K.normalizes(H):
        return True
    return join(H, K).order * intersection(H, K).order == H.order * K.order


def product_order(H: Group, K: Group) -> int:
    """``|HK|`` as a set of elements."""
    return H.order * K.order // intersection(H, K).order
