#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""Short structural labels ("1", "C2", "V4", "A4", "S4", ...) for display.

A label is the catalogue entry whose order and element-order multiset match;
it is a display aid, not an isomorphism certificate. Groups without a match,
and groups whose signature belongs to two catalogue entries, are labelled
``[n]`` with ``n`` their order.
"""

from functools import lru_cache
from typing import Dict, List, Tuple

from ..errors import CapacityError
from ..perm.group import Group, element_order_signature
from ..settings import params
from .group_spec import GroupSpec
from .named_groups import NamedFamily, named_group_spec
from .products import direct_product_spec


def _catalogue() -> List[Tuple[str, GroupSpec]]:
    spec = named_group_spec
    entries = [("1", spec(NamedFamily.CYCLIC, 1))]
    entries += [(f"C{n}", spec(NamedFamily.CYCLIC, n)) for n in range(2, 31)]
    entries += [
        ("V4", spec(NamedFamily.KLEIN_FOUR)),
        ("C2^3", spec(NamedFamily.ELEMENTARY_ABELIAN, 2, 3)),
        ("C2^4", spec(NamedFamily.ELEMENTARY_ABELIAN, 2, 4)),
        ("C3^2", spec(NamedFamily.ELEMENTARY_ABELIAN, 3, 2)),
        ("C5^2", spec(NamedFamily.ELEMENTARY_ABELIAN, 5, 2)),
        ("S3", spec(NamedFamily.SYMMETRIC, 3)),
        ("Q8", spec(NamedFamily.QUATERNION)),
        ("A4", spec(NamedFamily.ALTERNATING, 4)),
        ("S4", spec(NamedFamily.SYMMETRIC, 4)),
        ("SL(2,3)", spec(NamedFamily.SPECIAL_LINEAR_2_3)),
        ("A5", spec(NamedFamily.ALTERNATING, 5)),
        ("S5", spec(NamedFamily.SYMMETRIC, 5)),
    ]
    entries += [(f"D{2 * n}", spec(NamedFamily.DIHEDRAL, 2 * n)) for n in range(4, 16)]
    c = {n: spec(NamedFamily.CYCLIC, n) for n in (2, 3, 4, 5)}
    products = [
        ("C4xC2", c[4], c[2]),
        ("C4xC4", c[4], c[4]),
        ("S3xC3", spec(NamedFamily.SYMMETRIC, 3), c[3]),
        ("D8xC2", spec(NamedFamily.DIHEDRAL, 8), c[2]),
        ("D8xC3", spec(NamedFamily.DIHEDRAL, 8), c[3]),
        ("Q8xC2", spec(NamedFamily.QUATERNION), c[2]),
        ("Q8xC3", spec(NamedFamily.QUATERNION), c[3]),
        ("A4xC2", spec(NamedFamily.ALTERNATING, 4), c[2]),
        ("A4xC3", spec(NamedFamily.ALTERNATING, 4), c[3]),
        ("S3xS3", spec(NamedFamily.SYMMETRIC, 3), spec(NamedFamily.SYMMETRIC, 3)),
        ("S4xC2", spec(NamedFamily.SYMMETRIC, 4), c[2]),
        ("A5xC5", spec(NamedFamily.ALTERNATING, 5), c[5]),
    ]
    entries += [(label, direct_product_spec(a, b)) for label, a, b in products]
    return entries


def _signature_key(G: Group) -> Tuple:
    return (G.order, tuple(sorted(element_order_signature(G).items())))


@lru_cache(maxsize=None)
def _signature_table() -> Dict[Tuple, str]:
    table, ambiguous = {}, set()
    for label, spec in _catalogue():
        key = _signature_key(spec.build())
        if key in table:
            ambiguous.add(key)
        table[key] = label
    return {key: label for key, label in table.items() if key not in ambiguous}


def structure_label(G: Group) -> str:
    """Display label of ``G``, e.g. ``"V4"``; ``"[n]"`` when no catalogue entry matches."""
    if G.is_trivial():
        return "1"
    if G.order > params.limits.enumeration_bound:
        return f"[{G.order}]"
    try:
        key = _signature_key(G)
    except CapacityError:
        return f"[{G.order}]"
    return _signature_table().get(key, f"[{G.order}]")
