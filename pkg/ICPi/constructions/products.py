#!/usr/bin/env python3
# -*- coding: utf-8 -*-

from typing import Callable, Tuple

import numpy as np

from ..errors import CapacityError
from ..perm.group import Group
from ..perm.permutation import POINT_DTYPE, Permutation
from ..settings import params
from .epimorphism import Epimorphism
from .group_spec import GroupSource, GroupSpec


def _check_degree(degree: int) -> None:
    if degree > params.limits.degree_cap:
        raise CapacityError('degree_cap', params.limits.degree_cap, degree)


def _shift(g: Permutation, offset: int, total: int, first: bool) -> Permutation:
    images = np.arange(total, dtype=POINT_DTYPE)
    if first:
        images[:g.degree] = g.images
    else:
        images[offset:offset + g.degree] = g.images + offset
    return Permutation._from_array(images)


def _shift_text(text: str, offset: int) -> str:
    out, number = [], ''
    for char in text + ' ':
        if char.isdigit():
            number += char
            continue
        if number:
            out.append(str(int(number) + offset))
            number = ''
        out.append(char)
    return ''.join(out).rstrip()


def direct_product(A: Group, B: Group) -> Group:
    """Direct product acting on ``deg(A) + deg(B)`` points, ``B`` shifted onto the second block.

    Raises:
        CapacityError: If the combined degree exceeds the degree cap.
    """
    return direct_product_with_maps(A, B)[0]


def direct_product_with_maps(A: Group, B: Group) -> Tuple[Group, Tuple[Epimorphism, Epimorphism],
                                                         Tuple[Callable[[Permutation], Permutation],
                                                               Callable[[Permutation], Permutation]]]:
    """Direct product together with its projections and injections.

    Returns:
        Tuple: ``(G, (proj_A, proj_B), (inj_A, inj_B))``; the projections are
        :class:`Epimorphism` instances, the injections plain functions.
    """
    total = A.degree + B.degree
    _check_degree(total)
    gens = ([_shift(a, 0, total, True) for a in A.generators]
            + [_shift(b, A.degree, total, False) for b in B.generators])
    name = f"{A.name}x{B.name}" if A.name and B.name else None
    G = Group(total, gens, name=name)

    def restrict(g: Permutation, lo: int, hi: int) -> Permutation:
        return Permutation._from_array(g.images[lo:hi] - lo)

    proj_a = Epimorphism(G, A, [restrict(g, 0, A.degree) for g in G.generators], check=False)
    proj_b = Epimorphism(G, B, [restrict(g, A.degree, total) for g in G.generators], check=False)

    def inject_a(a: Permutation) -> Permutation:
        return _shift(a, 0, total, True)

    def inject_b(b: Permutation) -> Permutation:
        return _shift(b, A.degree, total, False)

    return G, (proj_a, proj_b), (inject_a, inject_b)


def direct_product_spec(left: GroupSpec, right: GroupSpec) -> GroupSpec:
    """Spec of ``left x right``, named ``"<left>x<right>"``."""
    degree = left.degree + right.degree
    _check_degree(degree)
    gens = tuple(left.generator_texts) + tuple(_shift_text(t, left.degree) for t in right.generator_texts)
    return GroupSpec(f"{left.name}x{right.name}", degree, gens, GroupSource.BUILTIN, "product")
