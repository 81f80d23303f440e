#!/usr/bin/env python3
# -*- coding: utf-8 -*-

from enum import Enum
from itertools import product
from typing import List, Union

from sympy import factorint, isprime

from ..errors import UnknownFamilyError
from ..perm.group import Group
from ..perm.permutation import Permutation
from .group_spec import GroupSource, GroupSpec


class NamedFamily(str, Enum):
    CYCLIC = "cyclic"
    DIHEDRAL = "dihedral"
    SYMMETRIC = "symmetric"
    ALTERNATING = "alternating"
    QUATERNION = "quaternion"
    ELEMENTARY_ABELIAN = "elementary_abelian"
    KLEIN_FOUR = "klein_four"
    SPECIAL_LINEAR_2_3 = "special_linear_2_3"


def _cycle(points: List[int]) -> str:
    return '(' + ','.join(str(p) for p in points) + ')' if len(points) > 1 else ''


def _cyclic(n: int) -> GroupSpec:
    if n < 1:
        raise UnknownFamilyError(f"cyclic group needs n >= 1, got {n}")
    gens = (_cycle(list(range(1, n + 1))),) if n > 1 else ()
    return GroupSpec(f"Cyc({n})", n, gens, GroupSource.BUILTIN, NamedFamily.CYCLIC.value, (n,))


def _dihedral(order: int) -> GroupSpec:
    """Dihedral group of the given order ``2n``; natural action on ``n`` points for ``n >= 3``."""
    if order < 2 or order % 2:
        raise UnknownFamilyError(f"dihedral group needs an even order >= 2, got {order}")
    n = order // 2
    if n == 1:
        degree, gens = 2, ("(1,2)",)
    elif n == 2:
        degree, gens = 4, ("(1,2)(3,4)", "(1,3)(2,4)")
    else:
        reflection = ''.join(_cycle([i, n + 2 - i]) for i in range(2, n // 2 + 2) if i < n + 2 - i)
        degree, gens = n, (_cycle(list(range(1, n + 1))), reflection)
    return GroupSpec(f"Dih({order})", degree, gens, GroupSource.BUILTIN, NamedFamily.DIHEDRAL.value, (order,))


def _symmetric(n: int) -> GroupSpec:
    if n < 1:
        raise UnknownFamilyError(f"symmetric group needs n >= 1, got {n}")
    if n == 1:
        gens = ()
    elif n == 2:
        gens = ("(1,2)",)
    else:
        gens = (_cycle(list(range(1, n + 1))), "(1,2)")
    return GroupSpec(f"Sym({n})", n, gens, GroupSource.BUILTIN, NamedFamily.SYMMETRIC.value, (n,))


def _alternating(n: int) -> GroupSpec:
    if n < 1:
        raise UnknownFamilyError(f"alternating group needs n >= 1, got {n}")
    if n <= 2:
        gens = ()
    elif n == 3:
        gens = ("(1,2,3)",)
    elif n % 2:
        gens = ("(1,2,3)", _cycle(list(range(1, n + 1))))
    else:
        gens = ("(1,2,3)", _cycle(list(range(2, n + 1))))
    return GroupSpec(f"Alt({n})", n, gens, GroupSource.BUILTIN, NamedFamily.ALTERNATING.value, (n,))


def _quaternion(order: int = 8) -> GroupSpec:
    if order != 8:
        raise UnknownFamilyError(f"only the quaternion group of order 8 is built in, got {order}")
    return GroupSpec("Q8", 8, ("(1,2,3,4)(5,6,7,8)", "(1,5,3,7)(2,8,4,6)"),
                     GroupSource.BUILTIN, NamedFamily.QUATERNION.value, (8,))


def _elementary_abelian(p: int, k: int) -> GroupSpec:
    if not isprime(p) or k < 1:
        raise UnknownFamilyError(f"elementary abelian group needs a prime p and k >= 1, got p={p}, k={k}")
    gens = tuple(_cycle(list(range(j * p + 1, (j + 1) * p + 1))) for j in range(k))
    return GroupSpec(f"EA({p}^{k})", p * k, gens, GroupSource.BUILTIN,
                     NamedFamily.ELEMENTARY_ABELIAN.value, (p, k))


def _klein_four() -> GroupSpec:
    return GroupSpec("V4", 4, ("(1,2)(3,4)", "(1,3)(2,4)"), GroupSource.BUILTIN, NamedFamily.KLEIN_FOUR.value)


def _special_linear_2_3() -> GroupSpec:
    """SL(2,3) acting on the eight non-zero row vectors of ``F_3^2``."""
    vectors = [v for v in product(range(3), repeat=2) if v != (0, 0)]
    index = {v: i for i, v in enumerate(vectors)}

    def action(matrix):
        images = []
        for x, y in vectors:
            image = ((x * matrix[0][0] + y * matrix[1][0]) % 3, (x * matrix[0][1] + y * matrix[1][1]) % 3)
            images.append(index[image])
        return str(Permutation(images))

    gens = (action(((1, 1), (0, 1))), action(((0, 2), (1, 0))))
    return GroupSpec("SL(2,3)", 8, gens, GroupSource.BUILTIN, NamedFamily.SPECIAL_LINEAR_2_3.value)


def named_group_spec(family: Union[NamedFamily, str], *parameters: int) -> GroupSpec:
    """Spec of a named group with its documented standard generators.

    Args:
        family (Union[NamedFamily, str]): Family name.
        parameters (int): ``n`` for cyclic/symmetric/alternating, the order
            ``2n`` for dihedral, ``8`` (optional) for quaternion, ``p, k`` for
            elementary abelian groups, nothing for klein-four and SL(2,3).

    Returns:
        GroupSpec: The spec.

    Raises:
        UnknownFamilyError: If the family is unknown or the parameters are invalid.
    """
    try:
        family = NamedFamily(family)
    except ValueError as e:
        raise UnknownFamilyError(f"unknown group family {family!r}") from e
    builders = {
        NamedFamily.CYCLIC: (_cyclic, 1),
        NamedFamily.DIHEDRAL: (_dihedral, 1),
        NamedFamily.SYMMETRIC: (_symmetric, 1),
        NamedFamily.ALTERNATING: (_alternating, 1),
        NamedFamily.QUATERNION: (_quaternion, None),
        NamedFamily.ELEMENTARY_ABELIAN: (_elementary_abelian, 2),
        NamedFamily.KLEIN_FOUR: (_klein_four, 0),
        NamedFamily.SPECIAL_LINEAR_2_3: (_special_linear_2_3, 0),
    }
    builder, arity = builders[family]
    if arity is not None and len(parameters) != arity:
        raise UnknownFamilyError(f"{family.value} expects {arity} parameter(s), got {len(parameters)}")
    if arity is None and len(parameters) > 1:
        raise UnknownFamilyError(f"{family.value} expects at most one parameter")
    return builder(*parameters)


def named_group(family: Union[NamedFamily, str], *parameters: int) -> Group:
    """Builds a named group, see :func:`named_group_spec`."""
    return named_group_spec(family, *parameters).build()


def elementary_abelian_spec(order: int) -> GroupSpec:
    """Spec of the elementary abelian group of a prime-power order."""
    factors = factorint(order)
    if len(factors) != 1:
        raise UnknownFamilyError(f"{order} is not a prime power")
    (p, k), = factors.items()
    return _elementary_abelian(int(p), int(k))
