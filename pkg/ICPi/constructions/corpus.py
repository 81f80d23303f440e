#!/usr/bin/env python3
# -*- coding: utf-8 -*-

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from ..errors import ConfigurationError
from ..perm.group import Group
from .group_spec import GroupSpec
from .named_groups import NamedFamily, named_group_spec
from .products import direct_product_spec

logger = logging.getLogger(__name__)

PRODUCT_FAMILY = "product"


def _builtin_specs() -> List[GroupSpec]:
    specs = [named_group_spec(NamedFamily.CYCLIC, n) for n in range(1, 17)]
    specs += [named_group_spec(NamedFamily.DIHEDRAL, 2 * n) for n in range(3, 11)]
    specs += [named_group_spec(NamedFamily.SYMMETRIC, n) for n in range(1, 6)]
    specs += [named_group_spec(NamedFamily.ALTERNATING, n) for n in range(3, 6)]
    specs += [
        named_group_spec(NamedFamily.QUATERNION),
        named_group_spec(NamedFamily.KLEIN_FOUR),
        named_group_spec(NamedFamily.SPECIAL_LINEAR_2_3),
        named_group_spec(NamedFamily.ELEMENTARY_ABELIAN, 2, 2),
        named_group_spec(NamedFamily.ELEMENTARY_ABELIAN, 2, 3),
        named_group_spec(NamedFamily.ELEMENTARY_ABELIAN, 2, 4),
        named_group_spec(NamedFamily.ELEMENTARY_ABELIAN, 3, 2),
    ]
    cyc = {n: named_group_spec(NamedFamily.CYCLIC, n) for n in (2, 3, 5)}
    sym3 = named_group_spec(NamedFamily.SYMMETRIC, 3)
    dih8 = named_group_spec(NamedFamily.DIHEDRAL, 8)
    alt4 = named_group_spec(NamedFamily.ALTERNATING, 4)
    specs += [
        direct_product_spec(sym3, cyc[2]),
        direct_product_spec(sym3, cyc[3]),
        direct_product_spec(dih8, cyc[2]),
        direct_product_spec(dih8, cyc[3]),
        direct_product_spec(named_group_spec(NamedFamily.QUATERNION), cyc[3]),
        direct_product_spec(alt4, cyc[2]),
        direct_product_spec(alt4, cyc[3]),
        direct_product_spec(sym3, sym3),
        direct_product_spec(named_group_spec(NamedFamily.SYMMETRIC, 4), cyc[2]),
        direct_product_spec(named_group_spec(NamedFamily.ALTERNATING, 5), cyc[5]),
    ]
    return specs


@lru_cache(maxsize=None)
def builtin_specs() -> Tuple[GroupSpec, ...]:
    """Every built-in spec; names are unique."""
    specs = tuple(_builtin_specs())
    names = [s.name for s in specs]
    assert len(names) == len(set(names)), "duplicate built-in group names"
    return specs


@lru_cache(maxsize=None)
def _build(spec: GroupSpec) -> Group:
    return spec.build()


def build_group(spec: GroupSpec) -> Group:
    """Builds (once per process) the group described by ``spec``."""
    return _build(spec)


def builtin_spec(name: str) -> GroupSpec:
    """Looks a built-in spec up by name.

    Raises:
        ConfigurationError: If there is no built-in group of that name.
    """
    for spec in builtin_specs():
        if spec.name == name:
            return spec
    raise ConfigurationError(f"unknown built-in group {name!r}")


def builtin_group(name: str) -> Group:
    return build_group(builtin_spec(name))


@dataclass(frozen=True)
class CorpusFilter:
    """Selection of corpus groups.

    Attributes:
        max_order (int, optional): Keep groups of order at most this bound.
        families (Tuple[str, ...], optional): Allowlist of family names.
        include (Tuple[str, ...]): Names kept regardless of ``max_order``.
    """
    max_order: Optional[int] = None
    families: Optional[Tuple[str, ...]] = None
    include: Tuple[str, ...] = field(default=())

    def to_dict(self) -> Dict:
        return {
            'max_order': self.max_order,
            'families': list(self.families) if self.families is not None else None,
            'include': list(self.include),
        }

    @classmethod
    def from_dict(cls, data: Dict) -> 'CorpusFilter':
        families = data.get('families')
        return cls(data.get('max_order'), tuple(families) if families is not None else None,
                   tuple(data.get('include', ())))

    def accepts(self, spec: GroupSpec, order: int) -> bool:
        if self.families is not None and spec.family not in self.families:
            return False
        if spec.name in self.include:
            return True
        return self.max_order is None or order <= self.max_order


def corpus(max_order: Optional[int] = None, families: Optional[Sequence[str]] = None,
           include: Sequence[str] = ()) -> List[Tuple[GroupSpec, Group]]:
    """Built-in groups selected by order bound and family allowlist, sorted by ``(order, name)``.

    Args:
        max_order (int, optional): Order bound.
        families (Sequence[str], optional): Family allowlist, e.g. ``["symmetric"]``.
        include (Sequence[str]): Names kept regardless of the order bound.

    Returns:
        List[Tuple[GroupSpec, Group]]: Possibly empty list of specs with their groups.
    """
    return filtered_corpus(CorpusFilter(max_order, tuple(families) if families is not None else None,
                                        tuple(include)))


def filtered_corpus(corpus_filter: CorpusFilter) -> List[Tuple[GroupSpec, Group]]:
    known = {spec.name for spec in builtin_specs()}
    for name in corpus_filter.include:
        if name not in known:
            raise ConfigurationError(f"unknown built-in group {name!r}")
    families = {f.value for f in NamedFamily} | {PRODUCT_FAMILY}
    for family in corpus_filter.families or ():
        if family not in families:
            raise ConfigurationError(f"unknown group family {family!r}")
    selected = []
    for spec in builtin_specs():
        G = build_group(spec)
        if corpus_filter.accepts(spec, G.order):
            selected.append((spec, G))
    selected.sort(key=lambda item: (item[1].order, item[0].name))
    logger.debug("corpus filter %s selected %d groups", corpus_filter, len(selected))
    return selected
