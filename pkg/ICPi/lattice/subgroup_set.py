#!/usr/bin/env python3
# -*- coding: utf-8 -*-

from enum import Enum
from typing import Dict, Iterable, Iterator, List, Optional

import numpy as np

from ..errors import ContainmentError
from ..perm.group import Group


class Completeness(Enum):
    """Whether a :class:`SubgroupSet` lists every subgroup of the requested kind."""
    EXHAUSTIVE = "exhaustive"
    BOUNDED_INCOMPLETE = "bounded-incomplete"


class SubgroupSet:
    """Deduplicated, deterministically ordered collection of subgroups of one ambient group.

    Members are deduplicated by element fingerprint and sorted by
    ``(order, fingerprint)``.

    Attributes:
        ambient (Group): Group every member is a subgroup of.
        members (tuple): The subgroups.
        completeness (Completeness): Completeness certificate of the enumeration.
    """

    def __init__(self, ambient: Group, members: Iterable[Group],
                 completeness: Completeness = Completeness.EXHAUSTIVE, verify: bool = True) -> None:
        """
        Args:
            ambient (Group): Ambient group.
            members (Iterable[Group]): Candidate members, duplicates allowed.
            completeness (Completeness): Completeness certificate.
            verify (bool): Check generator containment of every member.

        Raises:
            ContainmentError: If ``verify`` is set and a member is not a subgroup of ``ambient``.
        """
        unique: Dict[str, Group] = {}
        for H in members:
            if verify and not H.is_subgroup_of(ambient):
                raise ContainmentError(f"{H!r} is not a subgroup of {ambient!r}")
            unique.setdefault(H.fingerprint, H)
        self.ambient = ambient
        self.members = tuple(sorted(unique.values(), key=lambda H: (H.order, H.fingerprint)))
        self.completeness = completeness
        self._fingerprints = {H.fingerprint: i for i, H in enumerate(self.members)}
        self._containment = None

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[Group]:
        return iter(self.members)

    def __getitem__(self, i: int) -> Group:
        return self.members[i]

    def __contains__(self, H: Group) -> bool:
        return H.degree == self.ambient.degree and H.fingerprint in self._fingerprints

    def __repr__(self) -> str:
        return f"SubgroupSet({len(self.members)} members of {self.ambient!r}, {self.completeness.value})"

    @property
    def is_exhaustive(self) -> bool:
        return self.completeness is Completeness.EXHAUSTIVE

    def index_of(self, H: Group) -> Optional[int]:
        return self._fingerprints.get(H.fingerprint)

    def orders(self) -> List[int]:
        return [H.order for H in self.members]

    def of_order(self, n: int) -> List[Group]:
        return [H for H in self.members if H.order == n]

    def containment_matrix(self) -> np.ndarray:
        """``matrix[i, j]`` is True iff member ``i`` is a subgroup of member ``j``."""
        if self._containment is None:
            k = len(self.members)
            matrix = np.eye(k, dtype=bool)
            for i, H in enumerate(self.members):
                for j in range(i + 1, k):
                    K = self.members[j]
                    if K.order % H.order == 0 and H.order < K.order:
                        matrix[i, j] = H.is_subgroup_of(K)
            matrix.setflags(write=False)
            self._containment = matrix
        return self._containment

    def to_dict(self) -> Dict:
        return {
            'completeness': self.completeness.value,
            'members': [{'order': H.order, 'generators': H.cycle_strings()} for H in self.members],
        }
