#!/usr/bin/env python3
# -*- coding: utf-8 -*-

import hashlib
import logging
import threading
from typing import Any, Callable, Dict, Hashable, Iterable, Iterator, List, Optional, Sequence

import numpy as np

from ..errors import CapacityError, ContainmentError, DegreeMismatchError
from ..settings import params
from .permutation import POINT_DTYPE, Permutation, conjugate_elem
from .stabilizer_chain import StabilizerChain

logger = logging.getLogger(__name__)


class Group:
    """Permutation group given by generators, backed by a stabilizer chain.

    Groups are immutable. Lazily computed data (element array, fingerprint and
    the per-group memo of derived subgroups) is guarded by a re-entrant lock,
    so a group can be read from several threads.

    Attributes:
        degree (int): Number of points acted on.
        generators (tuple): Declared non-identity generators, duplicates removed.
        order (int): Group order, the product of the fundamental orbit lengths.
        name (str): Optional display name.
    """

    def __init__(self, degree: int, generators: Iterable[Permutation] = (), name: Optional[str] = None) -> None:
        gens = []
        seen = set()
        for g in generators:
            if g.degree != degree:
                raise DegreeMismatchError(degree, g.degree)
            key = g.key()
            if key in seen or g.is_identity():
                continue
            seen.add(key)
            gens.append(g)
        self._degree = degree
        self._generators = tuple(gens)
        self._chain = StabilizerChain(degree, [g.images for g in gens])
        self._order = self._chain.order()
        self.name = name
        self._elements = None
        self._fingerprint = None
        self._memo: Dict[Hashable, Any] = {}
        self._lock = threading.RLock()

    def __getstate__(self) -> Dict:
        state = self.__dict__.copy()
        del state['_lock']
        state['_memo'] = {}
        return state

    def __setstate__(self, state: Dict) -> None:
        self.__dict__.update(state)
        self._lock = threading.RLock()

    @property
    def degree(self) -> int:
        return self._degree

    @property
    def generators(self) -> tuple:
        return self._generators

    @property
    def chain(self) -> StabilizerChain:
        return self._chain

    @property
    def order(self) -> int:
        return self._order

    def __len__(self) -> int:
        return self._order

    def __repr__(self) -> str:
        label = f"{self.name}, " if self.name else ""
        return f"Group({label}degree={self._degree}, order={self._order})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Group):
            return NotImplemented
        return (self._degree == other._degree and self._order == other._order
                and all(self.contains(g) for g in other._generators))

    def __hash__(self) -> int:
        return hash((self._degree, self._order))

    def __le__(self, other: 'Group') -> bool:
        return self.is_subgroup_of(other)

    def __lt__(self, other: 'Group') -> bool:
        return self.is_subgroup_of(other) and self._order < other._order

    def is_subgroup_of(self, other: 'Group') -> bool:
        if self._degree != other._degree:
            raise DegreeMismatchError(self._degree, other._degree)
        return other._order % self._order == 0 and all(other.contains(g) for g in self._generators)

    def is_trivial(self) -> bool:
        return self._order == 1

    def identity(self) -> Permutation:
        return Permutation.identity(self._degree)

    def contains(self, g: Permutation) -> bool:
        """True iff ``g`` sifts to the identity through the chain.

        Raises:
            DegreeMismatchError: If ``g`` has another degree.
        """
        if g.degree != self._degree:
            raise DegreeMismatchError(self._degree, g.degree)
        residue, level = self._chain.strip(g.images)
        return level == len(self._chain.base) and bool(np.array_equal(residue, np.arange(self._degree)))

    def __contains__(self, g: Permutation) -> bool:
        return self.contains(g)

    def contains_rows(self, rows: np.ndarray) -> np.ndarray:
        """Boolean mask telling which rows of an image-array stack lie in the group."""
        return self._chain.contains_rows(rows)

    def check_enumerable(self, bound_name: str = 'enumeration_bound') -> None:
        limit = getattr(params.limits, bound_name)
        if self._order > limit:
            raise CapacityError(bound_name, limit, self._order)

    def element_array(self) -> np.ndarray:
        """All elements as a read-only ``(order, degree)`` array, rows sorted lexicographically.

        Raises:
            CapacityError: If the order exceeds the enumeration bound.
        """
        with self._lock:
            if self._elements is None:
                self.check_enumerable()
                rows = self._chain.element_rows()
                rows = rows[np.lexsort(rows.T[::-1])] if rows.shape[1] else rows
                rows.setflags(write=False)
                self._elements = rows
            return self._elements

    def elements(self) -> Iterator[Permutation]:
        """Yields every element once, in lexicographic order of the image arrays."""
        for row in self.element_array():
            yield Permutation._from_array(row)

    @property
    def fingerprint(self) -> str:
        """SHA-256 of the sorted element array; equal for equal subgroups of one degree."""
        with self._lock:
            if self._fingerprint is None:
                digest = hashlib.sha256(f"{self._degree}:".encode())
                digest.update(np.ascontiguousarray(self.element_array()).tobytes())
                self._fingerprint = digest.hexdigest()
            return self._fingerprint

    def memo(self, label: str, key: Hashable, factory: Callable[[], Any]) -> Any:
        """Returns the cached value of ``(label, key)``, computing it with ``factory`` once."""
        with self._lock:
            if (label, key) in self._memo:
                return self._memo[(label, key)]
        value = factory()
        with self._lock:
            return self._memo.setdefault((label, key), value)

    def is_abelian(self) -> bool:
        gens = self._generators
        return all(np.array_equal(a.images[b.images], b.images[a.images]) for a in gens for b in gens)

    def normalizes(self, H: 'Group') -> bool:
        """True iff every generator of this group conjugates ``H`` into itself."""
        return all(H.contains(conjugate_elem(h, g)) for g in self._generators for h in H.generators)

    def is_normal_in(self, G: 'Group') -> bool:
        return self.is_subgroup_of(G) and G.normalizes(self)

    def conjugate(self, g: Permutation) -> 'Group':
        """Returns ``H^g``."""
        return Group(self._degree, [conjugate_elem(h, g) for h in self._generators])

    def subgroup(self, generators: Iterable[Permutation]) -> 'Group':
        """Subgroup generated by ``generators``.

        Raises:
            ContainmentError: If a generator is not an element of this group.
        """
        generators = list(generators)
        for g in generators:
            if not self.contains(g):
                raise ContainmentError(f"{g} is not an element of {self!r}")
        return Group(self._degree, generators)

    def cycle_strings(self) -> List[str]:
        return [str(g) for g in self._generators]


def group_from_generators(gens: Sequence[Permutation], degree: Optional[int] = None, name: Optional[str] = None) -> Group:
    """Builds a group from a degree-consistent generator list.

    Args:
        gens (Sequence[Permutation]): Generators, possibly empty.
        degree (int, optional): Degree, required when ``gens`` is empty.
        name (str, optional): Display name.

    Returns:
        Group: The generated group.

    Raises:
        DegreeMismatchError: If generators have different degrees.
    """
    gens = list(gens)
    if degree is None:
        if not gens:
            raise ValueError("degree is required for an empty generator list")
        degree = gens[0].degree
    return Group(degree, gens, name=name)


def order(G: Group) -> int:
    return G.order


def contains(G: Group, g: Permutation) -> bool:
    return G.contains(g)


def elements(G: Group) -> Iterator[Permutation]:
    return G.elements()


def trivial_group(degree: int) -> Group:
    return Group(degree)


def join(*groups: Group) -> Group:
    """Subgroup generated by all the given groups."""
    return Group(groups[0].degree, [g for H in groups for g in H.generators])


def group_from_rows(degree: int, rows: np.ndarray) -> Group:
    """Subgroup generated by the elements stacked in ``rows``.

    Rows are added in the given order whenever they are not yet contained,
    which keeps the resulting generating set short and deterministic.
    """
    rows = np.asarray(rows, dtype=POINT_DTYPE).reshape(-1, degree)
    H = Group(degree)
    while rows.shape[0]:
        outside = ~H.contains_rows(rows)
        if not outside.any():
            break
        rows = rows[outside]
        H = Group(degree, H.generators + (Permutation._from_array(rows[0]),))
        rows = rows[1:]
    return H


def intersection(A: Group, B: Group) -> Group:
    """Element-level intersection of two groups of the same degree."""
    if A.degree != B.degree:
        raise DegreeMismatchError(A.degree, B.degree)
    small, large = (A, B) if A.order <= B.order else (B, A)
    if small.is_subgroup_of(large):
        return small
    rows = small.element_array()
    return group_from_rows(A.degree, rows[large.contains_rows(rows)])


def close_under_conjugation(G: Group, seeds: Iterable[Permutation]) -> Group:
    """Smallest subgroup containing ``seeds`` that is normalized by the generators of ``G``."""
    N = Group(G.degree, seeds)
    changed = True
    while changed:
        changed = False
        for n in N.generators:
            for g in G.generators:
                c = conjugate_elem(n, g)
                if not N.contains(c):
                    N = Group(G.degree, N.generators + (c,))
                    changed = True
                    break
            if changed:
                break
    return N


def cyclic_subgroup(g: Permutation) -> Group:
    return Group(g.degree, [g])


def power_rows(rows: np.ndarray, exponent: int) -> np.ndarray:
    """Row-wise ``exponent``-th powers of a stack of image arrays."""
    rows = np.asarray(rows, dtype=POINT_DTYPE)
    result = np.broadcast_to(np.arange(rows.shape[1], dtype=POINT_DTYPE), rows.shape).copy()
    base = rows.copy()
    while exponent:
        if exponent & 1:
            result = np.take_along_axis(base, result, axis=1)
        base = np.take_along_axis(base, base, axis=1)
        exponent >>= 1
    return result


def inverse_rows(rows: np.ndarray) -> np.ndarray:
    return np.argsort(rows, axis=1, kind='stable').astype(POINT_DTYPE)


def conjugate_rows(rows: np.ndarray, h: Permutation) -> np.ndarray:
    """Row ``r`` of the result is ``h^{g_r} = g_r^-1 h g_r``."""
    rows = np.asarray(rows, dtype=POINT_DTYPE)
    return np.take_along_axis(rows, h.images[inverse_rows(rows)], axis=1)


def element_orders(rows: np.ndarray) -> np.ndarray:
    """Order of every row, as the lcm of its cycle lengths."""
    rows = np.asarray(rows, dtype=POINT_DTYPE)
    m, n = rows.shape
    if n == 0:
        return np.ones(m, dtype=np.int64)
    points = np.arange(n)
    lengths = np.zeros((m, n), dtype=np.int64)
    current = rows.copy()
    for k in range(1, n + 1):
        returned = (current == points) & (lengths == 0)
        lengths[returned] = k
        if (lengths > 0).all():
            break
        current = np.take_along_axis(rows, current, axis=1)
    return np.lcm.reduce(lengths, axis=1)


def element_order_signature(G: Group) -> Dict[int, int]:
    """Multiset of element orders as a sorted ``{order: count}`` dictionary."""
    orders, counts = np.unique(element_orders(G.element_array()), return_counts=True)
    return {int(o): int(c) for o, c in zip(orders, counts)}


def group_from_elements(elements: Iterable[Permutation], degree: int) -> Group:
    """Subgroup generated by an explicit collection of elements."""
    rows = [g.images for g in elements]
    if not rows:
        return Group(degree)
    return group_from_rows(degree, np.stack(rows))
