#!/usr/bin/env python3
# -*- coding: utf-8 -*-

import re
from typing import Iterable, List, Sequence

import numpy as np

from ..errors import CycleParseError, DegreeMismatchError

POINT_DTYPE = np.int64

_CYCLE_RE = re.compile(r'\(([^()]*)\)')
_POINT_SEP_RE = re.compile(r'[\s,]+')


class Permutation:
    """A bijection of the points ``{1..degree}``.

    Points are 1-based in every public method and 0-based in the underlying
    image array. Products act left to right: ``(a * b)(i) = b(a(i))``.

    Attributes:
        degree (int): Number of points.
        images (np.ndarray): Read-only 0-based image array.
    """

    __slots__ = ('_images',)

    def __init__(self, images: Sequence[int], one_based: bool = False) -> None:
        """Builds a permutation from its image array.

        Args:
            images (Sequence[int]): ``images[i]`` is the image of point ``i``.
            one_based (bool): True when ``images`` uses the points ``1..n``.

        Raises:
            ValueError: If ``images`` is not a bijection.
        """
        arr = np.array(images, dtype=POINT_DTYPE).reshape(-1)
        if one_based:
            arr = arr - 1
        n = arr.size
        if n and (arr.min() < 0 or arr.max() >= n or np.unique(arr).size != n):
            raise ValueError(f"not a permutation of {n} points: {list(arr)}")
        arr.setflags(write=False)
        self._images = arr

    @classmethod
    def _from_array(cls, arr: np.ndarray) -> 'Permutation':
        perm = cls.__new__(cls)
        arr = np.ascontiguousarray(arr, dtype=POINT_DTYPE)
        arr.setflags(write=False)
        perm._images = arr
        return perm

    @classmethod
    def identity(cls, degree: int) -> 'Permutation':
        return cls._from_array(np.arange(degree, dtype=POINT_DTYPE))

    @property
    def degree(self) -> int:
        return int(self._images.size)

    @property
    def images(self) -> np.ndarray:
        return self._images

    def __call__(self, point: int) -> int:
        """Image of the 1-based ``point``."""
        return int(self._images[point - 1]) + 1

    def __mul__(self, other: 'Permutation') -> 'Permutation':
        return compose(self, other)

    def __pow__(self, exponent: int) -> 'Permutation':
        base = self if exponent >= 0 else self.inverse()
        exponent = abs(exponent)
        result = Permutation.identity(self.degree)
        while exponent:
            if exponent & 1:
                result = compose(result, base)
            base = compose(base, base)
            exponent >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self._images.size == other._images.size and bool(np.array_equal(self._images, other._images))

    def __hash__(self) -> int:
        return hash(self._images.tobytes())

    def __lt__(self, other: 'Permutation') -> bool:
        return tuple(self._images) < tuple(other._images)

    def __repr__(self) -> str:
        return f"Permutation({str(self)!r}, degree={self.degree})"

    def __str__(self) -> str:
        return ''.join('(' + ','.join(str(p) for p in cycle) + ')' for cycle in self.cycles()) or '()'

    def key(self) -> bytes:
        """Hashable byte encoding, equal for equal permutations."""
        return self._images.tobytes()

    def inverse(self) -> 'Permutation':
        return inverse(self)

    def is_identity(self) -> bool:
        return bool(np.array_equal(self._images, np.arange(self.degree)))

    def moved_points(self) -> List[int]:
        """Sorted 1-based points that are not fixed."""
        return [int(i) + 1 for i in np.flatnonzero(self._images != np.arange(self.degree))]

    def cycles(self) -> List[List[int]]:
        """Non-trivial cycles, each starting at its smallest point, sorted by that point."""
        seen = np.zeros(self.degree, dtype=bool)
        result = []
        for start in range(self.degree):
            if seen[start] or self._images[start] == start:
                continue
            cycle = [start + 1]
            seen[start] = True
            j = int(self._images[start])
            while j != start:
                seen[j] = True
                cycle.append(j + 1)
                j = int(self._images[j])
            result.append(cycle)
        return result

    def order(self) -> int:
        """Least common multiple of the cycle lengths."""
        lengths = [len(c) for c in self.cycles()]
        return int(np.lcm.reduce(lengths)) if lengths else 1

    def to_list(self) -> List[int]:
        """1-based image list."""
        return [int(i) + 1 for i in self._images]


def compose(a: Permutation, b: Permutation) -> Permutation:
    """Left-to-right product: the result maps ``i`` to ``b(a(i))``.

    Raises:
        DegreeMismatchError: If the degrees differ.
    """
    if a.degree != b.degree:
        raise DegreeMismatchError(a.degree, b.degree)
    return Permutation._from_array(b.images[a.images])


def inverse(a: Permutation) -> Permutation:
    return Permutation._from_array(np.argsort(a.images, kind='stable'))


def commutator_elem(a: Permutation, b: Permutation) -> Permutation:
    """Returns ``[a, b] = a^-1 b^-1 a b``.

    Raises:
        DegreeMismatchError: If the degrees differ.
    """
    if a.degree != b.degree:
        raise DegreeMismatchError(a.degree, b.degree)
    return compose(compose(compose(inverse(a), inverse(b)), a), b)


def conjugate_elem(h: Permutation, g: Permutation) -> Permutation:
    """Returns ``h^g = g^-1 h g``."""
    return compose(compose(inverse(g), h), g)


def parse_cycles(text: str, degree: int) -> Permutation:
    """Parses a product of disjoint cycles over the points ``1..degree``.

    Points inside a cycle are separated by commas and/or whitespace;
    whitespace elsewhere is ignored. ``""`` and ``"()"`` denote the identity.

    Args:
        text (str): Cycle notation, e.g. ``"(1,2,3)(4,5)"``.
        degree (int): Number of points.

    Returns:
        Permutation: The parsed permutation.

    Raises:
        CycleParseError: On malformed syntax, out-of-range or repeated points.
    """
    if degree < 0:
        raise CycleParseError(f"invalid degree {degree}")
    images = np.arange(degree, dtype=POINT_DTYPE)
    stripped = text.strip()
    position = 0
    used = set()
    for match in _CYCLE_RE.finditer(stripped):
        gap = stripped[position:match.start()]
        if gap.strip():
            raise CycleParseError("malformed cycle notation", gap.strip())
        position = match.end()
        body = match.group(1).strip().strip(',').strip()
        if not body:
            continue
        tokens = _POINT_SEP_RE.split(body)
        cycle = []
        for token in tokens:
            if not token.isdigit():
                raise CycleParseError("malformed point", token)
            point = int(token)
            if point < 1 or point > degree:
                raise CycleParseError(f"point out of range 1..{degree}", token)
            if point in used:
                raise CycleParseError(f"point {point} repeated", token)
            used.add(point)
            cycle.append(point - 1)
        for i, point in enumerate(cycle):
            images[point] = cycle[(i + 1) % len(cycle)]
    tail = stripped[position:]
    if tail.strip():
        raise CycleParseError("malformed cycle notation", tail.strip())
    return Permutation._from_array(images)


def permutation_from_cycles(cycles: Iterable[Sequence[int]], degree: int) -> Permutation:
    """Builds a permutation from 1-based disjoint cycles given as sequences."""
    return parse_cycles(''.join('(' + ','.join(str(p) for p in c) + ')' for c in cycles), degree)
