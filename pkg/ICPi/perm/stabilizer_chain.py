#!/usr/bin/env python3
# -*- coding: utf-8 -*-

import logging
from typing import Dict, List, Sequence, Tuple

import numpy as np

from .permutation import POINT_DTYPE

logger = logging.getLogger(__name__)


def _mul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return b[a]


def _inv(a: np.ndarray) -> np.ndarray:
    return np.argsort(a, kind='stable').astype(POINT_DTYPE)


def _is_identity(a: np.ndarray) -> bool:
    return bool(np.array_equal(a, np.arange(a.size)))


def _smallest_moved_point(a: np.ndarray) -> int:
    return int(np.flatnonzero(a != np.arange(a.size))[0])


def _orbit_transversal(point: int, gens: Sequence[np.ndarray], degree: int) -> Dict[int, np.ndarray]:
    """Breadth-first orbit of ``point``; ``u = result[beta]`` satisfies ``u[point] == beta``."""
    transversal = {point: np.arange(degree, dtype=POINT_DTYPE)}
    queue = [point]
    for beta in queue:
        u = transversal[beta]
        for s in gens:
            gamma = int(s[beta])
            if gamma not in transversal:
                transversal[gamma] = _mul(u, s)
                queue.append(gamma)
    return transversal


class StabilizerChain:
    """Base and strong generating set built by deterministic Schreier-Sims.

    The base is extended with the smallest point moved by each new sifting
    residue, so two chains built from the same generator list are identical.

    Attributes:
        degree (int): Number of points.
        base (List[int]): 0-based base points.
        strong_generators (List[List[np.ndarray]]): Generators of each stabilizer level.
        transversals (List[Dict[int, np.ndarray]]): Coset representatives per level.
    """

    def __init__(self, degree: int, generators: Sequence[np.ndarray], base_prefix: Sequence[int] = ()) -> None:
        """Runs Schreier-Sims on ``generators``.

        Args:
            degree (int): Number of points.
            generators (Sequence[np.ndarray]): 0-based image arrays.
            base_prefix (Sequence[int], optional): Points forced at the start of the base.
        """
        self.degree = degree
        self.base: List[int] = []
        self.strong_generators: List[List[np.ndarray]] = []
        self.transversals: List[Dict[int, np.ndarray]] = []
        self._inverse_transversals: List[Dict[int, np.ndarray]] = []
        self._build([np.asarray(g, dtype=POINT_DTYPE) for g in generators], list(base_prefix))
        self._tables = None

    def _set_level(self, level: int) -> None:
        self.transversals[level] = _orbit_transversal(
            self.base[level], self.strong_generators[level], self.degree)
        self._inverse_transversals[level] = {beta: _inv(u) for beta, u in self.transversals[level].items()}

    def _build(self, generators: List[np.ndarray], base: List[int]) -> None:
        gens = [g for g in generators if not _is_identity(g)]
        for g in gens:
            if all(g[b] == b for b in base):
                base.append(_smallest_moved_point(g))
        self.base = base
        k = len(base)
        self.strong_generators = [[g for g in gens if all(g[b] == b for b in base[:i])] for i in range(k)]
        self.transversals = [{} for _ in range(k)]
        self._inverse_transversals = [{} for _ in range(k)]
        for level in range(k):
            self._set_level(level)

        i = k - 1
        while i >= 0:
            restart = self._schreier_pass(i)
            i = restart if restart is not None else i - 1

    def _schreier_pass(self, i: int):
        """Sifts every Schreier generator of level ``i``; returns the level to resume at on failure."""
        transversal = self.transversals[i]
        inverse_transversal = self._inverse_transversals[i]
        for beta in list(transversal):
            u_beta = transversal[beta]
            for s in list(self.strong_generators[i]):
                gamma = int(s[beta])
                schreier = _mul(_mul(u_beta, s), inverse_transversal[gamma])
                if _is_identity(schreier):
                    continue
                residue, j = self._strip(schreier, i + 1)
                if j < len(self.base) or not _is_identity(residue):
                    if j == len(self.base):
                        self.base.append(_smallest_moved_point(residue))
                        self.strong_generators.append([])
                        self.transversals.append({})
                        self._inverse_transversals.append({})
                    for level in range(i + 1, j + 1):
                        self.strong_generators[level].append(residue)
                        self._set_level(level)
                    return j
        return None

    def _strip(self, g: np.ndarray, start: int = 0) -> Tuple[np.ndarray, int]:
        """Sifts ``g`` from level ``start``; returns the residue and the level where sifting stopped."""
        for level in range(start, len(self.base)):
            beta = int(g[self.base[level]])
            u_inv = self._inverse_transversals[level].get(beta)
            if u_inv is None:
                return g, level
            g = _mul(g, u_inv)
        return g, len(self.base)

    def strip(self, g: np.ndarray, start: int = 0) -> Tuple[np.ndarray, int]:
        return self._strip(np.asarray(g, dtype=POINT_DTYPE), start)

    def order(self) -> int:
        result = 1
        for transversal in self.transversals:
            result *= len(transversal)
        return result

    def orbit_lengths(self) -> List[int]:
        return [len(t) for t in self.transversals]

    def _lookup_tables(self):
        if self._tables is None:
            tables = []
            for level, point in enumerate(self.base):
                index = np.full(self.degree, -1, dtype=np.int64)
                rows = []
                for j, (beta, u_inv) in enumerate(self._inverse_transversals[level].items()):
                    index[beta] = j
                    rows.append(u_inv)
                tables.append((point, index, np.stack(rows)))
            self._tables = tables
        return self._tables

    def contains_rows(self, rows: np.ndarray) -> np.ndarray:
        """Vectorized membership test of the image arrays stacked in ``rows``."""
        rows = np.asarray(rows, dtype=POINT_DTYPE).reshape(-1, self.degree)
        ok = np.ones(rows.shape[0], dtype=bool)
        for point, index, inverse_rows in self._lookup_tables():
            idx = index[rows[:, point]]
            ok &= idx >= 0
            idx = np.where(idx >= 0, idx, 0)
            rows = inverse_rows[idx[:, None], rows]
        return ok & np.all(rows == np.arange(self.degree), axis=1)

    def element_rows(self) -> np.ndarray:
        """All group elements as an unsorted ``(order, degree)`` array."""
        rows = np.arange(self.degree, dtype=POINT_DTYPE)[None, :]
        for level in reversed(range(len(self.base))):
            stack = np.stack(list(self.transversals[level].values()))
            rows = stack[:, rows].reshape(-1, self.degree)
        return rows

    def strong_generating_set(self) -> List[np.ndarray]:
        seen = {}
        for level in self.strong_generators:
            for g in level:
                seen.setdefault(g.tobytes(), g)
        return list(seen.values())
