#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""Enumeration of theorem instances on a corpus group."""

import hashlib
import logging
from math import gcd
from typing import Dict, List, Optional, Tuple

import numpy as np
from sympy import isprime, primefactors

from ..characteristic.radicals import f_p_star, f_star
from ..characteristic.sylow import sylow
from ..lattice.normal_subgroups import minimal_normal_subgroups, normal_subgroups
from ..lattice.subgroups import all_subgroups, cyclic_subgroups, p_group_prime
from ..perm.group import Group
from ..settings import params
from .conditions import d_range
from .instances import TheoremId

logger = logging.getLogger(__name__)

ParameterSet = Dict[str, object]


class InstanceStrategy:
    """Enumerates the valid parameter tuples of each theorem on one group.

    Tuples follow the deterministic order of the normal lattice and of the
    subgroup lists, so two runs produce the same instances. At most
    ``max_instances_per_check`` tuples are kept per (group, theorem); the
    number dropped is reported. Subgroup triples for the ``equivalent`` lemma
    are sampled with a generator seeded from ``seed`` and the group fingerprint.
    """

    def __init__(self, max_instances_per_check: Optional[int] = None, equivalent_samples: Optional[int] = None,
                 seed: Optional[int] = None) -> None:
        campaign = params.campaign
        self.max_instances_per_check = max_instances_per_check or campaign.max_instances_per_check
        self.equivalent_samples = campaign.equivalent_samples if equivalent_samples is None else equivalent_samples
        self.seed = campaign.seed if seed is None else seed

    def to_dict(self) -> Dict:
        return {
            'max_instances_per_check': self.max_instances_per_check,
            'equivalent_samples': self.equivalent_samples,
            'seed': self.seed,
        }

    def instances(self, G: Group, theorem_id: TheoremId) -> Tuple[List[ParameterSet], int]:
        """Parameter tuples of ``theorem_id`` on ``G`` and the number truncated by the cap.

        Raises:
            CapacityError: If the enumeration needs a lattice beyond the configured bounds.
        """
        enumerate_fn = getattr(self, f"_{theorem_id.value.lower()}")
        found = list(enumerate_fn(G))
        truncated = max(0, len(found) - self.max_instances_per_check)
        if truncated:
            logger.info("%s on %s: %d instances truncated", theorem_id.value, G.name, truncated)
        return found[:self.max_instances_per_check], truncated

    # Building blocks

    @staticmethod
    def _normals(G: Group) -> List[Group]:
        return list(normal_subgroups(G))

    @staticmethod
    def _primes(n: int) -> List[int]:
        return [int(p) for p in primefactors(n)]

    def _normal_p_subgroups(self, G: Group):
        for P in self._normals(G):
            p = p_group_prime(P)
            if p is not None:
                yield P, p

    def _between(self, G: Group, lower: Group, upper: Group) -> List[Group]:
        return [X for X in self._normals(G) if lower.is_subgroup_of(X) and X.is_subgroup_of(upper)]

    @staticmethod
    def subgroup_sample(G: Group) -> List[Group]:
        """Every subgroup when the lattice is enumerable, else the cyclic and normal subgroups."""
        if G.order <= params.limits.subgroup_bound:
            return list(all_subgroups(G))
        merged = {H.fingerprint: H for H in list(cyclic_subgroups(G)) + list(normal_subgroups(G))}
        return sorted(merged.values(), key=lambda H: (H.order, H.fingerprint))

    def _rng(self, G: Group) -> np.random.Generator:
        digest = hashlib.sha256(f"{self.seed}:{G.fingerprint}".encode()).digest()
        return np.random.default_rng(int.from_bytes(digest[:8], 'big'))

    # Theorems

    def _thm_a(self, G: Group):
        for N in self._normals(G):
            for p in self._primes(N.order):
                for X in self._between(G, f_p_star(N, p), N):
                    for d in d_range(sylow(X, p), p):
                        yield {'N': N, 'X': X, 'p': p, 'd': d}

    def _thm_b_order_d(self, G: Group):
        for P, p in self._normal_p_subgroups(G):
            for d in d_range(P, p):
                yield {'P': P, 'p': p, 'd': d}

    def _thm_c_minimal(self, G: Group):
        for N in self._normals(G):
            for p in self._primes(N.order):
                yield {'N': N, 'p': p}

    _thm_d_maximal = _thm_c_minimal

    def _thm_3_1_min(self, G: Group):
        for P, p in self._normal_p_subgroups(G):
            yield {'P': P, 'p': p}

    _thm_3_2_max = _thm_3_1_min

    def _cor_star(self, G: Group):
        for E in self._normals(G):
            yield {'E': E}

    def _cor_f_quotient(self, G: Group):
        for E in self._normals(G):
            for X in self._between(G, f_star(E), E):
                yield {'E': E, 'X': X}
            for p in self._primes(E.order):
                for X in self._between(G, f_p_star(E, p), E):
                    for d in d_range(sylow(X, p), p):
                        yield {'E': E, 'X': X, 'p': p, 'd': d}

    # Lemmas

    def _proper_nontrivial_normals(self, G: Group) -> List[Group]:
        return [N for N in self._normals(G) if 1 < N.order < G.order]

    def _lem_over(self, G: Group):
        for N in self._proper_nontrivial_normals(G):
            for H in cyclic_subgroups(G):
                yield {'H': H, 'N': N}

    def _lem_ove_i(self, G: Group):
        sample = self.subgroup_sample(G)
        for N in self._proper_nontrivial_normals(G):
            for H in sample:
                if N.is_subgroup_of(H):
                    yield {'H': H, 'N': N}

    def _lem_ove_ii(self, G: Group):
        sample = self.subgroup_sample(G)
        for N in self._proper_nontrivial_normals(G):
            for H in sample:
                if H.order > 1 and gcd(H.order, N.order) == 1:
                    yield {'H': H, 'N': N}

    def _lem_satisfies(self, G: Group):
        cyclic = list(cyclic_subgroups(G))
        for T in minimal_normal_subgroups(G):
            if isprime(T.order):
                for L in cyclic:
                    if L.order == T.order:
                        yield {'T': T, 'L': L}

    def _lem_one_of(self, G: Group):
        minimal = list(minimal_normal_subgroups(G))
        for N in self._normals(G):
            if sum(1 for T in minimal if T.is_subgroup_of(N)) != 1:
                continue
            for p in self._primes(N.order):
                for d in d_range(sylow(N, p), p):
                    yield {'N': N, 'p': p, 'd': d}

    def _lem_necessity(self, G: Group):
        for p in self._primes(G.order):
            yield {'p': p}

    def _lem_phi(self, G: Group):
        for P, _ in self._normal_p_subgroups(G):
            yield {'P': P}

    _lem_sylow = _lem_necessity

    def _lem_jg_u(self, G: Group):
        for E in self._normals(G):
            yield {'E': E}

    def _lem_su_u(self, G: Group):
        for E in self._normals(G):
            yield {'E': E}
            for p in self._primes(G.order):
                yield {'E': E, 'p': p}

    def _lem_equivalent(self, G: Group):
        sample = self.subgroup_sample(G)
        rng = self._rng(G)
        for _ in range(self.equivalent_samples):
            U, V, W = (sample[i] for i in rng.integers(0, len(sample), size=3))
            yield {'U': U, 'V': V, 'W': W}
