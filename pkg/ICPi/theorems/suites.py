#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""Verification suites run over a corpus alongside the theorem checks.

Each suite counts what it checked and collects violation records; a clean
engine produces no violations.
"""

import hashlib
import logging
import time
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Sequence, Tuple

import numpy as np
from sympy import primefactors

from ..characteristic.closures import centralizer, commutator_subgroup, normal_closure
from ..characteristic.hypercenter import hypercenter_pu
from ..characteristic.radicals import f_star, fitting
from ..characteristic.sylow import p_subgroup_pool
from ..errors import CapacityError, ConfigurationError
from ..perm.group import Group, join
from ..perm.permutation import POINT_DTYPE
from ..properties.classical import check_classical
from ..properties.pi_property import ic_pi_property, pi_property
from ..properties.report import CLASSICAL_KINDS, PropertyKind
from ..settings import limits_override, params
from .evaluate import check_by_id
from .instances import TheoremId, Verdict
from .strategies import InstanceStrategy

logger = logging.getLogger(__name__)

# subgroup lattices up to this order are enumerated by the classical suite (largest built-in group: 300)
CLASSICAL_SUBGROUP_BOUND = 512

NamedGroup = Tuple[str, Group]


@dataclass
class SuiteReport:
    """Outcome of one verification suite.

    Attributes:
        name (str): Suite name.
        checked (int): Number of individual checks performed.
        violations (list): One record per failed check.
        skipped (list): Groups skipped because a capacity bound was hit.
        elapsed (float): Wall time in seconds.
    """
    name: str
    checked: int = 0
    violations: List[Dict] = field(default_factory=list)
    skipped: List[str] = field(default_factory=list)
    elapsed: float = 0.0

    def to_dict(self) -> Dict:
        return {
            'name': self.name,
            'checked': self.checked,
            'violations': list(self.violations),
            'skipped': list(self.skipped),
            'elapsed': self.elapsed,
        }


def _rng(name: str, G: Group) -> np.random.Generator:
    digest = hashlib.sha256(f"{params.campaign.seed}:{name}:{G.fingerprint}".encode()).digest()
    return np.random.default_rng(int.from_bytes(digest[:8], 'big'))


def naive_closure_rows(G: Group) -> np.ndarray:
    """Elements of ``G`` by breadth-first multiplication with the generators, without the stabilizer chain."""
    identity = np.arange(G.degree, dtype=POINT_DTYPE)
    seen = {identity.tobytes()}
    found = [identity]
    frontier = identity[None, :]
    gens = [g.images for g in G.generators]
    while frontier.shape[0]:
        fresh = []
        for g in gens:
            for row in g[frontier]:
                key = row.tobytes()
                if key not in seen:
                    seen.add(key)
                    fresh.append(row)
        found.extend(fresh)
        frontier = np.stack(fresh) if fresh else frontier[:0]
    return np.stack(found)


def kernel_oracle(G: Group, probes: int = 100) -> Tuple[int, List[Dict]]:
    """Stabilizer-chain order and membership against the naive closure."""
    rows = naive_closure_rows(G)
    violations = []
    if rows.shape[0] != G.order:
        violations.append({'check': 'order', 'chain': G.order, 'naive': int(rows.shape[0])})
    rng = _rng('kernel', G)
    random_perms = np.stack([rng.permutation(G.degree) for _ in range(probes // 2)]).astype(POINT_DTYPE)
    members = rows[rng.integers(0, rows.shape[0], size=probes - probes // 2)]
    sample = np.concatenate([random_perms, members])
    keys = {row.tobytes() for row in rows}
    expected = np.fromiter((row.tobytes() in keys for row in sample), dtype=bool, count=sample.shape[0])
    actual = G.contains_rows(sample)
    for i in np.flatnonzero(expected != actual):
        violations.append({'check': 'membership', 'probe': sample[i].tolist(), 'expected': bool(expected[i])})
    return 1 + sample.shape[0], violations


def classical_implications(G: Group) -> Tuple[int, List[Dict]]:
    """Every classical property, and the Pi-property, implies IC-Pi on the ``p``-subgroup pool;
    SS-quasinormal ``p``-subgroups are S-semipermutable.
    """
    bound = max(params.limits.subgroup_bound, CLASSICAL_SUBGROUP_BOUND)
    with limits_override(subgroup_bound=bound):
        return _classical_implications(G)


def _classical_implications(G: Group) -> Tuple[int, List[Dict]]:
    checked, violations = 0, []
    X = fitting(G)
    for p in primefactors(G.order):
        for H in p_subgroup_pool(G, int(p)):
            ic_pi = ic_pi_property(G, H).holds
            holding = {kind for kind in CLASSICAL_KINDS if check_classical(G, H, kind, X=X).holds}
            if pi_property(G, H).holds:
                holding.add(PropertyKind.PI)
            for kind in sorted(holding, key=lambda k: k.value):
                checked += 1
                if not ic_pi:
                    violations.append({'check': f"{kind.value} => ic_pi", 'H': H.cycle_strings()})
            checked += 1
            if PropertyKind.SS_QUASINORMAL in holding and PropertyKind.S_SEMIPERMUTABLE not in holding:
                violations.append({'check': "ss_quasinormal => s_semipermutable", 'H': H.cycle_strings()})
    return checked, violations


def necessity(G: Group) -> Tuple[int, List[Dict]]:
    """Every pooled ``p``-subgroup of ``Z_pU(G)`` has the Pi-property."""
    checked, violations = 0, []
    for p in primefactors(G.order):
        Z = hypercenter_pu(G, int(p))
        for H in p_subgroup_pool(G, int(p)):
            if H.is_subgroup_of(Z):
                checked += 1
                if not pi_property(G, H).holds:
                    violations.append({'check': 'necessity', 'p': int(p), 'H': H.cycle_strings()})
    return checked, violations


def algebraic_invariants(G: Group) -> Tuple[int, List[Dict]]:
    """``H^G = H[H, G]`` on sampled subgroups, the ``equivalent`` biconditional on sampled
    triples, ``C_G(F*(G)) <= F*(G)`` and the ``Sylow`` lemma for every prime.
    """
    checked, violations = 0, []
    strategy = InstanceStrategy()
    sample = strategy.subgroup_sample(G)
    rng = _rng('invariants', G)
    for i in rng.integers(0, len(sample), size=strategy.equivalent_samples):
        H = sample[i]
        checked += 1
        if normal_closure(G, H) != join(H, commutator_subgroup(G, H, G)):
            violations.append({'check': 'normal closure', 'H': H.cycle_strings()})
    triples, _ = strategy.instances(G, TheoremId.LEM_EQUIVALENT)
    for triple in triples:
        checked += 1
        report = check_by_id(G, TheoremId.LEM_EQUIVALENT, **triple)
        if report.verdict is Verdict.COUNTEREXAMPLE:
            violations.append({'check': 'equivalent', **report.details})
    F = f_star(G)
    checked += 1
    if not centralizer(G, F).is_subgroup_of(F):
        violations.append({'check': 'C_G(F*(G)) <= F*(G)'})
    for p in primefactors(G.order):
        checked += 1
        report = check_by_id(G, TheoremId.LEM_SYLOW, p=int(p))
        if report.verdict is Verdict.COUNTEREXAMPLE:
            violations.append({'check': 'sylow', 'p': int(p), **report.details})
    return checked, violations


SUITES: Dict[str, Callable[[Group], Tuple[int, List[Dict]]]] = {
    'kernel_oracle': kernel_oracle,
    'classical_implications': classical_implications,
    'necessity': necessity,
    'algebraic_invariants': algebraic_invariants,
}


def run_suite(name: str, groups: Sequence[NamedGroup]) -> SuiteReport:
    """Runs one suite over named groups; capacity errors skip the group.

    Raises:
        ConfigurationError: If ``name`` is not a known suite.
    """
    if name not in SUITES:
        raise ConfigurationError(f"unknown suite {name!r}, expected one of {sorted(SUITES)}")
    start = time.perf_counter()
    report = SuiteReport(name)
    for group_name, G in groups:
        if name == 'kernel_oracle' and G.order > params.limits.oracle_bound:
            report.skipped.append(group_name)
            continue
        try:
            checked, violations = SUITES[name](G)
        except CapacityError as e:
            logger.warning("suite %s skipped %s: %s", name, group_name, e)
            report.skipped.append(group_name)
            continue
        report.checked += checked
        report.violations.extend({'group': group_name, **v} for v in violations)
    report.elapsed = time.perf_counter() - start
    if report.violations:
        logger.error("suite %s: %d violations", name, len(report.violations))
    return report


def run_suites(names: Sequence[str], groups: Sequence[NamedGroup]) -> List[SuiteReport]:
    return [run_suite(name, groups) for name in names]
