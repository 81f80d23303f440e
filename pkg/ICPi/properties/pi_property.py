#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""The Pi-property and the IC-Pi-property of subgroups."""

import logging
import time
from typing import Optional, Tuple

from sympy import primefactors

from ..characteristic.closures import commutator_subgroup, normalizer
from ..constructions.quotient import quotient_group
from ..errors import ContainmentError, ICPiError
from ..lattice.chief_factors import ChiefFactorPair, chief_factor_pairs
from ..perm.group import Group, intersection, join
from ..perm.permutation import parse_cycles
from .report import PropertyKind, PropertyReport, Witness, new_report

logger = logging.getLogger(__name__)

SECTIONS = ("product", "intersection")


def _section(H: Group, pair: ChiefFactorPair, section: str) -> Group:
    """Preimage in ``G`` of ``HK/K n L/K`` (``product``) or of ``(H n L)K/K`` (``intersection``)."""
    if section == "product":
        return intersection(join(H, pair.K), pair.L)
    return join(intersection(H, pair.L), pair.K)


def _evaluate_pair(G: Group, H: Group, pair: ChiefFactorPair, section: str) -> Optional[Witness]:
    """Checks one chief factor; returns a witness when the index condition fails.

    With ``X/K`` the section, ``N_{G/K}(X/K) = N_G(X)/K``, so the index is
    computed in ``G`` without forming the quotient.
    """
    X = _section(H, pair, section)
    section_order = X.order // pair.K.order
    if section_order == 1 or G.normalizes(X):
        return None
    index = G.order // normalizer(G, X).order
    required = primefactors(section_order)
    if all(q in required for q in primefactors(index)):
        return None
    return Witness.chief_pair(pair.K, pair.L, index, required, section_order, note=section)


def pi_property(G: Group, H: Group, section: str = "product") -> PropertyReport:
    """Decides whether ``H`` satisfies the Pi-property in ``G``.

    For every chief factor ``L/K`` of ``G`` the index
    ``|G/K : N_{G/K}(S)|`` must be a ``pi(S)``-number, where ``S`` is
    ``HK/K n L/K``, or ``(H n L)K/K`` when ``section`` is ``"intersection"``.
    A trivial ``S`` passes. All covering pairs of the normal lattice are
    checked and the first failing one is recorded as witness.

    Args:
        G (Group): Ambient group.
        H (Group): Subgroup of ``G``.
        section (str): ``"product"`` or ``"intersection"``.

    Returns:
        PropertyReport: Verdict with the number of pairs checked.

    Raises:
        ContainmentError: If ``H`` is not a subgroup of ``G``.
        CapacityError: If ``|G|`` exceeds the enumeration bound.
    """
    if section not in SECTIONS:
        raise ICPiError(f"unknown section {section!r}, expected one of {SECTIONS}")
    if not H.is_subgroup_of(G):
        raise ContainmentError("the subgroup is not contained in the ambient group")

    def compute():
        start = time.perf_counter()
        pairs = chief_factor_pairs(G)
        witness = None
        checked = 0
        for pair in pairs:
            checked += 1
            witness = _evaluate_pair(G, H, pair, section)
            if witness is not None:
                logger.debug("Pi-property fails at chief factor of order %d, index %d",
                             pair.factor_order, witness.index)
                break
        return new_report(PropertyKind.PI, witness is None, G, H, witness, pairs_checked=checked,
                          details={'section': section, 'chief_pairs': len(pairs)},
                          elapsed=time.perf_counter() - start)

    return G.memo('pi_property', (H.fingerprint, section), compute)


def ic_pi_kernel(G: Group, H: Group) -> Group:
    """``H n [H, G]``, the subgroup whose Pi-property defines the IC-Pi-property."""
    return G.memo('ic_pi_kernel', H.fingerprint, lambda: intersection(H, commutator_subgroup(G, H, G)))


def ic_pi_property(G: Group, H: Group, section: str = "product") -> PropertyReport:
    """Decides whether ``H`` satisfies the IC-Pi-property in ``G``: ``H n [H, G]`` has the Pi-property.

    The report names ``H`` as subject and records ``|H n [H, G]|`` as
    ``d_order`` and its generators as ``d_generators``.

    Raises:
        ContainmentError: If ``H`` is not a subgroup of ``G``.
        CapacityError: If ``|G|`` exceeds the enumeration bound.
    """
    if not H.is_subgroup_of(G):
        raise ContainmentError("the subgroup is not contained in the ambient group")
    start = time.perf_counter()
    D = ic_pi_kernel(G, H)
    inner = pi_property(G, D, section)
    details = dict(inner.details, d_order=D.order, d_generators=D.cycle_strings())
    return new_report(PropertyKind.IC_PI, inner.holds, G, H, inner.witness, pairs_checked=inner.pairs_checked,
                      details=details, elapsed=time.perf_counter() - start)


def reevaluate_pair(G: Group, S: Group, K: Group, L: Group, section: str) -> Tuple[int, int]:
    """Index and section order of one chief factor computed in the quotient ``G/K``.

    Used to re-check witnesses independently of :func:`pi_property`.
    """
    Q, epi = quotient_group(G, K)
    if section == "product":
        pushed = intersection(epi.image(join(S, K)), epi.image(L))
    else:
        pushed = epi.image(join(intersection(S, L), K))
    return Q.order // normalizer(Q, pushed).order, pushed.order


def verify_pi_witness(report: PropertyReport) -> bool:
    """True iff the chief factor witness of a failed Pi or IC-Pi report reproduces the failure."""
    witness = report.witness
    if report.holds or witness is None or witness.kind != 'chief_pair':
        return False
    G = report.ambient_group()

    def rebuild(texts) -> Group:
        return G.subgroup(parse_cycles(text, report.degree) for text in texts)

    subject = report.subject
    if report.kind is PropertyKind.IC_PI:
        subject = report.details.get('d_generators', subject)
    S, K, L = rebuild(subject), rebuild(witness.K), rebuild(witness.L)
    index, section_order = reevaluate_pair(G, S, K, L, report.details.get('section', 'product'))
    required = primefactors(section_order)
    return (index == witness.index and section_order == witness.section_order
            and not all(q in required for q in primefactors(index)))