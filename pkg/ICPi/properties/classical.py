#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""Classical embedding properties: normal, permutable, S-permutable, X-permutable, CAP,
core-hypercentral, S-semipermutable and SS-quasinormal subgroups."""

import logging
import time
from typing import Callable, Dict, Optional

from ..characteristic.closures import conjugates, core
from ..characteristic.hypercenter import hypercenter_u
from ..characteristic.primes import PrimeSet
from ..characteristic.sylow import sylow_conjugates
from ..constructions.quotient import quotient_group
from ..errors import ConfigurationError, ContainmentError, NormalityError
from ..lattice.chief_factors import chief_factor_pairs
from ..lattice.subgroups import all_subgroups
from ..perm.group import Group, intersection
from ..perm.permutation import parse_cycles
from .pi_property import verify_pi_witness
from .products_permute import product_order, products_permute
from .report import PropertyKind, PropertyReport, Witness, new_report

logger = logging.getLogger(__name__)


def _first_non_permuting(H: Group, partners) -> Optional[Group]:
    for S in partners:
        if not products_permute(H, S):
            return S
    return None


def _all_sylows(G: Group, primes) -> list:
    return [S for p in primes for S in sylow_conjugates(G, p)]


def _normal(G: Group, H: Group, X: Optional[Group]) -> Optional[Witness]:
    for g in G.generators:
        conjugate = H.conjugate(g)
        if not conjugate.is_subgroup_of(H):
            return Witness.partner_subgroup(conjugate, "conjugate not equal to the subgroup")
    return None


def _permutable(G: Group, H: Group, X: Optional[Group]) -> Optional[Witness]:
    S = _first_non_permuting(H, all_subgroups(G))
    return Witness.partner_subgroup(S, "subgroup not permuting") if S is not None else None


def _s_permutable(G: Group, H: Group, X: Optional[Group]) -> Optional[Witness]:
    S = _first_non_permuting(H, _all_sylows(G, PrimeSet.of_group(G)))
    return Witness.partner_subgroup(S, "Sylow subgroup not permuting") if S is not None else None


def _s_semipermutable(G: Group, H: Group, X: Optional[Group]) -> Optional[Witness]:
    primes = [q for q in PrimeSet.of_group(G) if H.order % q]
    S = _first_non_permuting(H, _all_sylows(G, primes))
    return Witness.partner_subgroup(S, "Sylow subgroup of coprime order not permuting") if S is not None else None


def _x_permutable(G: Group, H: Group, X: Optional[Group]) -> Optional[Witness]:
    for T in _all_sylows(G, PrimeSet.of_group(G)):
        if not any(products_permute(H, Tx) for Tx in conjugates(X, T)):
            return Witness.partner_subgroup(T, "no X-conjugate of this Sylow subgroup permutes")
    return None


def _ss_quasinormal(G: Group, H: Group, X: Optional[Group]) -> Optional[Witness]:
    for B in reversed(all_subgroups(G).members):
        if product_order(H, B) != G.order:
            continue
        if _first_non_permuting(H, _all_sylows(B, PrimeSet.of_group(B))) is None:
            return None
    S = _first_non_permuting(H, _all_sylows(G, PrimeSet.of_group(G)))
    return Witness.partner_subgroup(S, "no supplement B works; Sylow subgroup of B = G not permuting")


def _cap(G: Group, H: Group, X: Optional[Group]) -> Optional[Witness]:
    for pair in chief_factor_pairs(G):
        covers = product_order(H, pair.L) == product_order(H, pair.K)
        avoids = intersection(H, pair.L).order == intersection(H, pair.K).order
        if not covers and not avoids:
            return Witness.chief_pair(pair.K, pair.L, 0, pair.primes, pair.factor_order,
                                      note="neither covers nor avoids")
    return None


def _core_hypercentral(G: Group, H: Group, X: Optional[Group]) -> Optional[Witness]:
    H_G = core(G, H)
    Q, epi = quotient_group(G, H_G)
    if epi.image(H).is_subgroup_of(hypercenter_u(Q)):
        return None
    return Witness.partner_subgroup(H_G, "H/H_G is not contained in Z_U(G/H_G); partner is H_G")


_CHECKS: Dict[PropertyKind, Callable[[Group, Group, Optional[Group]], Optional[Witness]]] = {
    PropertyKind.NORMAL: _normal,
    PropertyKind.PERMUTABLE: _permutable,
    PropertyKind.S_PERMUTABLE: _s_permutable,
    PropertyKind.X_PERMUTABLE: _x_permutable,
    PropertyKind.CAP: _cap,
    PropertyKind.CORE_HYPERCENTRAL: _core_hypercentral,
    PropertyKind.S_SEMIPERMUTABLE: _s_semipermutable,
    PropertyKind.SS_QUASINORMAL: _ss_quasinormal,
}


def check_classical(G: Group, H: Group, kind: PropertyKind, X: Optional[Group] = None) -> PropertyReport:
    """Decides one classical embedding property of ``H`` in ``G``.

    Sylow quantifiers range over all conjugates of the computed Sylow
    subgroups. ``x_permutable`` means ``H`` is ``X``-permutable with every
    Sylow subgroup and requires the normal subgroup ``X``.

    Args:
        G (Group): Ambient group.
        H (Group): Subgroup of ``G``.
        kind (PropertyKind): One of the classical kinds.
        X (Group, optional): Normal subgroup for ``x_permutable``.

    Returns:
        PropertyReport: Verdict, with a partner subgroup or chief pair as witness on failure.

    Raises:
        ContainmentError: If ``H`` is not a subgroup of ``G``.
        ConfigurationError: If ``kind`` is not classical, or ``X`` is missing for ``x_permutable``.
        NormalityError: If ``X`` is not normal in ``G``.
        CapacityError: If ``permutable`` or ``ss_quasinormal`` exceed the subgroup bound.
    """
    if kind not in _CHECKS:
        raise ConfigurationError(f"{kind.value} is not a classical property")
    if not H.is_subgroup_of(G):
        raise ContainmentError("the subgroup is not contained in the ambient group")
    details = {}
    if kind is PropertyKind.X_PERMUTABLE:
        if X is None:
            raise ConfigurationError("x_permutable requires the subgroup X")
        if not X.is_normal_in(G):
            raise NormalityError("X is not normal in the ambient group")
        details['X'] = X.cycle_strings()
    start = time.perf_counter()
    witness = _CHECKS[kind](G, H, X)
    return new_report(kind, witness is None, G, H, witness, details=details, elapsed=time.perf_counter() - start)


def verify_witness(report: PropertyReport) -> bool:
    """Re-evaluates the witness of a failed report from the report alone.

    Returns:
        bool: True iff the recorded witness reproduces the failure.
    """
    if report.holds or report.witness is None:
        return False
    if report.kind in (PropertyKind.PI, PropertyKind.IC_PI):
        return verify_pi_witness(report)
    G = report.ambient_group()
    H = report.subject_group()
    witness = report.witness
    if witness.kind == 'chief_pair':
        K = Group(report.degree, [parse_cycles(text, report.degree) for text in witness.K])
        L = Group(report.degree, [parse_cycles(text, report.degree) for text in witness.L])
        return (product_order(H, L) != product_order(H, K)
                and intersection(H, L).order != intersection(H, K).order)
    partner = Group(report.degree, [parse_cycles(text, report.degree) for text in witness.partner])
    if report.kind is PropertyKind.NORMAL:
        return not partner.is_subgroup_of(H)
    if report.kind is PropertyKind.CORE_HYPERCENTRAL:
        Q, epi = quotient_group(G, partner)
        return not epi.image(H).is_subgroup_of(hypercenter_u(Q))
    if report.kind is PropertyKind.X_PERMUTABLE:
        X = Group(report.degree, [parse_cycles(text, report.degree) for text in report.details['X']])
        return not any(products_permute(H, T) for T in conjugates(X, partner))
    return not products_permute(H, partner)
