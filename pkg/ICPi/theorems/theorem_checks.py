#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""Checks of the main theorems and of the corollaries on supersolubility."""

import logging
from typing import Optional, Tuple

from ..characteristic.classify import is_supersoluble, quotient_in_U
from ..characteristic.hypercenter import hypercenter_pu, hypercenter_u
from ..characteristic.radicals import f_p_star, f_star, o_p_prime
from ..characteristic.sylow import sylow
from ..constructions.labels import structure_label
from ..errors import ConfigurationError
from ..lattice.normal_subgroups import normal_subgroups
from ..lattice.subgroups import maximal_subgroups_p_group
from ..perm.group import Group
from .conditions import (ic_pi_all, order_d_condition, prime_parameter, require, require_d,
                         require_normal, require_p_group, run_check, star_condition)
from .instances import TheoremId, TheoremInstance, TheoremReport

logger = logging.getLogger(__name__)

BCD_VARIANTS = {
    'B': TheoremId.THM_B_ORDER_D,
    'C': TheoremId.THM_C_MINIMAL,
    'D': TheoremId.THM_D_MAXIMAL,
    'T31': TheoremId.THM_3_1_MIN,
    'T32': TheoremId.THM_3_2_MAX,
}


def make_instance(theorem_id: TheoremId, G: Group, group_name: Optional[str] = None, **parameters) -> TheoremInstance:
    """Instance on ``G``, named ``group_name``, ``G.name`` or its structure label."""
    parameters = {name: value for name, value in parameters.items() if value is not None}
    for name in ('p', 'd'):
        if name in parameters:
            parameters[name] = int(parameters[name])
    name = group_name or G.name or structure_label(G)
    return TheoremInstance.create(theorem_id, name, G.degree, tuple(G.cycle_strings()), **parameters)


def _hypothesis_p_order(G: Group, P: Group, p: int) -> Tuple[bool, list]:
    """Order-``p`` form of :func:`order_d_condition`, which also covers ``|P| <= p``."""
    if P.order == 1:
        return True, []
    return order_d_condition(G, P, p, p)


def check_theorem_a(G: Group, N: Group, X: Group, p: int, d: int, group_name: Optional[str] = None) -> TheoremReport:
    """Checks ``N <= Z_pU(G)`` for one instance of the main theorem.

    Hypotheses: ``N`` and ``X`` normal in ``G``, ``p`` divides ``|N|``,
    ``F*_p(N) <= X <= N``, and for ``P`` a Sylow ``p``-subgroup of ``X`` and
    ``d`` a power of ``p`` with ``1 < d < |P|``, every subgroup of ``P`` of
    order ``d`` (and every cyclic subgroup of order 4 when ``p = d = 2`` and
    ``P`` is non-abelian) has the IC-Pi-property in ``G``.

    Structural failures, including an empty ``d``-range, give a
    ``not_applicable`` report.
    """
    instance = make_instance(TheoremId.THM_A, G, group_name, N=N, X=X, p=p, d=d)

    def body():
        q = prime_parameter(p)
        require_normal(G, N, "N")
        require_normal(G, X, "X")
        require(N.order % q == 0, f"{q} does not divide |N| = {N.order}")
        F = f_p_star(N, q)
        require(F.is_subgroup_of(X) and X.is_subgroup_of(N), "X does not lie between F*_p(N) and N")
        P = sylow(X, q)
        require_d(P, q, d)
        hypothesis, records = order_d_condition(G, P, q, d)
        Z = hypercenter_pu(G, q)
        details = {'P_order': P.order, 'f_p_star_order': F.order, 'z_pu_order': Z.order, 'conditions': records}
        return hypothesis, N.is_subgroup_of(Z), details

    return run_check(instance, body)


def _check_normal_p_subgroup(G: Group, P: Group, p: int) -> int:
    q = prime_parameter(p)
    require_normal(G, P, "P")
    require_p_group(P, q)
    return q


def check_theorem_bcd(G: Group, variant: str, group_name: Optional[str] = None, **parameters) -> TheoremReport:
    """Checks one instance of the order-d, minimal and maximal subgroup theorems.

    Variants and their parameters:

    * ``B`` (``P``, ``p``, ``d``): ``P`` a normal ``p``-subgroup; the order-``d``
      condition implies ``P <= Z_U(G)``.
    * ``C`` (``N``, ``p``): ``P`` a Sylow ``p``-subgroup of the normal ``N``; the
      order-``p`` condition implies ``N <= Z_pU(G)``. Containment in ``Z_U(G)`` is
      recorded in the details.
    * ``D`` (``N``, ``p``): IC-Pi for all maximal subgroups of ``P`` implies
      ``|P| = p`` or ``N <= Z_pU(G)``.
    * ``T31`` (``P``, ``p``): the order-``p`` condition on a normal
      ``p``-subgroup implies ``P <= Z_U(G)``.
    * ``T32`` (``P``, ``p``): IC-Pi for all maximal subgroups of a normal
      ``p``-subgroup implies ``P <= Z_U(G)``.

    Raises:
        ConfigurationError: If ``variant`` is unknown.
    """
    if variant not in BCD_VARIANTS:
        raise ConfigurationError(f"unknown variant {variant!r}, expected one of {sorted(BCD_VARIANTS)}")
    instance = make_instance(BCD_VARIANTS[variant], G, group_name, **parameters)
    p = instance['p']

    def order_d():
        P, d = instance['P'], instance['d']
        q = _check_normal_p_subgroup(G, P, p)
        require_d(P, q, d)
        hypothesis, records = order_d_condition(G, P, q, d)
        Z = hypercenter_u(G)
        return hypothesis, P.is_subgroup_of(Z), {'z_u_order': Z.order, 'conditions': records}

    def minimal():
        N = instance['N']
        q = prime_parameter(p)
        require_normal(G, N, "N")
        require(N.order % q == 0, f"{q} does not divide |N| = {N.order}")
        P = sylow(N, q)
        hypothesis, records = _hypothesis_p_order(G, P, q)
        Z = hypercenter_pu(G, q)
        details = {'P_order': P.order, 'z_pu_order': Z.order, 'in_z_u': N.is_subgroup_of(hypercenter_u(G)),
                   'conditions': records}
        return hypothesis, N.is_subgroup_of(Z), details

    def maximal():
        N = instance['N']
        q = prime_parameter(p)
        require_normal(G, N, "N")
        require(N.order % q == 0, f"{q} does not divide |N| = {N.order}")
        P = sylow(N, q)
        hypothesis, record = ic_pi_all(G, maximal_subgroups_p_group(P), "maximal subgroups")
        Z = hypercenter_pu(G, q)
        conclusion = P.order == q or N.is_subgroup_of(Z)
        return hypothesis, conclusion, {'P_order': P.order, 'z_pu_order': Z.order, 'conditions': [record]}

    def minimal_normal_p():
        P = instance['P']
        q = _check_normal_p_subgroup(G, P, p)
        hypothesis, records = _hypothesis_p_order(G, P, q)
        Z = hypercenter_u(G)
        return hypothesis, P.is_subgroup_of(Z), {'z_u_order': Z.order, 'conditions': records}

    def maximal_normal_p():
        P = instance['P']
        _check_normal_p_subgroup(G, P, p)
        hypothesis, record = ic_pi_all(G, maximal_subgroups_p_group(P), "maximal subgroups")
        Z = hypercenter_u(G)
        return hypothesis, P.is_subgroup_of(Z), {'z_u_order': Z.order, 'conditions': [record]}

    bodies = {'B': order_d, 'C': minimal, 'D': maximal, 'T31': minimal_normal_p, 'T32': maximal_normal_p}
    return run_check(instance, bodies[variant])


def _sandwiched(G: Group, lower: Group, upper: Group):
    """Normal subgroups ``X`` of ``G`` with ``lower <= X <= upper``."""
    return [X for X in normal_subgroups(G) if lower.is_subgroup_of(X) and X.is_subgroup_of(upper)]


def check_cor_star(G: Group, E: Group, group_name: Optional[str] = None) -> TheoremReport:
    """``E <= Z_U(G)`` iff some normal ``X`` with ``F*(E) <= X <= E`` satisfies the Sylow conditions.

    Both sides are evaluated: the hypothesis is that at least one holds and the
    conclusion that both do. The first suitable ``X`` found is recorded.
    """
    instance = make_instance(TheoremId.COR_STAR, G, group_name, E=E)

    def body():
        require_normal(G, E, "E")
        left = E.is_subgroup_of(hypercenter_u(G))
        witness = None
        candidates = _sandwiched(G, f_star(E), E)
        for X in candidates:
            holds, record = star_condition(G, X)
            if holds:
                witness = {'X': X.cycle_strings(), 'X_order': X.order, **record}
                break
        right = witness is not None
        details = {'in_z_u': left, 'suitable_x': witness, 'candidates': len(candidates)}
        return left or right, left and right, details

    return run_check(instance, body)


def check_cor_f_quotient(G: Group, E: Group, X: Group, p: Optional[int] = None, d: Optional[int] = None,
                         group_name: Optional[str] = None) -> TheoremReport:
    """Supersolubility of ``G`` (or of ``G/O_p'(G)``) from a supersoluble quotient ``G/E``.

    Without ``p``: ``G/E`` supersoluble and ``X`` normal with
    ``F*(E) <= X <= E`` satisfying the Sylow conditions imply ``G`` supersoluble.
    With ``p`` and ``d``: ``G/E`` supersoluble and ``F*_p(E) <= X <= E`` whose
    Sylow ``p``-subgroup satisfies the order-``d`` condition imply
    ``G/O_p'(G)`` supersoluble.
    """
    instance = make_instance(TheoremId.COR_F_QUOTIENT, G, group_name, E=E, X=X, p=p, d=d)

    def body():
        require((p is None) == (d is None), "p and d must be given together")
        require_normal(G, E, "E")
        require_normal(G, X, "X")
        top = quotient_in_U(G, E)
        if p is None:
            require(f_star(E).is_subgroup_of(X) and X.is_subgroup_of(E), "X does not lie between F*(E) and E")
            holds, record = star_condition(G, X)
            return top and holds, is_supersoluble(G), {'quotient_supersoluble': top, 'sylow_conditions': record}
        q = prime_parameter(p)
        require(f_p_star(E, q).is_subgroup_of(X) and X.is_subgroup_of(E), "X does not lie between F*_p(E) and E")
        P = sylow(X, q)
        require_d(P, q, d)
        holds, records = order_d_condition(G, P, q, d)
        conclusion = quotient_in_U(G, o_p_prime(G, q))
        return top and holds, conclusion, {'quotient_supersoluble': top, 'P_order': P.order, 'conditions': records}

    return run_check(instance, body)


def check_theorem(G: Group, theorem_id: TheoremId, group_name: Optional[str] = None, **parameters) -> TheoremReport:
    """Dispatches a theorem or corollary id to its check."""
    if theorem_id is TheoremId.THM_A:
        return check_theorem_a(G, group_name=group_name, **parameters)
    if theorem_id is TheoremId.COR_STAR:
        return check_cor_star(G, group_name=group_name, **parameters)
    if theorem_id is TheoremId.COR_F_QUOTIENT:
        return check_cor_f_quotient(G, group_name=group_name, **parameters)
    variant = {tid: name for name, tid in BCD_VARIANTS.items()}.get(theorem_id)
    if variant is None:
        raise ConfigurationError(f"{theorem_id.value} is not a theorem")
    return check_theorem_bcd(G, variant, group_name=group_name, **parameters)