#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""Concrete checks of the lemmas the theorems rest on.

Each lemma is evaluated on one instance: hypotheses that are properties of
subgroups (Pi, IC-Pi, hypercenter containment) give the hypothesis status;
structural requirements of the statement (normality, orders, coprimality)
give ``not_applicable`` when they fail.
"""

import logging
from math import gcd
from typing import Dict, Optional

from sympy import isprime, primefactors

from ..characteristic.classify import is_p_nilpotent, is_p_supersoluble, is_supersoluble, quotient_in_U
from ..characteristic.closures import derived_subgroup
from ..characteristic.hypercenter import hypercenter_pu, hypercenter_u
from ..characteristic.radicals import f_star, frattini, o_p_prime
from ..characteristic.sylow import p_subgroup_pool, sylow
from ..constructions.quotient import quotient_group
from ..errors import ConfigurationError
from ..lattice.normal_subgroups import minimal_normal_subgroups
from ..perm.element_sets import same_set, set_intersection, set_product
from ..perm.group import Group, intersection, join
from ..properties.pi_property import ic_pi_property, pi_property
from .conditions import (order_d_condition, prime_parameter, require, require_d, require_normal, require_p_group,
                         run_check)
from .instances import TheoremId, TheoremReport
from .theorem_checks import make_instance

logger = logging.getLogger(__name__)


def _report_record(report) -> Dict:
    record = {'holds': report.holds, 'pairs_checked': report.pairs_checked}
    if report.witness is not None:
        record['witness'] = report.witness.to_dict()
    if 'd_order' in report.details:
        record['d_order'] = report.details['d_order']
    return record


def _require_subgroup(G: Group, H: Group, name: str) -> None:
    require(H.is_subgroup_of(G), f"{name} is not a subgroup of G")


def _lemma_over(G: Group, H: Group, N: Group):
    """Pi-property of ``H`` in ``G`` implies that of ``HN/N`` in ``G/N``."""
    _require_subgroup(G, H, "H")
    require_normal(G, N, "N")
    before = pi_property(G, H)
    Q, epi = quotient_group(G, N)
    after = pi_property(Q, epi.image(join(H, N)))
    return before.holds, after.holds, {'in_G': _report_record(before), 'in_quotient': _report_record(after)}


def _lemma_ove(G: Group, H: Group, N: Group, part: str):
    """IC-Pi of ``H`` passes to ``H/N`` when ``N <= H`` and to ``HN/N`` when ``(|H|, |N|) = 1``."""
    _require_subgroup(G, H, "H")
    require_normal(G, N, "N")
    if part == 'i':
        require(N.is_subgroup_of(H), "N is not contained in H")
    else:
        require(gcd(H.order, N.order) == 1, f"|H| = {H.order} and |N| = {N.order} are not coprime")
    before = ic_pi_property(G, H)
    Q, epi = quotient_group(G, N)
    after = ic_pi_property(Q, epi.image(join(H, N)))
    return before.holds, after.holds, {'in_G': _report_record(before), 'in_quotient': _report_record(after)}


def _lemma_satisfies(G: Group, T: Group, L: Group):
    """For ``T`` minimal normal and ``|T| = |L| = p``, IC-Pi of ``LT`` implies IC-Pi of ``L``."""
    _require_subgroup(G, L, "L")
    require(T in minimal_normal_subgroups(G), "T is not a minimal normal subgroup of G")
    require(T.order == L.order and isprime(T.order), "T and L do not both have prime order p")
    product = ic_pi_property(G, join(L, T))
    target = ic_pi_property(G, L)
    return product.holds, target.holds, {'LT': _report_record(product), 'L': _report_record(target)}


def _lemma_one_of(G: Group, N: Group, p: int, d: int):
    """``T`` has order ``p`` when it is the unique minimal normal subgroup of ``G`` inside ``N``,
    the order-``d`` condition holds, and either ``|T| = d`` or ``T`` is a ``p``-group of
    order below ``d`` not contained in ``Phi(P)``.
    """
    q = prime_parameter(p)
    require_normal(G, N, "N")
    inside = [T for T in minimal_normal_subgroups(G) if T.is_subgroup_of(N)]
    require(len(inside) == 1, f"{len(inside)} minimal normal subgroups of G lie in N")
    T = inside[0]
    P = sylow(N, q)
    require_d(P, q, d)
    condition, records = order_d_condition(G, P, q, d)
    t_is_p_group = T.order > 1 and all(f == q for f in primefactors(T.order))
    case = None
    if T.order == d:
        case = 'a'
    elif t_is_p_group and T.order < d and not T.is_subgroup_of(frattini(P)):
        case = 'b'
    details = {'T_order': T.order, 'P_order': P.order, 'case': case, 'conditions': records}
    return condition and case is not None, T.order == q, details


def _lemma_necessity(G: Group, p: int, L: Optional[Group]):
    """Every ``p``-subgroup of ``Z_pU(G)`` has the Pi-property.

    Without ``L`` the check runs over every member of the ``p``-subgroup pool
    lying in ``Z_pU(G)``.
    """
    q = prime_parameter(p)
    require(G.order % q == 0, f"{q} does not divide |G| = {G.order}")
    Z = hypercenter_pu(G, q)
    if L is not None:
        _require_subgroup(G, L, "L")
        require_p_group(L, q, "L")
        report = pi_property(G, L)
        return L.is_subgroup_of(Z), report.holds, {'z_pu_order': Z.order, 'L': _report_record(report)}
    pool = p_subgroup_pool(G, q)
    inside = [H for H in pool if H.is_subgroup_of(Z)]
    failing = next((H for H in inside if not pi_property(G, H).holds), None)
    details = {'z_pu_order': Z.order, 'pool': len(pool), 'pool_completeness': pool.completeness.value,
               'checked': len(inside)}
    if failing is not None:
        details['failing_subgroup'] = failing.cycle_strings()
    return bool(inside), failing is None, details


def _lemma_phi(G: Group, P: Group):
    """``P/Phi(P) <= Z_U(G/Phi(P))`` implies ``P <= Z_U(G)`` for a normal ``p``-subgroup ``P``."""
    require_normal(G, P, "P")
    p = _single_prime(P)
    phi = frattini(P)
    Q, epi = quotient_group(G, phi)
    hypothesis = epi.image(P).is_subgroup_of(hypercenter_u(Q))
    return hypothesis, P.is_subgroup_of(hypercenter_u(G)), {'p': p, 'phi_order': phi.order}


def _single_prime(P: Group) -> int:
    factors = primefactors(P.order)
    require(len(factors) <= 1, "P is not a p-group")
    return int(factors[0]) if factors else 1


def _lemma_sylow(G: Group, p: int):
    """A ``p``-supersoluble group has ``p``-nilpotent derived subgroup, and a normal
    Sylow ``p``-subgroup when ``O_p'(G) = 1``.
    """
    q = prime_parameter(p)
    require(G.order % q == 0, f"{q} does not divide |G| = {G.order}")
    derived_ok = is_p_nilpotent(derived_subgroup(G), q)
    core = o_p_prime(G, q)
    sylow_ok = not core.is_trivial() or G.normalizes(sylow(G, q))
    details = {'derived_p_nilpotent': derived_ok, 'o_p_prime_order': core.order, 'sylow_normal_when_needed': sylow_ok}
    return is_p_supersoluble(G, q), derived_ok and sylow_ok, details


def _lemma_jg(G: Group, E: Group):
    """``F*(E) <= Z_U(G)`` implies ``E <= Z_U(G)`` for normal ``E``."""
    require_normal(G, E, "E")
    Z = hypercenter_u(G)
    F = f_star(E)
    return F.is_subgroup_of(Z), E.is_subgroup_of(Z), {'f_star_order': F.order, 'z_u_order': Z.order}


def _lemma_su(G: Group, E: Group, p: Optional[int]):
    """With ``G/E`` supersoluble: ``E <= Z_U(G)`` implies ``G`` supersoluble, and
    ``E <= Z_pU(G)`` implies ``G/O_p'(G)`` supersoluble.
    """
    require_normal(G, E, "E")
    top = quotient_in_U(G, E)
    if p is None:
        Z = hypercenter_u(G)
        return top and E.is_subgroup_of(Z), is_supersoluble(G), {'part': 1, 'quotient_supersoluble': top}
    q = prime_parameter(p)
    Z = hypercenter_pu(G, q)
    conclusion = quotient_in_U(G, o_p_prime(G, q))
    return top and E.is_subgroup_of(Z), conclusion, {'part': 2, 'quotient_supersoluble': top}


def _lemma_equivalent(G: Group, U: Group, V: Group, W: Group):
    """``U n VW = (U n V)(U n W)`` iff ``UV n UW = U(V n W)``, compared as element sets."""
    for name, H in (('U', U), ('V', V), ('W', W)):
        _require_subgroup(G, H, name)
    u, v, w = U.element_array(), V.element_array(), W.element_array()
    first = same_set(set_intersection(u, set_product(v, w)),
                     set_product(intersection(U, V).element_array(), intersection(U, W).element_array()))
    second = same_set(set_intersection(set_product(u, v), set_product(u, w)),
                      set_product(u, intersection(V, W).element_array()))
    return first or second, first and second, {'first': first, 'second': second}


def check_lemma(G: Group, lemma_id: TheoremId, group_name: Optional[str] = None, **parameters) -> TheoremReport:
    """Evaluates one lemma instance on ``G``.

    Biconditional statements report the hypothesis "at least one side holds"
    and the conclusion "both sides hold".

    Args:
        G (Group): Ambient group.
        lemma_id (TheoremId): One of the ``lem_*`` ids.
        group_name (str, optional): Name recorded in the instance.
        parameters: Subgroups and integers named as in the lemma's signature.

    Returns:
        TheoremReport: Verdict of the instance.

    Raises:
        ConfigurationError: If ``lemma_id`` is not a lemma or the parameters do not match its signature.
    """
    instance = make_instance(lemma_id, G, group_name, **parameters)
    get = instance.get
    bodies = {
        TheoremId.LEM_OVER: lambda: _lemma_over(G, get('H'), get('N')),
        TheoremId.LEM_OVE_I: lambda: _lemma_ove(G, get('H'), get('N'), 'i'),
        TheoremId.LEM_OVE_II: lambda: _lemma_ove(G, get('H'), get('N'), 'ii'),
        TheoremId.LEM_SATISFIES: lambda: _lemma_satisfies(G, get('T'), get('L')),
        TheoremId.LEM_ONE_OF: lambda: _lemma_one_of(G, get('N'), get('p'), get('d')),
        TheoremId.LEM_NECESSITY: lambda: _lemma_necessity(G, get('p'), get('L')),
        TheoremId.LEM_PHI: lambda: _lemma_phi(G, get('P')),
        TheoremId.LEM_SYLOW: lambda: _lemma_sylow(G, get('p')),
        TheoremId.LEM_JG_U: lambda: _lemma_jg(G, get('E')),
        TheoremId.LEM_SU_U: lambda: _lemma_su(G, get('E'), get('p')),
        TheoremId.LEM_EQUIVALENT: lambda: _lemma_equivalent(G, get('U'), get('V'), get('W')),
    }
    if lemma_id not in bodies:
        raise ConfigurationError(f"{lemma_id.value} is not a lemma")
    return run_check(instance, bodies[lemma_id])
