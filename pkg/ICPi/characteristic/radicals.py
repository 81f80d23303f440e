#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""Radicals and generalized Fitting subgroups: O_pi, F_p, Frattini, Omega, F, E, F*, F*_p."""

import logging
from typing import Tuple

import numpy as np

from ..constructions.quotient import quotient_group
from ..errors import NotAPGroupError, verify
from ..lattice.chief_factors import chief_factor_pairs
from ..lattice.normal_subgroups import normal_subgroups
from ..lattice.subgroup_set import SubgroupSet
from ..lattice.subgroups import frattini_of_p_group, maximal_subgroups, p_group_prime
from ..perm.group import Group, group_from_rows, intersection, join, power_rows, trivial_group
from ..settings import params
from .closures import center, centralizer, derived_subgroup
from .primes import PrimeSet, PrimesLike, as_prime_set, check_prime
from .sylow import sylow

logger = logging.getLogger(__name__)


def _whole_if_full(G: Group, H: Group) -> Group:
    return G if H.order == G.order else H


def o_pi(G: Group, pi: PrimesLike) -> Group:
    """``O_pi(G)``, the largest normal ``pi``-subgroup of ``G``.

    It is the largest member of the normal lattice whose order is a
    ``pi``-number, since the product of normal ``pi``-subgroups is one.

    Raises:
        CapacityError: If ``|G|`` exceeds the enumeration bound.
    """
    pi = as_prime_set(pi)

    def compute():
        candidates = [N for N in normal_subgroups(G) if pi.is_pi_number(N.order)]
        result = candidates[-1]
        if params.checks.self_check:
            verify(all(N.is_subgroup_of(result) for N in candidates), "normal pi-subgroups have no largest member")
        return result

    return G.memo('o_pi', pi.primes, compute)


def o_p(G: Group, p: int) -> Group:
    return o_pi(G, check_prime(p))


def o_p_prime(G: Group, p: int) -> Group:
    """``O_p'(G)``, the largest normal subgroup of order prime to ``p``."""
    return o_pi(G, PrimeSet.of_group(G).without(check_prime(p)))


def f_p(G: Group, p: int) -> Group:
    """``F_p(G)``, the preimage of ``O_p(G/O_p'(G))``."""
    def compute():
        Q, epi = quotient_group(G, o_p_prime(G, p))
        return _whole_if_full(G, epi.preimage(o_p(Q, p)))

    return G.memo('f_p', p, compute)


def is_soluble(G: Group) -> bool:
    return all(len(pair.primes) == 1 for pair in chief_factor_pairs(G))


def is_p_soluble(G: Group, p: int) -> bool:
    """Every chief factor is a ``p``-group or a ``p'``-group."""
    return all(pair.primes == (p,) or p not in pair.primes for pair in chief_factor_pairs(G))


def is_nilpotent(G: Group) -> bool:
    """True iff every Sylow subgroup of ``G`` is normal."""
    return all(G.normalizes(sylow(G, p)) for p in PrimeSet.of_group(G))


def frattini(G: Group) -> Group:
    """``Phi(G)``, the intersection of the maximal subgroups of ``G``.

    ``p``-groups take the fast path through ``p``-th powers and commutators;
    other groups intersect the exhaustively enumerated maximal subgroups. On
    ``p``-groups small enough for enumeration both paths are compared when
    self checks are enabled.

    Raises:
        CapacityError: If ``G`` is not a ``p``-group and ``|G|`` exceeds the subgroup bound.
    """
    if G.is_trivial():
        return G

    def general():
        result = G
        for M in maximal_subgroups(G):
            result = intersection(result, M)
        return result

    def compute():
        p = p_group_prime(G)
        if p is None:
            return general()
        phi = frattini_of_p_group(G, p)
        if params.checks.self_check and G.order <= params.limits.subgroup_bound:
            verify(general() == phi, "Frattini subgroup paths disagree")
        return phi

    return G.memo('frattini', None, compute)


def omega(P: Group) -> Group:
    """``Omega(P)``: generated by elements of order dividing 4 when ``P`` is a
    non-abelian 2-group, and by elements of order dividing ``p`` otherwise.

    Raises:
        NotAPGroupError: If ``P`` is not a ``p``-group.
    """
    if P.is_trivial():
        return P
    p = p_group_prime(P)
    if p is None:
        raise NotAPGroupError(f"group of order {P.order} is not a p-group")
    exponent = 4 if p == 2 and not P.is_abelian() else p

    def compute():
        rows = P.element_array()
        mask = np.all(power_rows(rows, exponent) == np.arange(P.degree), axis=1)
        return _whole_if_full(P, group_from_rows(P.degree, rows[mask]))

    return P.memo('omega', None, compute)


def fitting(G: Group) -> Group:
    """``F(G)``, the product of the ``O_p(G)``; its nilpotence is asserted under self checks."""
    def compute():
        parts = [o_p(G, p) for p in PrimeSet.of_group(G)]
        parts = [N for N in parts if not N.is_trivial()]
        if not parts:
            return trivial_group(G.degree)
        F = _whole_if_full(G, join(*parts))
        if params.checks.self_check:
            verify(F.order == int(np.prod([N.order for N in parts])), "O_p(G) do not form a direct product")
            verify(is_nilpotent(F), "Fitting subgroup is not nilpotent")
        return F

    return G.memo('fitting', None, compute)


def subnormal_subgroups(G: Group) -> SubgroupSet:
    """Subnormal subgroups, as normal subgroups of normal subgroups closed to a fixpoint."""
    def compute():
        found = {N.fingerprint: N for N in normal_subgroups(G)}
        queue = list(found.values())
        while queue:
            N = queue.pop()
            for M in normal_subgroups(N):
                if M.fingerprint not in found:
                    found[M.fingerprint] = M
                    queue.append(M)
        return SubgroupSet(G, found.values(), verify=False)

    return G.memo('subnormal_subgroups', None, compute)


def is_quasisimple(H: Group) -> bool:
    """Perfect and simple modulo its center."""
    if H.is_trivial() or derived_subgroup(H).order != H.order:
        return False
    Q, _ = quotient_group(H, center(H))
    return len(normal_subgroups(Q)) == 2


def layer_and_f_star(G: Group) -> Tuple[Group, Group]:
    """The layer ``E(G)`` and the generalized Fitting subgroup ``F*(G) = F(G)E(G)``.

    ``E(G)`` is generated by the subnormal quasisimple subgroups; it is trivial
    for soluble groups, which skip the subnormal enumeration. Under self checks
    ``C_G(F*(G)) <= F*(G)`` is asserted and ``E(G)`` is checked to be perfect.

    Returns:
        Tuple[Group, Group]: ``(E(G), F*(G))``.

    Raises:
        CapacityError: If ``|G|`` exceeds the enumeration bound.
    """
    def compute():
        F = fitting(G)
        E = trivial_group(G.degree)
        if not is_soluble(G):
            components = [H for H in subnormal_subgroups(G) if is_quasisimple(H)]
            logger.debug("%d components in group of order %d", len(components), G.order)
            if components:
                E = _whole_if_full(G, join(*components))
        f_star = F if E.is_trivial() else _whole_if_full(G, join(F, E))
        if params.checks.self_check:
            verify(centralizer(G, f_star).is_subgroup_of(f_star), "C_G(F*(G)) is not contained in F*(G)")
            verify(E.is_trivial() or derived_subgroup(E).order == E.order, "E(G) is not perfect")
        return E, f_star

    return G.memo('layer_and_f_star', None, compute)


def layer(G: Group) -> Group:
    return layer_and_f_star(G)[0]


def f_star(G: Group) -> Group:
    return layer_and_f_star(G)[1]


def f_p_star(G: Group, p: int) -> Group:
    """``F*_p(G)``, read as the preimage of ``F*(G/O_p'(G))``.

    When ``G`` is ``p``-soluble with ``O_p'(G) = 1`` the result equals
    ``O_p(G)``; this is asserted under self checks.
    """
    p = check_prime(p)

    def compute():
        kernel = o_p_prime(G, p)
        Q, epi = quotient_group(G, kernel)
        result = _whole_if_full(G, epi.preimage(f_star(Q)))
        if params.checks.self_check and kernel.is_trivial() and is_p_soluble(G, p):
            verify(result == o_p(G, p), "F*_p(G) differs from O_p(G) for a p-soluble G with O_p'(G) = 1")
        return result

    return G.memo('f_p_star', p, compute)
