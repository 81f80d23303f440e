#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""Hypothesis conditions shared by the theorem and lemma checks."""

import logging
import time
from typing import Callable, Dict, Iterable, List, Optional, Tuple

from sympy import primefactors

from ..characteristic.primes import check_prime
from ..characteristic.sylow import sylow
from ..errors import CapacityError, ICPiError, InvariantError
from ..lattice.subgroups import cyclic_subgroups, subgroups_of_order
from ..perm.group import Group, element_orders
from ..properties.pi_property import ic_pi_property
from .instances import ConclusionStatus, HypothesisStatus, TheoremInstance, TheoremReport

logger = logging.getLogger(__name__)


class NotApplicable(ICPiError):
    """Raised inside a check when a structural precondition of the statement fails."""


def require(condition: bool, reason: str) -> None:
    if not condition:
        raise NotApplicable(reason)


def require_normal(G: Group, H: Group, name: str) -> None:
    require(H.is_subgroup_of(G), f"{name} is not a subgroup of G")
    require(G.normalizes(H), f"{name} is not normal in G")


def require_p_group(P: Group, p: int, name: str = "P") -> None:
    require(all(q == p for q in primefactors(P.order)), f"{name} is not a {p}-group")


def prime_parameter(p: int) -> int:
    try:
        return check_prime(p)
    except ICPiError:
        raise NotApplicable(f"{p} is not a prime") from None


def d_range(P: Group, p: int) -> List[int]:
    """Powers ``d`` of ``p`` with ``1 < d < |P|``."""
    values, d = [], p
    while d < P.order:
        values.append(d)
        d *= p
    return values


def require_d(P: Group, p: int, d: int) -> None:
    values = d_range(P, p)
    require(bool(values), f"no power d of {p} with 1 < d < |P| = {P.order}")
    require(d in values, f"d = {d} is not a power of {p} with 1 < d < |P| = {P.order}")


def is_cyclic(P: Group) -> bool:
    return P.is_trivial() or int(element_orders(P.element_array()).max()) == P.order


def ic_pi_all(G: Group, subgroups: Iterable[Group], label: str) -> Tuple[bool, Dict]:
    """Checks the IC-Pi-property of every subgroup, stopping at the first failure.

    Returns:
        Tuple[bool, Dict]: Verdict and a record with the number checked and the
        generators and witness of the failing subgroup, if any.
    """
    checked = 0
    for H in subgroups:
        checked += 1
        report = ic_pi_property(G, H)
        if not report.holds:
            logger.debug("%s: subgroup of order %d fails the IC-Pi-property", label, H.order)
            return False, {'condition': label, 'checked': checked, 'failing_subgroup': H.cycle_strings(),
                           'witness': report.witness.to_dict()}
    return True, {'condition': label, 'checked': checked}


def order_d_condition(G: Group, P: Group, p: int, d: int) -> Tuple[bool, List[Dict]]:
    """Every subgroup of ``P`` of order ``d`` has the IC-Pi-property in ``G``; when
    ``p = d = 2`` and ``P`` is non-abelian, so has every cyclic subgroup of ``P`` of order 4.
    """
    holds, record = ic_pi_all(G, subgroups_of_order(P, d), f"order {d}")
    records = [record]
    if holds and p == 2 and d == 2 and not P.is_abelian():
        holds, record = ic_pi_all(G, cyclic_subgroups(P).of_order(4), "cyclic order 4")
        records.append(record)
    return holds, records


def star_condition(G: Group, X: Group) -> Tuple[bool, Dict]:
    """Every non-cyclic Sylow subgroup ``P`` of ``X`` admits an order ``1 < |D| < |P|``
    at which :func:`order_d_condition` holds.

    One Sylow subgroup per prime is examined: the IC-Pi-property is invariant
    under conjugation.
    """
    chosen = {}
    for q in primefactors(X.order):
        q = int(q)
        P = sylow(X, q)
        if is_cyclic(P):
            chosen[str(q)] = 'cyclic'
            continue
        d = next((d for d in d_range(P, q) if order_d_condition(G, P, q, d)[0]), None)
        if d is None:
            return False, {'failing_prime': q, 'chosen': chosen}
        chosen[str(q)] = d
    return True, {'chosen': chosen}


def statuses(hypothesis: bool, conclusion: Optional[bool]) -> Tuple[HypothesisStatus, ConclusionStatus]:
    hypothesis_status = HypothesisStatus.SATISFIED if hypothesis else HypothesisStatus.NOT_SATISFIED
    if conclusion is None:
        return hypothesis_status, ConclusionStatus.NOT_EVALUATED
    return hypothesis_status, ConclusionStatus.TRUE if conclusion else ConclusionStatus.FALSE


def run_check(instance: TheoremInstance, body: Callable[[], Tuple[bool, Optional[bool], Dict]]) -> TheoremReport:
    """Runs a check body and wraps its outcome in a :class:`TheoremReport`.

    The body returns ``(hypothesis, conclusion, details)``. The conclusion is
    evaluated even when the hypothesis fails so that reports are auditable.
    Precondition and input errors give a ``not_applicable`` report; capacity
    errors give a skipped one. Internal consistency failures propagate.
    """
    start = time.perf_counter()
    try:
        hypothesis, conclusion, details = body()
    except InvariantError:
        raise
    except CapacityError as e:
        logger.warning("%s on %s skipped: %s", instance.theorem_id.value, instance.group_name, e)
        report = TheoremReport.not_applicable(instance, str(e), skipped=True)
    except ICPiError as e:
        report = TheoremReport.not_applicable(instance, str(e))
    else:
        hypothesis_status, conclusion_status = statuses(hypothesis, conclusion)
        report = TheoremReport(instance, hypothesis_status, conclusion_status, details=details)
    report.elapsed = time.perf_counter() - start
    return report


def orders_of(groups: Dict[str, Group]) -> Dict[str, int]:
    return {name: H.order for name, H in groups.items()}
