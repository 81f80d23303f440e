#!/usr/bin/env python3
# -*- coding: utf-8 -*-

from typing import Dict, Optional

from ..perm.group import Group
from .instances import TheoremId, TheoremInstance, TheoremReport
from .lemma_checks import check_lemma
from .theorem_checks import check_theorem


def is_lemma(theorem_id: TheoremId) -> bool:
    return theorem_id.value.startswith('lem_')


def check_by_id(G: Group, theorem_id: TheoremId, group_name: Optional[str] = None, **parameters) -> TheoremReport:
    """Runs the theorem, corollary or lemma check named by ``theorem_id``."""
    if is_lemma(theorem_id):
        return check_lemma(G, theorem_id, group_name=group_name, **parameters)
    return check_theorem(G, theorem_id, group_name=group_name, **parameters)


def check_instance(G: Group, instance: TheoremInstance) -> TheoremReport:
    return check_by_id(G, instance.theorem_id, group_name=instance.group_name, **dict(instance.parameters))


def reproduce(data: Dict) -> TheoremReport:
    """Re-runs a serialized report from its own record: ambient generators and parameters.

    Args:
        data (Dict): A report as produced by :meth:`TheoremReport.to_dict`.

    Returns:
        TheoremReport: The freshly computed report.
    """
    instance = TheoremInstance.from_dict(data['instance'])
    return check_instance(instance.ambient_group(), instance)


def reproduces(data: Dict) -> bool:
    """True iff re-running the serialized report gives the same statuses."""
    fresh = reproduce(data)
    return (fresh.hypothesis_status.value == data['hypothesis']
            and fresh.conclusion_status.value == data['conclusion'])
