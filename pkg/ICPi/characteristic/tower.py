#!/usr/bin/env python3
# -*- coding: utf-8 -*-

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Tuple

from ..constructions.labels import structure_label
from ..errors import CapacityError, NormalityError
from ..lattice.subgroups import p_group_prime
from ..perm.group import Group
from .closures import center, derived_subgroup
from .hypercenter import hypercenter_pu, hypercenter_u
from .primes import check_prime
from .radicals import f_p_star, fitting, frattini, layer_and_f_star, o_p, o_p_prime, omega
from .sylow import sylow

logger = logging.getLogger(__name__)


class TowerLabel(Enum):
    CENTER = "center"
    DERIVED = "derived"
    FRATTINI = "frattini"
    OMEGA = "omega"
    O_PI = "o_pi"
    FITTING = "fitting"
    LAYER = "layer"
    F_STAR = "f_star"
    F_P_STAR = "f_p_star"
    Z_U = "z_u"
    Z_PU = "z_pu"
    SYLOW = "sylow"


_NOT_NORMAL = {TowerLabel.SYLOW}


@dataclass(frozen=True)
class TowerEntry:
    """A named subgroup of an ambient group, normal in it except for Sylow entries.

    Attributes:
        label (TowerLabel): What the subgroup is.
        subgroup (Group): The subgroup.
        parameters (tuple): Prime or prime set the subgroup depends on.
    """
    ambient: Group = field(repr=False, compare=False)
    label: TowerLabel
    subgroup: Group
    parameters: Tuple = ()

    def __post_init__(self) -> None:
        if self.label not in _NOT_NORMAL and not self.ambient.normalizes(self.subgroup):
            raise NormalityError(f"{self.label.value} is not normal in the ambient group")

    def to_dict(self) -> Dict:
        return {
            'label': self.label.value,
            'parameters': list(self.parameters),
            'order': self.subgroup.order,
            'structure': structure_label(self.subgroup),
            'generators': self.subgroup.cycle_strings(),
        }


def characteristic_tower(G: Group, p: int) -> List[TowerEntry]:
    """The characteristic subgroups of ``G`` used by the theorems, at the prime ``p``.

    Entries that exceed a capacity bound are left out and logged.
    """
    p = check_prime(p)
    builders = [
        (TowerLabel.CENTER, (), lambda: center(G)),
        (TowerLabel.DERIVED, (), lambda: derived_subgroup(G)),
        (TowerLabel.FRATTINI, (), lambda: frattini(G)),
        (TowerLabel.FITTING, (), lambda: fitting(G)),
        (TowerLabel.LAYER, (), lambda: layer_and_f_star(G)[0]),
        (TowerLabel.F_STAR, (), lambda: layer_and_f_star(G)[1]),
        (TowerLabel.O_PI, (p,), lambda: o_p(G, p)),
        (TowerLabel.O_PI, (f"{p}'",), lambda: o_p_prime(G, p)),
        (TowerLabel.F_P_STAR, (p,), lambda: f_p_star(G, p)),
        (TowerLabel.Z_U, (), lambda: hypercenter_u(G)),
        (TowerLabel.Z_PU, (p,), lambda: hypercenter_pu(G, p)),
        (TowerLabel.SYLOW, (p,), lambda: sylow(G, p)),
    ]
    if p_group_prime(G) == p:
        builders.append((TowerLabel.OMEGA, (), lambda: omega(G)))
    entries = []
    for label, parameters, build in builders:
        try:
            entries.append(TowerEntry(G, label, build(), parameters))
        except CapacityError as exc:
            logger.warning("tower entry %s skipped: %s", label.value, exc)
    return entries
