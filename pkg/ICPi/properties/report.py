#!/usr/bin/env python3
# -*- coding: utf-8 -*-

from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Tuple

from ..perm.group import Group
from ..perm.permutation import parse_cycles


class PropertyKind(Enum):
    """Subgroup embedding properties that can be decided."""
    PI = "pi"
    IC_PI = "ic_pi"
    NORMAL = "normal"
    PERMUTABLE = "permutable"
    S_PERMUTABLE = "s_permutable"
    X_PERMUTABLE = "x_permutable"
    CAP = "cap"
    CORE_HYPERCENTRAL = "core_hypercentral"
    S_SEMIPERMUTABLE = "s_semipermutable"
    SS_QUASINORMAL = "ss_quasinormal"

    @classmethod
    def parse(cls, name: str) -> 'PropertyKind':
        """Accepts ``ic-pi`` as well as ``ic_pi``."""
        return cls(name.strip().lower().replace('-', '_'))


CLASSICAL_KINDS = (
    PropertyKind.NORMAL, PropertyKind.PERMUTABLE, PropertyKind.S_PERMUTABLE, PropertyKind.X_PERMUTABLE,
    PropertyKind.CAP, PropertyKind.CORE_HYPERCENTRAL, PropertyKind.S_SEMIPERMUTABLE, PropertyKind.SS_QUASINORMAL,
)


@dataclass(frozen=True)
class Witness:
    """Why a property fails: a chief factor pair or a partner subgroup.

    Subgroups are stored as generator cycle strings so that the witness can be
    re-checked without the objects that produced it.
    """
    kind: str
    K: Tuple[str, ...] = ()
    L: Tuple[str, ...] = ()
    index: int = 0
    required_primes: Tuple[int, ...] = ()
    section_order: int = 0
    partner: Tuple[str, ...] = ()
    note: str = ""

    @classmethod
    def chief_pair(cls, K: Group, L: Group, index: int, required_primes, section_order: int,
                   note: str = "") -> 'Witness':
        return cls('chief_pair', tuple(K.cycle_strings()), tuple(L.cycle_strings()), int(index),
                   tuple(int(p) for p in required_primes), int(section_order), note=note)

    @classmethod
    def partner_subgroup(cls, partner: Group, note: str) -> 'Witness':
        return cls('partner', partner=tuple(partner.cycle_strings()), note=note)

    def to_dict(self) -> Dict:
        if self.kind == 'chief_pair':
            return {
                'kind': self.kind,
                'K': list(self.K),
                'L': list(self.L),
                'index': self.index,
                'required_primes': list(self.required_primes),
                'section_order': self.section_order,
                'note': self.note,
            }
        return {'kind': self.kind, 'partner': list(self.partner), 'note': self.note}

    @classmethod
    def from_dict(cls, data: Dict) -> 'Witness':
        return cls(
            kind=data['kind'],
            K=tuple(data.get('K', ())),
            L=tuple(data.get('L', ())),
            index=data.get('index', 0),
            required_primes=tuple(data.get('required_primes', ())),
            section_order=data.get('section_order', 0),
            partner=tuple(data.get('partner', ())),
            note=data.get('note', ""),
        )


@dataclass
class PropertyReport:
    """Verdict of one property check of a subgroup ``H`` of ``G``.

    Attributes:
        kind (PropertyKind): Property checked.
        holds (bool): Verdict.
        degree (int): Degree of the ambient group.
        ambient (list): Generators of ``G``.
        subject (list): Generators of ``H``.
        witness (Witness): First failure found, present iff ``holds`` is False.
        pairs_checked (int): Chief factor pairs evaluated.
        details (dict): Kind-specific data, e.g. ``d_order`` for IC-Pi.
        elapsed (float): Wall time in seconds.
    """
    kind: PropertyKind
    holds: bool
    degree: int
    ambient: List[str]
    subject: List[str]
    witness: Optional[Witness] = None
    pairs_checked: int = 0
    details: Dict = field(default_factory=dict)
    elapsed: float = 0.0

    def ambient_group(self) -> Group:
        return Group(self.degree, [parse_cycles(text, self.degree) for text in self.ambient])

    def subject_group(self) -> Group:
        return Group(self.degree, [parse_cycles(text, self.degree) for text in self.subject])

    def to_dict(self) -> Dict:
        return {
            'property': self.kind.value,
            'holds': self.holds,
            'degree': self.degree,
            'ambient': list(self.ambient),
            'subject': list(self.subject),
            'witness': self.witness.to_dict() if self.witness is not None else None,
            'pairs_checked': self.pairs_checked,
            'details': dict(self.details),
            'elapsed': self.elapsed,
        }

    @classmethod
    def from_dict(cls, data: Dict) -> 'PropertyReport':
        witness = data.get('witness')
        return cls(
            kind=PropertyKind(data['property']),
            holds=data['holds'],
            degree=data['degree'],
            ambient=list(data['ambient']),
            subject=list(data['subject']),
            witness=Witness.from_dict(witness) if witness is not None else None,
            pairs_checked=data.get('pairs_checked', 0),
            details=dict(data.get('details', {})),
            elapsed=data.get('elapsed', 0.0),
        )


def new_report(kind: PropertyKind, holds: bool, G: Group, H: Group, witness: Optional[Witness] = None,
               **kwargs) -> PropertyReport:
    return PropertyReport(kind, holds, G.degree, G.cycle_strings(), H.cycle_strings(), witness, **kwargs)
