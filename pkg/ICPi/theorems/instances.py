#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""Theorem identifiers, instances and the reports produced by checking them."""

from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Tuple, Union

from ..errors import ConfigurationError
from ..perm.group import Group
from ..perm.permutation import parse_cycles
from ..settings import ENGINE_VERSION


class TheoremId(Enum):
    THM_A = "thm_A"
    THM_B_ORDER_D = "thm_B_order_d"
    THM_C_MINIMAL = "thm_C_minimal"
    THM_D_MAXIMAL = "thm_D_maximal"
    THM_3_1_MIN = "thm_3_1_min"
    THM_3_2_MAX = "thm_3_2_max"
    COR_STAR = "cor_star"
    COR_F_QUOTIENT = "cor_F_quotient"
    LEM_OVER = "lem_over"
    LEM_OVE_I = "lem_ove_i"
    LEM_OVE_II = "lem_ove_ii"
    LEM_SATISFIES = "lem_satisfies"
    LEM_ONE_OF = "lem_one_of"
    LEM_NECESSITY = "lem_necessity"
    LEM_PHI = "lem_phi"
    LEM_SYLOW = "lem_sylow"
    LEM_JG_U = "lem_jg_U"
    LEM_SU_U = "lem_su_U"
    LEM_EQUIVALENT = "lem_equivalent"

    @classmethod
    def parse(cls, name: str) -> 'TheoremId':
        try:
            return cls(name)
        except ValueError:
            raise ConfigurationError(f"unknown theorem id {name!r}") from None

    @classmethod
    def parse_list(cls, names: List[str]) -> List['TheoremId']:
        """Theorem ids from names; ``all`` selects every id."""
        if any(name == 'all' for name in names):
            return list(cls)
        return [cls.parse(name) for name in names]


# (required parameters, optional parameters); integers are p and d, the rest are subgroups.
SIGNATURES: Dict[TheoremId, Tuple[Tuple[str, ...], Tuple[str, ...]]] = {
    TheoremId.THM_A: (('N', 'X', 'p', 'd'), ()),
    TheoremId.THM_B_ORDER_D: (('P', 'p', 'd'), ()),
    TheoremId.THM_C_MINIMAL: (('N', 'p'), ()),
    TheoremId.THM_D_MAXIMAL: (('N', 'p'), ()),
    TheoremId.THM_3_1_MIN: (('P', 'p'), ()),
    TheoremId.THM_3_2_MAX: (('P', 'p'), ()),
    TheoremId.COR_STAR: (('E',), ()),
    TheoremId.COR_F_QUOTIENT: (('E', 'X'), ('p', 'd')),
    TheoremId.LEM_OVER: (('H', 'N'), ()),
    TheoremId.LEM_OVE_I: (('H', 'N'), ()),
    TheoremId.LEM_OVE_II: (('H', 'N'), ()),
    TheoremId.LEM_SATISFIES: (('T', 'L'), ()),
    TheoremId.LEM_ONE_OF: (('N', 'p', 'd'), ()),
    TheoremId.LEM_NECESSITY: (('p',), ('L',)),
    TheoremId.LEM_PHI: (('P',), ()),
    TheoremId.LEM_SYLOW: (('p',), ()),
    TheoremId.LEM_JG_U: (('E',), ()),
    TheoremId.LEM_SU_U: (('E',), ('p',)),
    TheoremId.LEM_EQUIVALENT: (('U', 'V', 'W'), ()),
}

INTEGER_PARAMETERS = ('p', 'd')

Parameter = Union[int, Group]


@dataclass(frozen=True)
class TheoremInstance:
    """One concrete instance of a theorem or lemma.

    Attributes:
        theorem_id (TheoremId): Statement to check.
        group_name (str): Name of the ambient group in the corpus or group file.
        degree (int): Degree of the ambient group.
        parameters (tuple): ``(name, value)`` pairs in signature order; values are
            primes and integers for ``p`` and ``d``, subgroups otherwise.
        ambient (tuple): Generators of the ambient group in cycle notation, so that the
            instance can be rebuilt without the corpus.
    """
    theorem_id: TheoremId
    group_name: str
    degree: int
    parameters: Tuple[Tuple[str, Parameter], ...]
    ambient: Tuple[str, ...] = ()

    @classmethod
    def create(cls, theorem_id: TheoremId, group_name: str, degree: int, ambient: Tuple[str, ...] = (),
               **parameters) -> 'TheoremInstance':
        """Builds an instance, validating the parameter names against the signature.

        Raises:
            ConfigurationError: If a required parameter is missing or an unknown one is given.
        """
        required, optional = SIGNATURES[theorem_id]
        missing = [name for name in required if name not in parameters]
        unknown = [name for name in parameters if name not in required + optional]
        if missing or unknown:
            raise ConfigurationError(
                f"{theorem_id.value}: missing parameters {missing}, unknown parameters {unknown}")
        for name, value in parameters.items():
            if name in INTEGER_PARAMETERS:
                if isinstance(value, bool) or not isinstance(value, int):
                    raise ConfigurationError(f"{theorem_id.value}: parameter {name} must be an integer")
            elif not isinstance(value, Group) or value.degree != degree:
                raise ConfigurationError(f"{theorem_id.value}: parameter {name} must be a subgroup of degree {degree}")
        ordered = tuple((name, parameters[name]) for name in required + optional if name in parameters)
        return cls(theorem_id, group_name, degree, ordered, tuple(ambient))

    def ambient_group(self) -> Group:
        return Group(self.degree, [parse_cycles(text, self.degree) for text in self.ambient])

    def get(self, name: str, default=None):
        for key, value in self.parameters:
            if key == name:
                return value
        return default

    def __getitem__(self, name: str) -> Parameter:
        value = self.get(name)
        if value is None:
            raise KeyError(name)
        return value

    def to_dict(self) -> Dict:
        parameters = {}
        for name, value in self.parameters:
            if isinstance(value, Group):
                parameters[name] = {'order': value.order, 'generators': value.cycle_strings()}
            else:
                parameters[name] = value
        return {
            'theorem': self.theorem_id.value,
            'group': self.group_name,
            'degree': self.degree,
            'ambient': list(self.ambient),
            'parameters': parameters,
        }

    @classmethod
    def from_dict(cls, data: Dict) -> 'TheoremInstance':
        degree = data['degree']
        parameters = {}
        for name, value in data['parameters'].items():
            if name in INTEGER_PARAMETERS:
                parameters[name] = value
            else:
                parameters[name] = Group(degree, [parse_cycles(text, degree) for text in value['generators']])
        return cls.create(TheoremId.parse(data['theorem']), data['group'], degree,
                          tuple(data.get('ambient', ())), **parameters)


class HypothesisStatus(Enum):
    SATISFIED = "satisfied"
    NOT_SATISFIED = "not_satisfied"
    NOT_APPLICABLE = "not_applicable"


class ConclusionStatus(Enum):
    TRUE = "true"
    FALSE = "false"
    NOT_EVALUATED = "not_evaluated"


class Verdict(Enum):
    CONFIRMED = "confirmed"
    VACUOUS = "vacuous"
    COUNTEREXAMPLE = "COUNTEREXAMPLE"


def verdict_of(hypothesis: HypothesisStatus, conclusion: ConclusionStatus) -> Verdict:
    if hypothesis is HypothesisStatus.SATISFIED and conclusion is ConclusionStatus.TRUE:
        return Verdict.CONFIRMED
    if hypothesis is HypothesisStatus.SATISFIED and conclusion is ConclusionStatus.FALSE:
        return Verdict.COUNTEREXAMPLE
    return Verdict.VACUOUS


@dataclass
class TheoremReport:
    """Outcome of checking one :class:`TheoremInstance`.

    The verdict is derived from the two statuses and cannot be set directly.

    Attributes:
        instance (TheoremInstance): The checked instance.
        hypothesis_status (HypothesisStatus): Whether the hypotheses hold.
        conclusion_status (ConclusionStatus): Whether the conclusion holds.
        details (dict): Witness records and intermediate orders.
        reason (str): Why the instance is not applicable or was skipped.
        skipped (bool): A capacity bound stopped the check.
        elapsed (float): Wall time in seconds.
    """
    instance: TheoremInstance
    hypothesis_status: HypothesisStatus
    conclusion_status: ConclusionStatus
    details: Dict = field(default_factory=dict)
    reason: str = ""
    skipped: bool = False
    elapsed: float = 0.0

    @property
    def verdict(self) -> Verdict:
        return verdict_of(self.hypothesis_status, self.conclusion_status)

    @classmethod
    def not_applicable(cls, instance: TheoremInstance, reason: str, skipped: bool = False) -> 'TheoremReport':
        return cls(instance, HypothesisStatus.NOT_APPLICABLE, ConclusionStatus.NOT_EVALUATED,
                   reason=reason, skipped=skipped)

    def to_dict(self) -> Dict:
        return {
            'instance': self.instance.to_dict(),
            'hypothesis': self.hypothesis_status.value,
            'conclusion': self.conclusion_status.value,
            'verdict': self.verdict.value,
            'reason': self.reason,
            'skipped': self.skipped,
            'details': self.details,
            'elapsed': self.elapsed,
        }

    @classmethod
    def from_dict(cls, data: Dict) -> 'TheoremReport':
        return cls(
            instance=TheoremInstance.from_dict(data['instance']),
            hypothesis_status=HypothesisStatus(data['hypothesis']),
            conclusion_status=ConclusionStatus(data['conclusion']),
            details=data.get('details', {}),
            reason=data.get('reason', ""),
            skipped=data.get('skipped', False),
            elapsed=data.get('elapsed', 0.0),
        )


TALLY_KEYS = ('confirmed', 'vacuous', 'counterexamples', 'not_applicable', 'skipped')


def tally(reports: List[TheoremReport]) -> Dict[str, int]:
    counts = dict.fromkeys(TALLY_KEYS, 0)
    for report in reports:
        verdict = report.verdict
        if verdict is Verdict.CONFIRMED:
            counts['confirmed'] += 1
        elif verdict is Verdict.COUNTEREXAMPLE:
            counts['counterexamples'] += 1
        else:
            counts['vacuous'] += 1
        if report.skipped:
            counts['skipped'] += 1
        elif report.hypothesis_status is HypothesisStatus.NOT_APPLICABLE:
            counts['not_applicable'] += 1
    return counts


@dataclass
class CampaignReport:
    """Aggregated reports of a campaign, in deterministic (group, theorem, instance) order.

    Attributes:
        corpus_filter (dict): Filter that selected the corpus.
        checks (list): Theorem ids checked.
        groups (list): Names of the corpus groups, in run order.
        reports (list): One :class:`TheoremReport` per instance.
        truncated (dict): Instances dropped per theorem id by the instance cap.
        skipped_enumerations (list): ``group/theorem`` pairs whose instances could not be
            enumerated within the capacity bounds.
        errors (list): Internal consistency failures, one line each; any makes the run fail.
        suites (list): Verification suite reports, as dictionaries.
        runtime (float): Total wall time in seconds.
        engine_version (str): Version of the engine that produced the report.
    """
    corpus_filter: Dict
    checks: List[TheoremId]
    groups: List[str]
    reports: List[TheoremReport]
    truncated: Dict[str, int] = field(default_factory=dict)
    skipped_enumerations: List[str] = field(default_factory=list)
    errors: List[str] = field(default_factory=list)
    suites: List[Dict] = field(default_factory=list)
    runtime: float = 0.0
    engine_version: str = ENGINE_VERSION

    @property
    def tallies(self) -> Dict[str, int]:
        return tally(self.reports)

    def tallies_by_theorem(self) -> Dict[str, Dict[str, int]]:
        return {tid.value: tally([r for r in self.reports if r.instance.theorem_id is tid]) for tid in self.checks}

    @property
    def counterexamples(self) -> List[TheoremReport]:
        return [r for r in self.reports if r.verdict is Verdict.COUNTEREXAMPLE]

    @property
    def suite_violations(self) -> int:
        return sum(len(suite.get('violations', [])) for suite in self.suites)

    def is_clean(self) -> bool:
        return not self.counterexamples and self.suite_violations == 0 and not self.errors

    def to_dict(self) -> Dict:
        return {
            'engine_version': self.engine_version,
            'corpus_filter': self.corpus_filter,
            'checks': [tid.value for tid in self.checks],
            'groups': list(self.groups),
            'tallies': self.tallies,
            'tallies_by_theorem': self.tallies_by_theorem(),
            'truncated': dict(self.truncated),
            'skipped_enumerations': list(self.skipped_enumerations),
            'errors': list(self.errors),
            'reports': [r.to_dict() for r in self.reports],
            'suites': list(self.suites),
            'runtime': self.runtime,
        }

    @classmethod
    def from_dict(cls, data: Dict) -> 'CampaignReport':
        return cls(
            corpus_filter=data['corpus_filter'],
            checks=[TheoremId.parse(name) for name in data['checks']],
            groups=list(data['groups']),
            reports=[TheoremReport.from_dict(r) for r in data['reports']],
            truncated=dict(data.get('truncated', {})),
            skipped_enumerations=list(data.get('skipped_enumerations', [])),
            errors=list(data.get('errors', [])),
            suites=list(data.get('suites', [])),
            runtime=data.get('runtime', 0.0),
            engine_version=data.get('engine_version', ENGINE_VERSION),
        )


def find_instance_report(reports: List[TheoremReport], theorem_id: TheoremId) -> Optional[TheoremReport]:
    return next((r for r in reports if r.instance.theorem_id is theorem_id), None)
