#!/usr/bin/env python3
# -*- coding: utf-8 -*-

from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Tuple

from ..errors import CycleParseError, GroupFileError
from ..perm.group import Group
from ..perm.permutation import parse_cycles


class GroupSource(str, Enum):
    BUILTIN = "builtin"
    FILE = "file"


@dataclass(frozen=True)
class GroupSpec:
    """Declarative description of a permutation group.

    Attributes:
        name (str): Unique tag within a corpus, e.g. ``"Sym(4)"``.
        degree (int): Number of points.
        generator_texts (Tuple[str, ...]): Generators in cycle notation.
        source (GroupSource): Built-in corpus or group file.
        family (str): Named family the group belongs to (``"product"`` and
            ``"file"`` for the other groups).
    """
    name: str
    degree: int
    generator_texts: Tuple[str, ...]
    source: GroupSource = GroupSource.BUILTIN
    family: str = "file"
    parameters: Tuple[int, ...] = field(default=())

    def build(self) -> Group:
        """Parses the generators and builds the group.

        Raises:
            CycleParseError: If a generator does not parse at the stated degree.
        """
        gens = [parse_cycles(text, self.degree) for text in self.generator_texts]
        return Group(self.degree, gens, name=self.name)

    def to_dict(self) -> Dict:
        return {
            'name': self.name,
            'degree': self.degree,
            'generators': list(self.generator_texts),
            'source': self.source.value,
            'family': self.family,
        }

    @classmethod
    def from_dict(cls, data: Dict) -> 'GroupSpec':
        return cls(
            name=data['name'],
            degree=int(data['degree']),
            generator_texts=tuple(data['generators']),
            source=GroupSource(data.get('source', GroupSource.FILE.value)),
            family=data.get('family', 'file'),
        )


def validate_spec(spec: GroupSpec, line: int = None) -> None:
    """Checks that every generator of ``spec`` parses at its degree.

    Raises:
        GroupFileError: Naming the offending generator.
    """
    for text in spec.generator_texts:
        try:
            parse_cycles(text, spec.degree)
        except CycleParseError as e:
            raise GroupFileError(f"group {spec.name!r}: {e}", line=line, field='generators') from e
