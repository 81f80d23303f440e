#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""Group files: UTF-8 text with one JSON object per line.

Each object has exactly the fields ``name`` (string), ``degree`` (positive
integer) and ``generators`` (array of cycle-notation strings). Blank lines
and lines starting with ``#`` are ignored.
"""

import json
from pathlib import Path
from typing import List, Union

from ..errors import GroupFileError
from .group_spec import GroupSource, GroupSpec, validate_spec

REQUIRED_FIELDS = ('name', 'degree', 'generators')


def _parse_entry(text: str, line: int) -> GroupSpec:
    try:
        entry = json.loads(text)
    except json.JSONDecodeError as e:
        raise GroupFileError(f"invalid JSON: {e.msg}", line=line) from e
    if not isinstance(entry, dict):
        raise GroupFileError("each line must hold one JSON object", line=line)
    for key in REQUIRED_FIELDS:
        if key not in entry:
            raise GroupFileError("missing field", line=line, field=key)
    for key in entry:
        if key not in REQUIRED_FIELDS:
            raise GroupFileError("unknown field", line=line, field=key)
    name, degree, generators = entry['name'], entry['degree'], entry['generators']
    if not isinstance(name, str) or not name.strip():
        raise GroupFileError("name must be a non-empty string", line=line, field='name')
    if not isinstance(degree, int) or isinstance(degree, bool) or degree < 1:
        raise GroupFileError("degree must be a positive integer", line=line, field='degree')
    if not isinstance(generators, list) or not all(isinstance(g, str) for g in generators):
        raise GroupFileError("generators must be an array of strings", line=line, field='generators')
    spec = GroupSpec(name.strip(), degree, tuple(generators), GroupSource.FILE, "file")
    validate_spec(spec, line=line)
    return spec


def load_group_file(path: Union[str, Path]) -> List[GroupSpec]:
    """Reads and strictly validates a group file; groups are not built.

    Args:
        path (Union[str, Path]): Path of the group file.

    Returns:
        List[GroupSpec]: Specs in file order.

    Raises:
        GroupFileError: If the file is missing, an entry violates the schema,
            a generator does not parse, or a name is repeated.
    """
    path = Path(path)
    if not path.is_file():
        raise GroupFileError(f"group file not found: {path}")
    specs = []
    seen = {}
    with open(path, 'r', encoding='utf-8') as fp:
        for line, text in enumerate(fp, start=1):
            if not text.strip() or text.lstrip().startswith('#'):
                continue
            spec = _parse_entry(text, line)
            if spec.name in seen:
                raise GroupFileError(f"duplicate group name {spec.name!r} (first on line {seen[spec.name]})",
                                     line=line, field='name')
            seen[spec.name] = line
            specs.append(spec)
    return specs


def find_spec(specs: List[GroupSpec], name: str) -> GroupSpec:
    """Returns the spec called ``name``.

    Raises:
        GroupFileError: If no spec has that name.
    """
    for spec in specs:
        if spec.name == name:
            return spec
    raise GroupFileError(f"no group named {name!r}", field='name')
