#!/usr/bin/env python3
# -*- coding: utf-8 -*-


import json
import os
import pathlib
import tempfile
from typing import Dict, Union

from numpyencoder import NumpyEncoder


def _is_jsonable(data: any, cls: object) -> bool:
    """Checks if the given ``data`` is JSON serializable.

    Args:
        data (Any): ``Data`` that will be checked.
        cls(object, optional): Custom JSONEncoder subclass.

    Returns:
        bool: True if the given ``data`` is serializable, False if not.
    """
    try:
        json.dumps(data, cls=cls)
        return True
    except (TypeError, OverflowError, ValueError):
        return False


def load_json(file_path: Union[pathlib.Path, str]) -> Dict:
    """Wrapper to json.load function.

    Args:
        file_path (Path): Path of the json file to load.

    Returns:
        Dict: The loaded json file.
    """
    with open(file_path, 'r', encoding='utf-8') as fp:
        return json.load(fp)


def dumps_json(data: any, cls=NumpyEncoder) -> str:
    """Serializes ``data`` the way every report file of the package is written.

    Keys keep their insertion order, so objects built with a fixed field
    order serialize identically across runs.
    """
    return json.dumps(data, indent=4, cls=cls, ensure_ascii=False) + "\n"


def write_text_atomic(file_path: Union[pathlib.Path, str], text: str) -> None:
    """Writes ``text`` to a temporary sibling file and renames it over ``file_path``."""
    file_path = pathlib.Path(file_path)
    file_path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp_name = tempfile.mkstemp(dir=file_path.parent, prefix=f".{file_path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, 'w', encoding='utf-8') as fp:
            fp.write(text)
        os.replace(tmp_name, file_path)
    except BaseException:
        if os.path.exists(tmp_name):
            os.unlink(tmp_name)
        raise


def save_json(file_path: Union[pathlib.Path, str], data: any, cls=NumpyEncoder) -> None:
    """Writes ``data`` as indented JSON, atomically.

    Args:
        file_path (Path): Path to write the json file to.
        data (Any): Data to write to the given path. Must be serializable by JSON.
        cls(object, optional): Custom JSONEncoder subclass, ``NumpyEncoder`` by default.

    Returns:
        None: saves the ``data`` in JSON file to the ``file_path``.

    Raises:
        TypeError: If ``data`` is not JSON serializable.
    """
    if _is_jsonable(data, cls):
        write_text_atomic(file_path, dumps_json(data, cls=cls))
    else:
        raise TypeError("The given data is not JSON serializable. "
                        "We recommend using a custom encoder.")
