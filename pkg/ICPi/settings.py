#!/usr/bin/env python3
# -*- coding: utf-8 -*-

import os
from contextlib import contextmanager
from pathlib import Path
from typing import Dict, Iterator, Union

from .errors import ConfigurationError
from .utils.json_utils import load_json

ENGINE_VERSION = "0.1.0"
CACHE_ENV_VAR = "ICPI_CACHE_DIR"


class Params:
    """Organizes every runtime bound and campaign setting of the engine."""

    def __init__(self) -> None:
        self.limits = self.Limits()
        self.campaign = self.Campaign()
        self.cache = self.Cache()
        self.checks = self.Checks()

    def init_from_json(self, path_to_json: Union[Path, str]) -> None:
        """Updates all nested settings from a JSON file.

        The file holds one optional object per section: ``limits``,
        ``campaign``, ``cache`` and ``checks``.

        Args:
            path_to_json(Union[Path, str]): Path to the JSON settings file.

        Returns:
            None.
        """
        self.init_from_dict(load_json(Path(path_to_json)))

    def init_from_dict(self, settings: Dict) -> None:
        """Same as :meth:`init_from_json` for an already loaded dictionary."""
        unknown = set(settings) - {'limits', 'campaign', 'cache', 'checks'}
        if unknown:
            raise ConfigurationError(f"unknown settings sections: {sorted(unknown)}")
        self.limits.init_from_dict(settings.get('limits', {}))
        self.campaign.init_from_dict(settings.get('campaign', {}))
        self.cache.init_from_dict(settings.get('cache', {}))
        self.checks.init_from_dict(settings.get('checks', {}))

    class Limits:
        """Capacity bounds enforced with :class:`ICPi.errors.CapacityError`."""

        def __init__(self, **kwargs) -> None:
            self.enumeration_bound = kwargs['enumeration_bound'] if 'enumeration_bound' in kwargs else 20000
            self.subgroup_bound = kwargs['subgroup_bound'] if 'subgroup_bound' in kwargs else 256
            self.degree_cap = kwargs['degree_cap'] if 'degree_cap' in kwargs else 64
            self.product_bound = kwargs['product_bound'] if 'product_bound' in kwargs else 250000
            self.exhaustive_pool_bound = kwargs['exhaustive_pool_bound'] if 'exhaustive_pool_bound' in kwargs else 48
            self.oracle_bound = kwargs['oracle_bound'] if 'oracle_bound' in kwargs else 2000
            self.validate()

        def init_from_dict(self, limits: Dict) -> None:
            for key, value in limits.items():
                if not hasattr(self, key):
                    raise ConfigurationError(f"unknown limit {key!r}")
                setattr(self, key, value)
            self.validate()

        def validate(self) -> None:
            """Rejects non-positive bounds."""
            for key, value in self.to_dict().items():
                if not isinstance(value, int) or isinstance(value, bool) or value <= 0:
                    raise ConfigurationError(f"limit {key!r} must be a positive integer, got {value!r}")

        def to_dict(self) -> Dict:
            return {
                'enumeration_bound': self.enumeration_bound,
                'subgroup_bound': self.subgroup_bound,
                'degree_cap': self.degree_cap,
                'product_bound': self.product_bound,
                'exhaustive_pool_bound': self.exhaustive_pool_bound,
                'oracle_bound': self.oracle_bound,
            }

    class Campaign:
        """Default corpus and instance-enumeration settings of campaigns."""

        def __init__(self, **kwargs) -> None:
            self.max_order = kwargs['max_order'] if 'max_order' in kwargs else 100
            self.extra_groups = kwargs['extra_groups'] if 'extra_groups' in kwargs else ["Sym(5)", "Alt(5)xCyc(5)"]
            self.jobs = kwargs['jobs'] if 'jobs' in kwargs else 1
            self.max_instances_per_check = kwargs['max_instances_per_check'] if 'max_instances_per_check' in kwargs else 200
            self.equivalent_samples = kwargs['equivalent_samples'] if 'equivalent_samples' in kwargs else 40
            self.seed = kwargs['seed'] if 'seed' in kwargs else 2024

        def init_from_dict(self, campaign: Dict) -> None:
            for key, value in campaign.items():
                if not hasattr(self, key):
                    raise ConfigurationError(f"unknown campaign setting {key!r}")
                setattr(self, key, value)
            if self.jobs < 1 or self.max_instances_per_check < 1 or self.equivalent_samples < 0:
                raise ConfigurationError("campaign jobs and instance limits must be positive")

        def to_dict(self) -> Dict:
            return {
                'max_order': self.max_order,
                'extra_groups': list(self.extra_groups),
                'jobs': self.jobs,
                'max_instances_per_check': self.max_instances_per_check,
                'equivalent_samples': self.equivalent_samples,
                'seed': self.seed,
            }

    class Cache:
        """Location of the on-disk result cache."""

        def __init__(self, **kwargs) -> None:
            self.enabled = kwargs['enabled'] if 'enabled' in kwargs else True
            self.directory = kwargs['directory'] if 'directory' in kwargs else None

        def init_from_dict(self, cache: Dict) -> None:
            self.enabled = cache['enabled'] if 'enabled' in cache else self.enabled
            self.directory = cache['directory'] if 'directory' in cache else self.directory

        def resolve_directory(self) -> Path:
            """Cache directory: environment override, then settings, then the user cache."""
            if os.environ.get(CACHE_ENV_VAR):
                return Path(os.environ[CACHE_ENV_VAR])
            if self.directory:
                return Path(self.directory)
            return Path.home() / '.cache' / 'icpi'

    class Checks:
        """Internal cross-checks run alongside the main algorithms."""

        def __init__(self, **kwargs) -> None:
            self.self_check = kwargs['self_check'] if 'self_check' in kwargs else True

        def init_from_dict(self, checks: Dict) -> None:
            self.self_check = checks['self_check'] if 'self_check' in checks else self.self_check


params = Params()


@contextmanager
def limits_override(**kwargs) -> Iterator[Params.Limits]:
    """Temporarily replaces some of the runtime limits.

    Args:
        kwargs: Limit names and their temporary values.

    Yields:
        Params.Limits: The active limits.
    """
    saved = params.limits.to_dict()
    try:
        params.limits.init_from_dict(kwargs)
        yield params.limits
    finally:
        params.limits.init_from_dict(saved)
