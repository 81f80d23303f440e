import json
import os
import sys

import isort
import numpy as np
import pandas as pd
import pytest

MODULE_DIR = os.path.dirname(os.path.abspath('./ICPi/'))
sys.path.append(MODULE_DIR)

from ICPi.errors import ConfigurationError
from ICPi.settings import CACHE_ENV_VAR, Params
from ICPi.utils import ResultCache, campaign_table, dumps_json, load_json, save_json, write_campaign_csv


def _campaign_dict():
    return {
        'tallies_by_theorem': {
            'thm_A': {'confirmed': 3, 'vacuous': 2, 'counterexamples': 0, 'not_applicable': 1, 'skipped': 0},
            'lem_phi': {'confirmed': 1, 'vacuous': 0, 'counterexamples': 0, 'not_applicable': 0, 'skipped': 0},
        },
        'truncated': {'thm_A': 4},
    }


class TestJson:

    def test_dumps_is_stable(self):
        text = dumps_json({'b': 1, 'a': np.int64(2), 'name': "Sym(4)"})
        assert text.endswith("}\n")
        assert list(json.loads(text)) == ['b', 'a', 'name']
        assert json.loads(text)['a'] == 2

    def test_save_and_load(self, tmp_path):
        path = tmp_path / "nested" / "data.json"
        save_json(path, {'orders': np.array([1, 2, 4])})
        assert load_json(path) == {'orders': [1, 2, 4]}
        assert not [p for p in path.parent.iterdir() if p.suffix == ".tmp"]

    def test_not_serializable(self, tmp_path):
        with pytest.raises(TypeError):
            save_json(tmp_path / "data.json", {'group': object()})


class TestResultCache:

    def test_store_and_load(self, tmp_path):
        cache = ResultCache(tmp_path, "1.0")
        key = cache.key("abc", "z_u", {'p': 2})
        assert cache.load(key) is None
        cache.store(key, {'order': 24})
        assert cache.load(key) == {'order': 24}

    def test_keys_depend_on_version_and_parameters(self, tmp_path):
        old, new = ResultCache(tmp_path, "1.0"), ResultCache(tmp_path, "1.1")
        assert old.key("abc", "z_u", {'p': 2}) != new.key("abc", "z_u", {'p': 2})
        assert old.key("abc", "z_u", {'p': 2}) != old.key("abc", "z_u", {'p': 3})
        assert old.key("abc", "z_u", {'p': 2, 'd': 4}) == old.key("abc", "z_u", {'d': 4, 'p': 2})

    def test_get_or_compute_counts(self, tmp_path):
        cache = ResultCache(tmp_path, "1.0")
        calls = []

        def factory():
            calls.append(1)
            return [1, 2, 3]

        assert cache.get_or_compute("abc", "orders", {}, factory) == [1, 2, 3]
        assert cache.get_or_compute("abc", "orders", {}, factory) == [1, 2, 3]
        assert len(calls) == 1
        assert cache.stats() == {'hits': 1, 'misses': 1}

    def test_unreadable_entry_is_ignored(self, tmp_path):
        cache = ResultCache(tmp_path, "1.0")
        key = cache.key("abc", "orders", {})
        cache.store(key, 1)
        next(tmp_path.rglob("*.pkl")).write_bytes(b"not a pickle")
        assert cache.load(key) is None


class TestCampaignCsv:

    def test_table(self):
        table = campaign_table(_campaign_dict())
        assert list(table.index) == ['thm_A', 'lem_phi']
        assert table.loc['thm_A', 'truncated'] == 4
        assert table.loc['lem_phi', 'truncated'] == 0

    def test_write(self, tmp_path):
        path = tmp_path / "out" / "tallies.csv"
        write_campaign_csv(_campaign_dict(), path)
        table = pd.read_csv(path, index_col='theorem')
        assert table.loc['thm_A', 'confirmed'] == 3


class TestSettings:

    def test_defaults_match_settings_file(self):
        defaults = Params()
        loaded = Params()
        loaded.init_from_json(os.path.join(MODULE_DIR, "settings", "campaign_settings.json"))
        assert loaded.limits.to_dict() == defaults.limits.to_dict()
        assert loaded.campaign.to_dict() == defaults.campaign.to_dict()

    @pytest.mark.parametrize("settings", [
        {'limit': {}},
        {'limits': {'subgroup_limit': 10}},
        {'limits': {'product_bound': -1}},
        {'limits': {'degree_cap': True}},
        {'campaign': {'jobs': 0}},
        {'campaign': {'workers': 2}},
    ])
    def test_rejected_settings(self, settings):
        with pytest.raises(ConfigurationError):
            Params().init_from_dict(settings)

    def test_cache_directory(self, tmp_path, monkeypatch):
        settings = Params()
        monkeypatch.delenv(CACHE_ENV_VAR, raising=False)
        assert settings.cache.resolve_directory().name == "icpi"
        settings.init_from_dict({'cache': {'directory': str(tmp_path / "configured")}})
        assert settings.cache.resolve_directory() == tmp_path / "configured"
        monkeypatch.setenv(CACHE_ENV_VAR, str(tmp_path / "env"))
        assert settings.cache.resolve_directory() == tmp_path / "env"


class TestFormatting:

    def test_isort_settings(self):
        config = isort.Config(settings_path=MODULE_DIR)
        assert config.line_length == 120
        assert "ICPi" in config.known_first_party
