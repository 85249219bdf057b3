"""Configuration loading and backend wiring tests."""

import json

import pytest

from sceneloom.config import (
    AppConfig,
    DEFAULT_MODELS,
    build_llm_client,
    config_from_dict,
    load_config,
)
from sceneloom.llm import HttpBackend, ReplayBackend, ReplayStore


def test_defaults():
    config = AppConfig()
    assert config.backend == "replay"
    assert config.generator == "simulate"
    assert config.clock == "logical"
    assert config.retrieval.chunk_size == 256
    assert config.retrieval.k == 4
    assert config.selection_policy.mu == 0.5
    assert config.selection_policy.sigma == 0.15
    assert config.models == DEFAULT_MODELS


def test_load_config_file(tmp_path):
    path = tmp_path / "config.json"
    path.write_text(json.dumps({
        "backend": "live",
        "api_endpoint": "http://localhost:9999/v1/chat/completions",
        "retrieval": {"chunk_size": 128, "k": 2},
        "selection_policy": {"mu": 0.4, "sigma": 0.2, "seed": 3},
        "generator": "simulate",
        "generator_seed": 11,
        "sessions_dir": str(tmp_path / "sessions"),
    }), encoding="utf-8")
    config = load_config(path)
    assert config.backend == "live"
    assert config.retrieval.chunk_size == 128
    assert config.selection_policy.seed == 3
    assert config.generator_seed == 11


def test_unknown_keys_rejected():
    with pytest.raises(ValueError) as err:
        config_from_dict({"backnd": "replay"})
    assert "backnd" in str(err.value)
    with pytest.raises(ValueError) as err:
        config_from_dict({"retrieval": {"chunksize": 1}})
    assert "chunksize" in str(err.value)


@pytest.mark.parametrize("field,value", [
    ("backend", "carrier-pigeon"),
    ("generator", "imagine"),
    ("clock", "sundial"),
])
def test_enum_fields_validated(field, value):
    with pytest.raises(ValueError):
        config_from_dict({field: value})


def test_build_llm_client_replay_empty():
    client = build_llm_client(AppConfig())
    assert isinstance(client.backend, ReplayBackend)
    assert client.backend.store.responses == {}
    assert client.router.models == DEFAULT_MODELS


def test_build_llm_client_replay_with_store(tmp_path):
    store = ReplayStore(responses={"abc": "xyz"})
    path = tmp_path / "store.json"
    store.save(path)
    client = build_llm_client(AppConfig(replay_store=str(path)))
    assert client.backend.store.responses == {"abc": "xyz"}


def test_build_llm_client_live():
    config = AppConfig(backend="live", api_endpoint="http://example.test/complete")
    client = build_llm_client(config)
    assert isinstance(client.backend, HttpBackend)
    assert client.backend.endpoint == "http://example.test/complete"
