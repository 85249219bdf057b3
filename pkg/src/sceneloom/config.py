"""Application configuration: one JSON file wires every pluggable boundary.

Covers LLM backend selection and per-role model routing, retrieval
parameters, the catalog selection policy, scene-generator mode, and server
settings. Unknown keys are rejected so typos fail loudly.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, fields
from pathlib import Path

from .catalog import DEFAULT_MU, DEFAULT_SIGMA
from .llm import HttpBackend, LlmClient, ModelRouter, ReplayBackend, ReplayStore

DEFAULT_MODELS = {
    "codex": "gpt-4o",
    "planner": "gpt-4o",
    "coder": "gpt-4o",
    "condenser": "gpt-4o-mini",
}


@dataclass
class RetrievalParams:
    chunk_size: int = 256
    k: int = 4


@dataclass
class PolicyParams:
    mu: float = DEFAULT_MU
    sigma: float = DEFAULT_SIGMA
    seed: int = 0


@dataclass
class AppConfig:
    backend: str = "replay"  # replay | live
    replay_store: str | None = None
    api_endpoint: str = "https://api.openai.com/v1/chat/completions"
    api_key_env: str = "LLM_API_KEY"
    models: dict = field(default_factory=lambda: dict(DEFAULT_MODELS))
    retrieval: RetrievalParams = field(default_factory=RetrievalParams)
    selection_policy: PolicyParams = field(default_factory=PolicyParams)
    corpus_dir: str | None = None
    prompt_budget: int | None = None
    generator: str = "simulate"  # simulate | live
    generator_seed: int = 7
    generator_refine_command: str | None = None
    sessions_dir: str = "sessions"
    catalog_manifest: str | None = None
    api_token: str | None = None
    clock: str = "logical"  # logical | wall
    static_dir: str | None = None


_NESTED = {"retrieval": RetrievalParams, "selection_policy": PolicyParams}


def load_config(path: str | Path) -> AppConfig:
    data = json.loads(Path(path).read_text(encoding="utf-8"))
    return config_from_dict(data)


def config_from_dict(data: dict) -> AppConfig:
    known = {f.name for f in fields(AppConfig)}
    unknown = sorted(set(data) - known)
    if unknown:
        raise ValueError(f"unknown config keys: {', '.join(unknown)}")
    kwargs = dict(data)
    for key, cls in _NESTED.items():
        if key in kwargs:
            sub = kwargs[key]
            sub_known = {f.name for f in fields(cls)}
            sub_unknown = sorted(set(sub) - sub_known)
            if sub_unknown:
                raise ValueError(f"unknown {key} keys: {', '.join(sub_unknown)}")
            kwargs[key] = cls(**sub)
    config = AppConfig(**kwargs)
    if config.backend not in ("replay", "live"):
        raise ValueError(f"backend must be replay or live, got {config.backend!r}")
    if config.generator not in ("simulate", "live"):
        raise ValueError(f"generator must be simulate or live, got {config.generator!r}")
    if config.clock not in ("logical", "wall"):
        raise ValueError(f"clock must be logical or wall, got {config.clock!r}")
    return config


def build_llm_client(config: AppConfig) -> LlmClient:
    router = ModelRouter(models=dict(config.models))
    if config.backend == "replay":
        store = ReplayStore.load(config.replay_store) if config.replay_store else ReplayStore()
        return LlmClient(backend=ReplayBackend(store=store), router=router)
    backend = HttpBackend(endpoint=config.api_endpoint, api_key_env=config.api_key_env)
    return LlmClient(backend=backend, router=router)
