"""Chat-completion client with replayable fixtures.

Backends share one request shape (model, messages, temperature, max_tokens).
A request fingerprint hashes the canonical JSON of everything that affects
the response content: model_id, messages, temperature. max_tokens stays out
of the hash so budget tweaks don't invalidate recorded fixtures. The replay
backend makes whole-pipeline runs deterministic and network-free.
"""

from __future__ import annotations

import hashlib
import json
import os
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Protocol

import httpx

STORE_FORMAT = "replay-store"
STORE_VERSION = 1

DEFAULT_ROLES = ("codex", "planner", "coder", "condenser")


class Timeout(Exception):
    """Backend gave no answer within the deadline, after retries."""


class RateLimited(Exception):
    """Backend kept answering 429 through every retry."""


class MalformedResponse(Exception):
    """Backend answered with an unusable status or body."""


class ReplayMiss(KeyError):
    """Fingerprint absent from the replay store."""


class FingerprintConflict(ValueError):
    """Attempt to re-record a fingerprint with different text."""


@dataclass(frozen=True)
class CompletionRequest:
    model_id: str
    messages: tuple[tuple[str, str], ...]  # (role, text) pairs
    temperature: float = 0.0
    max_tokens: int = 1024

    def __post_init__(self):
        if not self.messages:
            raise ValueError("messages must be nonempty")
        if not 0.0 <= self.temperature <= 2.0:
            raise ValueError(f"temperature out of range: {self.temperature}")


def fingerprint(request: CompletionRequest) -> str:
    """Stable hash of the response-determining request fields."""
    canonical = json.dumps(
        {
            "model_id": request.model_id,
            "messages": [[role, text] for role, text in request.messages],
            "temperature": float(request.temperature),
        },
        sort_keys=True,
        separators=(",", ":"),
        ensure_ascii=True,
    )
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()


class Backend(Protocol):
    def complete(self, request: CompletionRequest) -> str: ...


@dataclass
class ReplayStore:
    responses: dict[str, str] = field(default_factory=dict)

    def record(self, request: CompletionRequest, response: str) -> str:
        key = fingerprint(request)
        existing = self.responses.get(key)
        if existing is not None and existing != response:
            raise FingerprintConflict(f"fingerprint {key} already recorded with other text")
        self.responses[key] = response
        return key

    def lookup(self, request: CompletionRequest) -> str:
        key = fingerprint(request)
        try:
            return self.responses[key]
        except KeyError:
            raise ReplayMiss(key) from None

    def save(self, path: str | Path) -> None:
        payload = {
            "format": STORE_FORMAT,
            "version": STORE_VERSION,
            "responses": dict(sorted(self.responses.items())),
        }
        Path(path).write_text(
            json.dumps(payload, indent=2, sort_keys=True, ensure_ascii=True) + "\n",
            encoding="utf-8",
        )

    @classmethod
    def load(cls, path: str | Path) -> "ReplayStore":
        payload = json.loads(Path(path).read_text(encoding="utf-8"))
        if payload.get("format") != STORE_FORMAT:
            raise ValueError(f"not a {STORE_FORMAT} file: {path}")
        return cls(responses=dict(payload["responses"]))


@dataclass
class ReplayBackend:
    store: ReplayStore

    def complete(self, request: CompletionRequest) -> str:
        return self.store.lookup(request)


@dataclass
class ScriptedBackend:
    """Canned responses served in order, ignoring request content.

    Useful for demos and for bootstrapping replay stores (wrap it in a
    RecordingBackend, run the flow once, save the store).
    """

    responses: list[str]
    cursor: int = 0

    def complete(self, request: CompletionRequest) -> str:
        if self.cursor >= len(self.responses):
            raise IndexError(f"scripted backend exhausted after {self.cursor} completions")
        response = self.responses[self.cursor]
        self.cursor += 1
        return response


@dataclass
class RecordingBackend:
    """Pass-through that records every completion into a store."""

    inner: Backend
    store: ReplayStore

    def complete(self, request: CompletionRequest) -> str:
        response = self.inner.complete(request)
        self.store.record(request, response)
        return response


class HttpBackend:
    """Minimal chat-completions client with capped exponential backoff.

    Transient failures (timeouts, 429, 5xx) are retried up to max_attempts;
    anything else raises MalformedResponse immediately.
    """

    def __init__(
        self,
        endpoint: str,
        api_key_env: str | None = None,
        timeout: float = 60.0,
        max_attempts: int = 3,
        backoff_base: float = 0.25,
        backoff_cap: float = 2.0,
        sleeper: Callable[[float], None] = time.sleep,
        client: httpx.Client | None = None,
    ):
        self.endpoint = endpoint
        self.api_key_env = api_key_env
        self.timeout = timeout
        self.max_attempts = max_attempts
        self.backoff_base = backoff_base
        self.backoff_cap = backoff_cap
        self._sleep = sleeper
        self._client = client or httpx.Client(timeout=timeout)

    def _headers(self) -> dict[str, str]:
        headers = {"content-type": "application/json"}
        if self.api_key_env:
            key = os.environ.get(self.api_key_env, "")
            if key:
                headers["authorization"] = f"Bearer {key}"
        return headers

    def complete(self, request: CompletionRequest) -> str:
        body = {
            "model": request.model_id,
            "messages": [{"role": role, "content": text} for role, text in request.messages],
            "temperature": request.temperature,
            "max_tokens": request.max_tokens,
        }
        failure: Exception | None = None
        for attempt in range(self.max_attempts):
            if attempt:
                self._sleep(min(self.backoff_cap, self.backoff_base * 2 ** (attempt - 1)))
            try:
                response = self._client.post(self.endpoint, json=body, headers=self._headers())
            except httpx.TimeoutException as err:
                failure = Timeout(str(err))
                continue
            except httpx.TransportError as err:
                failure = Timeout(f"transport failure: {err}")
                continue
            if response.status_code == 429:
                failure = RateLimited("backend returned 429")
                continue
            if response.status_code >= 500:
                failure = MalformedResponse(f"backend returned {response.status_code}")
                continue
            if response.status_code != 200:
                raise MalformedResponse(f"backend returned {response.status_code}")
            try:
                return response.json()["choices"][0]["message"]["content"]
            except (ValueError, KeyError, IndexError, TypeError) as err:
                raise MalformedResponse(f"unusable response body: {err}") from err
        assert failure is not None
        raise failure


@dataclass
class ModelRouter:
    """Per-role model ids; every pipeline stage gets its own assignment."""

    models: dict[str, str]

    def model_for(self, role: str) -> str:
        try:
            return self.models[role]
        except KeyError:
            raise KeyError(f"no model configured for role {role!r}") from None

    def build_request(
        self,
        role: str,
        messages: list[tuple[str, str]],
        temperature: float = 0.0,
        max_tokens: int = 1024,
    ) -> CompletionRequest:
        return CompletionRequest(
            model_id=self.model_for(role),
            messages=tuple(messages),
            temperature=temperature,
            max_tokens=max_tokens,
        )


@dataclass
class LlmClient:
    """Backend plus routing; the one object pipeline stages depend on."""

    backend: Backend
    router: ModelRouter

    def complete(
        self,
        role: str,
        messages: list[tuple[str, str]],
        temperature: float = 0.0,
        max_tokens: int = 1024,
    ) -> str:
        request = self.router.build_request(role, messages, temperature, max_tokens)
        return self.backend.complete(request)
