"""Human-in-the-loop session state machine with an append-only journal.

Every state change is an event; live operations and replay share the same
pure fold (apply_event), so a session directory can always be reconstructed
from its journal alone. Side effects (LLM calls, scene generation) happen
before their events are appended; payloads capture everything the fold
needs.
"""

from __future__ import annotations

import dataclasses
import hashlib
import json
import time
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Callable

from . import prompts, retrieval, usda
from .config import AppConfig, build_llm_client
from .grammar import NotExecutable, canonicalize, check_command, parse_command
from .llm import LlmClient, MalformedResponse, RateLimited, ReplayMiss, Timeout
from .prompts import CotError, NoCommandFound
from .retrieval import Chunk, RetrievalIndex
from .scenegen import GeneratorFailed, LiveGenerator, SceneGenerator, SimulatedGenerator


class Phase(str, Enum):
    AWAITING_PROMPT = "AwaitingPrompt"
    COMMAND_PROPOSED = "CommandProposed"
    COARSE_SCENE_READY = "CoarseSceneReady"
    EDITING_COARSE = "EditingCoarse"
    FINE_SCENE_READY = "FineSceneReady"
    EDITING_FINE = "EditingFine"
    RENDER_QUEUED = "RenderQueued"
    DONE = "Done"
    FAILED = "Failed"


KIND_USER_PROMPT = "UserPrompt"
KIND_COMMAND_PROPOSED = "CommandProposed"
KIND_COMMAND_APPROVED = "CommandApproved"
KIND_COMMAND_REJECTED = "CommandRejected"
KIND_SCENE_INGESTED = "SceneIngested"
KIND_EDIT_PROPOSED = "EditProposed"
KIND_EDIT_APPROVED = "EditApproved"
KIND_EDIT_REJECTED = "EditRejected"
KIND_SELECTION_CHANGED = "SelectionChanged"
KIND_RENDER_REQUESTED = "RenderRequested"
KIND_ERROR = "Error"

EVENT_KINDS = frozenset({
    KIND_USER_PROMPT, KIND_COMMAND_PROPOSED, KIND_COMMAND_APPROVED,
    KIND_COMMAND_REJECTED, KIND_SCENE_INGESTED, KIND_EDIT_PROPOSED,
    KIND_EDIT_APPROVED, KIND_EDIT_REJECTED, KIND_SELECTION_CHANGED,
    KIND_RENDER_REQUESTED, KIND_ERROR,
})

BACKEND_ERRORS = (Timeout, RateLimited, MalformedResponse, ReplayMiss)


class WrongPhase(RuntimeError):
    pass


class NoPendingEdit(RuntimeError):
    pass


class UnknownSelectionPath(ValueError):
    pass


class CorruptJournal(ValueError):
    pass


@dataclass(frozen=True)
class JournalEvent:
    seq: int
    timestamp: object
    kind: str
    payload: dict

    def to_line(self) -> str:
        return json.dumps(
            {"seq": self.seq, "timestamp": self.timestamp, "kind": self.kind,
             "payload": self.payload},
            sort_keys=True, ensure_ascii=True,
        )


def parse_event(line: str, lineno: int) -> JournalEvent:
    try:
        data = json.loads(line)
        event = JournalEvent(
            seq=data["seq"], timestamp=data["timestamp"],
            kind=data["kind"], payload=data["payload"],
        )
    except (json.JSONDecodeError, KeyError, TypeError) as err:
        raise CorruptJournal(f"line {lineno}: unreadable event: {err}") from err
    if event.kind not in EVENT_KINDS:
        raise CorruptJournal(f"line {lineno}: unknown event kind {event.kind!r}")
    return event


@dataclass(frozen=True)
class SessionState:
    session_id: str
    phase: Phase = Phase.AWAITING_PROMPT
    proposed_command: dict | None = None
    approved_command: str | None = None
    selection: tuple[str, ...] = ()
    scene_paths: tuple[str, ...] = ()
    scene_text: str | None = None
    coarse_db: dict | None = None
    fine_db: dict | None = None
    pending_edit: dict | None = None
    render_command: str | None = None
    last_error: dict | None = None
    journal_offset: int = 0


def initial_state(session_id: str) -> SessionState:
    return SessionState(session_id=session_id)


def state_dict(state: SessionState) -> dict:
    data = dataclasses.asdict(state)
    data["phase"] = state.phase.value
    data["selection"] = list(state.selection)
    data["scene_paths"] = list(state.scene_paths)
    return data


def apply_event(state: SessionState, event: JournalEvent) -> SessionState:
    """Pure transition function shared by live operations and replay."""
    p = event.payload
    out = dataclasses.replace(state, journal_offset=event.seq)
    if event.kind == KIND_USER_PROMPT:
        return out
    if event.kind == KIND_COMMAND_PROPOSED:
        proposed = {key: p[key] for key in ("line", "canonical", "executable", "errors", "warnings")}
        return dataclasses.replace(out, phase=Phase.COMMAND_PROPOSED, proposed_command=proposed)
    if event.kind == KIND_COMMAND_APPROVED:
        return dataclasses.replace(out, approved_command=p["command"], proposed_command=None)
    if event.kind == KIND_COMMAND_REJECTED:
        return dataclasses.replace(out, phase=Phase.AWAITING_PROMPT, proposed_command=None)
    if event.kind == KIND_SCENE_INGESTED:
        db = {"path": p["index_path"], "sha256": p["index_sha256"]}
        common = dict(
            scene_text=p["dict_text"],
            scene_paths=tuple(p["prim_paths"]),
            selection=(),
            pending_edit=None,
        )
        if p["stage"] == "coarse":
            return dataclasses.replace(out, phase=Phase.EDITING_COARSE, coarse_db=db, **common)
        return dataclasses.replace(out, phase=Phase.EDITING_FINE, fine_db=db, **common)
    if event.kind == KIND_SELECTION_CHANGED:
        return dataclasses.replace(out, selection=tuple(p["paths"]))
    if event.kind == KIND_EDIT_PROPOSED:
        pending = {"stage": p["stage"], "plan": p["plan"], "code": p["code"]}
        return dataclasses.replace(out, pending_edit=pending)
    if event.kind == KIND_EDIT_APPROVED:
        out = dataclasses.replace(out, pending_edit=None)
        if p["stage"] == "fine":
            return dataclasses.replace(out, phase=Phase.RENDER_QUEUED)
        return out
    if event.kind == KIND_EDIT_REJECTED:
        return dataclasses.replace(out, pending_edit=None)
    if event.kind == KIND_RENDER_REQUESTED:
        return dataclasses.replace(out, phase=Phase.DONE, render_command=p["command"])
    if event.kind == KIND_ERROR:
        out = dataclasses.replace(out, last_error={"code": p["code"], "message": p["message"]})
        if p.get("fatal"):
            return dataclasses.replace(out, phase=Phase.FAILED)
        return out
    raise CorruptJournal(f"unknown event kind {event.kind!r}")


def read_journal(path: str | Path) -> list[JournalEvent]:
    """Load and sequence-check a journal file."""
    events: list[JournalEvent] = []
    expected = 1
    text = Path(path).read_text(encoding="utf-8")
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip():
            raise CorruptJournal(f"line {lineno}: blank line inside journal")
        event = parse_event(line, lineno)
        if event.seq != expected:
            raise CorruptJournal(f"line {lineno}: expected seq {expected}, got {event.seq}")
        events.append(event)
        expected += 1
    return events


def replay_journal(path: str | Path, session_id: str | None = None) -> SessionState:
    """Reconstruct session state as a pure fold over the journal."""
    path = Path(path)
    sid = session_id if session_id is not None else path.parent.name
    state = initial_state(sid)
    for event in read_journal(path):
        state = apply_event(state, event)
    return state


def make_clock(kind: str, start: int = 0) -> Callable[[], object]:
    if kind == "wall":
        return lambda: round(time.time(), 3)
    counter = {"next": start}

    def logical() -> int:
        value = counter["next"]
        counter["next"] += 1
        return value

    return logical


def _sha256_text(text: str) -> str:
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


def _sha256_file(path: Path) -> str:
    return hashlib.sha256(path.read_bytes()).hexdigest()


def _diag_dicts(diags) -> list[dict]:
    return [
        {"code": d.code, "message": d.message,
         "span": list(d.span) if d.span is not None else None}
        for d in diags
    ]


@dataclass
class SessionDeps:
    """Everything a session needs from the outside world."""

    llm: LlmClient
    generator: SceneGenerator
    docs_index: RetrievalIndex | None = None
    retrieval_k: int = 4
    chunk_size: int = 256
    prompt_budget: int | None = None
    clock_kind: str = "logical"


def build_deps(config: AppConfig) -> SessionDeps:
    llm = build_llm_client(config)
    if config.generator == "simulate":
        generator: SceneGenerator = SimulatedGenerator(seed=config.generator_seed)
    else:
        generator = LiveGenerator(
            workdir=Path(config.sessions_dir) / "live-workdir",
            refine_command=config.generator_refine_command,
        )
    docs_index = None
    if config.corpus_dir:
        docs = retrieval.load_corpus(config.corpus_dir)
        docs_index = retrieval.build_index(docs, chunk_size=config.retrieval.chunk_size)
    return SessionDeps(
        llm=llm,
        generator=generator,
        docs_index=docs_index,
        retrieval_k=config.retrieval.k,
        chunk_size=config.retrieval.chunk_size,
        prompt_budget=config.prompt_budget,
        clock_kind=config.clock,
    )


class Session:
    """One live session: applies operations, appends events, notifies listeners."""

    def __init__(self, session_id: str, directory: str | Path, deps: SessionDeps):
        self.session_id = session_id
        self.directory = Path(directory)
        self.deps = deps
        self.artifacts = self.directory / "artifacts"
        self.artifacts.mkdir(parents=True, exist_ok=True)
        self.journal_path = self.directory / "journal.jsonl"
        self.listeners: list[Callable[[JournalEvent], None]] = []
        self._indexes: dict[str, RetrievalIndex] = {}
        self.events: list[JournalEvent] = []
        self.state = initial_state(session_id)
        if self.journal_path.exists():
            self.events = read_journal(self.journal_path)
            for event in self.events:
                self.state = apply_event(self.state, event)
        start = 0
        if self.events and isinstance(self.events[-1].timestamp, int):
            start = self.events[-1].timestamp + 1
        self._clock = make_clock(deps.clock_kind, start=start)

    # -- journal plumbing --

    def _append(self, kind: str, payload: dict) -> JournalEvent:
        event = JournalEvent(
            seq=self.state.journal_offset + 1,
            timestamp=self._clock(),
            kind=kind,
            payload=payload,
        )
        with self.journal_path.open("a", encoding="utf-8") as handle:
            handle.write(event.to_line() + "\n")
        self.state = apply_event(self.state, event)
        self.events.append(event)
        for listener in list(self.listeners):
            listener(event)
        return event

    def _journal_error(self, err: Exception, fatal: bool) -> None:
        self._append(KIND_ERROR, {
            "code": type(err).__name__, "message": str(err), "fatal": fatal,
        })

    def _require_phase(self, *allowed: Phase) -> None:
        if self.state.phase not in allowed:
            names = ", ".join(p.value for p in allowed)
            raise WrongPhase(
                f"operation requires phase {names}, session is {self.state.phase.value}"
            )

    # -- retrieval helpers --

    def _index_for(self, stage: str) -> RetrievalIndex:
        if stage not in self._indexes:
            ref = self.state.coarse_db if stage == "coarse" else self.state.fine_db
            assert ref is not None
            self._indexes[stage] = retrieval.load_index(self.directory / ref["path"])
        return self._indexes[stage]

    def _scene_context(self, text: str) -> list[tuple[str, Chunk]]:
        tagged: list[tuple[str, list[tuple[Chunk, float]]]] = []
        tagged.append(("coarse", retrieval.query(self._index_for("coarse"), text, self.deps.retrieval_k)))
        if self.state.fine_db is not None:
            tagged.append(("fine", retrieval.query(self._index_for("fine"), text, self.deps.retrieval_k)))
        merged = retrieval.merge_ranked(tagged)
        context = [(hit.database, hit.chunk) for hit in merged]
        if self.state.selection:
            listing = "Selected prim paths:\n" + "\n".join(self.state.selection)
            context.insert(0, ("selection", Chunk(id=0, source_doc="selection",
                                                  start_offset=0, text=listing)))
        return context

    def _complete(self, role: str, prompt_text: str) -> str:
        try:
            return self.deps.llm.complete(role, [("user", prompt_text)])
        except BACKEND_ERRORS as err:
            self._journal_error(err, fatal=False)
            raise

    # -- operations --

    def submit_prompt(self, text: str) -> SessionState:
        self._require_phase(Phase.AWAITING_PROMPT)
        self._append(KIND_USER_PROMPT, {"text": text})
        retrieved: list[tuple[str, Chunk]] = []
        if self.deps.docs_index is not None:
            hits = retrieval.query(self.deps.docs_index, text, self.deps.retrieval_k)
            retrieved = [("docs", chunk) for chunk, _ in hits]
        bundle = prompts.build_codex_prompt(text, retrieved, budget=self.deps.prompt_budget)
        prompt_text = prompts.render_prompt(bundle)
        response = self._complete("codex", prompt_text)
        try:
            line = prompts.extract_command(response)
        except NoCommandFound as err:
            self._journal_error(err, fatal=False)
            raise
        report = check_command(line)
        canonical = None
        if report.executable:
            canonical = canonicalize(parse_command(line))
        self._append(KIND_COMMAND_PROPOSED, {
            "line": line,
            "canonical": canonical,
            "executable": report.executable,
            "errors": _diag_dicts(report.errors),
            "warnings": _diag_dicts(report.warnings),
            "prompt": prompt_text,
            "response": response,
        })
        return self.state

    def approve_command(self) -> SessionState:
        self._require_phase(Phase.COMMAND_PROPOSED)
        proposed = self.state.proposed_command
        assert proposed is not None
        if not proposed["executable"]:
            raise NotExecutable(
                "; ".join(d["message"] for d in proposed["errors"]) or "command not executable"
            )
        command = proposed["canonical"]
        self._append(KIND_COMMAND_APPROVED, {"command": command})
        scene_path = self.artifacts / "scene_coarse.usda"
        try:
            self.deps.generator.generate(command, scene_path)
        except GeneratorFailed as err:
            self._journal_error(err, fatal=True)
            raise
        self._ingest("coarse", scene_path)
        return self.state

    def reject_command(self) -> SessionState:
        self._require_phase(Phase.COMMAND_PROPOSED)
        self._append(KIND_COMMAND_REJECTED, {})
        return self.state

    def _ingest(self, stage: str, scene_path: Path) -> None:
        scene_text = scene_path.read_text(encoding="utf-8")
        tree = usda.parse_usda(scene_text)
        condensed = usda.condense(tree)
        dict_text = usda.to_dictionary_text(condensed)
        prim_paths = [prim.path for prim in tree.iter_prims()]
        index = retrieval.build_index(
            [(f"scene_{stage}", dict_text)], chunk_size=self.deps.chunk_size
        )
        index_path = self.artifacts / f"index_{stage}.json"
        retrieval.save_index(index, index_path)
        self._indexes[stage] = index
        self._append(KIND_SCENE_INGESTED, {
            "stage": stage,
            "scene_path": scene_path.relative_to(self.directory).as_posix(),
            "scene_sha256": _sha256_file(scene_path),
            "index_path": index_path.relative_to(self.directory).as_posix(),
            "index_sha256": _sha256_file(index_path),
            "dict_text": dict_text,
            "prim_paths": prim_paths,
        })

    def submit_edit(self, text: str, selection: list[str] | None = None) -> SessionState:
        self._require_phase(Phase.EDITING_COARSE, Phase.EDITING_FINE)
        selection = list(selection or [])
        unknown = [p for p in selection if p not in self.state.scene_paths]
        if unknown:
            raise UnknownSelectionPath(f"not in current scene: {', '.join(unknown)}")
        if tuple(selection) != self.state.selection:
            self._append(KIND_SELECTION_CHANGED, {"paths": selection})
        stage = "coarse" if self.state.phase == Phase.EDITING_COARSE else "fine"
        context = self._scene_context(text)
        cot_bundle = prompts.build_cot_prompt(text, context, budget=self.deps.prompt_budget)
        cot_prompt = prompts.render_prompt(cot_bundle)
        cot_response = self._complete("planner", cot_prompt)
        try:
            plan = prompts.parse_cot(cot_response)
        except CotError as err:
            self._journal_error(err, fatal=False)
            raise
        code_bundle = prompts.build_code_prompt(plan.output, context, budget=self.deps.prompt_budget)
        code_prompt = prompts.render_prompt(code_bundle)
        code = self._complete("coder", code_prompt)
        self._append(KIND_EDIT_PROPOSED, {
            "stage": stage,
            "plan": dataclasses.asdict(plan),
            "code": code,
            "cot_prompt": cot_prompt,
            "cot_response": cot_response,
            "code_prompt": code_prompt,
        })
        return self.state

    def approve_edit(self) -> SessionState:
        self._require_phase(Phase.EDITING_COARSE, Phase.EDITING_FINE)
        if self.state.pending_edit is None:
            raise NoPendingEdit("no pending edit to approve")
        stage = "coarse" if self.state.phase == Phase.EDITING_COARSE else "fine"
        code = self.state.pending_edit["code"]
        self._append(KIND_EDIT_APPROVED, {"stage": stage})
        if stage == "coarse":
            scene_text = (self.artifacts / "scene_coarse.usda").read_text(encoding="utf-8")
            out_path = self.artifacts / "scene_fine.usda"
            try:
                self.deps.generator.refine(scene_text, code, out_path)
            except GeneratorFailed as err:
                self._journal_error(err, fatal=True)
                raise
            self._ingest("fine", out_path)
        return self.state

    def reject_edit(self) -> SessionState:
        self._require_phase(Phase.EDITING_COARSE, Phase.EDITING_FINE)
        if self.state.pending_edit is None:
            raise NoPendingEdit("no pending edit to reject")
        self._append(KIND_EDIT_REJECTED, {})
        return self.state

    def request_render(self) -> SessionState:
        self._require_phase(Phase.RENDER_QUEUED)
        command = self.state.approved_command
        assert command is not None
        try:
            self.deps.generator.render(command)
        except GeneratorFailed as err:
            self._journal_error(err, fatal=True)
            raise
        self._append(KIND_RENDER_REQUESTED, {"command": command})
        return self.state


def run_script(
    config: AppConfig,
    script: dict | list,
    deps: SessionDeps | None = None,
) -> Session:
    """Headless scripted session for CI and demos.

    The script is either a list of steps or {"session_id": ..., "steps":
    [...]}; each step is {"op": name, ...op arguments}.
    """
    if isinstance(script, list):
        session_id, steps = "scripted", script
    else:
        session_id = script.get("session_id", "scripted")
        steps = script["steps"]
    deps = deps or build_deps(config)
    session = Session(session_id, Path(config.sessions_dir) / session_id, deps)
    for step in steps:
        op = step["op"]
        if op == "prompt":
            session.submit_prompt(step["text"])
        elif op == "approve_command":
            session.approve_command()
        elif op == "reject_command":
            session.reject_command()
        elif op == "edit":
            session.submit_edit(step["text"], step.get("selection"))
        elif op == "approve_edit":
            session.approve_edit()
        elif op == "reject_edit":
            session.reject_edit()
        elif op == "render":
            session.request_render()
        else:
            raise ValueError(f"unknown script op {op!r}")
    return session
