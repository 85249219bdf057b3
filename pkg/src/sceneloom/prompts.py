"""Prompt assembly and response parsing for the two LLM roles.

Command synthesis gets a system template, labeled retrieved-context sections,
description/command example pairs, and the request. Scene editing runs in two
stages: a step-planning prompt whose response follows a tagged reasoning
format, then a code prompt embedding the extracted steps. Templates are
external files so prompt text changes never touch code.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .grammar import check_command, load_grammar
from .retrieval import Chunk

TEMPLATE_NAMES = ("codex_system", "cot_system", "code_system")

THINKING_OPEN = "<thinking>"
REFLECTION_OPEN = "<reflection>"
REFLECTION_CLOSE = "</reflection>"
THINKING_CLOSE = "</thinking>"
OUTPUT_OPEN = "<output>"
OUTPUT_CLOSE = "</output>"


class BudgetTooSmall(ValueError):
    """System + examples + request alone exceed the token budget."""


class NoCommandFound(ValueError):
    """Response contains no line starting with the documented invocation."""


class EmptySteps(ValueError):
    """Code prompt requested with no plan steps."""


class CotError(ValueError):
    """Base class for tagged-response parse failures."""


class MissingOutputTag(CotError):
    pass


class UnbalancedTags(CotError):
    pass


class EmptyOutput(CotError):
    pass


@dataclass(frozen=True)
class FewShotPair:
    description: str
    command: str


@dataclass
class PromptBundle:
    system: str
    context_chunks: list[tuple[str, Chunk]] = field(default_factory=list)
    few_shots: list[FewShotPair] = field(default_factory=list)
    user_input: str = ""
    role: str = "codex"  # codex | cot | code


@dataclass(frozen=True)
class CotResponse:
    thinking: str
    reflection: str
    adjustments: str
    output: str


_template_cache: dict[str, dict[str, str]] = {}


def load_templates(directory: str | Path | None = None) -> dict[str, str]:
    """Read the prompt templates once; bundled files when no directory given."""
    key = "bundled" if directory is None else str(Path(directory).resolve())
    if key in _template_cache:
        return _template_cache[key]
    templates = {}
    for name in TEMPLATE_NAMES:
        if directory is None:
            raw = (
                resources.files("sceneloom.data")
                .joinpath(f"templates/{name}.txt")
                .read_text("utf-8")
            )
        else:
            raw = (Path(directory) / f"{name}.txt").read_text("utf-8")
        templates[name] = raw.rstrip("\n")
    _template_cache[key] = templates
    return templates


def load_few_shots(path: str | Path | None = None) -> list[FewShotPair]:
    """Load example pairs; every command must parse under the grammar."""
    if path is None:
        raw = resources.files("sceneloom.data").joinpath("few_shots.json").read_text("utf-8")
    else:
        raw = Path(path).read_text("utf-8")
    data = json.loads(raw)
    pairs = []
    for entry in data["pairs"]:
        command = entry["command"]
        report = check_command(command)
        if not report.executable:
            raise ValueError(
                f"few-shot command fails validation: {command!r}: "
                + "; ".join(d.message for d in report.errors)
            )
        pairs.append(FewShotPair(description=entry["description"], command=command))
    return pairs


def count_tokens(text: str) -> int:
    """Whitespace tokens; the budget unit everywhere in this module."""
    return len(text.split())


def render_prompt(bundle: PromptBundle) -> str:
    parts = [bundle.system]
    for tag, chunk in bundle.context_chunks:
        parts.append(f"## Context [{tag}]\n{chunk.text.strip()}")
    if bundle.few_shots:
        shots = "\n\n".join(
            f"Description: {pair.description}\nCommand: {pair.command}"
            for pair in bundle.few_shots
        )
        parts.append(f"## Examples\n{shots}")
    label = "## Steps" if bundle.role == "code" else "## Request"
    parts.append(f"{label}\n{bundle.user_input}")
    return "\n\n".join(parts)


def _fit_budget(bundle: PromptBundle, budget: int | None) -> PromptBundle:
    """Drop lowest-ranked chunks (from the tail) until the render fits."""
    if budget is None:
        return bundle
    chunks = bundle.context_chunks
    for keep in range(len(chunks), -1, -1):
        bundle.context_chunks = chunks[:keep]
        if count_tokens(render_prompt(bundle)) <= budget:
            return bundle
    raise BudgetTooSmall(
        f"budget {budget} cannot fit the prompt even with zero context chunks"
    )


def build_codex_prompt(
    user_input: str,
    retrieved: list[tuple[str, Chunk]],
    few_shots: list[FewShotPair] | None = None,
    budget: int | None = None,
    templates: dict[str, str] | None = None,
) -> PromptBundle:
    templates = templates or load_templates()
    bundle = PromptBundle(
        system=templates["codex_system"],
        context_chunks=list(retrieved),
        few_shots=load_few_shots() if few_shots is None else list(few_shots),
        user_input=user_input,
        role="codex",
    )
    return _fit_budget(bundle, budget)


def build_cot_prompt(
    user_input: str,
    scene_context: list[tuple[str, Chunk]],
    budget: int | None = None,
    templates: dict[str, str] | None = None,
) -> PromptBundle:
    templates = templates or load_templates()
    bundle = PromptBundle(
        system=templates["cot_system"],
        context_chunks=list(scene_context),
        user_input=user_input,
        role="cot",
    )
    return _fit_budget(bundle, budget)


def build_code_prompt(
    steps: str,
    scene_context: list[tuple[str, Chunk]],
    budget: int | None = None,
    templates: dict[str, str] | None = None,
) -> PromptBundle:
    if not steps.strip():
        raise EmptySteps("cannot build a code prompt from empty steps")
    templates = templates or load_templates()
    bundle = PromptBundle(
        system=templates["code_system"],
        context_chunks=list(scene_context),
        user_input=steps,
        role="code",
    )
    return _fit_budget(bundle, budget)


def extract_command(llm_response: str) -> str:
    """First line whose leading tokens equal the documented invocation head.

    Markdown fence lines are skipped; the matched line is returned with
    surrounding whitespace trimmed.
    """
    head = load_grammar().invocation
    for line in llm_response.splitlines():
        stripped = line.strip()
        if stripped.startswith("```"):
            continue
        if tuple(stripped.split()[: len(head)]) == head:
            return stripped
    raise NoCommandFound("no command line found in response")


def parse_cot(response: str) -> CotResponse:
    """Extract the four regions of the documented tagged format.

    Tags are located by a strictly sequential scan, so stray angle-bracket
    text inside a region never matches a later tag. Output tags are checked
    before the thinking/reflection tags: a response missing both kinds
    reports MissingOutputTag.
    """
    order = (
        THINKING_OPEN,
        REFLECTION_OPEN,
        REFLECTION_CLOSE,
        THINKING_CLOSE,
        OUTPUT_OPEN,
        OUTPUT_CLOSE,
    )
    positions = []
    pos = 0
    for tag in order:
        found = response.find(tag, pos)
        positions.append(found)
        if found >= 0:
            pos = found + len(tag)
    if positions[4] < 0 or positions[5] < 0:
        raise MissingOutputTag("response lacks a complete <output> section")
    if any(p < 0 for p in positions[:4]):
        raise UnbalancedTags("thinking/reflection tags missing or out of order")
    cot = CotResponse(
        thinking=response[positions[0] + len(THINKING_OPEN) : positions[1]].strip(),
        reflection=response[positions[1] + len(REFLECTION_OPEN) : positions[2]].strip(),
        adjustments=response[positions[2] + len(REFLECTION_CLOSE) : positions[3]].strip(),
        output=response[positions[4] + len(OUTPUT_OPEN) : positions[5]].strip(),
    )
    if not cot.output:
        raise EmptyOutput("output section is empty")
    return cot


def render_cot(cot: CotResponse) -> str:
    """The documented response skeleton; inverse of parse_cot on its image."""
    return (
        f"{THINKING_OPEN}\n{cot.thinking}\n"
        f"{REFLECTION_OPEN}\n{cot.reflection}\n{REFLECTION_CLOSE}\n"
        f"{cot.adjustments}\n{THINKING_CLOSE}\n"
        f"{OUTPUT_OPEN}\n{cot.output}\n{OUTPUT_CLOSE}"
    )
