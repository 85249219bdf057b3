"""Shared helpers for driving scripted sessions in tests."""

from sceneloom.config import DEFAULT_MODELS
from sceneloom.llm import (
    LlmClient,
    ModelRouter,
    RecordingBackend,
    ReplayBackend,
    ReplayStore,
    ScriptedBackend,
)
from sceneloom.prompts import CotResponse, render_cot
from sceneloom.scenegen import SimulatedGenerator
from sceneloom.session import SessionDeps

VALID_COMMAND = (
    "python -m Infinigen.datagen.manage_jobs --output_folder outputs/demo "
    "--num_scenes 1 --configs desert.gin --pipeline_configs local_16GB.gin"
)

COT_ONE = render_cot(CotResponse(
    thinking="The camera should follow the selected creature.",
    reflection="A tracking constraint is steadier than keyframing.",
    adjustments="Use a Track To constraint on the camera.",
    output="1. Select the camera object.\n2. Add a Track To constraint targeting the creature.",
))
CODE_ONE = "import bpy\ncam = bpy.data.objects['Camera']\n"

COT_TWO = render_cot(CotResponse(
    thinking="The fine scene wants denser ground cover.",
    reflection="Instance count must stay within budget.",
    adjustments="Cap scatter instances at 2000.",
    output="1. Raise scatter density to 0.8.\n2. Re-seed the scatter system.",
))
CODE_TWO = "import bpy\nscatter = bpy.data.objects.get('Bush_000')\n"

FULL_RESPONSES = [VALID_COMMAND, COT_ONE, CODE_ONE, COT_TWO, CODE_TWO]

FULL_SCRIPT = {
    "session_id": "scripted",
    "steps": [
        {"op": "prompt", "text": "A desert scene with a snake"},
        {"op": "approve_command"},
        {"op": "edit", "text": "Make the camera follow the snake",
         "selection": ["/World/Camera"]},
        {"op": "approve_edit"},
        {"op": "edit", "text": "Add more ground cover"},
        {"op": "approve_edit"},
        {"op": "render"},
    ],
}


def scripted_deps(responses, seed=7, **overrides):
    """Deps whose LLM plays back the given responses in order."""
    backend = ScriptedBackend(responses=list(responses))
    return SessionDeps(
        llm=LlmClient(backend=backend, router=ModelRouter(models=dict(DEFAULT_MODELS))),
        generator=SimulatedGenerator(seed=seed),
        **overrides,
    )


def recording_deps(responses, store=None, seed=7, **overrides):
    """Like scripted_deps but records fingerprints into a replay store."""
    store = store if store is not None else ReplayStore()
    backend = RecordingBackend(inner=ScriptedBackend(responses=list(responses)), store=store)
    deps = SessionDeps(
        llm=LlmClient(backend=backend, router=ModelRouter(models=dict(DEFAULT_MODELS))),
        generator=SimulatedGenerator(seed=seed),
        **overrides,
    )
    return deps, store


def replay_deps(store, seed=7, **overrides):
    return SessionDeps(
        llm=LlmClient(backend=ReplayBackend(store=store), router=ModelRouter(models=dict(DEFAULT_MODELS))),
        generator=SimulatedGenerator(seed=seed),
        **overrides,
    )
