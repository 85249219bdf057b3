"""Scene generator boundary: simulated synthetic scenes or a live subprocess.

The simulator emits a deterministic USDA scene (terrain, camera, creatures)
seeded from the command text, preserving the pipeline's data flow without
running the real generator. The live variant shells out and never executes
edit code itself; code is passed to the refine hook as a file argument.
"""

from __future__ import annotations

import hashlib
import random
import shlex
import subprocess
from dataclasses import dataclass
from pathlib import Path
from typing import Protocol


class GeneratorFailed(RuntimeError):
    pass


class SceneGenerator(Protocol):
    def generate(self, command: str, out_path: Path) -> None: ...

    def refine(self, scene_text: str, edit_code: str, out_path: Path) -> None: ...

    def render(self, command: str) -> None: ...


_CREATURES = ["Snake", "Carnivore", "Herbivore", "Bird", "Beetle"]
_SCATTER = ["Rock", "Bush", "Log", "Mushroom"]


def _fmt(value: float) -> str:
    return f"{value:.4f}".rstrip("0").rstrip(".")


def _matrix(rng: random.Random) -> str:
    rows = []
    for axis in range(3):
        row = [0.0, 0.0, 0.0, 0.0]
        row[axis] = round(rng.uniform(0.5, 2.0), 4)
        rows.append(row)
    tx, ty, tz = (round(rng.uniform(-40.0, 40.0), 4) for _ in range(3))
    rows.append([tx, ty, tz, 1.0])
    cells = ", ".join("(" + ", ".join(_fmt(v) for v in row) + ")" for row in rows)
    return f"( {cells} )"


def emit_scene(rng: random.Random, detail: int = 1) -> str:
    """Synthetic USDA scene with parameterized terrain, camera, creatures."""
    lines = ["#usda 1.0", ""]
    lines.append('def Xform "World"')
    lines.append("{")
    lines.append('    def Mesh "Terrain"')
    lines.append("    {")
    lines.append(f"        int resolution = {rng.randrange(64, 1024)}")
    lines.append(
        f"        float2 heightRange = ({_fmt(rng.uniform(-10, 0))}, {_fmt(rng.uniform(1, 40))})"
    )
    lines.append(
        f"        double3 size = ({rng.randrange(50, 400)}, {rng.randrange(50, 400)}, {rng.randrange(10, 80)})"
    )
    lines.append(f'        token surface = "{rng.choice(["sand", "snow", "soil", "rock"])}"')
    lines.append("    }")
    lines.append('    def Camera "Camera"')
    lines.append("    {")
    lines.append(f"        float focalLength = {_fmt(rng.choice([24.0, 35.0, 50.0, 85.0]))}")
    lines.append(f"        float horizontalAperture = {_fmt(rng.uniform(20.0, 36.0))}")
    lines.append(
        f"        float2 clippingRange = ({_fmt(rng.uniform(0.01, 0.2))}, {rng.randrange(1000, 100000)})"
    )
    lines.append(f"        matrix4d xformOp:transform = {_matrix(rng)}")
    lines.append('        uniform token[] xformOpOrder = ["xformOp:transform"]')
    lines.append("    }")
    n_creatures = rng.randrange(1, 3 + detail)
    for idx in range(n_creatures):
        name = f"{rng.choice(_CREATURES)}_{idx:03d}"
        lines.append(f'    def Xform "{name}"')
        lines.append("    {")
        lines.append(f"        matrix4d xformOp:transform = {_matrix(rng)}")
        lines.append('        uniform token[] xformOpOrder = ["xformOp:transform"]')
        lines.append(f"        custom float speed = {_fmt(rng.uniform(0.1, 5.0))}")
        lines.append("    }")
    for idx in range(rng.randrange(0, 2 + 2 * detail)):
        name = f"{rng.choice(_SCATTER)}_{idx:03d}"
        lines.append(f'    def Mesh "{name}"')
        lines.append("    {")
        lines.append(f"        matrix4d xformOp:transform = {_matrix(rng)}")
        lines.append(f"        float scale = {_fmt(rng.uniform(0.2, 3.0))}")
        lines.append("    }")
    lines.append("}")
    return "\n".join(lines) + "\n"


@dataclass
class SimulatedGenerator:
    """Deterministic stand-in: scene content is a pure function of inputs."""

    seed: int = 7

    def generate(self, command: str, out_path: Path) -> None:
        rng = random.Random(f"{self.seed}\x00{command}")
        out_path.parent.mkdir(parents=True, exist_ok=True)
        out_path.write_text(emit_scene(rng, detail=1), encoding="utf-8")

    def refine(self, scene_text: str, edit_code: str, out_path: Path) -> None:
        digest = hashlib.sha256(
            scene_text.encode("utf-8") + b"\x00" + edit_code.encode("utf-8")
        ).hexdigest()
        rng = random.Random(f"{self.seed}\x00{digest}")
        out_path.parent.mkdir(parents=True, exist_ok=True)
        out_path.write_text(emit_scene(rng, detail=2), encoding="utf-8")

    def render(self, command: str) -> None:
        pass


@dataclass
class LiveGenerator:
    """Runs the canonical command as a subprocess and collects its scene file.

    refine_command is a shell template with {scene} {code} {out}
    placeholders; the edit code is written to a file and passed by path.
    """

    workdir: Path
    scene_glob: str = "**/*.usda"
    refine_command: str | None = None
    timeout: float = 3600.0

    def _run(self, argv: list[str]) -> None:
        try:
            proc = subprocess.run(
                argv, cwd=self.workdir, capture_output=True, text=True, timeout=self.timeout
            )
        except (OSError, subprocess.TimeoutExpired) as err:
            raise GeneratorFailed(f"generator could not run: {err}") from err
        if proc.returncode != 0:
            tail = (proc.stderr or proc.stdout or "").strip()[-500:]
            raise GeneratorFailed(f"generator exited {proc.returncode}: {tail}")

    def generate(self, command: str, out_path: Path) -> None:
        self.workdir.mkdir(parents=True, exist_ok=True)
        self._run(shlex.split(command))
        candidates = sorted(
            self.workdir.glob(self.scene_glob), key=lambda p: (p.stat().st_mtime, str(p))
        )
        if not candidates:
            raise GeneratorFailed(f"no scene matching {self.scene_glob!r} under {self.workdir}")
        out_path.parent.mkdir(parents=True, exist_ok=True)
        out_path.write_text(candidates[-1].read_text(encoding="utf-8"), encoding="utf-8")

    def refine(self, scene_text: str, edit_code: str, out_path: Path) -> None:
        if not self.refine_command:
            raise GeneratorFailed("no refine command configured for live generator")
        self.workdir.mkdir(parents=True, exist_ok=True)
        scene_file = self.workdir / "refine_input.usda"
        code_file = self.workdir / "refine_edit.py"
        scene_file.write_text(scene_text, encoding="utf-8")
        code_file.write_text(edit_code, encoding="utf-8")
        command = self.refine_command.format(
            scene=str(scene_file), code=str(code_file), out=str(out_path)
        )
        self._run(shlex.split(command))
        if not out_path.is_file():
            raise GeneratorFailed(f"refine command produced no file at {out_path}")

    def render(self, command: str) -> None:
        self._run(shlex.split(command))
