"""Parsing and condensation of ASCII scene description (.usda) files.

Covers a pragmatic subset of the format: ``def``/``over`` prim blocks,
typed attribute lines, bare metadata lines, and nested children. Numeric
attribute payloads can be split off into a sidecar map, leaving a ``NUM``
placeholder in the tree, and applied back for lossless recovery.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from typing import Callable, Iterator


class UsdaError(Exception):
    """Base class for scene-description parse errors."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class UnbalancedBraces(UsdaError):
    """Mismatched block delimiters."""


class MalformedAttribute(UsdaError):
    """Attribute line matching neither `type name = value` nor a metadata line."""


class DuplicatePrimPath(UsdaError):
    """Two sibling prims share a name, so their paths collide."""


@dataclass
class AttributeEntry:
    """One attribute line. ``declared_type`` is empty for bare metadata lines."""

    name: str
    declared_type: str
    value: str


@dataclass
class ScenePrim:
    path: str
    prim_type: str
    specifier: str = "def"
    attributes: list[AttributeEntry] = field(default_factory=list)
    children: list[ScenePrim] = field(default_factory=list)

    @property
    def name(self) -> str:
        return self.path.rsplit("/", 1)[-1]


@dataclass
class SceneTree:
    """Parsed scene: verbatim header lines plus the root prim list."""

    header: list[str] = field(default_factory=list)
    prims: list[ScenePrim] = field(default_factory=list)

    def iter_prims(self) -> Iterator[ScenePrim]:
        """Depth-first, document order."""
        stack = list(reversed(self.prims))
        while stack:
            prim = stack.pop()
            yield prim
            stack.extend(reversed(prim.children))

    def paths(self) -> list[str]:
        return [p.path for p in self.iter_prims()]


@dataclass
class CondensedScene:
    """Tree with numeric payloads replaced by ``NUM`` plus the recovery sidecar."""

    tree: SceneTree
    sidecar: dict[tuple[str, str], str]


NUM_TOKEN = "NUM"

_PRIM_HEADER_RE = re.compile(r'^(def|over)(?:\s+([\w:]+))?\s+"([^"]+)"\s*(\{)?\s*$')
_NUMBER_RE = re.compile(r"^[+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?$")


def _scan_brackets(text: str, depth: int) -> int:
    """Update round/square bracket depth, ignoring quoted spans."""
    in_string = False
    escaped = False
    for ch in text:
        if escaped:
            escaped = False
            continue
        if ch == "\\":
            escaped = True
            continue
        if ch == '"':
            in_string = not in_string
            continue
        if in_string:
            continue
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
    return depth


def _split_assignment(text: str) -> tuple[str, str] | None:
    """Split on the first ``=`` outside quotes; None when there is none."""
    in_string = False
    escaped = False
    for i, ch in enumerate(text):
        if escaped:
            escaped = False
            continue
        if ch == "\\":
            escaped = True
            continue
        if ch == '"':
            in_string = not in_string
            continue
        if ch == "=" and not in_string:
            return text[:i], text[i + 1 :]
    return None


def is_numeric_payload(value: str) -> bool:
    """True when the whole payload is a number, vector, matrix, or numeric array.

    Quoted content disqualifies the payload; numbers inside strings stay put.
    """
    if '"' in value:
        return False
    tokens = re.sub(r"[()\[\],]", " ", value).split()
    return bool(tokens) and all(_NUMBER_RE.match(t) for t in tokens)


def parse_usda(source: str) -> SceneTree:
    """Parse ``.usda`` text into a prim tree.

    Raises UnbalancedBraces for mismatched block delimiters, MalformedAttribute
    for unparseable attribute lines, DuplicatePrimPath for colliding paths.
    """
    lines = source.split("\n")
    tree = SceneTree()
    stack: list[tuple[ScenePrim, int]] = []  # (prim, header line number)
    in_header = True
    pending_prim: tuple[ScenePrim, int] | None = None  # header seen, `{` not yet

    i = 0
    n = len(lines)
    while i < n:
        raw = lines[i]
        lineno = i + 1
        line = raw.strip()
        i += 1

        if pending_prim is not None:
            if not line:
                continue
            if line != "{":
                raise UnbalancedBraces(
                    f"expected '{{' after prim header for {pending_prim[0].path!r}",
                    lineno,
                )
            stack.append(pending_prim)
            pending_prim = None
            continue

        header_match = _PRIM_HEADER_RE.match(line)
        if header_match:
            in_header = False
            specifier, prim_type, name, brace = header_match.groups()
            parent_path = stack[-1][0].path if stack else ""
            path = f"{parent_path}/{name}"
            prim = ScenePrim(path=path, prim_type=prim_type or "", specifier=specifier)
            siblings = stack[-1][0].children if stack else tree.prims
            if any(sib.path == path for sib in siblings):
                raise DuplicatePrimPath(f"duplicate prim path {path!r}", lineno)
            siblings.append(prim)
            if brace:
                stack.append((prim, lineno))
            else:
                pending_prim = (prim, lineno)
            continue

        if in_header:
            tree.header.append(raw)
            continue

        if not line or line.startswith("#"):
            continue

        if line == "}":
            if not stack:
                raise UnbalancedBraces("unexpected '}'", lineno)
            stack.pop()
            continue

        if not stack:
            raise MalformedAttribute(
                f"content outside any prim block: {line!r}", lineno
            )

        # Attribute line; values may continue over lines while brackets are open.
        depth = _scan_brackets(line, 0)
        parts = [line]
        start_line = lineno
        while depth > 0 and i < n:
            cont = lines[i].strip()
            i += 1
            depth = _scan_brackets(cont, depth)
            parts.append(cont)
        if depth != 0:
            raise MalformedAttribute("unterminated attribute value", start_line)
        joined = " ".join(p for p in parts if p)

        split = _split_assignment(joined)
        if split is None:
            raise MalformedAttribute(f"no '=' in attribute line: {line!r}", start_line)
        lhs, rhs = split
        lhs_tokens = lhs.split()
        value = rhs.strip()
        if not lhs_tokens or not value:
            raise MalformedAttribute(f"bad attribute line: {line!r}", start_line)
        if len(lhs_tokens) == 1:
            entry = AttributeEntry(name=lhs_tokens[0], declared_type="", value=value)
        else:
            entry = AttributeEntry(
                name=lhs_tokens[-1],
                declared_type=" ".join(lhs_tokens[:-1]),
                value=value,
            )
        prim = stack[-1][0]
        if any(a.name == entry.name for a in prim.attributes):
            raise MalformedAttribute(
                f"duplicate attribute {entry.name!r} in prim {prim.path!r}", start_line
            )
        prim.attributes.append(entry)

    if pending_prim is not None:
        raise UnbalancedBraces(
            f"missing '{{' for prim {pending_prim[0].path!r}", pending_prim[1]
        )
    if stack:
        raise UnbalancedBraces(
            f"unclosed block for prim {stack[-1][0].path!r}", stack[-1][1]
        )

    # Strip trailing blank header lines so serialize/parse round-trips.
    while tree.header and not tree.header[-1].strip():
        tree.header.pop()
    return tree


def _serialize_prim(prim: ScenePrim, depth: int, out: list[str]) -> None:
    indent = "    " * depth
    if prim.prim_type:
        out.append(f'{indent}{prim.specifier} {prim.prim_type} "{prim.name}"')
    else:
        out.append(f'{indent}{prim.specifier} "{prim.name}"')
    out.append(f"{indent}{{")
    body = "    " * (depth + 1)
    for attr in prim.attributes:
        if attr.declared_type:
            out.append(f"{body}{attr.declared_type} {attr.name} = {attr.value}")
        else:
            out.append(f"{body}{attr.name} = {attr.value}")
    for child in prim.children:
        out.append("")
        _serialize_prim(child, depth + 1, out)
    out.append(f"{indent}}}")


def serialize_usda(tree: SceneTree) -> str:
    """Canonical text form; ``parse_usda(serialize_usda(t)) == t``."""
    out: list[str] = list(tree.header)
    for prim in tree.prims:
        if out:
            out.append("")
        _serialize_prim(prim, 0, out)
    return "\n".join(out) + ("\n" if out else "")


def _copy_prim(prim: ScenePrim) -> ScenePrim:
    return ScenePrim(
        path=prim.path,
        prim_type=prim.prim_type,
        specifier=prim.specifier,
        attributes=[
            AttributeEntry(a.name, a.declared_type, a.value) for a in prim.attributes
        ],
        children=[_copy_prim(c) for c in prim.children],
    )


def _copy_tree(tree: SceneTree) -> SceneTree:
    return SceneTree(header=list(tree.header), prims=[_copy_prim(p) for p in tree.prims])


def condense(tree: SceneTree) -> CondensedScene:
    """Replace every numeric attribute payload with ``NUM``, keeping a sidecar.

    Total on parsed trees: non-numeric values (strings, tokens, booleans)
    pass through untouched and get no sidecar entry.
    """
    copied = _copy_tree(tree)
    sidecar: dict[tuple[str, str], str] = {}
    for prim in copied.iter_prims():
        for attr in prim.attributes:
            if is_numeric_payload(attr.value):
                sidecar[(prim.path, attr.name)] = attr.value
                attr.value = NUM_TOKEN
    return CondensedScene(tree=copied, sidecar=sidecar)


def rehydrate(scene: CondensedScene) -> SceneTree:
    """Apply sidecar values back; inverse of :func:`condense`."""
    restored = _copy_tree(scene.tree)
    for prim in restored.iter_prims():
        for attr in prim.attributes:
            if attr.value == NUM_TOKEN:
                original = scene.sidecar.get((prim.path, attr.name))
                if original is not None:
                    attr.value = original
    return restored


def to_dictionary_text(
    scene: CondensedScene, post_pass: Callable[[str], str] | None = None
) -> str:
    """Render the condensed tree as deterministic dictionary text.

    Prim paths map to their attribute name/value maps, in document order.
    ``post_pass``, when given, is applied to the rendered text (hook for an
    external cleanup model); the default render is purely rule-based.
    """
    mapping = {
        prim.path: {attr.name: attr.value for attr in prim.attributes}
        for prim in scene.tree.iter_prims()
    }
    text = json.dumps(mapping, indent=2)
    if post_pass is not None:
        text = post_pass(text)
    return text


def _escape_field(value: str) -> str:
    return value.replace("\\", "\\\\").replace("\t", "\\t").replace("\n", "\\n")


def _unescape_field(value: str) -> str:
    out: list[str] = []
    i = 0
    while i < len(value):
        ch = value[i]
        if ch == "\\" and i + 1 < len(value):
            nxt = value[i + 1]
            out.append({"t": "\t", "n": "\n", "\\": "\\"}.get(nxt, nxt))
            i += 2
        else:
            out.append(ch)
            i += 1
    return "".join(out)


def dump_sidecar(scene: CondensedScene) -> str:
    """Line-oriented ``path<TAB>attribute<TAB>value`` rendering, document order."""
    lines = []
    for prim in scene.tree.iter_prims():
        for attr in prim.attributes:
            key = (prim.path, attr.name)
            if key in scene.sidecar:
                lines.append(
                    "\t".join(
                        (prim.path, attr.name, _escape_field(scene.sidecar[key]))
                    )
                )
    return "\n".join(lines) + ("\n" if lines else "")


def load_sidecar(text: str) -> dict[tuple[str, str], str]:
    sidecar: dict[tuple[str, str], str] = {}
    for line in text.splitlines():
        if not line:
            continue
        path, name, value = line.split("\t", 2)
        sidecar[(path, name)] = _unescape_field(value)
    return sidecar
