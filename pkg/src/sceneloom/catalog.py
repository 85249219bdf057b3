"""Procedural asset catalog: manifest, search, ingestion, source selection.

Records live in a JSONL manifest next to their code files. Search reuses the
lexical scorer from the retrieval module over name+description+category.
When a request arrives, a Gaussian-CDF probability over best-match
similarity decides between serving a catalog asset and calling the external
text-to-3D client.
"""

from __future__ import annotations

import json
import math
import random
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Protocol

from filelock import FileLock

from . import retrieval

CATEGORIES = (
    "Indoors",
    "Outdoors",
    "Terrain",
    "Rocks",
    "Plants",
    "Trees",
    "Weather",
    "Foods",
    "Scattering",
    "Materials",
)

DEFAULT_LICENSE = "CC-BY-4.0"
DEFAULT_MU = 0.5
DEFAULT_SIGMA = 0.15

_QUERY_DOC = "__query__"
_SLUG_RE = re.compile(r"[^a-z0-9]+")


class BadCategory(ValueError):
    pass


class MissingCodeFile(FileNotFoundError):
    pass


class DuplicateId(ValueError):
    pass


class UnreadableFile(OSError):
    pass


@dataclass(frozen=True)
class AssetRecord:
    id: str
    name: str
    category: str
    description: str
    code_path: str  # relative to the manifest directory
    license: str = DEFAULT_LICENSE
    source_url: str | None = None


@dataclass
class Catalog:
    records: list[AssetRecord] = field(default_factory=list)
    root: Path | None = None  # manifest directory
    manifest_path: Path | None = None

    def by_id(self, asset_id: str) -> AssetRecord | None:
        for record in self.records:
            if record.id == asset_id:
                return record
        return None

    def category_counts(self) -> dict[str, int]:
        counts = {c: 0 for c in CATEGORIES}
        for record in self.records:
            counts[record.category] += 1
        return counts


@dataclass(frozen=True)
class SelectionPolicy:
    mu: float = DEFAULT_MU
    sigma: float = DEFAULT_SIGMA
    seed: int = 0

    def __post_init__(self):
        if self.sigma <= 0:
            raise ValueError("sigma must be positive")


@dataclass(frozen=True)
class SourceDecision:
    kind: str  # "dataset" | "external"
    similarity: float
    p_dataset: float
    draw: float
    record: AssetRecord | None = None
    prompt: str | None = None


def normal_cdf(z: float) -> float:
    """Standard normal CDF via the error function."""
    return 0.5 * (1.0 + math.erf(z / math.sqrt(2.0)))


def _record_from_json(line: str, lineno: int) -> AssetRecord:
    data = json.loads(line)
    if data.get("category") not in CATEGORIES:
        raise BadCategory(f"line {lineno}: unknown category {data.get('category')!r}")
    return AssetRecord(
        id=data["id"],
        name=data["name"],
        category=data["category"],
        description=data["description"],
        code_path=data["code_path"],
        license=data.get("license", DEFAULT_LICENSE),
        source_url=data.get("source_url"),
    )


def _record_to_json(record: AssetRecord) -> str:
    data = {
        "id": record.id,
        "name": record.name,
        "category": record.category,
        "description": record.description,
        "code_path": record.code_path,
        "license": record.license,
    }
    if record.source_url is not None:
        data["source_url"] = record.source_url
    return json.dumps(data, sort_keys=True, ensure_ascii=True)


def load_catalog(manifest: str | Path) -> Catalog:
    """Read and validate a JSONL manifest; code files must exist."""
    manifest = Path(manifest)
    root = manifest.parent
    records: list[AssetRecord] = []
    seen: set[str] = set()
    for lineno, line in enumerate(manifest.read_text(encoding="utf-8").splitlines(), 1):
        if not line.strip():
            continue
        record = _record_from_json(line, lineno)
        if record.id in seen:
            raise DuplicateId(f"line {lineno}: duplicate asset id {record.id!r}")
        seen.add(record.id)
        if not (root / record.code_path).is_file():
            raise MissingCodeFile(f"line {lineno}: missing code file {record.code_path!r}")
        records.append(record)
    return Catalog(records=records, root=root, manifest_path=manifest)


def save_catalog(catalog: Catalog, manifest: str | Path | None = None) -> Path:
    """Atomic manifest rewrite: write a temp file, then rename over the target."""
    path = Path(manifest) if manifest is not None else catalog.manifest_path
    if path is None:
        raise ValueError("no manifest path to save to")
    text = "".join(_record_to_json(r) + "\n" for r in catalog.records)
    lock = FileLock(str(path) + ".lock")
    with lock:
        tmp = path.with_suffix(path.suffix + ".tmp")
        tmp.write_text(text, encoding="utf-8")
        tmp.replace(path)
    catalog.manifest_path = path
    catalog.root = path.parent
    return path


def _search_index(catalog: Catalog) -> retrieval.RetrievalIndex:
    docs = [
        (record.id, f"{record.name} {record.description} {record.category}")
        for record in sorted(catalog.records, key=lambda r: r.id)
    ]
    # one chunk per record: ranking ties then break by ascending record id
    return retrieval.build_index(docs, chunk_size=10**6)


def search_assets(
    catalog: Catalog, query: str, k: int
) -> list[tuple[AssetRecord, float]]:
    index = _search_index(catalog)
    hits = retrieval.query(index, query, k)
    return [(catalog.by_id(chunk.source_doc), score) for chunk, score in hits]


def _best_similarity(catalog: Catalog, query: str) -> tuple[float, AssetRecord | None]:
    """Best-match score normalized by the query's own score as a document."""
    if not catalog.records:
        return 0.0, None
    docs = [
        (record.id, f"{record.name} {record.description} {record.category}")
        for record in sorted(catalog.records, key=lambda r: r.id)
    ]
    docs.append((_QUERY_DOC, query))
    index = retrieval.build_index(docs, chunk_size=10**6)
    best_score = 0.0
    best_id: str | None = None
    self_score = 0.0
    for chunk, score in retrieval.query(index, query, len(docs)):
        if chunk.source_doc == _QUERY_DOC:
            self_score = score
        elif best_id is None:
            best_score, best_id = score, chunk.source_doc
    if best_id is None or self_score <= 0.0:
        return 0.0, None
    similarity = min(1.0, max(0.0, best_score / self_score))
    return similarity, catalog.by_id(best_id)


def select_source(catalog: Catalog, query: str, policy: SelectionPolicy) -> SourceDecision:
    """Gaussian-CDF gate between the catalog and external mesh generation.

    p_dataset = Phi((similarity - mu) / sigma); a uniform draw seeded from
    the policy decides. An empty catalog forces the external route with
    p_dataset = 0.
    """
    draw = random.Random(policy.seed).random()
    similarity, best = _best_similarity(catalog, query)
    if best is None:
        return SourceDecision(
            kind="external", similarity=0.0, p_dataset=0.0, draw=draw, prompt=query
        )
    p_dataset = normal_cdf((similarity - policy.mu) / policy.sigma)
    if draw < p_dataset:
        return SourceDecision(
            kind="dataset", similarity=similarity, p_dataset=p_dataset, draw=draw, record=best
        )
    return SourceDecision(
        kind="external", similarity=similarity, p_dataset=p_dataset, draw=draw, prompt=query
    )


def slugify(name: str) -> str:
    slug = _SLUG_RE.sub("-", name.lower()).strip("-")
    return slug or "asset"


def ingest_asset(catalog: Catalog, code_file: str | Path, metadata: dict) -> AssetRecord:
    """Copy a code file into the catalog and append its record to the manifest.

    Ids are name slugs with a collision counter; the manifest rewrite is
    atomic so concurrent readers never see a partial file.
    """
    if catalog.root is None or catalog.manifest_path is None:
        raise ValueError("catalog has no manifest to ingest into")
    category = metadata["category"]
    if category not in CATEGORIES:
        raise BadCategory(f"unknown category {category!r}")
    source = Path(code_file)
    try:
        code_text = source.read_text(encoding="utf-8")
    except OSError as err:
        raise UnreadableFile(f"cannot read {source}: {err}") from err

    taken = {record.id for record in catalog.records}
    base = slugify(metadata["name"])
    asset_id = base
    counter = 1
    while asset_id in taken:
        counter += 1
        asset_id = f"{base}-{counter}"

    code_dir = catalog.root / "code"
    code_dir.mkdir(parents=True, exist_ok=True)
    suffix = source.suffix or ".py"
    rel_path = f"code/{asset_id}{suffix}"
    (catalog.root / rel_path).write_text(code_text, encoding="utf-8")

    record = AssetRecord(
        id=asset_id,
        name=metadata["name"],
        category=category,
        description=metadata["description"],
        code_path=rel_path,
        license=metadata.get("license", DEFAULT_LICENSE),
        source_url=metadata.get("source_url"),
    )
    catalog.records.append(record)
    save_catalog(catalog)
    return record


class MeshClient(Protocol):
    """External text-to-3D generation boundary."""

    def generate(self, prompt: str) -> dict: ...


@dataclass
class SimulatedMeshClient:
    """Deterministic placeholder mesh descriptors, no model involved."""

    def generate(self, prompt: str) -> dict:
        rng = random.Random(prompt)
        return {
            "kind": "placeholder-mesh",
            "prompt": prompt,
            "vertices": rng.randrange(64, 4096),
            "faces": rng.randrange(32, 2048),
        }


def bundled_manifest_path() -> Path:
    """Manifest shipped with the package data."""
    from importlib import resources

    return Path(str(resources.files("sceneloom.data").joinpath("catalog/manifest.jsonl")))
