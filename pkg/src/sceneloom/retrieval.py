"""Chunked lexical retrieval over scene text and codebase corpora.

Documents are split into non-overlapping whitespace-token chunks that
concatenate back to the original text. A BM25 scorer over per-chunk term
frequencies serves deterministic top-k queries; ranked lists from several
databases can be merged with provenance tags.
"""

from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass, field
from pathlib import Path

DEFAULT_CHUNK_SIZE = 256
BM25_K1 = 1.2
BM25_B = 0.75

INDEX_FORMAT = "chunk-index"
INDEX_VERSION = 1

_TOKEN_RE = re.compile(r"[a-z0-9]+")
_WORD_RE = re.compile(r"\S+")


class InvalidChunkSize(ValueError):
    """chunk_size below one."""


class IndexFormatError(ValueError):
    """Persisted index file has the wrong format marker or version."""


@dataclass(frozen=True)
class Chunk:
    id: int
    source_doc: str
    start_offset: int
    text: str


@dataclass
class RetrievalIndex:
    """Immutable after build; safe for concurrent queries."""

    chunks: list[Chunk] = field(default_factory=list)
    # term -> [(chunk id, term frequency)], chunk ids ascending
    postings: dict[str, list[tuple[int, int]]] = field(default_factory=dict)
    token_counts: list[int] = field(default_factory=list)
    chunk_size: int = DEFAULT_CHUNK_SIZE
    k1: float = BM25_K1
    b: float = BM25_B
    scorer: str = "bm25"

    @property
    def average_tokens(self) -> float:
        if not self.chunks:
            return 0.0
        return sum(self.token_counts) / len(self.chunks)


@dataclass(frozen=True)
class TaggedHit:
    """Query hit annotated with the database it came from."""

    database: str
    chunk: Chunk
    score: float


def tokenize(text: str) -> list[str]:
    """Lowercased alphanumeric runs; everything else is a separator."""
    return _TOKEN_RE.findall(text.lower())


def chunk_document(
    doc: str, chunk_size: int, source_doc: str = "", id_base: int = 0
) -> list[Chunk]:
    """Split on whitespace-token boundaries into an exhaustive cover.

    Every chunk except possibly the last holds exactly chunk_size tokens;
    chunk texts concatenate back to the document unchanged. A document with
    no tokens but nonempty text yields one whitespace-only chunk.
    """
    if chunk_size < 1:
        raise InvalidChunkSize(f"chunk_size must be >= 1, got {chunk_size}")
    if not doc:
        return []
    starts = [m.start() for m in _WORD_RE.finditer(doc)]
    boundaries = [0] + [starts[i] for i in range(chunk_size, len(starts), chunk_size)]
    chunks = []
    for n, begin in enumerate(boundaries):
        end = boundaries[n + 1] if n + 1 < len(boundaries) else len(doc)
        chunks.append(
            Chunk(
                id=id_base + n,
                source_doc=source_doc,
                start_offset=begin,
                text=doc[begin:end],
            )
        )
    return chunks


def build_index(
    docs: list[tuple[str, str]],
    chunk_size: int = DEFAULT_CHUNK_SIZE,
    k1: float = BM25_K1,
    b: float = BM25_B,
) -> RetrievalIndex:
    """Chunk every document and accumulate term statistics."""
    index = RetrievalIndex(chunk_size=chunk_size, k1=k1, b=b)
    for name, text in docs:
        index.chunks.extend(
            chunk_document(text, chunk_size, source_doc=name, id_base=len(index.chunks))
        )
    for chunk in index.chunks:
        tokens = tokenize(chunk.text)
        index.token_counts.append(len(tokens))
        frequencies: dict[str, int] = {}
        for token in tokens:
            frequencies[token] = frequencies.get(token, 0) + 1
        for term in sorted(frequencies):
            index.postings.setdefault(term, []).append((chunk.id, frequencies[term]))
    return index


def _idf(index: RetrievalIndex, term: str) -> float:
    df = len(index.postings.get(term, ()))
    return math.log(1.0 + (len(index.chunks) - df + 0.5) / (df + 0.5))


def query(index: RetrievalIndex, q: str, k: int) -> list[tuple[Chunk, float]]:
    """Top-k chunks by BM25 score, ties broken by ascending chunk id.

    Chunks sharing no term with the query are omitted. Per-chunk score
    contributions accumulate in query-token order, so rankings are exactly
    reproducible.
    """
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    avg = index.average_tokens
    scores: dict[int, float] = {}
    for token in tokenize(q):
        posting = index.postings.get(token)
        if not posting:
            continue
        idf = _idf(index, token)
        for chunk_id, tf in posting:
            length = index.token_counts[chunk_id]
            gain = idf * (tf * (index.k1 + 1)) / (
                tf + index.k1 * (1 - index.b + index.b * (length / avg))
            )
            scores[chunk_id] = scores.get(chunk_id, 0.0) + gain
    ranked = sorted(scores.items(), key=lambda item: (-item[1], item[0]))
    return [(index.chunks[cid], score) for cid, score in ranked[:k]]


def merge_ranked(
    tagged: list[tuple[str, list[tuple[Chunk, float]]]], k: int | None = None
) -> list[TaggedHit]:
    """Interleave per-database rankings by score.

    Ties fall back to database tag then chunk id, so merged order is
    deterministic regardless of input list order.
    """
    hits = [
        TaggedHit(database=tag, chunk=chunk, score=score)
        for tag, results in tagged
        for chunk, score in results
    ]
    hits.sort(key=lambda h: (-h.score, h.database, h.chunk.id))
    return hits if k is None else hits[:k]


def save_index(index: RetrievalIndex, path: str | Path) -> None:
    payload = {
        "format": INDEX_FORMAT,
        "version": INDEX_VERSION,
        "params": {
            "chunk_size": index.chunk_size,
            "k1": index.k1,
            "b": index.b,
            "scorer": index.scorer,
        },
        "chunks": [
            [c.id, c.source_doc, c.start_offset, c.text] for c in index.chunks
        ],
        "token_counts": index.token_counts,
        "postings": {
            term: [[cid, tf] for cid, tf in posting]
            for term, posting in index.postings.items()
        },
    }
    Path(path).write_text(json.dumps(payload), encoding="utf-8")


def load_index(path: str | Path) -> RetrievalIndex:
    payload = json.loads(Path(path).read_text(encoding="utf-8"))
    if payload.get("format") != INDEX_FORMAT:
        raise IndexFormatError(f"not a {INDEX_FORMAT} file: {path}")
    if payload.get("version") != INDEX_VERSION:
        raise IndexFormatError(f"unsupported index version {payload.get('version')!r}")
    params = payload["params"]
    return RetrievalIndex(
        chunks=[
            Chunk(id=cid, source_doc=doc, start_offset=off, text=text)
            for cid, doc, off, text in payload["chunks"]
        ],
        postings={
            term: [(cid, tf) for cid, tf in posting]
            for term, posting in payload["postings"].items()
        },
        token_counts=list(payload["token_counts"]),
        chunk_size=params["chunk_size"],
        k1=params["k1"],
        b=params["b"],
        scorer=params["scorer"],
    )


def load_corpus(directory: str | Path) -> list[tuple[str, str]]:
    """Read every regular file under a directory, sorted by relative path."""
    root = Path(directory)
    docs = []
    for file in sorted(p for p in root.rglob("*") if p.is_file()):
        docs.append((file.relative_to(root).as_posix(), file.read_text(encoding="utf-8")))
    return docs
