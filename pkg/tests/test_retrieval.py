import math

import pytest
from hypothesis import given, strategies as st

from sceneloom import retrieval
from sceneloom.retrieval import (
    InvalidChunkSize,
    IndexFormatError,
    build_index,
    chunk_document,
    load_corpus,
    load_index,
    merge_ranked,
    query,
    save_index,
    tokenize,
)
from generators import generate_corpus


def brute_force_query(index, q, k, k1=1.2, b=0.75):
    """Exhaustive rescoring of every chunk, bit-for-bit comparable.

    Recomputes all term statistics from chunk texts alone; per-chunk
    contributions are summed in query-token order to match the index's
    accumulation order exactly.
    """
    tokens = tokenize(q)
    n = len(index.chunks)
    chunk_tokens = [tokenize(c.text) for c in index.chunks]
    lengths = [len(t) for t in chunk_tokens]
    avg = sum(lengths) / n if n else 0.0
    df: dict[str, int] = {}
    for toks in chunk_tokens:
        for t in set(toks):
            df[t] = df.get(t, 0) + 1
    results = []
    for c in index.chunks:
        score = 0.0
        matched = False
        for token in tokens:
            tf = chunk_tokens[c.id].count(token)
            if tf == 0:
                continue
            matched = True
            d = df[token]
            idf = math.log(1.0 + (n - d + 0.5) / (d + 0.5))
            score += idf * (tf * (k1 + 1)) / (
                tf + k1 * (1 - b + b * (lengths[c.id] / avg))
            )
        if matched:
            results.append((c, score))
    results.sort(key=lambda cs: (-cs[1], cs[0].id))
    return results[:k]


def test_chunk_partition_sizes():
    doc = " ".join(f"t{i}" for i in range(10))
    chunks = chunk_document(doc, 4)
    assert [len(c.text.split()) for c in chunks] == [4, 4, 2]
    assert "".join(c.text for c in chunks) == doc
    assert [c.id for c in chunks] == [0, 1, 2]
    assert chunks[0].start_offset == 0


def test_chunk_empty_doc():
    assert chunk_document("", 4) == []


def test_chunk_whitespace_only_doc():
    chunks = chunk_document("  \n\t ", 4)
    assert len(chunks) == 1
    assert chunks[0].text == "  \n\t "


def test_chunk_bad_size():
    with pytest.raises(InvalidChunkSize):
        chunk_document("a b", 0)
    with pytest.raises(InvalidChunkSize):
        chunk_document("a b", -3)


def test_chunk_leading_whitespace_goes_to_first():
    doc = "   a b c d e"
    chunks = chunk_document(doc, 2)
    assert chunks[0].text == "   a b "
    assert chunks[1].start_offset == doc.index("c")
    assert "".join(c.text for c in chunks) == doc


@given(
    st.text(alphabet=" \t\nab01.", max_size=400),
    st.integers(min_value=1, max_value=7),
)
def test_chunk_cover_property(doc, chunk_size):
    chunks = chunk_document(doc, chunk_size)
    assert "".join(c.text for c in chunks) == doc
    for c in chunks[:-1]:
        assert len(c.text.split()) == chunk_size
    for c in chunks[1:]:
        # boundaries sit on token starts
        assert not c.text[0].isspace()
    for i, c in enumerate(chunks):
        assert c.id == i
        assert doc[c.start_offset : c.start_offset + len(c.text)] == c.text


def test_empty_index_queries_empty():
    index = build_index([])
    assert query(index, "anything at all", 5) == []


def test_disjoint_vocabulary_targets_one_chunk():
    index = build_index(
        [("a", "apple banana cherry"), ("b", "xylophone zipper quartz")],
        chunk_size=16,
    )
    hits = query(index, "banana", 10)
    assert len(hits) == 1
    assert hits[0][0].source_doc == "a"
    hits = query(index, "zipper quartz", 10)
    assert len(hits) == 1
    assert hits[0][0].source_doc == "b"


def test_full_chunk_text_query_ranks_it_first():
    corpus = generate_corpus(7, n_docs=6)
    index = build_index(corpus.docs, chunk_size=32)
    target = index.chunks[3]
    hits = query(index, target.text, 5)
    assert hits and hits[0][0].id == target.id


def test_document_frequencies_match_recount():
    corpus = generate_corpus(11, n_docs=50)
    index = build_index(corpus.docs, chunk_size=64)
    recount: dict[str, int] = {}
    for chunk in index.chunks:
        for term in set(tokenize(chunk.text)):
            recount[term] = recount.get(term, 0) + 1
    assert {t: len(p) for t, p in index.postings.items()} == recount


def test_query_k_zero():
    corpus = generate_corpus(3, n_docs=4)
    index = build_index(corpus.docs, chunk_size=16)
    assert query(index, corpus.docs[0][1][:50], 0) == []


def test_query_negative_k():
    index = build_index([("a", "word")])
    with pytest.raises(ValueError):
        query(index, "word", -1)


def test_scores_non_increasing_and_tiebreak():
    # identical docs force exact score ties; chunk id must break them
    docs = [("a", "same words here"), ("b", "same words here"), ("c", "same words here")]
    index = build_index(docs, chunk_size=8)
    hits = query(index, "same words", 10)
    assert [h[0].id for h in hits] == [0, 1, 2]
    assert hits[0][1] == hits[1][1] == hits[2][1]


@given(st.integers(min_value=0, max_value=50))
def test_query_matches_brute_force(seed):
    corpus = generate_corpus(seed, n_docs=8, words_per_doc=(10, 200))
    index = build_index(corpus.docs, chunk_size=16)
    rng_query = " ".join(corpus.vocabulary[: 5 + seed % 7])
    fast = query(index, rng_query, 10)
    slow = brute_force_query(index, rng_query, 10)
    assert [(c.id, s) for c, s in fast] == [(c.id, s) for c, s in slow]
    scores = [s for _, s in fast]
    assert scores == sorted(scores, reverse=True)


def test_query_deterministic_across_runs():
    corpus = generate_corpus(21, n_docs=10)
    q = " ".join(corpus.vocabulary[:6])
    first = query(build_index(corpus.docs, chunk_size=32), q, 8)
    second = query(build_index(corpus.docs, chunk_size=32), q, 8)
    assert [(c.id, s) for c, s in first] == [(c.id, s) for c, s in second]


def test_save_load_round_trip(tmp_path):
    corpus = generate_corpus(5, n_docs=12)
    index = build_index(corpus.docs, chunk_size=24)
    path = tmp_path / "index.json"
    save_index(index, path)
    loaded = load_index(path)
    assert loaded == index
    q = " ".join(corpus.vocabulary[:9])
    assert [(c.id, s) for c, s in query(loaded, q, 10)] == [
        (c.id, s) for c, s in query(index, q, 10)
    ]


def test_load_rejects_foreign_file(tmp_path):
    path = tmp_path / "other.json"
    path.write_text('{"format": "something-else", "version": 1}')
    with pytest.raises(IndexFormatError):
        load_index(path)
    path.write_text('{"format": "chunk-index", "version": 99}')
    with pytest.raises(IndexFormatError):
        load_index(path)


def test_merge_ranked_interleaves_by_score():
    corpus = generate_corpus(9, n_docs=4)
    index = build_index(corpus.docs, chunk_size=16)
    q = " ".join(corpus.vocabulary[:5])
    hits = query(index, q, 6)
    coarse, fine = hits[0::2], hits[1::2]
    merged = merge_ranked([("coarse", coarse), ("fine", fine)])
    assert [h.score for h in merged] == sorted((h.score for h in merged), reverse=True)
    assert {h.database for h in merged} == {"coarse", "fine"}
    # input order does not matter
    flipped = merge_ranked([("fine", fine), ("coarse", coarse)])
    assert merged == flipped


def test_merge_ranked_truncates():
    chunk = retrieval.Chunk(id=0, source_doc="d", start_offset=0, text="x")
    merged = merge_ranked([("coarse", [(chunk, 2.0)]), ("fine", [(chunk, 1.0)])], k=1)
    assert len(merged) == 1
    assert merged[0].database == "coarse"


def test_merge_tie_falls_back_to_tag_then_id():
    c0 = retrieval.Chunk(id=0, source_doc="d", start_offset=0, text="x")
    c1 = retrieval.Chunk(id=1, source_doc="d", start_offset=1, text="y")
    merged = merge_ranked([("fine", [(c0, 1.0)]), ("coarse", [(c1, 1.0)])])
    assert [(h.database, h.chunk.id) for h in merged] == [("coarse", 1), ("fine", 0)]


def test_load_corpus_sorted(tmp_path):
    (tmp_path / "sub").mkdir()
    (tmp_path / "b.txt").write_text("beta")
    (tmp_path / "a.txt").write_text("alpha")
    (tmp_path / "sub" / "c.txt").write_text("gamma")
    docs = load_corpus(tmp_path)
    assert docs == [("a.txt", "alpha"), ("b.txt", "beta"), ("sub/c.txt", "gamma")]
