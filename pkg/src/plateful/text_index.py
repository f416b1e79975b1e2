"""Per-field inverted index with BM25 and tf-idf scoring."""

from __future__ import annotations

import math
from dataclasses import dataclass


@dataclass(frozen=True)
class Bm25Params:
    k1: float = 1.2
    b: float = 0.75

    def __post_init__(self):
        if self.k1 < 0:
            raise ValueError(f"k1 must be >= 0, got {self.k1}")
        if not 0.0 <= self.b <= 1.0:
            raise ValueError(f"b must be in [0, 1], got {self.b}")


@dataclass(frozen=True)
class InvertedIndex:
    field_name: str
    postings: dict[str, list[tuple[str, int]]]
    doc_length: dict[str, int]
    doc_count: int
    avg_doc_length: float

    def __contains__(self, doc_id: str) -> bool:
        return doc_id in self.doc_length


def build_index(docs, field_name: str) -> InvertedIndex:
    """Build an inverted index from (doc_id, token list) pairs.

    Statistics are independent of input order: postings lists are sorted
    by doc_id, so any permutation of docs yields an identical index.
    """
    doc_length: dict[str, int] = {}
    term_docs: dict[str, dict[str, int]] = {}
    for doc_id, tokens in docs:
        if doc_id in doc_length:
            raise ValueError(f"duplicate doc_id {doc_id!r}")
        doc_length[doc_id] = len(tokens)
        for tok in tokens:
            term_docs.setdefault(tok, {})
            term_docs[tok][doc_id] = term_docs[tok].get(doc_id, 0) + 1
    postings = {
        term: sorted(per_doc.items()) for term, per_doc in sorted(term_docs.items())
    }
    n = len(doc_length)
    avgdl = sum(doc_length.values()) / n if n else 0.0
    return InvertedIndex(
        field_name=field_name,
        postings=postings,
        doc_length=doc_length,
        doc_count=n,
        avg_doc_length=avgdl,
    )


def _term_freq(index: InvertedIndex, term: str, doc_id: str) -> int:
    for posted_id, tf in index.postings.get(term, ()):
        if posted_id == doc_id:
            return tf
    return 0


def bm25_score(index: InvertedIndex, params: Bm25Params, query_tokens, doc_id: str) -> float:
    """Okapi BM25 with the non-negative IDF variant ln((N - df + 0.5)/(df + 0.5) + 1).

    Sums over distinct query terms; terms absent from the document contribute 0.
    """
    if doc_id not in index.doc_length:
        raise KeyError(f"unknown doc_id {doc_id!r}")
    n = index.doc_count
    dl = index.doc_length[doc_id]
    score = 0.0
    for term in sorted(set(query_tokens)):
        tf = _term_freq(index, term, doc_id)
        if tf == 0:
            continue
        df = len(index.postings[term])
        idf = math.log((n - df + 0.5) / (df + 0.5) + 1.0)
        norm = params.k1 * (1.0 - params.b + params.b * dl / index.avg_doc_length)
        score += idf * tf * (params.k1 + 1.0) / (tf + norm)
    return score


def tfidf_score(index: InvertedIndex, query_tokens, doc_id: str) -> float:
    """Classic (1 + ln tf) * ln(N / df) over distinct matching query terms."""
    if doc_id not in index.doc_length:
        raise KeyError(f"unknown doc_id {doc_id!r}")
    n = index.doc_count
    score = 0.0
    for term in sorted(set(query_tokens)):
        tf = _term_freq(index, term, doc_id)
        if tf == 0:
            continue
        df = len(index.postings[term])
        score += (1.0 + math.log(tf)) * math.log(n / df)
    return score


def search_field(index: InvertedIndex, params: Bm25Params, query_tokens, k: int,
                 scorer: str = "bm25") -> list[tuple[str, float]]:
    """Top-k documents with positive score, ties broken by ascending doc_id."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if scorer not in ("bm25", "tfidf"):
        raise ValueError(f"unknown scorer {scorer!r}")
    # Only documents containing at least one query term can score > 0.
    candidates: set[str] = set()
    for term in set(query_tokens):
        for doc_id, _ in index.postings.get(term, ()):
            candidates.add(doc_id)
    scored = []
    for doc_id in candidates:
        if scorer == "bm25":
            s = bm25_score(index, params, query_tokens, doc_id)
        else:
            s = tfidf_score(index, query_tokens, doc_id)
        if s > 0.0:
            scored.append((doc_id, s))
    scored.sort(key=lambda pair: (-pair[1], pair[0]))
    return scored[:k]


SNAPSHOT_VERSION = "index-v1"


def save_index(index: InvertedIndex, path) -> None:
    import json

    payload = {
        "version": SNAPSHOT_VERSION,
        "field_name": index.field_name,
        "postings": {t: [[d, tf] for d, tf in plist] for t, plist in index.postings.items()},
        "doc_length": index.doc_length,
        "doc_count": index.doc_count,
        "avg_doc_length": index.avg_doc_length,
    }
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(payload, fh)


def load_index(path) -> InvertedIndex:
    import json

    with open(path, encoding="utf-8") as fh:
        payload = json.load(fh)
    if payload.get("version") != SNAPSHOT_VERSION:
        raise ValueError(f"unsupported index snapshot version {payload.get('version')!r}")
    return InvertedIndex(
        field_name=payload["field_name"],
        postings={t: [(d, tf) for d, tf in plist] for t, plist in payload["postings"].items()},
        doc_length={d: int(n) for d, n in payload["doc_length"].items()},
        doc_count=payload["doc_count"],
        avg_doc_length=payload["avg_doc_length"],
    )
