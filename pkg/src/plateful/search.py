"""Query pipeline (first-pass retrieval + learned re-ranking) and evaluation."""

from __future__ import annotations

from dataclasses import dataclass

from .corpus import tokenize
from .embeddings import cosine, embed_sentence
from .ltr import extract_features, normalize, rerank
from .text_index import search_field

SNIPPET_LENGTH = 200

MODES = ("tfidf", "bm25", "ranknet")


class ModelNotLoadedError(RuntimeError):
    """ranknet mode was requested but no trained ranking model is loaded."""


@dataclass(frozen=True)
class SearchConfig:
    candidate_depth: int = 50
    result_count: int = 10
    mode: str = "bm25"

    def __post_init__(self):
        if self.candidate_depth < 1 or self.result_count < 1:
            raise ValueError("candidate_depth and result_count must be positive")
        if self.result_count > self.candidate_depth:
            raise ValueError("result_count must not exceed candidate_depth")
        if self.mode not in MODES:
            raise ValueError(f"unknown mode {self.mode!r}")


@dataclass(frozen=True)
class SearchResult:
    doc_id: str
    score: float
    rank: int
    snippet: str


@dataclass(frozen=True)
class EvalReport:
    metrics: dict[str, float]
    per_query: dict[str, dict[str, float]]


def _snippet(state, doc_id: str) -> str:
    review = state.reviews_by_id.get(doc_id)
    return review.text[:SNIPPET_LENGTH] if review else ""


def _candidates_by_cosine(state, query_vector, depth: int) -> list[str]:
    scored = [
        (doc_id, cosine(query_vector, vec)) for doc_id, vec in state.doc_vectors.items()
    ]
    scored.sort(key=lambda pair: (-pair[1], pair[0]))
    return [doc_id for doc_id, _ in scored[:depth]]


def run_query(query_text: str, config: SearchConfig, state) -> list[SearchResult]:
    """Execute one query against an engine state snapshot.

    tfidf / bm25 modes score the review-text field directly. ranknet mode
    takes the top-N documents by cosine between the query vector and each
    document vector, then re-ranks them with the trained model. state must
    expose: text_index, category_index, bm25_params, embedding_table,
    doc_vectors, reviews_by_id, and (for ranknet) ranknet + feature_stats.
    """
    tokens = tokenize(query_text)
    if config.mode == "ranknet" and (state.ranknet is None or state.feature_stats is None):
        raise ModelNotLoadedError("no ranking model loaded")
    if not tokens:
        return []

    if config.mode in ("tfidf", "bm25"):
        ranked = search_field(
            state.text_index, state.bm25_params, tokens, config.result_count,
            scorer=config.mode,
        )
    else:
        query_vector = embed_sentence(state.embedding_table, tokens)
        if not query_vector.any():
            return []
        candidate_ids = _candidates_by_cosine(state, query_vector, config.candidate_depth)
        candidates = [
            (
                doc_id,
                extract_features(
                    tokens, query_vector, doc_id, state.text_index,
                    state.category_index, state.doc_vectors, state.bm25_params,
                ),
            )
            for doc_id in candidate_ids
        ]
        ranked = rerank(state.ranknet, state.feature_stats, candidates)
        ranked = ranked[:config.result_count]

    return [
        SearchResult(doc_id=doc_id, score=score, rank=i + 1, snippet=_snippet(state, doc_id))
        for i, (doc_id, score) in enumerate(ranked)
    ]


def average_precision_at_k(ranked_doc_ids, relevant, k: int) -> float:
    """AP@k normalized by min(|relevant|, k); 0 when nothing is relevant."""
    if k < 1:
        raise ValueError("k must be >= 1")
    relevant = set(relevant)
    if not relevant:
        return 0.0
    hits = 0
    precision_sum = 0.0
    for i, doc_id in enumerate(ranked_doc_ids[:k], start=1):
        if doc_id in relevant:
            hits += 1
            precision_sum += hits / i
    return precision_sum / min(len(relevant), k)


def reciprocal_rank(ranked_doc_ids, relevant) -> float:
    """1 / rank of the first relevant result; 0 when none is retrieved."""
    relevant = set(relevant)
    for i, doc_id in enumerate(ranked_doc_ids, start=1):
        if doc_id in relevant:
            return 1.0 / i
    return 0.0


METRIC_NAMES = ("MAP@1", "MAP@3", "MAP@5", "MRR")


def evaluate(queries, judgments, configs: dict[str, SearchConfig], state) -> dict[str, EvalReport]:
    """Run every query under each config and average AP@1/3/5 and RR.

    Every query must carry at least one judgment; documents never judged
    for a query count as irrelevant to it.
    """
    judged_by_query: dict[str, set[str]] = {}
    relevant_by_query: dict[str, set[str]] = {}
    for j in judgments:
        judged_by_query.setdefault(j.query_id, set()).add(j.doc_id)
        if j.label == 1:
            relevant_by_query.setdefault(j.query_id, set()).add(j.doc_id)
    for q in queries:
        if q.id not in judged_by_query:
            raise ValueError(f"query {q.id!r} has no judgments")

    reports: dict[str, EvalReport] = {}
    for mode, config in configs.items():
        per_query: dict[str, dict[str, float]] = {}
        for q in queries:
            ranked = [r.doc_id for r in run_query(q.text, config, state)]
            relevant = relevant_by_query.get(q.id, set())
            per_query[q.id] = {
                "MAP@1": average_precision_at_k(ranked, relevant, 1),
                "MAP@3": average_precision_at_k(ranked, relevant, 3),
                "MAP@5": average_precision_at_k(ranked, relevant, 5),
                "MRR": reciprocal_rank(ranked, relevant),
            }
        n = len(queries)
        metrics = {
            name: sum(values[name] for values in per_query.values()) / n
            for name in METRIC_NAMES
        }
        reports[mode] = EvalReport(metrics=metrics, per_query=per_query)
    return reports


def report_to_dict(reports: dict[str, EvalReport]) -> dict:
    return {
        mode: {"metrics": r.metrics, "per_query": r.per_query}
        for mode, r in reports.items()
    }
