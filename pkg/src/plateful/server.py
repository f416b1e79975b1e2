"""HTTP JSON API: search, review browsing with colored tags, live submission.

Readers grab one immutable EngineState snapshot per request; a submission
builds a complete replacement state under a write lock and swaps it in, so
concurrent reads never observe a torn state.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass

import numpy as np
from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse

from . import search as search_mod
from . import sentiment as sentiment_mod
from .corpus import FoodService, Review, tokenize
from .embeddings import EmbeddingTable, embed_sentence
from .ltr import FeatureStats, RankNetModel
from .tagging import ColoredTag, TagPair, aggregate_tags, annotate, extract_pairs
from .text_index import Bm25Params, InvertedIndex, build_index


@dataclass
class EngineState:
    reviews: list[Review]
    services: list[FoodService]
    reviews_by_id: dict[str, Review]
    services_by_id: dict[str, FoodService]
    text_index: InvertedIndex
    category_index: InvertedIndex
    bm25_params: Bm25Params
    embedding_table: EmbeddingTable
    doc_vectors: dict[str, np.ndarray]
    sentiment_model: sentiment_mod.LstmModel | None
    sentiment_vocab: sentiment_mod.Vocabulary | None
    ranknet: RankNetModel | None
    feature_stats: FeatureStats | None
    review_tags: dict[str, list[TagPair]]
    review_polarity: dict[str, str]


def review_pairs(text: str) -> list[TagPair]:
    """All adjective-noun pairs across the review's sentences."""
    pairs: list[TagPair] = []
    for sentence in annotate(text):
        pairs.extend(extract_pairs(sentence))
    return pairs


def build_engine_state(reviews, services, embedding_table, *,
                       doc_vector_overrides=None, sentiment_model=None,
                       sentiment_vocab=None, ranknet=None, feature_stats=None,
                       bm25_params=Bm25Params()) -> EngineState:
    """Build every index and cache for a corpus snapshot."""
    services_by_id = {s.id: s for s in services}
    for r in reviews:
        if r.service_id not in services_by_id:
            raise ValueError(f"review {r.id!r} references unknown service {r.service_id!r}")
    reviews_by_id = {r.id: r for r in reviews}

    text_index = build_index([(r.id, tokenize(r.text)) for r in reviews], "text")
    category_index = build_index(
        [(r.id, tokenize(" ".join(r.categories))) for r in reviews], "categories"
    )

    overrides = doc_vector_overrides or {}
    doc_vectors = {
        r.id: overrides[r.id]
        if r.id in overrides
        else embed_sentence(embedding_table, tokenize(r.text))
        for r in reviews
    }

    review_tags = {r.id: review_pairs(r.text) for r in reviews}
    review_polarity = {r.id: sentiment_mod.polarity(r.label) for r in reviews}

    return EngineState(
        reviews=list(reviews),
        services=list(services),
        reviews_by_id=reviews_by_id,
        services_by_id=services_by_id,
        text_index=text_index,
        category_index=category_index,
        bm25_params=bm25_params,
        embedding_table=embedding_table,
        doc_vectors=doc_vectors,
        sentiment_model=sentiment_model,
        sentiment_vocab=sentiment_vocab,
        ranknet=ranknet,
        feature_stats=feature_stats,
        review_tags=review_tags,
        review_polarity=review_polarity,
    )


def colored_tags_for(state: EngineState, review_id: str) -> list[ColoredTag]:
    pairs = state.review_tags.get(review_id, [])
    base = state.review_polarity.get(review_id, "neutral")
    return aggregate_tags(pairs, {p: base for p in pairs})


def _tag_json(tag: ColoredTag) -> dict:
    return {
        "text": tag.pair.display(),
        "polarity": tag.polarity,
        "negated": tag.pair.negated,
        "count": tag.count,
    }


def _review_json(state: EngineState, review: Review) -> dict:
    return {
        "id": review.id,
        "service_id": review.service_id,
        "text": review.text,
        "label": review.label,
        "sentiment_class": review.label,
        "polarity": state.review_polarity[review.id],
        "categories": list(review.categories),
        "timestamp": review.timestamp,
        "tags": [_tag_json(t) for t in colored_tags_for(state, review.id)],
    }


class Engine:
    """Holds the live EngineState; writes are serialized, reads lock-free."""

    def __init__(self, state: EngineState):
        self._state = state
        self._write_lock = threading.Lock()

    @property
    def state(self) -> EngineState:
        return self._state

    def submit_review(self, *, service_id: str, text: str, categories=(),
                      timestamp: int = 0, review_id: str | None = None):
        """Predict sentiment, extract tags, append the review, rebuild, swap."""
        with self._write_lock:
            state = self._state
            if state.sentiment_model is None or state.sentiment_vocab is None:
                raise search_mod.ModelNotLoadedError("no sentiment model loaded")
            if service_id not in state.services_by_id:
                raise KeyError(f"unknown service {service_id!r}")
            if review_id is None:
                review_id = f"r{len(state.reviews) + 1:06d}"
                while review_id in state.reviews_by_id:
                    review_id = review_id + "x"
            elif review_id in state.reviews_by_id:
                raise ValueError(f"duplicate review id {review_id!r}")
            predicted, _ = sentiment_mod.predict(
                state.sentiment_model, state.sentiment_vocab, text
            )
            review = Review(
                id=review_id, service_id=service_id, text=text,
                label=predicted, categories=tuple(categories), timestamp=timestamp,
            )
            new_state = build_engine_state(
                state.reviews + [review], state.services, state.embedding_table,
                doc_vector_overrides=None, sentiment_model=state.sentiment_model,
                sentiment_vocab=state.sentiment_vocab, ranknet=state.ranknet,
                feature_stats=state.feature_stats, bm25_params=state.bm25_params,
            )
            self._state = new_state
            return new_state, review


def _error(status: int, message: str) -> JSONResponse:
    return JSONResponse(status_code=status, content={"error": message})


def create_app(engine: Engine) -> FastAPI:
    app = FastAPI(title="plateful", docs_url=None, redoc_url=None)

    @app.exception_handler(RequestValidationError)
    async def validation_handler(request: Request, exc: RequestValidationError):
        return _error(400, "malformed request")

    @app.get("/api/health")
    def health():
        return {"status": "ok"}

    @app.get("/api/services")
    def list_services():
        state = engine.state
        out = []
        for service in state.services:
            reviews = [r for r in state.reviews if r.service_id == service.id]
            avg = sum(r.label for r in reviews) / len(reviews) if reviews else None
            out.append(
                {
                    "id": service.id,
                    "name": service.name,
                    "categories": list(service.categories),
                    "location": service.location,
                    "review_count": len(reviews),
                    "avg_label": avg,
                }
            )
        return out

    @app.get("/api/services/{service_id}/reviews")
    def list_reviews(service_id: str, page: int = 1, page_size: int = 10):
        state = engine.state
        if service_id not in state.services_by_id:
            return _error(404, f"unknown service {service_id!r}")
        if page < 1 or page_size < 1:
            return _error(400, "page and page_size must be positive")
        reviews = sorted(
            (r for r in state.reviews if r.service_id == service_id),
            key=lambda r: (-r.timestamp, r.id),
        )
        start = (page - 1) * page_size
        page_reviews = reviews[start:start + page_size]
        all_pairs = [p for r in reviews for p in state.review_tags[r.id]]
        polarity_of = {}
        for r in reviews:
            for p in state.review_tags[r.id]:
                polarity_of.setdefault(p, state.review_polarity[r.id])
        return {
            "service_id": service_id,
            "page": page,
            "page_size": page_size,
            "total": len(reviews),
            "tags": [_tag_json(t) for t in aggregate_tags(all_pairs, polarity_of)],
            "reviews": [_review_json(state, r) for r in page_reviews],
        }

    @app.get("/api/search")
    def search_endpoint(q: str | None = None, k: int = 10, mode: str = "bm25"):
        state = engine.state
        if q is None:
            return _error(400, "missing query parameter q")
        if mode not in search_mod.MODES:
            return _error(400, f"unknown mode {mode!r}")
        if k < 1:
            return _error(400, "k must be >= 1")
        config = search_mod.SearchConfig(
            candidate_depth=max(50, k), result_count=k, mode=mode
        )
        try:
            results = search_mod.run_query(q, config, state)
        except search_mod.ModelNotLoadedError as exc:
            return _error(409, str(exc))
        return {
            "results": [
                {
                    "doc_id": r.doc_id,
                    "rank": r.rank,
                    "score": r.score,
                    "snippet": r.snippet,
                    "tags": [_tag_json(t) for t in colored_tags_for(state, r.doc_id)],
                }
                for r in results
            ]
        }

    @app.post("/api/reviews")
    async def submit_review(request: Request):
        try:
            body = await request.json()
        except Exception:
            return _error(400, "body must be a JSON object")
        if not isinstance(body, dict):
            return _error(400, "body must be a JSON object")
        if "label" in body:
            return _error(400, "label is assigned by the server")
        unknown = body.keys() - {"id", "service_id", "text", "categories", "timestamp"}
        if unknown:
            return _error(400, f"unknown fields {sorted(unknown)}")
        service_id = body.get("service_id")
        text = body.get("text")
        if not isinstance(service_id, str) or not service_id:
            return _error(400, "service_id is required")
        if not isinstance(text, str) or not text.strip():
            return _error(400, "text is required")
        categories = body.get("categories", [])
        if not isinstance(categories, list) or not all(isinstance(c, str) for c in categories):
            return _error(400, "categories must be a list of strings")
        try:
            timestamp = int(body.get("timestamp", 0))
        except (TypeError, ValueError):
            return _error(400, "timestamp must be an integer")
        review_id = body.get("id")
        if review_id is not None and not isinstance(review_id, str):
            return _error(400, "id must be a string")
        try:
            new_state, review = engine.submit_review(
                service_id=service_id, text=text, categories=categories,
                timestamp=timestamp, review_id=review_id,
            )
        except search_mod.ModelNotLoadedError as exc:
            return _error(409, str(exc))
        except KeyError as exc:
            return _error(404, str(exc.args[0]))
        except ValueError as exc:
            return _error(400, str(exc))
        return {
            "review": _review_json(new_state, review),
            "sentiment_class": review.label,
            "polarity": new_state.review_polarity[review.id],
            "tags": [_tag_json(t) for t in colored_tags_for(new_state, review.id)],
        }

    return app


def serve(engine: Engine, host: str = "127.0.0.1", port: int = 8000) -> None:
    import uvicorn

    uvicorn.run(create_app(engine), host=host, port=port, log_level="warning")
