"""Pairwise learning-to-rank: 3-feature extraction and a small scoring net.

Features per query-document pair: BM25 on review text, cosine between the
query and document vectors, and BM25 on the review's category field. The
scorer is a 3 -> h (tanh) -> 1 network trained on cross-entropy over score
differences of relevant/irrelevant document pairs.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

from .embeddings import cosine
from .text_index import Bm25Params, bm25_score

CHECKPOINT_VERSION = "ranknet-v1"


@dataclass(frozen=True)
class FeatureVector:
    text_bm25: float
    semantic_cosine: float
    category_bm25: float

    def as_array(self) -> np.ndarray:
        return np.array(
            [self.text_bm25, self.semantic_cosine, self.category_bm25], dtype=np.float64
        )

    @classmethod
    def from_array(cls, arr) -> "FeatureVector":
        return cls(float(arr[0]), float(arr[1]), float(arr[2]))


NUM_FEATURES = 3


@dataclass(frozen=True)
class FeatureStats:
    mins: tuple[float, float, float]
    maxs: tuple[float, float, float]

    def __post_init__(self):
        for lo, hi in zip(self.mins, self.maxs):
            if lo > hi:
                raise ValueError("per-feature min must not exceed max")


@dataclass
class RankNetModel:
    w_in: np.ndarray   # (3, h)
    b_in: np.ndarray   # (h,)
    w_out: np.ndarray  # (h,)
    b_out: float

    @property
    def hidden_size(self) -> int:
        return self.w_in.shape[1]


@dataclass(frozen=True)
class TrainingPair:
    query_id: str
    features_pos: FeatureVector
    features_neg: FeatureVector


def init_ranknet(hidden_size: int = 8, seed: int = 42) -> RankNetModel:
    if hidden_size < 1:
        raise ValueError("hidden_size must be >= 1")
    rng = np.random.default_rng(seed)
    return RankNetModel(
        w_in=rng.uniform(-0.5, 0.5, size=(NUM_FEATURES, hidden_size)),
        b_in=np.zeros(hidden_size),
        w_out=rng.uniform(-0.5, 0.5, size=hidden_size),
        b_out=0.0,
    )


def extract_features(query_tokens, query_vector, doc_id, text_index, category_index,
                     doc_vectors, params: Bm25Params = Bm25Params()) -> FeatureVector:
    """Compute the 3-feature representation of one query-document pair."""
    if doc_id not in text_index.doc_length or doc_id not in category_index.doc_length:
        raise KeyError(f"doc_id {doc_id!r} missing from an index")
    if doc_id not in doc_vectors:
        raise KeyError(f"doc_id {doc_id!r} missing from doc_vectors")
    return FeatureVector(
        text_bm25=bm25_score(text_index, params, query_tokens, doc_id),
        semantic_cosine=cosine(query_vector, doc_vectors[doc_id]),
        category_bm25=bm25_score(category_index, params, query_tokens, doc_id),
    )


def fit_stats(features) -> FeatureStats:
    """Per-feature min/max over a training feature collection."""
    arrs = [f.as_array() for f in features]
    if not arrs:
        raise ValueError("cannot fit stats on an empty feature set")
    stacked = np.stack(arrs)
    return FeatureStats(
        mins=tuple(float(x) for x in stacked.min(axis=0)),
        maxs=tuple(float(x) for x in stacked.max(axis=0)),
    )


def normalize(features: FeatureVector, stats: FeatureStats) -> FeatureVector:
    """Min-max scale into [0,1]; degenerate features map to 0.5, outliers clamp."""
    out = []
    for x, lo, hi in zip(features.as_array(), stats.mins, stats.maxs):
        if lo == hi:
            out.append(0.5)
        else:
            out.append(min(1.0, max(0.0, (x - lo) / (hi - lo))))
    return FeatureVector(*out)


def build_training_pairs(judgments, feature_store) -> list[TrainingPair]:
    """Per-query cross product of relevant x irrelevant documents.

    feature_store maps (query_id, doc_id) to the pair's FeatureVector; every
    judged pair must be present.
    """
    by_query: dict[str, dict[int, list[str]]] = {}
    for j in judgments:
        by_query.setdefault(j.query_id, {0: [], 1: []})[j.label].append(j.doc_id)
    pairs: list[TrainingPair] = []
    for qid in sorted(by_query):
        pos_docs = sorted(by_query[qid][1])
        neg_docs = sorted(by_query[qid][0])
        for pos in pos_docs:
            for neg in neg_docs:
                if (qid, pos) not in feature_store or (qid, neg) not in feature_store:
                    raise KeyError(f"missing features for a judged pair of query {qid!r}")
                pairs.append(
                    TrainingPair(
                        query_id=qid,
                        features_pos=feature_store[(qid, pos)],
                        features_neg=feature_store[(qid, neg)],
                    )
                )
    return pairs


def score(model: RankNetModel, features: FeatureVector) -> float:
    """Network output for one (already normalized) feature vector."""
    hidden = np.tanh(features.as_array() @ model.w_in + model.b_in)
    return float(hidden @ model.w_out + model.b_out)


def _softplus(x: float) -> float:
    # Numerically stable ln(1 + e^x).
    if x > 0:
        return x + math.log1p(math.exp(-x))
    return math.log1p(math.exp(x))


def pairwise_loss(s_pos: float, s_neg: float) -> float:
    """Cross-entropy with target probability 1: ln(1 + exp(-(s_pos - s_neg)))."""
    return _softplus(-(s_pos - s_neg))


def _score_with_grads(model: RankNetModel, x: np.ndarray):
    pre = x @ model.w_in + model.b_in
    hidden = np.tanh(pre)
    s = float(hidden @ model.w_out + model.b_out)
    d_pre = model.w_out * (1.0 - hidden ** 2)
    grads = {
        "w_in": np.outer(x, d_pre),
        "b_in": d_pre,
        "w_out": hidden,
        "b_out": 1.0,
    }
    return s, grads


def pair_gradients(model: RankNetModel, pair: TrainingPair):
    """Loss and its gradients through both score evaluations of a pair."""
    xp = pair.features_pos.as_array()
    xn = pair.features_neg.as_array()
    s_pos, g_pos = _score_with_grads(model, xp)
    s_neg, g_neg = _score_with_grads(model, xn)
    diff = s_pos - s_neg
    # d/d_diff ln(1 + e^(-diff)) = -sigma(-diff)
    d_diff = -1.0 / (1.0 + math.exp(diff)) if diff > -700 else -1.0
    grads = {k: d_diff * (g_pos[k] - g_neg[k]) for k in g_pos}
    return pairwise_loss(s_pos, s_neg), grads


def train_ranknet(model: RankNetModel, pairs, epochs: int = 200,
                  learning_rate: float = 0.05, seed: int = 42) -> list[float]:
    """SGD over shuffled pairs; returns mean pair loss per epoch."""
    if not pairs:
        raise ValueError("pair set must be nonempty")
    rng = np.random.default_rng(seed)
    history: list[float] = []
    n = len(pairs)
    for _ in range(epochs):
        order = rng.permutation(n)
        total = 0.0
        for idx in order:
            pair_loss, grads = pair_gradients(model, pairs[idx])
            total += pair_loss
            model.w_in -= learning_rate * grads["w_in"]
            model.b_in -= learning_rate * grads["b_in"]
            model.w_out -= learning_rate * grads["w_out"]
            model.b_out -= learning_rate * grads["b_out"]
        history.append(total / n)
    return history


def rerank(model: RankNetModel, stats: FeatureStats, candidates) -> list[tuple[str, float]]:
    """Score (doc_id, raw FeatureVector) candidates; sort score desc, id asc."""
    scored = [
        (doc_id, score(model, normalize(features, stats)))
        for doc_id, features in candidates
    ]
    scored.sort(key=lambda pair: (-pair[1], pair[0]))
    return scored


def save_ranknet(model: RankNetModel, stats: FeatureStats, path) -> None:
    payload = {
        "version": CHECKPOINT_VERSION,
        "hidden_size": model.hidden_size,
        "w_in": model.w_in.ravel().tolist(),
        "b_in": model.b_in.tolist(),
        "w_out": model.w_out.tolist(),
        "b_out": model.b_out,
        "stats": {"mins": list(stats.mins), "maxs": list(stats.maxs)},
    }
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(payload, fh)


def load_ranknet(path) -> tuple[RankNetModel, FeatureStats]:
    with open(path, encoding="utf-8") as fh:
        payload = json.load(fh)
    if payload.get("version") != CHECKPOINT_VERSION:
        raise ValueError(f"unsupported checkpoint version {payload.get('version')!r}")
    h = payload["hidden_size"]
    model = RankNetModel(
        w_in=np.array(payload["w_in"], dtype=np.float64).reshape(NUM_FEATURES, h),
        b_in=np.array(payload["b_in"], dtype=np.float64),
        w_out=np.array(payload["w_out"], dtype=np.float64),
        b_out=float(payload["b_out"]),
    )
    stats = FeatureStats(
        mins=tuple(payload["stats"]["mins"]), maxs=tuple(payload["stats"]["maxs"])
    )
    return model, stats
