"""Shared oracles and synthetic dataset builders for the test suite."""

from __future__ import annotations

import math

import numpy as np

from plateful import ltr
from plateful import sentiment as S


def naive_bm25(raw_docs: dict[str, list[str]], query, doc_id, k1=1.2, b=0.75) -> float:
    """BM25 recomputed directly from raw token lists, bypassing the index."""
    n = len(raw_docs)
    avgdl = sum(len(toks) for toks in raw_docs.values()) / n
    doc = raw_docs[doc_id]
    score = 0.0
    for term in set(query):
        tf = doc.count(term)
        if tf == 0:
            continue
        df = sum(1 for toks in raw_docs.values() if term in toks)
        idf = math.log((n - df + 0.5) / (df + 0.5) + 1.0)
        score += idf * tf * (k1 + 1.0) / (tf + k1 * (1.0 - b + b * len(doc) / avgdl))
    return score


def naive_tfidf(raw_docs: dict[str, list[str]], query, doc_id) -> float:
    n = len(raw_docs)
    doc = raw_docs[doc_id]
    score = 0.0
    for term in set(query):
        tf = doc.count(term)
        if tf == 0:
            continue
        df = sum(1 for toks in raw_docs.values() if term in toks)
        score += (1.0 + math.log(tf)) * math.log(n / df)
    return score


TOY_DOCS = {
    "d1": ["cheap", "tasty", "noodles"],
    "d2": ["tasty", "tasty", "chicken", "rice"],
    "d3": ["slow", "service"],
}


# ---------------------------------------------------------------------------
# Sentiment: separable synthetic dataset (one indicator token per class).
# ---------------------------------------------------------------------------

INDICATOR_TOKENS = ["dreadful0", "lousy1", "middling2", "pleasant3", "stellar4"]


def make_separable_sentences(n=200, seed=42, n_fillers=8):
    fillers = [f"fill{j}" for j in range(n_fillers)]
    rng = np.random.default_rng(seed)
    rows = []
    for _ in range(n):
        label = int(rng.integers(0, 5))
        toks = [fillers[int(rng.integers(0, n_fillers))]
                for _ in range(int(rng.integers(2, 5)))]
        toks.insert(int(rng.integers(0, len(toks) + 1)), INDICATOR_TOKENS[label])
        rows.append((toks, label))
    return rows


def encode_rows(rows, vocab, max_len):
    return [(S.encode(vocab, toks, max_len), label) for toks, label in rows]


def toy_lstm_setup(seed=7, generic_scale=0.6, generic_seed=99):
    """2-sample toy model at an O(1) operating point for finite differences.

    The production init is deliberately small; finite differences need the
    network away from ReLU/max-pool kinks, so the check randomizes weights
    to unit scale first.
    """
    cfg = S.LstmConfig(max_len=6, embed_dim=4, lstm_units=3, hidden_dim=3,
                       dropout=0.1, recurrent_dropout=0.1, seed=seed)
    vocab = S.Vocabulary({f"w{i}": i + 2 for i in range(8)})
    model = S.init_model(cfg, vocab)
    rng = np.random.default_rng(generic_seed)
    for arr in model.params.values():
        arr[...] = rng.normal(0.0, generic_scale, size=arr.shape)
    model.params["embedding"][S.PAD_INDEX] = 0.0
    samples = [
        (S.encode(vocab, ["w0", "w3", "w5", "w1"], cfg.max_len), 2),
        (S.encode(vocab, ["w7", "w2"], cfg.max_len), 4),
    ]
    return model, vocab, samples


def lstm_analytic_gradients(model, samples, mask_seed=1234):
    grads = {k: np.zeros_like(v) for k, v in model.params.items()}
    for seq, label in samples:
        _, cache = S.forward(model, seq, training=True,
                             rng=np.random.default_rng(mask_seed))
        for name, g in S.backward(model, cache, label).items():
            grads[name] += g
    return grads


def lstm_fd_gradients(model, samples, h=1e-4, mask_seed=1234):
    """Central finite differences of the summed loss, replaying dropout masks."""

    def total_loss():
        t = 0.0
        for seq, label in samples:
            probs, _ = S.forward(model, seq, training=True,
                                 rng=np.random.default_rng(mask_seed))
            t += S.loss(probs, label)
        return t

    out = {}
    for name, arr in model.params.items():
        fd = np.zeros_like(arr)
        flat, fd_flat = arr.ravel(), fd.ravel()
        for i in range(flat.size):
            orig = flat[i]
            flat[i] = orig + h
            lp = total_loss()
            flat[i] = orig - h
            lm = total_loss()
            flat[i] = orig
            fd_flat[i] = (lp - lm) / (2.0 * h)
        out[name] = fd
    return out


def relative_error(a: np.ndarray, b: np.ndarray) -> float:
    denom = np.linalg.norm(a) + np.linalg.norm(b)
    if denom < 1e-12:
        return 0.0
    return float(np.linalg.norm(a - b) / denom)


# ---------------------------------------------------------------------------
# RankNet: separable pairs where feature 1 alone determines relevance.
# ---------------------------------------------------------------------------


def make_separable_pairs(n_queries=10, pairs_per_query=10, seed=42):
    rng = np.random.default_rng(seed)
    pairs = []
    for q in range(n_queries):
        for _ in range(pairs_per_query):
            f_pos = ltr.FeatureVector(
                float(rng.uniform(0.6, 1.0)), float(rng.random()), float(rng.random())
            )
            f_neg = ltr.FeatureVector(
                float(rng.uniform(0.0, 0.4)), float(rng.random()), float(rng.random())
            )
            pairs.append(ltr.TrainingPair(f"q{q}", f_pos, f_neg))
    return pairs


def ranknet_fd_gradients(model, pair, h=1e-5):
    def pair_loss():
        return ltr.pairwise_loss(
            ltr.score(model, pair.features_pos), ltr.score(model, pair.features_neg)
        )

    out = {}
    for name in ("w_in", "b_in", "w_out"):
        arr = getattr(model, name)
        fd = np.zeros_like(arr)
        flat, fd_flat = arr.ravel(), fd.ravel()
        for i in range(flat.size):
            orig = flat[i]
            flat[i] = orig + h
            lp = pair_loss()
            flat[i] = orig - h
            lm = pair_loss()
            flat[i] = orig
            fd_flat[i] = (lp - lm) / (2.0 * h)
        out[name] = fd
    orig = model.b_out
    model.b_out = orig + h
    lp = pair_loss()
    model.b_out = orig - h
    lm = pair_loss()
    model.b_out = orig
    out["b_out"] = np.array((lp - lm) / (2.0 * h))
    return out
