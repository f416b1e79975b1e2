#!/usr/bin/env python3
"""Train the ranker on the bundled dataset and print the mode comparison."""

import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
DATA = ROOT / "data"
sys.path.insert(0, str(ROOT / "src"))

from plateful import ltr, search
from plateful.corpus import load_judgments, load_queries, load_reviews, load_services, tokenize
from plateful.embeddings import embed_sentence, load_embeddings
from plateful.server import build_engine_state


def train_ranker(state, queries, judgments, epochs=200, lr=0.05, seed=42, hidden=8):
    features = {}
    queries_by_id = {q.id: q for q in queries}
    for j in judgments:
        q = queries_by_id[j.query_id]
        tokens = tokenize(q.text)
        qvec = embed_sentence(state.embedding_table, tokens)
        features[(j.query_id, j.doc_id)] = ltr.extract_features(
            tokens, qvec, j.doc_id, state.text_index, state.category_index,
            state.doc_vectors, state.bm25_params,
        )
    stats = ltr.fit_stats(features.values())
    normalized = {k: ltr.normalize(v, stats) for k, v in features.items()}
    pairs = ltr.build_training_pairs(judgments, normalized)
    model = ltr.init_ranknet(hidden_size=hidden, seed=seed)
    history = ltr.train_ranknet(model, pairs, epochs=epochs, learning_rate=lr, seed=seed)
    return model, stats, history


def main():
    reviews = load_reviews(DATA / "reviews.jsonl")
    services = load_services(DATA / "services.jsonl")
    queries = load_queries(DATA / "queries.tsv")
    judgments = load_judgments(DATA / "judgments.tsv")
    table = load_embeddings(DATA / "vectors.txt", 16)

    state = build_engine_state(reviews, services, table)
    model, stats, history = train_ranker(state, queries, judgments)
    state.ranknet = model
    state.feature_stats = stats
    print(f"ranker trained: {len(history)} epochs, "
          f"pair loss {history[0]:.4f} -> {history[-1]:.4f}")

    configs = {
        mode: search.SearchConfig(candidate_depth=50, result_count=10, mode=mode)
        for mode in ("tfidf", "bm25", "ranknet")
    }
    reports = search.evaluate(queries, judgments, configs, state)
    print(f"{'mode':10s} {'MAP@1':>8s} {'MAP@3':>8s} {'MAP@5':>8s} {'MRR':>8s}")
    for mode in ("tfidf", "bm25", "ranknet"):
        m = reports[mode].metrics
        print(f"{mode:10s} {m['MAP@1']:8.4f} {m['MAP@3']:8.4f} "
              f"{m['MAP@5']:8.4f} {m['MRR']:8.4f}")


if __name__ == "__main__":
    main()
