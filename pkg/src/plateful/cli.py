"""Command-line entry point: ingest, index, train, tag, search, eval, serve."""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

import numpy as np

from . import ltr, search, sentiment
from .corpus import (
    DataFormatError,
    load_judgments,
    load_queries,
    load_reviews,
    load_services,
    tokenize,
)
from .embeddings import embed_sentence, load_doc_vectors, load_embeddings
from .server import Engine, build_engine_state, serve
from .tagging import annotate, extract_pairs
from .text_index import save_index

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2


class _Parser(argparse.ArgumentParser):
    # usage problems exit 1; argparse's default of 2 is reserved for data errors
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def resolve_path(path: str) -> Path:
    """Use the path as given, falling back to $PLATEFUL_DATA_DIR as prefix."""
    p = Path(path)
    if p.exists():
        return p
    prefix = os.environ.get("PLATEFUL_DATA_DIR")
    if prefix and not p.is_absolute():
        candidate = Path(prefix) / p
        if candidate.exists():
            return candidate
    return p


def _peek_dim(path: Path) -> int:
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            parts = line.split()
            if parts:
                return len(parts) - 1
    raise DataFormatError(f"{path}: empty word-vector file")


def _load_table(path_str: str):
    path = resolve_path(path_str)
    return load_embeddings(path, _peek_dim(path))


def _load_state(args, *, sentiment_model=None, sentiment_vocab=None,
                ranknet_model=None, feature_stats=None):
    reviews = load_reviews(resolve_path(args.reviews))
    services = load_services(resolve_path(args.services))
    table = _load_table(args.embeddings)
    overrides = None
    if getattr(args, "doc_vectors", None):
        overrides = load_doc_vectors(resolve_path(args.doc_vectors), table.dim)
    return build_engine_state(
        reviews, services, table, doc_vector_overrides=overrides,
        sentiment_model=sentiment_model, sentiment_vocab=sentiment_vocab,
        ranknet=ranknet_model, feature_stats=feature_stats,
    )


def _add_corpus_flags(p, embeddings=True):
    p.add_argument("--reviews", default="reviews.jsonl", help="review JSONL file")
    p.add_argument("--services", default="services.jsonl", help="service JSONL file")
    if embeddings:
        p.add_argument("--embeddings", default="vectors.txt",
                       help="word-vector text file")
        p.add_argument("--doc-vectors", default=None,
                       help="optional per-document vector TSV overriding averaging")


def build_parser() -> _Parser:
    parser = _Parser(prog="plateful",
                     description="Food-review search, tagging, and sentiment engine")
    sub = parser.add_subparsers(dest="command", metavar="command",
                                parser_class=_Parser)

    p = sub.add_parser("index",
                       help="build and snapshot the inverted indexes")
    _add_corpus_flags(p, embeddings=False)
    p.add_argument("--out", default="indexes", help="output directory for snapshots")

    p = sub.add_parser("train-sentiment",
                       help="train the sentiment classifier on labeled reviews")
    p.add_argument("--reviews", default="reviews.jsonl")
    p.add_argument("--embeddings", default=None,
                   help="optional pretrained vectors to initialize the embedding")
    p.add_argument("--model-out", required=True)
    p.add_argument("--epochs", type=int, default=10)
    p.add_argument("--batch-size", type=int, default=2)
    p.add_argument("--lr", type=float, default=1e-3)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--max-len", type=int, default=32)
    p.add_argument("--embed-dim", type=int, default=None,
                   help="embedding size (default 50, or the vector file's dim)")
    p.add_argument("--lstm-units", type=int, default=8)
    p.add_argument("--hidden-dim", type=int, default=8)

    p = sub.add_parser("train-ranker",
                       help="train the pairwise re-ranking model")
    _add_corpus_flags(p)
    p.add_argument("--queries", default="queries.tsv")
    p.add_argument("--judgments", default="judgments.tsv")
    p.add_argument("--model-out", required=True)
    p.add_argument("--epochs", type=int, default=200)
    p.add_argument("--lr", type=float, default=0.05)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--hidden", type=int, default=8)

    p = sub.add_parser("tags",
                       help="extract adjective-noun tags from text or a review file")
    p.add_argument("--text", default=None, help="tag one piece of text")
    p.add_argument("--reviews", default=None, help="tag every review in a JSONL file")

    p = sub.add_parser("search", help="run one query")
    _add_corpus_flags(p)
    p.add_argument("query", help="query text")
    p.add_argument("--mode", choices=search.MODES, default="bm25")
    p.add_argument("--k", type=int, default=10)
    p.add_argument("--candidate-depth", type=int, default=50)
    p.add_argument("--model-in", default=None, help="ranker checkpoint (ranknet mode)")

    p = sub.add_parser("eval",
                       help="compare tfidf/bm25/ranknet on a judged query set")
    _add_corpus_flags(p)
    p.add_argument("--queries", default="queries.tsv")
    p.add_argument("--judgments", default="judgments.tsv")
    p.add_argument("--model-in", default=None,
                   help="ranker checkpoint; trained in-process when omitted")
    p.add_argument("--epochs", type=int, default=200)
    p.add_argument("--lr", type=float, default=0.05)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--k", type=int, default=10)
    p.add_argument("--candidate-depth", type=int, default=50)
    p.add_argument("--report-out", default=None, help="write the report JSON here")

    p = sub.add_parser("serve", help="start the HTTP API")
    _add_corpus_flags(p)
    p.add_argument("--sentiment-model", default=None)
    p.add_argument("--ranker-model", default=None)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)

    return parser


def extract_judged_features(state, queries, judgments):
    features = {}
    by_id = {q.id: q for q in queries}
    for j in judgments:
        if j.query_id not in by_id:
            raise DataFormatError(f"judgment references unknown query {j.query_id!r}")
        tokens = tokenize(by_id[j.query_id].text)
        qvec = embed_sentence(state.embedding_table, tokens)
        features[(j.query_id, j.doc_id)] = ltr.extract_features(
            tokens, qvec, j.doc_id, state.text_index, state.category_index,
            state.doc_vectors, state.bm25_params,
        )
    return features


def train_ranker_on(state, queries, judgments, *, epochs, lr, seed, hidden):
    features = extract_judged_features(state, queries, judgments)
    stats = ltr.fit_stats(features.values())
    normalized = {k: ltr.normalize(v, stats) for k, v in features.items()}
    pairs = ltr.build_training_pairs(judgments, normalized)
    model = ltr.init_ranknet(hidden_size=hidden, seed=seed)
    history = ltr.train_ranknet(model, pairs, epochs=epochs, learning_rate=lr, seed=seed)
    return model, stats, history


def cmd_index(args) -> int:
    reviews = load_reviews(resolve_path(args.reviews))
    services = load_services(resolve_path(args.services))
    service_ids = {s.id for s in services}
    for r in reviews:
        if r.service_id not in service_ids:
            raise DataFormatError(
                f"review {r.id!r} references unknown service {r.service_id!r}"
            )
    from .text_index import build_index

    text_index = build_index([(r.id, tokenize(r.text)) for r in reviews], "text")
    category_index = build_index(
        [(r.id, tokenize(" ".join(r.categories))) for r in reviews], "categories"
    )
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    save_index(text_index, out / "text_index.json")
    save_index(category_index, out / "category_index.json")
    print(f"indexed {text_index.doc_count} reviews "
          f"({len(text_index.postings)} text terms, "
          f"{len(category_index.postings)} category terms) -> {out}")
    return EXIT_OK


def cmd_train_sentiment(args) -> int:
    reviews = load_reviews(resolve_path(args.reviews))
    if not reviews:
        raise DataFormatError("no reviews to train on")
    table = _load_table(args.embeddings) if args.embeddings else None
    embed_dim = args.embed_dim or (table.dim if table else 50)
    token_lists = [tokenize(r.text) for r in reviews]
    vocab = sentiment.Vocabulary.build(token_lists)
    config = sentiment.LstmConfig(
        max_len=args.max_len, embed_dim=embed_dim, lstm_units=args.lstm_units,
        hidden_dim=args.hidden_dim, learning_rate=args.lr, seed=args.seed,
    )
    model = sentiment.init_model(config, vocab, pretrained=table)
    dataset = [
        (sentiment.encode(vocab, toks, config.max_len), r.label)
        for toks, r in zip(token_lists, reviews)
    ]
    history = sentiment.train(
        model, dataset, epochs=args.epochs, batch_size=args.batch_size,
        adam_state=sentiment.init_adam(model), rng=np.random.default_rng(args.seed),
    )
    sentiment.save_model(model, vocab, args.model_out)
    last = f"loss {history.losses[-1]:.4f} acc {history.accuracies[-1]:.4f}" \
        if history.losses else "no epochs"
    print(f"trained {args.epochs} epochs on {len(dataset)} reviews ({last}) "
          f"-> {args.model_out}")
    return EXIT_OK


def cmd_train_ranker(args) -> int:
    state = _load_state(args)
    queries = load_queries(resolve_path(args.queries))
    judgments = load_judgments(resolve_path(args.judgments))
    model, stats, history = train_ranker_on(
        state, queries, judgments,
        epochs=args.epochs, lr=args.lr, seed=args.seed, hidden=args.hidden,
    )
    ltr.save_ranknet(model, stats, args.model_out)
    print(f"trained on {len(judgments)} judgments, "
          f"pair loss {history[0]:.4f} -> {history[-1]:.4f} -> {args.model_out}")
    return EXIT_OK


def cmd_tags(args) -> int:
    if (args.text is None) == (args.reviews is None):
        print("tags: provide exactly one of --text or --reviews", file=sys.stderr)
        return EXIT_USAGE
    if args.text is not None:
        for sentence in annotate(args.text):
            for pair in extract_pairs(sentence):
                print(pair.display())
        return EXIT_OK
    for review in load_reviews(resolve_path(args.reviews)):
        pairs = [
            p.display() for s in annotate(review.text) for p in extract_pairs(s)
        ]
        print(f"{review.id}\t{','.join(pairs)}")
    return EXIT_OK


def cmd_search(args) -> int:
    ranker, stats = (None, None)
    if args.model_in:
        ranker, stats = ltr.load_ranknet(resolve_path(args.model_in))
    state = _load_state(args, ranknet_model=ranker, feature_stats=stats)
    config = search.SearchConfig(
        candidate_depth=max(args.candidate_depth, args.k),
        result_count=args.k, mode=args.mode,
    )
    try:
        results = search.run_query(args.query, config, state)
    except search.ModelNotLoadedError:
        print("search: ranknet mode needs --model-in", file=sys.stderr)
        return EXIT_USAGE
    print(f"{'rank':>4s}  {'score':>9s}  {'doc':8s}  snippet")
    for r in results:
        print(f"{r.rank:4d}  {r.score:9.4f}  {r.doc_id:8s}  {r.snippet[:60]}")
    return EXIT_OK


def cmd_eval(args) -> int:
    queries = load_queries(resolve_path(args.queries))
    judgments = load_judgments(resolve_path(args.judgments))
    if args.model_in:
        model, stats = ltr.load_ranknet(resolve_path(args.model_in))
        state = _load_state(args, ranknet_model=model, feature_stats=stats)
    else:
        state = _load_state(args)
        model, stats, _ = train_ranker_on(
            state, queries, judgments,
            epochs=args.epochs, lr=args.lr, seed=args.seed, hidden=8,
        )
        state.ranknet = model
        state.feature_stats = stats
    depth = max(args.candidate_depth, args.k)
    configs = {
        mode: search.SearchConfig(candidate_depth=depth, result_count=args.k, mode=mode)
        for mode in ("tfidf", "bm25", "ranknet")
    }
    reports = search.evaluate(queries, judgments, configs, state)
    print(f"{'mode':10s} {'MAP@1':>8s} {'MAP@3':>8s} {'MAP@5':>8s} {'MRR':>8s}")
    for mode in ("tfidf", "bm25", "ranknet"):
        m = reports[mode].metrics
        print(f"{mode:10s} {m['MAP@1']:8.4f} {m['MAP@3']:8.4f} "
              f"{m['MAP@5']:8.4f} {m['MRR']:8.4f}")
    if args.report_out:
        with open(args.report_out, "w", encoding="utf-8") as fh:
            json.dump(search.report_to_dict(reports), fh, indent=2)
        print(f"report written to {args.report_out}")
    return EXIT_OK


def cmd_serve(args) -> int:
    sent_model = sent_vocab = None
    if args.sentiment_model:
        sent_model, sent_vocab = sentiment.load_model(resolve_path(args.sentiment_model))
    ranker, stats = (None, None)
    if args.ranker_model:
        ranker, stats = ltr.load_ranknet(resolve_path(args.ranker_model))
    state = _load_state(
        args, sentiment_model=sent_model, sentiment_vocab=sent_vocab,
        ranknet_model=ranker, feature_stats=stats,
    )
    engine = Engine(state)
    print(f"serving {len(state.reviews)} reviews on http://{args.host}:{args.port}")
    serve(engine, host=args.host, port=args.port)
    return EXIT_OK


_COMMANDS = {
    "index": cmd_index,
    "train-sentiment": cmd_train_sentiment,
    "train-ranker": cmd_train_ranker,
    "tags": cmd_tags,
    "search": cmd_search,
    "eval": cmd_eval,
    "serve": cmd_serve,
}


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse raises SystemExit(0) for --help
        return exc.code if exc.code is not None else EXIT_OK
    if not args.command:
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    try:
        return _COMMANDS[args.command](args)
    except (DataFormatError, OSError) as exc:
        print(f"plateful {args.command}: {exc}", file=sys.stderr)
        return EXIT_DATA
    except ValueError as exc:
        print(f"plateful {args.command}: {exc}", file=sys.stderr)
        return EXIT_DATA


def main() -> None:
    raise SystemExit(run())


if __name__ == "__main__":
    main()
