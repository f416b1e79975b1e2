"""Review corpus: data model, file ingestion, tokenization, dataset splitting."""

from __future__ import annotations

import json
import random
import re
from dataclasses import dataclass, field

_TOKEN_RE = re.compile(r"[^\W_]+", re.UNICODE)

VALID_LABELS = (0, 1, 2, 3, 4)


class DataFormatError(ValueError):
    """Raised when an input file violates its documented schema."""


@dataclass(frozen=True)
class Review:
    id: str
    service_id: str
    text: str
    label: int
    categories: tuple[str, ...] = ()
    timestamp: int = 0

    def __post_init__(self):
        if not self.id:
            raise ValueError("review id must be nonempty")
        if self.label not in VALID_LABELS:
            raise ValueError(f"review {self.id!r}: label {self.label} not in 0..4")
        deduped = tuple(dict.fromkeys(self.categories))
        object.__setattr__(self, "categories", deduped)


@dataclass(frozen=True)
class FoodService:
    id: str
    name: str
    categories: tuple[str, ...] = ()
    location: str = ""


@dataclass(frozen=True)
class Query:
    id: str
    text: str

    def __post_init__(self):
        if not self.text:
            raise ValueError(f"query {self.id!r}: text must be nonempty")


@dataclass(frozen=True)
class RelevanceJudgment:
    query_id: str
    doc_id: str
    label: int

    def __post_init__(self):
        if self.label not in (0, 1):
            raise ValueError(
                f"judgment ({self.query_id}, {self.doc_id}): label must be 0 or 1"
            )


def tokenize(text: str) -> list[str]:
    """Lowercase and split on any non-alphanumeric character.

    No stemming, no stop words; empty fragments are dropped.
    """
    return _TOKEN_RE.findall(text.lower())


_REVIEW_FIELDS = {"id", "service_id", "text", "label", "categories", "timestamp"}


def _parse_review_obj(obj: dict, lineno: int) -> Review:
    missing = {"id", "service_id", "text", "label"} - obj.keys()
    if missing:
        raise DataFormatError(f"line {lineno}: missing fields {sorted(missing)}")
    unknown = obj.keys() - _REVIEW_FIELDS
    if unknown:
        raise DataFormatError(f"line {lineno}: unknown fields {sorted(unknown)}")
    if not isinstance(obj["label"], int) or isinstance(obj["label"], bool):
        raise DataFormatError(f"line {lineno}: label must be an integer")
    try:
        return Review(
            id=str(obj["id"]),
            service_id=str(obj["service_id"]),
            text=str(obj["text"]),
            label=obj["label"],
            categories=tuple(str(c) for c in obj.get("categories", [])),
            timestamp=int(obj.get("timestamp", 0)),
        )
    except ValueError as exc:
        raise DataFormatError(f"line {lineno}: {exc}") from exc


def load_reviews(path) -> list[Review]:
    """Load a JSONL review file, rejecting duplicate ids and bad labels."""
    reviews: list[Review] = []
    seen: set[str] = set()
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                obj = json.loads(line)
            except json.JSONDecodeError as exc:
                raise DataFormatError(f"line {lineno}: invalid JSON ({exc.msg})") from exc
            if not isinstance(obj, dict):
                raise DataFormatError(f"line {lineno}: expected a JSON object")
            review = _parse_review_obj(obj, lineno)
            if review.id in seen:
                raise DataFormatError(f"line {lineno}: duplicate review id {review.id!r}")
            seen.add(review.id)
            reviews.append(review)
    return reviews


def save_reviews(reviews, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for r in reviews:
            obj = {
                "id": r.id,
                "service_id": r.service_id,
                "text": r.text,
                "label": r.label,
                "categories": list(r.categories),
                "timestamp": r.timestamp,
            }
            fh.write(json.dumps(obj, ensure_ascii=False) + "\n")


def load_services(path) -> list[FoodService]:
    services: list[FoodService] = []
    seen: set[str] = set()
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                obj = json.loads(line)
            except json.JSONDecodeError as exc:
                raise DataFormatError(f"line {lineno}: invalid JSON ({exc.msg})") from exc
            for key in ("id", "name"):
                if key not in obj:
                    raise DataFormatError(f"line {lineno}: missing field {key!r}")
            if obj["id"] in seen:
                raise DataFormatError(f"line {lineno}: duplicate service id {obj['id']!r}")
            seen.add(obj["id"])
            services.append(
                FoodService(
                    id=str(obj["id"]),
                    name=str(obj["name"]),
                    categories=tuple(str(c) for c in obj.get("categories", [])),
                    location=str(obj.get("location", "")),
                )
            )
    return services


def load_queries(path) -> list[Query]:
    """Load a TSV query file: query_id<TAB>text."""
    queries: list[Query] = []
    seen: set[str] = set()
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.rstrip("\n")
            if not line:
                continue
            parts = line.split("\t")
            if len(parts) != 2:
                raise DataFormatError(f"line {lineno}: expected query_id<TAB>text")
            qid, text = parts
            if qid in seen:
                raise DataFormatError(f"line {lineno}: duplicate query id {qid!r}")
            seen.add(qid)
            try:
                queries.append(Query(id=qid, text=text))
            except ValueError as exc:
                raise DataFormatError(f"line {lineno}: {exc}") from exc
    return queries


def load_judgments(path) -> list[RelevanceJudgment]:
    """Load a TSV judgment file: query_id<TAB>doc_id<TAB>label."""
    judgments: list[RelevanceJudgment] = []
    seen: set[tuple[str, str]] = set()
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.rstrip("\n")
            if not line:
                continue
            parts = line.split("\t")
            if len(parts) != 3:
                raise DataFormatError(
                    f"line {lineno}: expected query_id<TAB>doc_id<TAB>label"
                )
            qid, doc_id, raw_label = parts
            try:
                label = int(raw_label)
            except ValueError as exc:
                raise DataFormatError(f"line {lineno}: label must be an integer") from exc
            if (qid, doc_id) in seen:
                raise DataFormatError(
                    f"line {lineno}: duplicate judgment ({qid}, {doc_id})"
                )
            seen.add((qid, doc_id))
            try:
                judgments.append(RelevanceJudgment(query_id=qid, doc_id=doc_id, label=label))
            except ValueError as exc:
                raise DataFormatError(f"line {lineno}: {exc}") from exc
    return judgments


def split_dataset(reviews, test_fraction, seed):
    """Seeded, label-stratified partition into (train, test).

    Each label's test share is within one item of test_fraction.
    """
    if not reviews:
        raise ValueError("cannot split an empty review list")
    if not 0.0 < test_fraction < 1.0:
        raise ValueError(f"test_fraction must be in (0, 1), got {test_fraction}")
    rng = random.Random(seed)
    by_label: dict[int, list[int]] = {}
    for i, r in enumerate(reviews):
        by_label.setdefault(r.label, []).append(i)
    test_idx: set[int] = set()
    for label in sorted(by_label):
        idx = by_label[label][:]
        rng.shuffle(idx)
        n_test = int(round(len(idx) * test_fraction))
        test_idx.update(idx[:n_test])
    train = [r for i, r in enumerate(reviews) if i not in test_idx]
    test = [r for i, r in enumerate(reviews) if i in test_idx]
    return train, test
