"""Tests for the corpus data model, loaders, tokenizer, and splitter."""

import json

import pytest
from hypothesis import given, strategies as st

from plateful.corpus import (
    DataFormatError,
    Query,
    RelevanceJudgment,
    Review,
    load_judgments,
    load_queries,
    load_reviews,
    save_reviews,
    split_dataset,
    tokenize,
)


def write_lines(path, lines):
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")


class TestReviewModel:
    def test_label_out_of_range(self):
        with pytest.raises(ValueError):
            Review(id="r1", service_id="s1", text="x", label=5)

    def test_empty_id_rejected(self):
        with pytest.raises(ValueError):
            Review(id="", service_id="s1", text="x", label=0)

    def test_categories_deduplicated(self):
        r = Review(id="r1", service_id="s1", text="x", label=3,
                   categories=("noodles", "soup", "noodles"))
        assert r.categories == ("noodles", "soup")

    def test_judgment_label_binary(self):
        with pytest.raises(ValueError):
            RelevanceJudgment(query_id="q1", doc_id="d1", label=2)

    def test_query_text_nonempty(self):
        with pytest.raises(ValueError):
            Query(id="q1", text="")


class TestLoadReviews:
    def test_empty_file(self, tmp_path):
        path = tmp_path / "reviews.jsonl"
        path.write_text("", encoding="utf-8")
        assert load_reviews(path) == []

    def test_single_line(self, tmp_path):
        path = tmp_path / "reviews.jsonl"
        write_lines(path, [json.dumps({
            "id": "r1", "service_id": "s1", "text": "Great food",
            "label": 4, "categories": ["noodles"],
        })])
        reviews = load_reviews(path)
        assert len(reviews) == 1
        assert reviews[0].label == 4
        assert reviews[0].categories == ("noodles",)

    def test_duplicate_id_names_line(self, tmp_path):
        path = tmp_path / "reviews.jsonl"
        row = {"id": "r1", "service_id": "s1", "text": "x", "label": 1}
        write_lines(path, [json.dumps(row), json.dumps(row)])
        with pytest.raises(DataFormatError, match="line 2"):
            load_reviews(path)

    def test_malformed_line_names_line(self, tmp_path):
        path = tmp_path / "reviews.jsonl"
        write_lines(path, [
            json.dumps({"id": "r1", "service_id": "s1", "text": "x", "label": 1}),
            "{not json",
        ])
        with pytest.raises(DataFormatError, match="line 2"):
            load_reviews(path)

    def test_label_out_of_range(self, tmp_path):
        path = tmp_path / "reviews.jsonl"
        write_lines(path, [json.dumps(
            {"id": "r1", "service_id": "s1", "text": "x", "label": 9})])
        with pytest.raises(DataFormatError, match="line 1"):
            load_reviews(path)

    def test_round_trip(self, tmp_path):
        reviews = [
            Review(id="r1", service_id="s1", text="Great laksa!", label=4,
                   categories=("laksa",), timestamp=12),
            Review(id="r2", service_id="s2", text="so-so café", label=2),
        ]
        path = tmp_path / "out.jsonl"
        save_reviews(reviews, path)
        assert load_reviews(path) == reviews


class TestTsvLoaders:
    def test_queries(self, tmp_path):
        path = tmp_path / "queries.tsv"
        write_lines(path, ["q1\tspicy noodle soup", "q2\tcheap lunch"])
        queries = load_queries(path)
        assert [q.id for q in queries] == ["q1", "q2"]

    def test_duplicate_query_id(self, tmp_path):
        path = tmp_path / "queries.tsv"
        write_lines(path, ["q1\ta", "q1\tb"])
        with pytest.raises(DataFormatError, match="line 2"):
            load_queries(path)

    def test_judgments(self, tmp_path):
        path = tmp_path / "judgments.tsv"
        write_lines(path, ["q1\td1\t1", "q1\td2\t0"])
        judgments = load_judgments(path)
        assert judgments[0].label == 1
        assert judgments[1].label == 0

    def test_duplicate_judgment(self, tmp_path):
        path = tmp_path / "judgments.tsv"
        write_lines(path, ["q1\td1\t1", "q1\td1\t0"])
        with pytest.raises(DataFormatError, match="line 2"):
            load_judgments(path)

    def test_nonbinary_label(self, tmp_path):
        path = tmp_path / "judgments.tsv"
        write_lines(path, ["q1\td1\t3"])
        with pytest.raises(DataFormatError):
            load_judgments(path)


class TestTokenize:
    def test_empty(self):
        assert tokenize("") == []

    def test_punctuation_stripped(self):
        assert tokenize("Great food!!") == ["great", "food"]

    def test_mixed_symbols(self):
        assert tokenize("chicken-rice, S$3.50") == ["chicken", "rice", "s", "3", "50"]

    def test_unicode_lowercase(self):
        assert tokenize("CAFÉ Laksa") == ["café", "laksa"]

    def test_underscore_is_a_separator(self):
        assert tokenize("good_food") == ["good", "food"]

    @given(st.text(max_size=80))
    def test_idempotent_on_joined_output(self, text):
        tokens = tokenize(text)
        assert tokenize(" ".join(tokens)) == tokens


def make_reviews(labels):
    return [
        Review(id=f"r{i}", service_id="s1", text=f"text {i}", label=label)
        for i, label in enumerate(labels)
    ]


class TestSplitDataset:
    def test_stratified_counts(self):
        reviews = make_reviews([label for label in range(5) for _ in range(20)])
        train, test = split_dataset(reviews, 0.1, seed=7)
        assert len(train) == 90 and len(test) == 10
        for label in range(5):
            assert sum(1 for r in test if r.label == label) == 2

    def test_deterministic(self):
        reviews = make_reviews([label for label in range(5) for _ in range(20)])
        first = split_dataset(reviews, 0.1, seed=7)
        second = split_dataset(reviews, 0.1, seed=7)
        assert first == second

    def test_fraction_out_of_range(self):
        with pytest.raises(ValueError):
            split_dataset(make_reviews([0]), 1.5, seed=1)

    def test_empty_input(self):
        with pytest.raises(ValueError):
            split_dataset([], 0.5, seed=1)

    @given(
        labels=st.lists(st.integers(min_value=0, max_value=4), min_size=1, max_size=60),
        fraction=st.floats(min_value=0.05, max_value=0.95),
        seed=st.integers(min_value=0, max_value=2**32 - 1),
    )
    def test_partition_property(self, labels, fraction, seed):
        reviews = make_reviews(labels)
        train, test = split_dataset(reviews, fraction, seed)
        assert sorted(r.id for r in train + test) == sorted(r.id for r in reviews)
        assert not {r.id for r in train} & {r.id for r in test}
