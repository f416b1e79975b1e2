"""Adjective-noun pair extraction, the heuristic annotator, and tag display."""

import pytest
from hypothesis import given, strategies as st

from plateful.corpus import DataFormatError
from plateful.tagging import (
    AnnotatedSentence,
    AnnotatedToken,
    ColoredTag,
    TagPair,
    aggregate_tags,
    annotate,
    extract_pairs,
    load_annotated,
    load_gold_corpus,
    subtree,
)


def sentence(rows):
    """rows: (text, pos, dep, head) in token order."""
    return AnnotatedSentence(
        [AnnotatedToken(index=i, text=t, pos=p, dep=d, head=h)
         for i, (t, p, d, h) in enumerate(rows)]
    )


def restaurant_sentence():
    # "The food from this beautiful restaurant is awful."
    return sentence([
        ("The", "DET", "other", 1),
        ("food", "NOUN", "nsubj", 6),
        ("from", "ADP", "other", 1),
        ("this", "DET", "other", 5),
        ("beautiful", "ADJ", "amod", 5),
        ("restaurant", "NOUN", "other", 2),
        ("is", "VERB", "ROOT", 6),
        ("awful", "ADJ", "acomp", 6),
        (".", "PUNCT", "other", 6),
    ])


def not_good_sentence():
    # "This food is not good at all."
    return sentence([
        ("This", "DET", "other", 1),
        ("food", "NOUN", "nsubj", 2),
        ("is", "VERB", "ROOT", 2),
        ("not", "PART", "neg", 2),
        ("good", "ADJ", "acomp", 2),
        ("at", "ADP", "other", 4),
        ("all", "DET", "other", 5),
        (".", "PUNCT", "other", 2),
    ])


class TestSentenceInvariants:
    def test_two_roots_rejected(self):
        with pytest.raises(ValueError):
            sentence([("a", "NOUN", "ROOT", 0), ("b", "NOUN", "ROOT", 1)])

    def test_head_out_of_range(self):
        with pytest.raises(ValueError):
            sentence([("a", "NOUN", "ROOT", 0), ("b", "NOUN", "other", 9)])

    def test_cycle_rejected(self):
        with pytest.raises(ValueError):
            sentence([
                ("a", "NOUN", "ROOT", 0),
                ("b", "NOUN", "other", 2),
                ("c", "NOUN", "other", 1),
            ])

    def test_unknown_pos_rejected(self):
        with pytest.raises(ValueError):
            sentence([("a", "XXX", "ROOT", 0)])


class TestSubtree:
    def test_leaf_is_itself(self):
        s = restaurant_sentence()
        assert subtree(s, 0) == {0}

    def test_root_covers_all(self):
        s = restaurant_sentence()
        assert subtree(s, 6) == set(range(9))

    def test_copular_root_subtree_spans_clause(self):
        s = restaurant_sentence()
        covered = {s.tokens[i].text for i in subtree(s, 6)}
        assert {"food", "awful"} <= covered

    def test_sizes_sum_over_children(self):
        s = restaurant_sentence()
        for tok in s:
            children = [t.index for t in s if t.head == tok.index and t.dep != "ROOT"]
            assert len(subtree(s, tok.index)) == 1 + sum(
                len(subtree(s, c)) for c in children
            )


class TestExtractPairs:
    def test_restaurant_sentence_two_pairs(self):
        pairs = extract_pairs(restaurant_sentence())
        assert [p.display() for p in pairs] == ["beautiful-restaurant", "awful-food"]

    def test_negated_copular_single_pair(self):
        pairs = extract_pairs(not_good_sentence())
        assert [p.display() for p in pairs] == ["not-good-food"]

    def test_no_adjectives(self):
        s = sentence([("food", "NOUN", "ROOT", 0)])
        assert extract_pairs(s) == []

    def test_amod_with_non_noun_head_skipped(self):
        s = sentence([
            ("really", "ADV", "ROOT", 0),
            ("good", "ADJ", "amod", 0),
        ])
        assert extract_pairs(s) == []

    def test_acomp_without_subject_noun_skipped(self):
        s = sentence([
            ("It", "PRON", "nsubj", 1),
            ("is", "VERB", "ROOT", 1),
            ("tasty", "ADJ", "acomp", 1),
        ])
        assert extract_pairs(s) == []

    def test_acomp_picks_lowest_index_nsubj_noun(self):
        s = sentence([
            ("food", "NOUN", "nsubj", 2),
            ("service", "NOUN", "nsubj", 2),
            ("was", "VERB", "ROOT", 2),
            ("great", "ADJ", "acomp", 2),
        ])
        assert [p.display() for p in extract_pairs(s)] == ["great-food"]

    def test_negation_by_lexicon_text(self):
        s = sentence([
            ("food", "NOUN", "nsubj", 2),
            ("never", "ADV", "other", 2),
            ("tasted", "VERB", "ROOT", 2),
            ("fresh", "ADJ", "acomp", 2),
        ])
        assert [p.display() for p in extract_pairs(s)] == ["not-fresh-food"]

    def test_negation_outside_subtree_ignored(self):
        # negation hangs off the root clause; the adjective's clause is a
        # separate subtree that contains no negation token
        s = sentence([
            ("food", "NOUN", "nsubj", 1),
            ("was", "VERB", "other", 4),
            ("good", "ADJ", "acomp", 1),
            ("service", "NOUN", "nsubj", 4),
            ("was", "VERB", "ROOT", 4),
            ("not", "PART", "neg", 4),
        ])
        assert [p.display() for p in extract_pairs(s)] == ["good-food"]

    def test_duplicates_preserved(self):
        s = sentence([
            ("good", "ADJ", "amod", 1),
            ("food", "NOUN", "nsubj", 3),
            ("good", "ADJ", "amod", 3),
            ("food", "NOUN", "ROOT", 3),
        ])
        assert [p.display() for p in extract_pairs(s)] == ["good-food", "good-food"]

    def test_lowercasing(self):
        s = sentence([
            ("GREAT", "ADJ", "amod", 1),
            ("Laksa", "NOUN", "ROOT", 1),
        ])
        assert extract_pairs(s) == [TagPair(False, "great", "laksa")]

    def test_pure_function(self):
        s = restaurant_sentence()
        assert extract_pairs(s) == extract_pairs(s)

    def test_outputs_are_adj_and_noun(self):
        for s in (restaurant_sentence(), not_good_sentence()):
            adjectives = {t.text.lower() for t in s if t.pos == "ADJ"}
            nouns = {t.text.lower() for t in s if t.pos == "NOUN"}
            for pair in extract_pairs(s):
                assert pair.adjective in adjectives
                assert pair.noun in nouns


class TestAnnotate:
    def test_empty_text(self):
        assert annotate("") == []

    def test_copular_sentence(self):
        sentences = annotate("The food is awful.")
        assert len(sentences) == 1
        tokens = {t.text: t for t in sentences[0]}
        assert tokens["awful"].pos == "ADJ" and tokens["awful"].dep == "acomp"
        assert tokens["food"].pos == "NOUN" and tokens["food"].dep == "nsubj"
        assert [p.display() for p in extract_pairs(sentences[0])] == ["awful-food"]

    def test_amod_fragment(self):
        [s] = annotate("beautiful restaurant")
        tokens = {t.text: t for t in s}
        assert tokens["beautiful"].dep == "amod"
        assert tokens["beautiful"].head == tokens["restaurant"].index

    def test_prep_subject_sentence_end_to_end(self):
        [s] = annotate("The food from this beautiful restaurant is awful.")
        assert [p.display() for p in extract_pairs(s)] == [
            "beautiful-restaurant", "awful-food",
        ]

    def test_negated_copular_end_to_end(self):
        [s] = annotate("This food is not good at all.")
        assert [p.display() for p in extract_pairs(s)] == ["not-good-food"]

    def test_contraction_negation(self):
        [s] = annotate("The soup isn't fresh.")
        assert [p.display() for p in extract_pairs(s)] == ["not-fresh-soup"]

    def test_multi_sentence_split(self):
        sentences = annotate("The laksa was great. The queue was long.")
        assert len(sentences) == 2
        pairs = [p.display() for s in sentences for p in extract_pairs(s)]
        assert pairs == ["great-laksa", "long-queue"]

    def test_two_clauses_one_sentence(self):
        [s] = annotate("The food was good but the service was slow.")
        pairs = [p.display() for p in extract_pairs(s)]
        assert pairs == ["good-food", "slow-service"]

    def test_valid_trees_on_odd_inputs(self):
        for text in ("!!!", "and and and", "very very", "from from", "123 456."):
            for s in annotate(text):
                # constructor validates: single root, contiguous, acyclic
                assert isinstance(s, AnnotatedSentence)

    @given(st.text(alphabet="abcdefgh .,!?", max_size=60))
    def test_annotate_never_crashes(self, text):
        for s in annotate(text):
            assert len(s) > 0


FIG3_FILE = """\
0\tThe\tDET\t1\tother
1\tfood\tNOUN\t6\tnsubj
2\tfrom\tADP\t1\tother
3\tthis\tDET\t5\tother
4\tbeautiful\tADJ\t5\tamod
5\trestaurant\tNOUN\t2\tother
6\tis\tVERB\t6\tROOT
7\tawful\tADJ\t6\tacomp
8\t.\tPUNCT\t6\tother
#pairs\tbeautiful-restaurant,awful-food
"""


class TestLoadAnnotated:
    def test_empty_file(self, tmp_path):
        path = tmp_path / "gold.conll"
        path.write_text("", encoding="utf-8")
        assert load_annotated(path) == []

    def test_annotated_file_round_trip(self, tmp_path):
        path = tmp_path / "gold.conll"
        path.write_text(FIG3_FILE, encoding="utf-8")
        [(s, gold)] = load_gold_corpus(path)
        assert [p.display() for p in extract_pairs(s)] == gold
        assert gold == ["beautiful-restaurant", "awful-food"]

    def test_head_out_of_range(self, tmp_path):
        path = tmp_path / "gold.conll"
        path.write_text("0\ta\tNOUN\t99\tother\n", encoding="utf-8")
        with pytest.raises(DataFormatError):
            load_annotated(path)

    def test_cycle_detected(self, tmp_path):
        path = tmp_path / "gold.conll"
        path.write_text(
            "0\ta\tNOUN\t0\tROOT\n1\tb\tNOUN\t2\tother\n2\tc\tNOUN\t1\tother\n",
            encoding="utf-8",
        )
        with pytest.raises(DataFormatError):
            load_annotated(path)

    def test_malformed_line(self, tmp_path):
        path = tmp_path / "gold.conll"
        path.write_text("0\ta\tNOUN\n", encoding="utf-8")
        with pytest.raises(DataFormatError, match="line 1"):
            load_annotated(path)


class TestAggregateTags:
    def test_empty(self):
        assert aggregate_tags([], {}) == []

    def test_merge_counts(self):
        pair = TagPair(False, "good", "food")
        tags = aggregate_tags([pair, pair], {pair: "positive"})
        assert tags == [ColoredTag(pair=pair, polarity="positive", count=2)]

    def test_negated_flips_positive_review(self):
        pair = TagPair(True, "good", "food")
        [tag] = aggregate_tags([pair], {pair: "positive"})
        assert tag.polarity == "negative"

    def test_negated_neutral_unchanged(self):
        pair = TagPair(True, "good", "food")
        [tag] = aggregate_tags([pair], {pair: "neutral"})
        assert tag.polarity == "neutral"

    def test_sorted_by_count_then_display(self):
        a, b, c = TagPair(False, "good", "food"), TagPair(False, "slow", "service"), \
            TagPair(False, "cheap", "lunch")
        tags = aggregate_tags([b, a, a, c], {a: "positive", b: "negative", c: "neutral"})
        assert [t.pair for t in tags] == [a, c, b]


class TestGoldCorpus:
    def test_bundled_corpus_precision(self, gold_corpus_path):
        corpus = load_gold_corpus(gold_corpus_path)
        assert len(corpus) >= 50
        extracted_total = 0
        matched = 0
        for s, gold in corpus:
            got = [p.display() for p in extract_pairs(s)]
            remaining = list(gold)
            for tag in got:
                extracted_total += 1
                if tag in remaining:
                    remaining.remove(tag)
                    matched += 1
        assert extracted_total > 0
        assert matched / extracted_total >= 0.90
