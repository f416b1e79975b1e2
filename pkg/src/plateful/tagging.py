"""Adjective-noun opinion tag extraction over POS/dependency annotations.

Pairs come from two dependency patterns: an adjectival modifier attached to
a noun, and an adjectival complement whose clause carries a nominal subject.
A negation token inside the subtree of the adjective's head prefixes the
pair with "not-".
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .corpus import DataFormatError

POS_TAGS = frozenset(
    {"ADJ", "NOUN", "VERB", "ADV", "DET", "ADP", "PART", "PRON", "PUNCT", "OTHER"}
)
DEP_LABELS = frozenset({"amod", "acomp", "nsubj", "neg", "ROOT", "other"})

NEGATION_WORDS = frozenset({"not", "n't", "never", "no"})

NEGATIVE = "negative"
NEUTRAL = "neutral"
POSITIVE = "positive"


@dataclass(frozen=True)
class AnnotatedToken:
    index: int
    text: str
    pos: str
    dep: str
    head: int


@dataclass(frozen=True)
class TagPair:
    negated: bool
    adjective: str
    noun: str

    def __post_init__(self):
        if not self.adjective or not self.noun:
            raise ValueError("adjective and noun must be nonempty")

    def display(self) -> str:
        base = f"{self.adjective}-{self.noun}"
        return f"not-{base}" if self.negated else base


@dataclass(frozen=True)
class ColoredTag:
    pair: TagPair
    polarity: str
    count: int


class AnnotatedSentence:
    """Ordered token list forming a single-rooted dependency tree."""

    def __init__(self, tokens):
        self.tokens = list(tokens)
        self._validate()
        self._children: dict[int, list[int]] = {t.index: [] for t in self.tokens}
        for tok in self.tokens:
            if tok.dep != "ROOT":
                self._children[tok.head].append(tok.index)

    def _validate(self):
        n = len(self.tokens)
        for expected, tok in enumerate(self.tokens):
            if tok.index != expected:
                raise ValueError(f"token indices must be contiguous from 0, got {tok.index}")
            if not 0 <= tok.head < n:
                raise ValueError(f"token {tok.index}: head {tok.head} out of range")
            if tok.pos not in POS_TAGS:
                raise ValueError(f"token {tok.index}: unknown pos {tok.pos!r}")
            if tok.dep not in DEP_LABELS:
                raise ValueError(f"token {tok.index}: unknown dep {tok.dep!r}")
        roots = [t for t in self.tokens if t.dep == "ROOT"]
        if len(roots) != 1:
            raise ValueError(f"expected exactly one ROOT, found {len(roots)}")
        if roots[0].head != roots[0].index:
            raise ValueError("ROOT token must head itself")
        # Every head chain must terminate at the root without revisiting a node.
        root = roots[0].index
        for tok in self.tokens:
            seen = set()
            cur = tok.index
            while cur != root:
                if cur in seen:
                    raise ValueError(f"cycle detected through token {tok.index}")
                seen.add(cur)
                cur = self.tokens[cur].head

    def __len__(self):
        return len(self.tokens)

    def __iter__(self):
        return iter(self.tokens)


def subtree(sentence: AnnotatedSentence, index: int) -> set[int]:
    """The token plus all of its transitive dependents."""
    if not 0 <= index < len(sentence):
        raise IndexError(f"token index {index} out of range")
    out = set()
    stack = [index]
    while stack:
        cur = stack.pop()
        out.add(cur)
        stack.extend(sentence._children[cur])
    return out


def _has_negation(sentence: AnnotatedSentence, indices) -> bool:
    for i in indices:
        tok = sentence.tokens[i]
        if tok.dep == "neg" or tok.text.lower() in NEGATION_WORDS:
            return True
    return False


def extract_pairs(sentence: AnnotatedSentence) -> list[TagPair]:
    """Extract adjective-noun pairs in sentence order.

    amod adjectives pair with their head noun; acomp adjectives pair with
    the lowest-index nsubj noun inside the subtree of their head, and are
    skipped when that clause has no noun subject.
    """
    pairs: list[TagPair] = []
    for tok in sentence:
        if tok.pos != "ADJ":
            continue
        head = sentence.tokens[tok.head]
        if tok.dep == "amod":
            if head.pos != "NOUN":
                continue
            noun = head
        elif tok.dep == "acomp":
            clause = subtree(sentence, head.index)
            subjects = [
                i
                for i in sorted(clause)
                if sentence.tokens[i].pos == "NOUN" and sentence.tokens[i].dep == "nsubj"
            ]
            if not subjects:
                continue
            noun = sentence.tokens[subjects[0]]
        else:
            continue
        negated = _has_negation(sentence, subtree(sentence, head.index))
        pairs.append(
            TagPair(negated=negated, adjective=tok.text.lower(), noun=noun.text.lower())
        )
    return pairs


# ---------------------------------------------------------------------------
# Built-in heuristic annotator. A statistical parser is out of scope; this
# covers the common grammar of short review sentences, and gold-annotated
# input restores fidelity for evaluation.
# ---------------------------------------------------------------------------

_DETERMINERS = {
    "the", "a", "an", "this", "that", "these", "those", "some", "any",
    "each", "every", "all", "both", "no", "another",
}
_PRONOUNS = {
    "i", "you", "he", "she", "it", "we", "they", "me", "him", "her", "us",
    "them", "my", "your", "his", "its", "our", "their", "mine", "yours",
    "myself", "everything", "something", "nothing", "everyone",
}
_ADPOSITIONS = {
    "of", "in", "on", "at", "by", "for", "with", "from", "to", "about",
    "into", "over", "under", "near", "around", "during", "after", "before",
    "between", "through", "without", "than",
}
_PARTICLES = {"not", "n't", "'s", "'re", "'ve", "'ll", "'d", "'m"}
_COPULAR_VERBS = {
    "is", "are", "was", "were", "am", "be", "been", "being",
    "seems", "seemed", "seem", "looks", "looked", "look",
    "tastes", "tasted", "taste", "feels", "felt", "feel",
    "smells", "smelled", "smell", "gets", "got", "get", "turned",
}
_OTHER_VERBS = {
    "have", "has", "had", "do", "does", "did", "go", "goes", "went",
    "come", "comes", "came", "eat", "eats", "ate", "order", "ordered",
    "try", "tried", "wait", "waited", "serve", "served", "serves",
    "love", "loved", "like", "liked", "hate", "hated", "recommend",
    "recommended", "visit", "visited", "return", "returned", "think",
    "thought", "say", "said", "take", "took", "make", "made", "give",
    "gave", "find", "found", "want", "wanted", "know", "knew", "pay",
    "paid", "cost", "costs", "arrived", "arrive", "left", "leave",
    "will", "would", "can", "could", "should", "must", "may", "might",
}
_ADVERBS = {
    "very", "really", "quite", "too", "so", "extremely", "pretty",
    "rather", "always", "often", "sometimes", "usually", "here", "there",
    "again", "never", "also", "just", "still", "definitely", "absolutely",
    "highly", "super", "only", "even", "almost", "ever", "well",
}
_ADJECTIVES = {
    "good", "bad", "great", "nice", "awful", "terrible", "horrible",
    "amazing", "excellent", "delicious", "tasty", "yummy", "bland",
    "salty", "sweet", "sour", "spicy", "oily", "greasy", "fresh", "stale",
    "crispy", "crunchy", "tender", "juicy", "dry", "soggy", "cheap",
    "expensive", "overpriced", "affordable", "friendly", "rude", "slow",
    "fast", "quick", "clean", "dirty", "cozy", "noisy", "crowded",
    "beautiful", "lovely", "decent", "average", "mediocre", "cold", "hot",
    "warm", "long", "short", "big", "small", "huge", "tiny", "generous",
    "fine", "okay", "ok", "perfect", "authentic", "fragrant", "rich",
    "creamy", "smooth", "tough", "hard", "soft", "wonderful",
    "disappointing", "satisfying", "worth", "worst", "best", "better",
    "tasteless", "flavourful", "flavorful", "watery", "chewy", "smoky",
    "limited", "reasonable", "solid", "fantastic", "superb", "dreadful",
    "poor", "lukewarm", "attentive", "polite", "patient", "impatient",
    "cheerful", "helpful", "efficient", "sloppy", "messy", "spacious",
    "cramped", "comfortable", "pleasant", "unpleasant", "memorable",
    "forgettable", "new", "old", "favourite", "favorite", "happy", "sad",
}
_NOUNS = {
    "food", "restaurant", "place", "service", "staff", "price", "prices",
    "portion", "portions", "taste", "flavour", "flavor", "soup",
    "noodles", "noodle", "rice", "chicken", "pork", "beef", "fish",
    "laksa", "ramen", "sushi", "pizza", "burger", "salad", "coffee",
    "tea", "dessert", "cake", "stall", "canteen", "queue", "ambience",
    "atmosphere", "menu", "dish", "dishes", "meal", "lunch", "dinner",
    "breakfast", "gravy", "sauce", "curry", "egg", "prawn", "prawns",
    "seafood", "bread", "cheese", "fries", "drink", "drinks", "juice",
    "value", "quality", "experience", "location", "table", "seat",
    "waiter", "waitress", "owner", "auntie", "uncle", "crowd", "wait",
    "time", "money", "broth", "spice", "texture", "serving", "bowl",
    "plate", "cup", "tofu", "mutton", "duck", "crab", "oyster", "bee",
    "hoon", "mee", "kway", "teow", "char", "siew", "roti", "prata",
    "nasi", "lemak", "ayam", "satay", "dumpling", "dumplings", "wanton",
    "pasta", "steak", "sandwich", "toast", "kaya", "milo", "kopi",
}

_ADJ_SUFFIXES = ("ful", "ous", "ive", "able", "ible", "ish", "less", "iest")
_TERMINALS = {".", "!", "?"}
_PUNCT = {".", ",", "!", "?", ";", ":", "(", ")", '"', "'"}

_WORD_RE = re.compile(r"[A-Za-z0-9]+(?:'[A-Za-z]+)*|[.,!?;:()\"]")


def _split_contractions(word: str) -> list[str]:
    lower = word.lower()
    if lower.endswith("n't") and len(word) > 3:
        return [word[:-3], word[-3:]]
    if "'" in word[1:]:
        pos = word.index("'", 1)
        return [word[:pos], word[pos:]]
    return [word]


def _pos_of(word: str) -> str:
    lower = word.lower()
    if lower in _PUNCT:
        return "PUNCT"
    if lower.isdigit():
        return "OTHER"
    if lower in _DETERMINERS:
        return "DET"
    if lower in _PRONOUNS:
        return "PRON"
    if lower in _ADPOSITIONS:
        return "ADP"
    if lower in _PARTICLES:
        return "PART"
    if lower in _COPULAR_VERBS or lower in _OTHER_VERBS:
        return "VERB"
    if lower in _ADVERBS:
        return "ADV"
    if lower in _ADJECTIVES:
        return "ADJ"
    if lower in _NOUNS:
        return "NOUN"
    if lower.endswith("ly"):
        return "ADV"
    if lower.endswith(_ADJ_SUFFIXES):
        return "ADJ"
    if lower in ("and", "but", "or", "because", "though", "although", "if", "when"):
        return "OTHER"
    return "NOUN"


def _sentence_texts(text: str) -> list[list[str]]:
    words = _WORD_RE.findall(text)
    tokens: list[str] = []
    for w in words:
        tokens.extend(_split_contractions(w))
    sentences: list[list[str]] = []
    current: list[str] = []
    for tok in tokens:
        current.append(tok)
        if tok in _TERMINALS:
            sentences.append(current)
            current = []
    if current:
        sentences.append(current)
    return sentences


def _subject_for(verb_idx: int, clause_start: int, pos: list[str]) -> int | None:
    """Leftmost noun of the clause that is not a prepositional object."""
    fallback = None
    last_boundary = clause_start - 1
    for i in range(clause_start, verb_idx):
        if pos[i] != "NOUN":
            continue
        if fallback is None:
            fallback = i
        has_adp = any(pos[j] == "ADP" for j in range(last_boundary + 1, i))
        if not has_adp:
            return i
        last_boundary = i
    return fallback


def _annotate_one(texts: list[str]) -> AnnotatedSentence:
    n = len(texts)
    pos = [_pos_of(t) for t in texts]
    head = list(range(n))
    dep = ["other"] * n

    verbs = [i for i in range(n) if pos[i] == "VERB"]
    if verbs:
        root = verbs[0]
    else:
        nouns = [i for i in range(n) if pos[i] == "NOUN"]
        root = nouns[0] if nouns else 0
    dep[root] = "ROOT"
    head[root] = root

    def nearest_verb_left(i):
        cands = [v for v in verbs if v < i]
        return cands[-1] if cands else None

    # Adjectives: amod when immediately before a noun, else acomp on the
    # nearest verb to the left (copular pattern).
    for i in range(n):
        if pos[i] != "ADJ" or i == root:
            continue
        if i + 1 < n and pos[i + 1] == "NOUN":
            head[i] = i + 1
            dep[i] = "amod"
            continue
        verb = nearest_verb_left(i)
        if verb is not None:
            head[i] = verb
            dep[i] = "acomp"

    # Subjects: each verb claims the leftmost non-prepositional noun (or a
    # pronoun) between the previous verb and itself.
    for vi, verb in enumerate(verbs):
        clause_start = verbs[vi - 1] + 1 if vi > 0 else 0
        subj = _subject_for(verb, clause_start, pos)
        if subj is None:
            pronouns = [
                i for i in range(clause_start, verb) if pos[i] == "PRON"
            ]
            subj = pronouns[0] if pronouns else None
        if subj is not None and subj != verb and dep[subj] == "other":
            head[subj] = verb
            dep[subj] = "nsubj"

    # Negation attaches to the nearest verb on the left, else the root.
    for i in range(n):
        if texts[i].lower() in NEGATION_WORDS and i != root:
            verb = nearest_verb_left(i)
            head[i] = verb if verb is not None else root
            dep[i] = "neg"

    # Remaining attachments keep the tree connected and roughly phrase-shaped.
    for i in range(n):
        if i == root or dep[i] != "other":
            continue
        if pos[i] == "DET":
            nxt = next((j for j in range(i + 1, n) if pos[j] == "NOUN"), None)
            head[i] = nxt if nxt is not None else root
        elif pos[i] == "ADP":
            prev = next(
                (j for j in range(i - 1, -1, -1) if pos[j] in ("NOUN", "VERB", "PRON")),
                None,
            )
            head[i] = prev if prev is not None else root
        elif pos[i] == "NOUN":
            adp = next((j for j in range(i - 1, -1, -1) if pos[j] == "ADP"), None)
            blocked = adp is not None and any(
                pos[j] in ("NOUN", "VERB") for j in range(adp + 1, i)
            )
            if adp is not None and not blocked:
                head[i] = adp
            else:
                head[i] = root
        elif pos[i] == "ADV":
            nxt = next((j for j in range(i + 1, n) if pos[j] in ("ADJ", "VERB")), None)
            head[i] = nxt if nxt is not None else root
        else:
            head[i] = root
        if head[i] == i:
            head[i] = root

    tokens = [
        AnnotatedToken(index=i, text=texts[i], pos=pos[i], dep=dep[i], head=head[i])
        for i in range(n)
    ]
    try:
        return AnnotatedSentence(tokens)
    except ValueError:
        # Pathological attachment; flatten everything onto the root.
        flat = [
            AnnotatedToken(
                index=i,
                text=texts[i],
                pos=pos[i],
                dep="ROOT" if i == root else "other",
                head=root,
            )
            for i in range(n)
        ]
        return AnnotatedSentence(flat)


def annotate(text: str) -> list[AnnotatedSentence]:
    """Sentence-split, POS-tag, and dependency-annotate raw review text."""
    return [_annotate_one(ts) for ts in _sentence_texts(text) if ts]


# ---------------------------------------------------------------------------
# Annotated-corpus file format: one token per line
# `index<TAB>text<TAB>pos<TAB>head<TAB>dep`, blank line between sentences,
# optional `#pairs<TAB>tag1,tag2,...` line carrying gold pairs.
# ---------------------------------------------------------------------------


def load_gold_corpus(path) -> list[tuple[AnnotatedSentence, list[str]]]:
    """Parse annotated sentences plus their gold pair strings (may be empty)."""
    out: list[tuple[AnnotatedSentence, list[str]]] = []
    rows: list[AnnotatedToken] = []
    gold: list[str] = []

    def flush(lineno):
        nonlocal rows, gold
        if rows:
            try:
                out.append((AnnotatedSentence(rows), gold))
            except ValueError as exc:
                raise DataFormatError(f"sentence ending at line {lineno}: {exc}") from exc
        rows, gold = [], []

    with open(path, encoding="utf-8") as fh:
        lineno = 0
        for lineno, line in enumerate(fh, start=1):
            line = line.rstrip("\n")
            if not line.strip():
                flush(lineno)
                continue
            if line.startswith("#pairs"):
                parts = line.split("\t")
                if len(parts) != 2:
                    raise DataFormatError(f"line {lineno}: expected #pairs<TAB>tags")
                gold = [t.strip() for t in parts[1].split(",") if t.strip()]
                continue
            parts = line.split("\t")
            if len(parts) != 5:
                raise DataFormatError(
                    f"line {lineno}: expected index<TAB>text<TAB>pos<TAB>head<TAB>dep"
                )
            try:
                idx, head = int(parts[0]), int(parts[3])
            except ValueError as exc:
                raise DataFormatError(f"line {lineno}: index and head must be integers") from exc
            rows.append(
                AnnotatedToken(index=idx, text=parts[1], pos=parts[2], dep=parts[4], head=head)
            )
        flush(lineno)
    return out


def load_annotated(path) -> list[AnnotatedSentence]:
    return [sentence for sentence, _ in load_gold_corpus(path)]


def flip_polarity(polarity: str) -> str:
    if polarity == POSITIVE:
        return NEGATIVE
    if polarity == NEGATIVE:
        return POSITIVE
    return NEUTRAL


def aggregate_tags(pairs, polarity_of) -> list[ColoredTag]:
    """Merge identical pairs with counts, sorted by count then display string.

    A pair's polarity is its owning review's sentiment polarity, flipped
    between positive and negative when the pair is negated.
    """
    counts: dict[TagPair, int] = {}
    for pair in pairs:
        counts[pair] = counts.get(pair, 0) + 1
    tags = []
    for pair, count in counts.items():
        polarity = polarity_of.get(pair, NEUTRAL)
        if pair.negated:
            polarity = flip_polarity(polarity)
        tags.append(ColoredTag(pair=pair, polarity=polarity, count=count))
    tags.sort(key=lambda t: (-t.count, t.pair.display()))
    return tags
