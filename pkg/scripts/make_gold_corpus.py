#!/usr/bin/env python3
"""Write the hand-annotated gold corpus to data/gold_pairs.conll.

Each sentence below was annotated by hand: token rows are
(text, pos, dep, head) and `gold` lists the adjective-noun tags a human
evaluator accepts for that sentence. Gold is deliberately not identical to
the extractor's output: idioms and cuisine-type modifiers (e.g. "hard time",
"western stall", "worth the wait") are annotated as non-tags, and
conjoined adjectives carry gold tags the extractor is known to miss.
"""

from pathlib import Path
import sys

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from plateful.tagging import AnnotatedSentence, AnnotatedToken, extract_pairs

OUT = Path(__file__).resolve().parent.parent / "data" / "gold_pairs.conll"

# (rows, gold) where rows are (text, pos, dep, head)
SENTENCES = [
    # --- simple copular predicates ---
    ([("The", "DET", "other", 1), ("laksa", "NOUN", "nsubj", 2),
      ("was", "VERB", "ROOT", 2), ("delicious", "ADJ", "acomp", 2),
      (".", "PUNCT", "other", 2)],
     ["delicious-laksa"]),
    ([("This", "DET", "other", 1), ("stall", "NOUN", "nsubj", 2),
      ("serves", "VERB", "ROOT", 2), ("generous", "ADJ", "amod", 4),
      ("portions", "NOUN", "other", 2), (".", "PUNCT", "other", 2)],
     ["generous-portions"]),
    ([("The", "DET", "other", 1), ("soup", "NOUN", "nsubj", 2),
      ("was", "VERB", "ROOT", 2), ("not", "PART", "neg", 2),
      ("hot", "ADJ", "acomp", 2), (".", "PUNCT", "other", 2)],
     ["not-hot-soup"]),
    # --- the two canonical worked examples ---
    ([("The", "DET", "other", 1), ("food", "NOUN", "nsubj", 6),
      ("from", "ADP", "other", 1), ("this", "DET", "other", 5),
      ("beautiful", "ADJ", "amod", 5), ("restaurant", "NOUN", "other", 2),
      ("is", "VERB", "ROOT", 6), ("awful", "ADJ", "acomp", 6),
      (".", "PUNCT", "other", 6)],
     ["beautiful-restaurant", "awful-food"]),
    ([("This", "DET", "other", 1), ("food", "NOUN", "nsubj", 2),
      ("is", "VERB", "ROOT", 2), ("not", "PART", "neg", 2),
      ("good", "ADJ", "acomp", 2), ("at", "ADP", "other", 4),
      ("all", "DET", "other", 5), (".", "PUNCT", "other", 2)],
     ["not-good-food"]),
    # --- compound dish names: head noun carries the tag ---
    ([("The", "DET", "other", 2), ("chicken", "NOUN", "other", 2),
      ("rice", "NOUN", "nsubj", 4), ("here", "ADV", "other", 4),
      ("is", "VERB", "ROOT", 4), ("fragrant", "ADJ", "acomp", 4),
      (".", "PUNCT", "other", 4)],
     ["fragrant-rice"]),
    ([("We", "PRON", "nsubj", 1), ("waited", "VERB", "ROOT", 1),
      ("in", "ADP", "other", 1), ("a", "DET", "other", 5),
      ("long", "ADJ", "amod", 5), ("queue", "NOUN", "other", 2),
      (".", "PUNCT", "other", 1)],
     ["long-queue"]),
    ([("The", "DET", "other", 2), ("prawn", "NOUN", "other", 2),
      ("noodles", "NOUN", "nsubj", 3), ("were", "VERB", "ROOT", 3),
      ("tasty", "ADJ", "acomp", 3), ("but", "OTHER", "other", 3),
      ("the", "DET", "other", 7), ("broth", "NOUN", "nsubj", 8),
      ("was", "VERB", "other", 3), ("salty", "ADJ", "acomp", 8),
      (".", "PUNCT", "other", 3)],
     ["tasty-noodles", "salty-broth"]),
    # --- pronoun subject: nothing to tag ---
    ([("It", "PRON", "nsubj", 1), ("was", "VERB", "ROOT", 1),
      ("absolutely", "ADV", "other", 3), ("wonderful", "ADJ", "acomp", 1),
      (".", "PUNCT", "other", 1)],
     []),
    # --- conjoined adjectives: second conjunct is a known extractor miss ---
    ([("The", "DET", "other", 1), ("auntie", "NOUN", "nsubj", 2),
      ("was", "VERB", "ROOT", 2), ("friendly", "ADJ", "acomp", 2),
      ("and", "OTHER", "other", 3), ("patient", "ADJ", "other", 3),
      (".", "PUNCT", "other", 2)],
     ["friendly-auntie", "patient-auntie"]),
    ([("I", "PRON", "nsubj", 1), ("loved", "VERB", "ROOT", 1),
      ("the", "DET", "other", 4), ("crispy", "ADJ", "amod", 4),
      ("skin", "NOUN", "other", 1), (".", "PUNCT", "other", 1)],
     ["crispy-skin"]),
    ([("The", "DET", "other", 1), ("portion", "NOUN", "nsubj", 2),
      ("was", "VERB", "ROOT", 2), ("huge", "ADJ", "acomp", 2),
      (".", "PUNCT", "other", 2)],
     ["huge-portion"]),
    ([("Service", "NOUN", "nsubj", 1), ("was", "VERB", "ROOT", 1),
      ("slow", "ADJ", "acomp", 1), ("on", "ADP", "other", 1),
      ("a", "DET", "other", 6), ("busy", "ADJ", "amod", 6),
      ("evening", "NOUN", "other", 3), (".", "PUNCT", "other", 1)],
     ["slow-service", "busy-evening"]),
    ([("The", "DET", "other", 1), ("curry", "NOUN", "nsubj", 2),
      ("was", "VERB", "ROOT", 2), ("never", "ADV", "neg", 2),
      ("spicy", "ADJ", "acomp", 2), ("enough", "ADV", "other", 4),
      (".", "PUNCT", "other", 2)],
     ["not-spicy-curry"]),
    ([("The", "DET", "other", 2), ("kaya", "NOUN", "other", 2),
      ("toast", "NOUN", "nsubj", 3), ("was", "VERB", "ROOT", 3),
      ("sweet", "ADJ", "acomp", 3), ("and", "OTHER", "other", 3),
      ("the", "DET", "other", 7), ("kopi", "NOUN", "nsubj", 8),
      ("was", "VERB", "other", 3), ("strong", "ADJ", "acomp", 8),
      (".", "PUNCT", "other", 3)],
     ["sweet-toast", "strong-kopi"]),
    ([("A", "DET", "other", 2), ("hidden", "ADJ", "amod", 2),
      ("gem", "NOUN", "ROOT", 2), ("with", "ADP", "other", 2),
      ("affordable", "ADJ", "amod", 5), ("prices", "NOUN", "other", 3),
      (".", "PUNCT", "other", 2)],
     ["hidden-gem", "affordable-prices"]),
    ([("The", "DET", "other", 1), ("fish", "NOUN", "nsubj", 2),
      ("was", "VERB", "ROOT", 2), ("fresh", "ADJ", "acomp", 2),
      (",", "PUNCT", "other", 2), ("though", "OTHER", "other", 8),
      ("the", "DET", "other", 7), ("chips", "NOUN", "nsubj", 8),
      ("were", "VERB", "other", 2), ("soggy", "ADJ", "acomp", 8),
      (".", "PUNCT", "other", 2)],
     ["fresh-fish", "soggy-chips"]),
    # --- attributive superlative: parser marks attr, extractor skips ---
    ([("Their", "PRON", "other", 2), ("nasi", "NOUN", "other", 2),
      ("lemak", "NOUN", "nsubj", 3), ("is", "VERB", "ROOT", 3),
      ("the", "DET", "other", 5), ("best", "ADJ", "other", 3),
      ("on", "ADP", "other", 5), ("campus", "NOUN", "other", 6),
      (".", "PUNCT", "other", 3)],
     ["best-lemak"]),
    ([("The", "DET", "other", 1), ("dumplings", "NOUN", "nsubj", 2),
      ("arrived", "VERB", "ROOT", 2), ("cold", "ADJ", "acomp", 2),
      (".", "PUNCT", "other", 2)],
     ["cold-dumplings"]),
    # --- idiom: extractor emits hard-time, human gold rejects it ---
    ([("I", "PRON", "nsubj", 1), ("had", "VERB", "ROOT", 1),
      ("a", "DET", "other", 4), ("hard", "ADJ", "amod", 4),
      ("time", "NOUN", "other", 1), ("finding", "VERB", "other", 1),
      ("a", "DET", "other", 7), ("seat", "NOUN", "other", 5),
      (".", "PUNCT", "other", 1)],
     []),
    ([("The", "DET", "other", 1), ("milo", "NOUN", "nsubj", 2),
      ("was", "VERB", "ROOT", 2), ("icy", "ADJ", "acomp", 2),
      ("and", "OTHER", "other", 3), ("sweet", "ADJ", "other", 3),
      (".", "PUNCT", "other", 2)],
     ["icy-milo", "sweet-milo"]),
    ([("Do", "VERB", "other", 2), ("not", "PART", "neg", 2),
      ("order", "VERB", "ROOT", 2), ("the", "DET", "other", 5),
      ("mutton", "NOUN", "other", 5), ("curry", "NOUN", "other", 2),
      (".", "PUNCT", "other", 2)],
     []),
    ([("The", "DET", "other", 2), ("char", "NOUN", "other", 2),
      ("siew", "NOUN", "nsubj", 3), ("was", "VERB", "ROOT", 3),
      ("tender", "ADJ", "acomp", 3), ("and", "OTHER", "other", 4),
      ("juicy", "ADJ", "other", 4), (".", "PUNCT", "other", 3)],
     ["tender-siew", "juicy-siew"]),
    ([("Cheap", "ADJ", "amod", 1), ("food", "NOUN", "ROOT", 1),
      (",", "PUNCT", "other", 1), ("big", "ADJ", "amod", 4),
      ("portions", "NOUN", "other", 1), (".", "PUNCT", "other", 1)],
     ["cheap-food", "big-portions"]),
    # --- cuisine-type modifier: extractor emits western-stall, gold rejects ---
    ([("The", "DET", "other", 2), ("western", "ADJ", "amod", 2),
      ("stall", "NOUN", "nsubj", 3), ("sells", "VERB", "ROOT", 3),
      ("decent", "ADJ", "amod", 5), ("pasta", "NOUN", "other", 3),
      (".", "PUNCT", "other", 3)],
     ["decent-pasta"]),
    ([("The", "DET", "other", 2), ("ice", "NOUN", "other", 2),
      ("kachang", "NOUN", "nsubj", 3), ("was", "VERB", "ROOT", 3),
      ("too", "ADV", "other", 5), ("sweet", "ADJ", "acomp", 3),
      ("for", "ADP", "other", 5), ("me", "PRON", "other", 6),
      (".", "PUNCT", "other", 3)],
     ["sweet-kachang"]),
    ([("Never", "ADV", "ROOT", 0), ("again", "ADV", "other", 0),
      (".", "PUNCT", "other", 0)],
     []),
    ([("The", "DET", "other", 2), ("oyster", "NOUN", "other", 2),
      ("omelette", "NOUN", "nsubj", 3), ("was", "VERB", "ROOT", 3),
      ("greasy", "ADJ", "acomp", 3), (".", "PUNCT", "other", 3)],
     ["greasy-omelette"]),
    ([("Friendly", "ADJ", "amod", 1), ("staff", "NOUN", "ROOT", 1),
      ("and", "OTHER", "other", 1), ("quick", "ADJ", "amod", 4),
      ("service", "NOUN", "other", 1), (".", "PUNCT", "other", 1)],
     ["friendly-staff", "quick-service"]),
    ([("The", "DET", "other", 2), ("duck", "NOUN", "other", 2),
      ("rice", "NOUN", "nsubj", 3), ("was", "VERB", "ROOT", 3),
      ("dry", "ADJ", "acomp", 3), ("and", "OTHER", "other", 4),
      ("tasteless", "ADJ", "other", 4), (".", "PUNCT", "other", 3)],
     ["dry-rice", "tasteless-rice"]),
    ([("The", "DET", "other", 2), ("bee", "NOUN", "other", 2),
      ("hoon", "NOUN", "nsubj", 3), ("is", "VERB", "ROOT", 3),
      ("oily", "ADJ", "acomp", 3), ("but", "OTHER", "other", 4),
      ("cheap", "ADJ", "other", 4), (".", "PUNCT", "other", 3)],
     ["oily-hoon", "cheap-hoon"]),
    ([("The", "DET", "other", 1), ("sambal", "NOUN", "nsubj", 2),
      ("was", "VERB", "ROOT", 2), ("not", "PART", "neg", 2),
      ("fragrant", "ADJ", "acomp", 2), (".", "PUNCT", "other", 2)],
     ["not-fragrant-sambal"]),
    # --- object predicate: parser gives no acomp, extractor skips ---
    ([("My", "PRON", "other", 1), ("friends", "NOUN", "nsubj", 2),
      ("found", "VERB", "ROOT", 2), ("the", "DET", "other", 4),
      ("tables", "NOUN", "other", 2), ("dirty", "ADJ", "other", 2),
      (".", "PUNCT", "other", 2)],
     ["dirty-tables"]),
    ([("The", "DET", "other", 2), ("laksa", "NOUN", "other", 2),
      ("gravy", "NOUN", "nsubj", 3), ("was", "VERB", "ROOT", 3),
      ("rich", "ADJ", "acomp", 3), ("and", "OTHER", "other", 4),
      ("lemak", "ADJ", "other", 4), (".", "PUNCT", "other", 3)],
     ["rich-gravy", "lemak-gravy"]),
    ([("Prices", "NOUN", "nsubj", 1), ("are", "VERB", "ROOT", 1),
      ("reasonable", "ADJ", "acomp", 1), ("for", "ADP", "other", 2),
      ("the", "DET", "other", 5), ("quality", "NOUN", "other", 3),
      (".", "PUNCT", "other", 1)],
     ["reasonable-prices"]),
    ([("The", "DET", "other", 1), ("queue", "NOUN", "nsubj", 2),
      ("moved", "VERB", "ROOT", 2), ("fast", "ADV", "other", 2),
      ("during", "ADP", "other", 2), ("lunch", "NOUN", "other", 6),
      ("hour", "NOUN", "other", 4), (".", "PUNCT", "other", 2)],
     []),
    ([("An", "DET", "other", 4), ("overpriced", "ADJ", "amod", 4),
      ("and", "OTHER", "other", 1), ("forgettable", "ADJ", "amod", 4),
      ("meal", "NOUN", "ROOT", 4), (".", "PUNCT", "other", 4)],
     ["overpriced-meal", "forgettable-meal"]),
    ([("The", "DET", "other", 2), ("soup", "NOUN", "other", 2),
      ("base", "NOUN", "nsubj", 3), ("tasted", "VERB", "ROOT", 3),
      ("bland", "ADJ", "acomp", 3), ("yesterday", "NOUN", "other", 3),
      (".", "PUNCT", "other", 3)],
     ["bland-base"]),
    # --- "worth the wait": extractor emits worth-dish, human gold rejects ---
    ([("Their", "PRON", "other", 2), ("signature", "NOUN", "other", 2),
      ("dish", "NOUN", "nsubj", 3), ("is", "VERB", "ROOT", 3),
      ("worth", "ADJ", "acomp", 3), ("the", "DET", "other", 6),
      ("wait", "NOUN", "other", 4), (".", "PUNCT", "other", 3)],
     []),
    ([("The", "DET", "other", 2), ("stall", "NOUN", "other", 2),
      ("uncle", "NOUN", "nsubj", 3), ("gave", "VERB", "ROOT", 3),
      ("us", "PRON", "other", 3), ("extra", "ADJ", "amod", 6),
      ("gravy", "NOUN", "other", 3), (".", "PUNCT", "other", 3)],
     ["extra-gravy"]),
    ([("The", "DET", "other", 2), ("ramen", "NOUN", "other", 2),
      ("broth", "NOUN", "nsubj", 3), ("was", "VERB", "ROOT", 3),
      ("thick", "ADJ", "acomp", 3), ("and", "OTHER", "other", 4),
      ("smoky", "ADJ", "other", 4), (".", "PUNCT", "other", 3)],
     ["thick-broth", "smoky-broth"]),
    ([("No", "DET", "other", 1), ("one", "NOUN", "nsubj", 2),
      ("likes", "VERB", "ROOT", 2), ("cold", "ADJ", "amod", 4),
      ("fries", "NOUN", "other", 2), (".", "PUNCT", "other", 2)],
     ["cold-fries"]),
    ([("The", "DET", "other", 2), ("pizza", "NOUN", "other", 2),
      ("crust", "NOUN", "nsubj", 3), ("was", "VERB", "ROOT", 3),
      ("not", "PART", "neg", 3), ("crispy", "ADJ", "acomp", 3),
      (",", "PUNCT", "other", 3), ("just", "ADV", "other", 8),
      ("chewy", "ADJ", "other", 3), (".", "PUNCT", "other", 3)],
     ["not-crispy-crust", "chewy-crust"]),
    ([("Great", "ADJ", "amod", 1), ("ambience", "NOUN", "ROOT", 1),
      ("for", "ADP", "other", 1), ("a", "DET", "other", 5),
      ("quiet", "ADJ", "amod", 5), ("dinner", "NOUN", "other", 2),
      (".", "PUNCT", "other", 1)],
     ["great-ambience", "quiet-dinner"]),
    ([("The", "DET", "other", 2), ("satay", "NOUN", "other", 2),
      ("sauce", "NOUN", "nsubj", 3), ("had", "VERB", "ROOT", 3),
      ("a", "DET", "other", 6), ("strange", "ADJ", "amod", 6),
      ("aftertaste", "NOUN", "other", 3), (".", "PUNCT", "other", 3)],
     ["strange-aftertaste"]),
    ([("This", "DET", "other", 1), ("place", "NOUN", "nsubj", 2),
      ("is", "VERB", "ROOT", 2), ("never", "ADV", "neg", 2),
      ("crowded", "ADJ", "acomp", 2), ("at", "ADP", "other", 4),
      ("night", "NOUN", "other", 5), (".", "PUNCT", "other", 2)],
     ["not-crowded-place"]),
    ([("The", "DET", "other", 2), ("egg", "NOUN", "other", 2),
      ("prata", "NOUN", "nsubj", 3), ("was", "VERB", "ROOT", 3),
      ("crispy", "ADJ", "acomp", 3), ("on", "ADP", "other", 4),
      ("the", "DET", "other", 7), ("outside", "NOUN", "other", 5),
      (".", "PUNCT", "other", 3)],
     ["crispy-prata"]),
    ([("Avoid", "VERB", "ROOT", 0), ("the", "DET", "other", 3),
      ("seafood", "NOUN", "other", 3), ("platter", "NOUN", "other", 0),
      ("on", "ADP", "other", 0), ("weekends", "NOUN", "other", 4),
      (".", "PUNCT", "other", 0)],
     []),
    ([("A", "DET", "other", 2), ("small", "ADJ", "amod", 2),
      ("stall", "NOUN", "ROOT", 2), ("with", "ADP", "other", 2),
      ("huge", "ADJ", "amod", 5), ("flavours", "NOUN", "other", 3),
      (".", "PUNCT", "other", 2)],
     ["small-stall", "huge-flavours"]),
    ([("The", "DET", "other", 1), ("toppings", "NOUN", "nsubj", 2),
      ("were", "VERB", "ROOT", 2), ("fresh", "ADJ", "acomp", 2),
      ("though", "OTHER", "other", 6), ("portions", "NOUN", "nsubj", 6),
      ("were", "VERB", "other", 2), ("small", "ADJ", "acomp", 6),
      (".", "PUNCT", "other", 2)],
     ["fresh-toppings", "small-portions"]),
    ([("I", "PRON", "nsubj", 3), ("ca", "VERB", "other", 3),
      ("n't", "PART", "neg", 3), ("stand", "VERB", "ROOT", 3),
      ("the", "DET", "other", 6), ("long", "ADJ", "amod", 6),
      ("wait", "NOUN", "other", 3), (".", "PUNCT", "other", 3)],
     ["long-wait"]),
    ([("The", "DET", "other", 1), ("brownie", "NOUN", "nsubj", 2),
      ("came", "VERB", "ROOT", 2), ("with", "ADP", "other", 2),
      ("a", "DET", "other", 6), ("generous", "ADJ", "amod", 6),
      ("scoop", "NOUN", "other", 3), ("of", "ADP", "other", 6),
      ("ice", "NOUN", "other", 9), ("cream", "NOUN", "other", 7),
      (".", "PUNCT", "other", 2)],
     ["generous-scoop"]),
    ([("Not", "PART", "neg", 1), ("worth", "ADJ", "ROOT", 1),
      ("the", "DET", "other", 3), ("money", "NOUN", "other", 1),
      (".", "PUNCT", "other", 1)],
     []),
    ([("The", "DET", "other", 2), ("western", "ADJ", "amod", 2),
      ("food", "NOUN", "nsubj", 4), ("here", "ADV", "other", 4),
      ("is", "VERB", "ROOT", 4), ("surprisingly", "ADV", "other", 6),
      ("authentic", "ADJ", "acomp", 4), (".", "PUNCT", "other", 4)],
     ["western-food", "authentic-food"]),
    ([("The", "DET", "other", 2), ("mala", "NOUN", "other", 2),
      ("soup", "NOUN", "nsubj", 3), ("was", "VERB", "ROOT", 3),
      ("fiery", "ADJ", "acomp", 3), ("and", "OTHER", "other", 4),
      ("addictive", "ADJ", "other", 4), (".", "PUNCT", "other", 3)],
     ["fiery-soup", "addictive-soup"]),
    ([("Hot", "ADJ", "amod", 1), ("food", "NOUN", "ROOT", 1),
      (",", "PUNCT", "other", 1), ("cold", "ADJ", "amod", 4),
      ("service", "NOUN", "other", 1), (".", "PUNCT", "other", 1)],
     ["hot-food", "cold-service"]),
    ([("The", "DET", "other", 1), ("teriyaki", "NOUN", "nsubj", 2),
      ("was", "VERB", "ROOT", 2), ("too", "ADV", "other", 4),
      ("salty", "ADJ", "acomp", 2), ("for", "ADP", "other", 4),
      ("my", "PRON", "other", 7), ("liking", "NOUN", "other", 5),
      (".", "PUNCT", "other", 2)],
     ["salty-teriyaki"]),
    ([("Lovely", "ADJ", "amod", 1), ("desserts", "NOUN", "nsubj", 3),
      ("but", "OTHER", "other", 3), ("expect", "VERB", "ROOT", 3),
      ("a", "DET", "other", 6), ("slow", "ADJ", "amod", 6),
      ("line", "NOUN", "other", 3), (".", "PUNCT", "other", 3)],
     ["lovely-desserts", "slow-line"]),
]


def main():
    lines = []
    n_extracted = 0
    n_matched = 0
    for rows, gold in SENTENCES:
        tokens = [
            AnnotatedToken(index=i, text=t, pos=p, dep=d, head=h)
            for i, (t, p, d, h) in enumerate(rows)
        ]
        sentence = AnnotatedSentence(tokens)  # validates the tree
        got = [p.display() for p in extract_pairs(sentence)]
        remaining = list(gold)
        for tag in got:
            n_extracted += 1
            if tag in remaining:
                remaining.remove(tag)
                n_matched += 1
        for tok in tokens:
            lines.append(f"{tok.index}\t{tok.text}\t{tok.pos}\t{tok.head}\t{tok.dep}")
        if gold:
            lines.append("#pairs\t" + ",".join(gold))
        lines.append("")
    OUT.parent.mkdir(parents=True, exist_ok=True)
    OUT.write_text("\n".join(lines), encoding="utf-8")
    precision = n_matched / n_extracted
    print(f"{len(SENTENCES)} sentences, {n_extracted} extracted, "
          f"{n_matched} matched gold, precision {precision:.4f}")
    print(f"wrote {OUT}")


if __name__ == "__main__":
    main()
