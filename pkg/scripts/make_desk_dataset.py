#!/usr/bin/env python3
"""Generate the bundled desk-scale dataset under data/.

Ten food topics, each with one query, ~9 on-topic reviews (judged relevant)
and 3 incoming_trap reviews from other topics (judged irrelevant). Traps
mention the target query's words a few times inside long off-topic text, so
plain term-matching ranks them high while the semantic and category signals
place them correctly. Word vectors give each topic an orthogonal base
direction; generic words live in a separate subspace.

Outputs: reviews.jsonl, services.jsonl, queries.tsv, judgments.tsv,
vectors.txt. Deterministic for a fixed seed.
"""

import json
import sys
from pathlib import Path

import numpy as np

ROOT = Path(__file__).resolve().parent.parent
DATA = ROOT / "data"
sys.path.insert(0, str(ROOT / "src"))

SEED = 20240817
DIM = 16

TOPICS = [
    {
        "key": "laksa",
        "service": ("s01", "Laksa Corner", "North Spine Canteen"),
        "categories": ["laksa", "noodles", "local"],
        "cluster": ["laksa", "lemak", "coconut", "gravy", "sambal", "cockles"],
        "query": "rich coconut laksa gravy",
        "dish": "laksa",
        "phrases": [
            "The laksa gravy was rich and lemak.",
            "Thick coconut gravy with fresh cockles.",
            "Their laksa has a fragrant sambal kick.",
            "The coconut broth of the laksa is creamy.",
            "Generous cockles and a rich gravy.",
            "The laksa here tastes authentic.",
            "Silky noodles soaked in lemak coconut gravy.",
            "The sambal was not spicy enough for me.",
            "The laksa was watery today and the cockles were tiny.",
        ],
    },
    {
        "key": "chicken_rice",
        "service": ("s02", "Hainan Famous Chicken Rice", "Canteen 2"),
        "categories": ["chicken", "rice", "local"],
        "cluster": ["chicken", "rice", "hainanese", "roasted", "steamed", "ginger"],
        "query": "tender hainanese chicken rice",
        "dish": "chicken rice",
        "phrases": [
            "The steamed chicken was tender and smooth.",
            "Fragrant rice with a punchy ginger sauce.",
            "Their hainanese chicken rice is the best on campus.",
            "Roasted chicken was juicy, the rice fluffy.",
            "Tender chicken over oily fragrant rice.",
            "The ginger chilli lifted the whole plate.",
            "Hainanese style done right, silky chicken.",
            "The chicken was a bit dry this time.",
            "Rice was bland and the queue was long.",
        ],
    },
    {
        "key": "ramen",
        "service": ("s03", "Tonkotsu House", "North Hill Food Court"),
        "categories": ["ramen", "japanese", "noodles"],
        "cluster": ["ramen", "tonkotsu", "broth", "chashu", "miso", "ajitama"],
        "query": "creamy tonkotsu ramen broth",
        "dish": "ramen",
        "phrases": [
            "The tonkotsu broth was creamy and deep.",
            "Chashu melts in your mouth, broth is rich.",
            "Their miso ramen is comforting on rainy days.",
            "Springy noodles and a milky tonkotsu broth.",
            "The ajitama egg was perfectly jammy.",
            "Ramen broth simmered properly, not salty.",
            "Creamy broth that clings to the noodles.",
            "The chashu was fatty and the broth lukewarm.",
            "Ramen was average and the miso too salty.",
        ],
    },
    {
        "key": "pizza",
        "service": ("s04", "Crust & Co", "South Spine"),
        "categories": ["pizza", "italian", "western"],
        "cluster": ["pizza", "crust", "margherita", "mozzarella", "pepperoni", "oven"],
        "query": "crispy thin crust pizza",
        "dish": "pizza",
        "phrases": [
            "Thin crust pizza with bubbling mozzarella.",
            "The margherita came out of the oven blistered and crispy.",
            "Pepperoni pizza with a crackly thin crust.",
            "The crust was crispy outside and chewy inside.",
            "Proper wood oven pizza, smoky crust.",
            "Mozzarella was fresh and the crust thin.",
            "The pizza crust stayed crispy to the last slice.",
            "The pizza was greasy and the crust soggy.",
            "Margherita was bland, crust undercooked.",
        ],
    },
    {
        "key": "sushi",
        "service": ("s05", "Sakura Sushi Bar", "Canteen 11"),
        "categories": ["sushi", "sashimi", "japanese"],
        "cluster": ["sushi", "salmon", "sashimi", "maki", "nigiri", "wasabi"],
        "query": "fresh salmon sashimi platter",
        "dish": "sushi",
        "phrases": [
            "The salmon sashimi was fresh and buttery.",
            "Nigiri rice seasoned well, salmon melts.",
            "Their maki rolls are generous with fillings.",
            "Fresh sashimi platter at a student price.",
            "The salmon nigiri was thick cut and sweet.",
            "Wasabi was freshly grated, sushi rice warm.",
            "Sashimi slices were glistening and fresh.",
            "The maki was falling apart and the rice sour.",
            "Salmon tasted fishy, not fresh at all.",
        ],
    },
    {
        "key": "burger",
        "service": ("s06", "Griddle Bros", "South Spine Food Court"),
        "categories": ["burger", "western", "fastfood"],
        "cluster": ["burger", "beef", "patty", "bun", "fries", "cheddar"],
        "query": "juicy beef burger fries",
        "dish": "burger",
        "phrases": [
            "The beef patty was juicy and smashed crisp.",
            "Brioche bun toasted, cheddar properly melted.",
            "Thick beef burger with crispy golden fries.",
            "The fries were hot and salty, burger juicy.",
            "Patty cooked medium, bun soft and buttery.",
            "Their double beef burger is a steal.",
            "Juicy burger, though the fries were limp.",
            "The bun was stale and the patty overcooked.",
            "Burger was dry and the fries cold.",
        ],
    },
    {
        "key": "salad",
        "service": ("s07", "Green Bowl", "The Hive"),
        "categories": ["salad", "healthy", "western"],
        "cluster": ["salad", "greens", "avocado", "quinoa", "dressing", "grain"],
        "query": "healthy avocado salad bowl",
        "dish": "salad",
        "phrases": [
            "Crunchy greens with creamy avocado.",
            "The quinoa grain bowl keeps me full.",
            "Dressing was tangy, salad very fresh.",
            "Generous avocado in the salad bowl.",
            "Healthy portions, crisp greens, good value.",
            "Their grain salad with avocado is my regular.",
            "The salad was fresh though the dressing heavy.",
            "Greens were wilted and the avocado brown.",
            "Quinoa was undercooked, salad disappointing.",
        ],
    },
    {
        "key": "kopi",
        "service": ("s08", "Uncle Kopi & Toast", "Canteen 1"),
        "categories": ["coffee", "toast", "breakfast"],
        "cluster": ["kopi", "kaya", "toast", "teh", "butter", "eggs"],
        "query": "strong kopi kaya toast",
        "dish": "kaya toast",
        "phrases": [
            "The kopi was strong and aromatic.",
            "Kaya toast crisp with a thick slab of butter.",
            "Soft boiled eggs with dark soy, classic.",
            "Their teh is fragrant and not too sweet.",
            "Strong kopi that actually wakes you up.",
            "The kaya was homemade and pandan heavy.",
            "Toast charred just right, butter cold.",
            "The kopi was watery and the toast stale.",
            "Kaya toast was soggy, eggs overcooked.",
        ],
    },
    {
        "key": "dessert",
        "service": ("s09", "Waffle Theory", "North Spine Plaza"),
        "categories": ["dessert", "waffle", "ice cream"],
        "cluster": ["waffle", "gelato", "chocolate", "ice", "cream", "scoop"],
        "query": "chocolate waffle ice cream",
        "dish": "waffle",
        "phrases": [
            "Crispy waffle with a generous scoop of gelato.",
            "The chocolate ice cream was dense and dark.",
            "Waffle was fluffy inside, crisp outside.",
            "Their sea salt gelato on a warm waffle is perfect.",
            "Thick chocolate sauce over vanilla ice cream.",
            "The scoop sizes are generous for the price.",
            "Waffle came hot with melting ice cream.",
            "The waffle was dense and the gelato icy.",
            "Chocolate tasted artificial, waffle soggy.",
        ],
    },
    {
        "key": "crab",
        "service": ("s10", "Zichar Seafood Palace", "Canteen 9"),
        "categories": ["seafood", "crab", "zichar"],
        "cluster": ["crab", "chilli", "pepper", "zichar", "prawns", "claws"],
        "query": "spicy chilli crab",
        "dish": "chilli crab",
        "phrases": [
            "The chilli crab gravy begs for fried buns.",
            "Black pepper crab with meaty claws.",
            "Their zichar plates are wok hei heavy.",
            "Crab was fresh, chilli sauce balanced.",
            "Spicy chilli crab worth the messy fingers.",
            "Cereal prawns were crispy and sweet.",
            "The pepper crab was fiery and addictive.",
            "The crab was small and mostly shell.",
            "Chilli sauce was too sweet, crab overcooked.",
        ],
    },
]

# Review texts bolt one of these onto a topic phrase for variety.
EXTRAS = [
    "The queue was long but worth it.",
    "Prices are reasonable for campus food.",
    "The uncle was friendly.",
    "The auntie remembered my order.",
    "Portions were generous.",
    "Seats were hard to find at noon.",
    "Service was quick even at peak hour.",
    "The stall is clean and bright.",
    "I will be back next week.",
    "My friends all ordered seconds.",
]

# Generic (non-topic) words that get vectors in the shared subspace.
GENERIC_WORDS = [
    "rich", "tender", "creamy", "crispy", "fresh", "juicy", "healthy",
    "strong", "spicy", "thin", "good", "great", "bad", "bland", "salty",
    "sweet", "watery", "soggy", "dry", "hot", "cold", "long", "generous",
    "friendly", "clean", "quick", "reasonable", "the", "was", "and",
    "with", "here", "food", "stall", "queue", "place", "price", "prices",
    "portion", "portions", "uncle", "auntie", "service", "lunch", "campus",
    "noodles", "platter", "bowl", "sauce", "egg", "plate", "order",
]

# Each topic sends one trap review to each of these offsets.
TRAP_OFFSETS = (1, 3, 5)

LABEL_CYCLE = [4, 3, 4, 3, 3, 4, 2, 1, 0]  # for the 9 on-topic phrases


def _query_words(target):
    q_tokens = target["query"].split()
    cluster_q = [w for w in q_tokens if w in target["cluster"]]
    generic_q = [w for w in q_tokens if w not in target["cluster"]]
    w1 = cluster_q[0] if cluster_q else q_tokens[0]
    w2 = cluster_q[1] if len(cluster_q) > 1 else w1
    g = generic_q[0] if generic_q else q_tokens[-1]
    return w1, w2, g


def long_trap_text(own, target, rng):
    """Long off-topic review that name-drops the target query's words.

    High term frequency in a long document: tf-idf rewards it, BM25's
    length normalization reins it in."""
    w1, w2, g = _query_words(target)
    own_bits = rng.choice(own["phrases"][:7], size=3, replace=False)
    return (
        f"I actually came for the {w1} stall next door because I wanted "
        f"something {g}, but the {w1} queue was insane and they ran out of "
        f"{w2}, so I settled for {own['dish']} here instead. "
        f"{own_bits[0]} {own_bits[1]} {own_bits[2]} "
        f"Honestly I forgot all about the {w1} after the first bite."
    )


def short_trap_text(own, target):
    """Short, query-term-dense review: outscores on-topic documents under
    plain term matching even with length normalization."""
    w1, w2, g = _query_words(target)
    return (
        f"Do not bother hunting for {g} {w1} {w2} today, the {own['dish']} "
        f"here beats any {w1} stall in school."
    )


def build_reviews(rng):
    reviews = []
    judgments = []
    rid = 0
    timestamp = 1_700_000_000

    def next_id():
        nonlocal rid
        rid += 1
        return f"r{rid:03d}"

    for ti, topic in enumerate(TOPICS):
        qid = f"q{ti + 1:02d}"
        sid = topic["service"][0]
        for pi, phrase in enumerate(topic["phrases"]):
            extra = EXTRAS[(ti * 3 + pi) % len(EXTRAS)]
            doc_id = next_id()
            reviews.append({
                "id": doc_id,
                "service_id": sid,
                "text": f"{phrase} {extra}",
                "label": LABEL_CYCLE[pi % len(LABEL_CYCLE)],
                "categories": topic["categories"],
                "timestamp": timestamp + rid * 1000,
            })
            judgments.append((qid, doc_id, 1))
        for offset in TRAP_OFFSETS:
            target_i = (ti + offset) % len(TOPICS)
            target = TOPICS[target_i]
            doc_id = next_id()
            if offset == TRAP_OFFSETS[0]:
                text = short_trap_text(topic, target)
            else:
                text = long_trap_text(topic, target, rng)
            reviews.append({
                "id": doc_id,
                "service_id": sid,
                "text": text,
                "label": int(rng.integers(1, 4)),
                "categories": topic["categories"],
                "timestamp": timestamp + rid * 1000,
            })
            # Irrelevant to the query it name-drops, relevant to its own topic.
            judgments.append((f"q{target_i + 1:02d}", doc_id, 0))
            judgments.append((qid, doc_id, 1))
    return reviews, judgments


def build_vectors(rng):
    """Topic words get orthogonal base directions; generic words share a
    separate subspace so they never discriminate between topics."""
    vectors = {}
    for ti, topic in enumerate(TOPICS):
        base = np.zeros(DIM)
        base[ti] = 1.0
        for word in topic["cluster"]:
            noise = np.zeros(DIM)
            noise[len(TOPICS):] = rng.normal(0.0, 0.08, size=DIM - len(TOPICS))
            vectors[word] = base + noise
    for word in GENERIC_WORDS:
        if word in vectors:
            continue
        vec = np.zeros(DIM)
        vec[len(TOPICS):] = rng.normal(0.0, 0.35, size=DIM - len(TOPICS))
        vectors[word] = vec
    return vectors


def main():
    rng = np.random.default_rng(SEED)
    DATA.mkdir(parents=True, exist_ok=True)

    reviews, judgments = build_reviews(rng)
    with open(DATA / "reviews.jsonl", "w", encoding="utf-8") as fh:
        for r in reviews:
            fh.write(json.dumps(r, ensure_ascii=False) + "\n")

    with open(DATA / "services.jsonl", "w", encoding="utf-8") as fh:
        for topic in TOPICS:
            sid, name, location = topic["service"]
            fh.write(json.dumps({
                "id": sid, "name": name,
                "categories": topic["categories"], "location": location,
            }, ensure_ascii=False) + "\n")

    with open(DATA / "queries.tsv", "w", encoding="utf-8") as fh:
        for ti, topic in enumerate(TOPICS):
            fh.write(f"q{ti + 1:02d}\t{topic['query']}\n")

    with open(DATA / "judgments.tsv", "w", encoding="utf-8") as fh:
        for qid, doc_id, label in judgments:
            fh.write(f"{qid}\t{doc_id}\t{label}\n")

    vectors = build_vectors(rng)
    with open(DATA / "vectors.txt", "w", encoding="utf-8") as fh:
        for word in sorted(vectors):
            vals = " ".join(f"{v:.5f}" for v in vectors[word])
            fh.write(f"{word} {vals}\n")

    n_rel = sum(1 for _, _, label in judgments if label == 1)
    print(f"{len(reviews)} reviews, {len(TOPICS)} services, "
          f"{len(TOPICS)} queries, {len(judgments)} judgments ({n_rel} relevant), "
          f"{len(vectors)} word vectors (dim {DIM})")


if __name__ == "__main__":
    main()
