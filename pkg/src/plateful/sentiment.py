"""Five-class review sentiment classifier built from scratch on numpy.

Architecture: embedding -> bidirectional LSTM -> 1-D global max pooling over
non-padding steps -> dense ReLU -> inverted dropout -> softmax. Training is
plain backpropagation-through-time with Adam.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field

import numpy as np

from .corpus import tokenize
from .embeddings import EmbeddingTable

PAD_INDEX = 0
UNK_INDEX = 1

CHECKPOINT_VERSION = "lstm-v1"

_GATES = ("i", "f", "c", "o")
_DIRECTIONS = ("fwd", "bwd")


@dataclass(frozen=True)
class LstmConfig:
    max_len: int = 32
    embed_dim: int = 50
    lstm_units: int = 8
    hidden_dim: int = 8
    num_classes: int = 5
    dropout: float = 0.1
    recurrent_dropout: float = 0.1
    learning_rate: float = 1e-3
    seed: int = 42

    def __post_init__(self):
        for name in ("max_len", "embed_dim", "lstm_units", "hidden_dim", "num_classes"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be positive")
        for name in ("dropout", "recurrent_dropout"):
            if not 0.0 <= getattr(self, name) < 1.0:
                raise ValueError(f"{name} must be in [0, 1)")
        if self.learning_rate <= 0:
            raise ValueError("learning_rate must be > 0")


class Vocabulary:
    """word -> index map; index 0 is padding, index 1 is unknown."""

    def __init__(self, word_to_index: dict[str, int]):
        indices = sorted(word_to_index.values())
        if indices and indices != list(range(2, 2 + len(indices))):
            raise ValueError("word indices must be contiguous starting at 2")
        self.word_to_index = dict(word_to_index)

    @classmethod
    def build(cls, token_lists, max_size: int | None = None) -> "Vocabulary":
        """Assign indices by descending frequency, ties alphabetical."""
        freq: dict[str, int] = {}
        for tokens in token_lists:
            for tok in tokens:
                freq[tok] = freq.get(tok, 0) + 1
        ordered = sorted(freq, key=lambda w: (-freq[w], w))
        if max_size is not None:
            ordered = ordered[:max_size]
        return cls({w: i + 2 for i, w in enumerate(ordered)})

    @property
    def size(self) -> int:
        """Total index count including padding and unknown."""
        return len(self.word_to_index) + 2

    def index_of(self, word: str) -> int:
        return self.word_to_index.get(word, UNK_INDEX)


def encode(vocab: Vocabulary, tokens, max_len: int) -> np.ndarray:
    """Map tokens to indices, truncate to max_len, right-pad with 0."""
    ids = [vocab.index_of(t) for t in tokens[:max_len]]
    ids.extend([PAD_INDEX] * (max_len - len(ids)))
    return np.array(ids, dtype=np.int64)


def _param_names(config: LstmConfig):
    names = ["embedding"]
    for d in _DIRECTIONS:
        for g in _GATES:
            names.extend([f"{d}_W_{g}", f"{d}_U_{g}", f"{d}_b_{g}"])
    names.extend(["dense_W", "dense_b", "out_W", "out_b"])
    return names


@dataclass
class LstmModel:
    config: LstmConfig
    vocab_size: int
    params: dict[str, np.ndarray]


def init_model(config: LstmConfig, vocab: Vocabulary,
               pretrained: EmbeddingTable | None = None) -> LstmModel:
    """Seeded uniform(-0.05, 0.05) init; zero biases except forget gate = 1.

    When a pretrained word-vector table is given, matching vocabulary rows
    start from those vectors and stay trainable.
    """
    rng = np.random.default_rng(config.seed)
    e, h, hid, k = config.embed_dim, config.lstm_units, config.hidden_dim, config.num_classes
    v = vocab.size

    def uniform(*shape):
        return rng.uniform(-0.05, 0.05, size=shape)

    params: dict[str, np.ndarray] = {}
    params["embedding"] = uniform(v, e)
    params["embedding"][PAD_INDEX] = 0.0
    for d in _DIRECTIONS:
        for g in _GATES:
            params[f"{d}_W_{g}"] = uniform(e, h)
            params[f"{d}_U_{g}"] = uniform(h, h)
            params[f"{d}_b_{g}"] = np.full(h, 1.0) if g == "f" else np.zeros(h)
    params["dense_W"] = uniform(2 * h, hid)
    params["dense_b"] = np.zeros(hid)
    params["out_W"] = uniform(hid, k)
    params["out_b"] = np.zeros(k)

    if pretrained is not None:
        if pretrained.dim != e:
            raise ValueError(
                f"pretrained vectors have dim {pretrained.dim}, config wants {e}"
            )
        for word, idx in vocab.word_to_index.items():
            if word in pretrained.vectors:
                params["embedding"][idx] = pretrained.vectors[word]
    return LstmModel(config=config, vocab_size=v, params=params)


def _sigmoid(x):
    out = np.empty_like(x)
    pos = x >= 0
    out[pos] = 1.0 / (1.0 + np.exp(-x[pos]))
    ex = np.exp(x[~pos])
    out[~pos] = ex / (1.0 + ex)
    return out


def _softmax(logits):
    shifted = logits - np.max(logits)
    ex = np.exp(shifted)
    return ex / np.sum(ex)


def forward(model: LstmModel, sequence, training: bool = False, rng=None):
    """Run the network; returns (class probabilities, cache for backward).

    Positions with the padding index are excluded from the recurrence and
    the max pool, so extra padding never changes the output. Inverted
    dropout (scaled by 1/(1-p)) fires only when training.
    """
    cfg = model.config
    p = model.params
    seq = np.asarray(sequence, dtype=np.int64)
    if seq.shape != (cfg.max_len,):
        raise ValueError(f"sequence must have length {cfg.max_len}, got {seq.shape}")
    if training and rng is None:
        rng = np.random.default_rng(cfg.seed)

    real = [t for t in range(cfg.max_len) if seq[t] != PAD_INDEX]
    length = len(real)
    h_units = cfg.lstm_units
    x_rows = p["embedding"][seq[real]] if length else np.zeros((0, cfg.embed_dim))

    rec_masks = {}
    for d in _DIRECTIONS:
        if training and cfg.recurrent_dropout > 0.0:
            keep = rng.random(h_units) >= cfg.recurrent_dropout
            rec_masks[d] = keep / (1.0 - cfg.recurrent_dropout)
        else:
            rec_masks[d] = np.ones(h_units)

    dir_caches = {}
    outputs = np.zeros((length, 2 * h_units))
    for di, d in enumerate(_DIRECTIONS):
        order = range(length) if d == "fwd" else range(length - 1, -1, -1)
        mask = rec_masks[d]
        h = np.zeros(h_units)
        c = np.zeros(h_units)
        steps = []
        for j in order:
            x = x_rows[j]
            h_used = h * mask
            gi = _sigmoid(x @ p[f"{d}_W_i"] + h_used @ p[f"{d}_U_i"] + p[f"{d}_b_i"])
            gf = _sigmoid(x @ p[f"{d}_W_f"] + h_used @ p[f"{d}_U_f"] + p[f"{d}_b_f"])
            gc = np.tanh(x @ p[f"{d}_W_c"] + h_used @ p[f"{d}_U_c"] + p[f"{d}_b_c"])
            go = _sigmoid(x @ p[f"{d}_W_o"] + h_used @ p[f"{d}_U_o"] + p[f"{d}_b_o"])
            c_new = gf * c + gi * gc
            h_new = go * np.tanh(c_new)
            steps.append(
                {"j": j, "x": x, "h_used": h_used, "c_prev": c,
                 "i": gi, "f": gf, "g": gc, "o": go, "c": c_new}
            )
            h, c = h_new, c_new
            outputs[j, di * h_units:(di + 1) * h_units] = h_new
        dir_caches[d] = steps

    if length:
        pooled = outputs.max(axis=0)
        pool_arg = outputs.argmax(axis=0)
    else:
        pooled = np.zeros(2 * h_units)
        pool_arg = None

    z = pooled @ p["dense_W"] + p["dense_b"]
    a = np.maximum(z, 0.0)
    if training and cfg.dropout > 0.0:
        keep = rng.random(cfg.hidden_dim) >= cfg.dropout
        drop_mask = keep / (1.0 - cfg.dropout)
    else:
        drop_mask = np.ones(cfg.hidden_dim)
    a_dropped = a * drop_mask
    logits = a_dropped @ p["out_W"] + p["out_b"]
    probs = _softmax(logits)

    cache = {
        "seq": seq, "real": real, "length": length, "x_rows": x_rows,
        "rec_masks": rec_masks, "dir_caches": dir_caches, "outputs": outputs,
        "pooled": pooled, "pool_arg": pool_arg, "z": z, "a": a,
        "drop_mask": drop_mask, "a_dropped": a_dropped, "probs": probs,
    }
    return probs, cache


def loss(probabilities, label: int) -> float:
    """Categorical cross-entropy: -ln p[label]."""
    probabilities = np.asarray(probabilities)
    if not 0 <= label < probabilities.shape[0]:
        raise ValueError(f"label {label} out of range")
    return float(-np.log(probabilities[label]))


def backward(model: LstmModel, cache, label: int) -> dict[str, np.ndarray]:
    """Analytic gradients of the cross-entropy loss for every parameter."""
    cfg = model.config
    p = model.params
    h_units = cfg.lstm_units
    grads = {name: np.zeros_like(arr) for name, arr in p.items()}

    d_logits = cache["probs"].copy()
    d_logits[label] -= 1.0
    grads["out_W"] = np.outer(cache["a_dropped"], d_logits)
    grads["out_b"] = d_logits
    d_a_dropped = p["out_W"] @ d_logits
    d_a = d_a_dropped * cache["drop_mask"]
    d_z = d_a * (cache["z"] > 0.0)
    grads["dense_W"] = np.outer(cache["pooled"], d_z)
    grads["dense_b"] = d_z
    d_pooled = p["dense_W"] @ d_z

    length = cache["length"]
    if length == 0:
        return grads

    d_outputs = np.zeros_like(cache["outputs"])
    for k, j in enumerate(cache["pool_arg"]):
        d_outputs[j, k] += d_pooled[k]

    d_x_rows = np.zeros_like(cache["x_rows"])
    for di, d in enumerate(_DIRECTIONS):
        mask = cache["rec_masks"][d]
        d_h_next = np.zeros(h_units)
        d_c_next = np.zeros(h_units)
        for step in reversed(cache["dir_caches"][d]):
            j = step["j"]
            d_h = d_outputs[j, di * h_units:(di + 1) * h_units] + d_h_next
            tanh_c = np.tanh(step["c"])
            d_o = d_h * tanh_c
            d_c = d_h * step["o"] * (1.0 - tanh_c ** 2) + d_c_next
            d_f = d_c * step["c_prev"]
            d_i = d_c * step["g"]
            d_g = d_c * step["i"]
            d_c_prev = d_c * step["f"]
            pre = {
                "i": d_i * step["i"] * (1.0 - step["i"]),
                "f": d_f * step["f"] * (1.0 - step["f"]),
                "c": d_g * (1.0 - step["g"] ** 2),
                "o": d_o * step["o"] * (1.0 - step["o"]),
            }
            d_x = np.zeros(cfg.embed_dim)
            d_h_used = np.zeros(h_units)
            for g in _GATES:
                grads[f"{d}_W_{g}"] += np.outer(step["x"], pre[g])
                grads[f"{d}_U_{g}"] += np.outer(step["h_used"], pre[g])
                grads[f"{d}_b_{g}"] += pre[g]
                d_x += p[f"{d}_W_{g}"] @ pre[g]
                d_h_used += p[f"{d}_U_{g}"] @ pre[g]
            d_x_rows[j] += d_x
            d_h_next = d_h_used * mask
            d_c_next = d_c_prev

    for j, pos in enumerate(cache["real"]):
        grads["embedding"][cache["seq"][pos]] += d_x_rows[j]
    grads["embedding"][PAD_INDEX] = 0.0
    return grads


@dataclass
class AdamState:
    m: dict[str, np.ndarray]
    v: dict[str, np.ndarray]
    t: int = 0
    beta1: float = 0.9
    beta2: float = 0.999
    eps: float = 1e-8


def init_adam(model: LstmModel) -> AdamState:
    return AdamState(
        m={k: np.zeros_like(a) for k, a in model.params.items()},
        v={k: np.zeros_like(a) for k, a in model.params.items()},
    )


def adam_step(params: dict[str, np.ndarray], grads: dict[str, np.ndarray],
              state: AdamState, lr: float) -> None:
    """One bias-corrected Adam update, in place."""
    state.t += 1
    b1, b2 = state.beta1, state.beta2
    for name, g in grads.items():
        state.m[name] = b1 * state.m[name] + (1.0 - b1) * g
        state.v[name] = b2 * state.v[name] + (1.0 - b2) * g * g
        m_hat = state.m[name] / (1.0 - b1 ** state.t)
        v_hat = state.v[name] / (1.0 - b2 ** state.t)
        params[name] -= lr * m_hat / (np.sqrt(v_hat) + state.eps)


@dataclass
class TrainHistory:
    losses: list[float] = field(default_factory=list)
    accuracies: list[float] = field(default_factory=list)


def train(model: LstmModel, dataset, epochs: int, batch_size: int,
          adam_state: AdamState, rng) -> TrainHistory:
    """Minibatch Adam training; per-epoch shuffling and dropout come from rng.

    dataset is a list of (encoded sequence, label) pairs. Each epoch ends
    with an inference-mode pass over the training set, whose mean loss and
    accuracy make up the history.
    """
    if not dataset:
        raise ValueError("dataset must be nonempty")
    if batch_size < 1:
        raise ValueError("batch_size must be >= 1")
    history = TrainHistory()
    n = len(dataset)
    for _ in range(epochs):
        order = rng.permutation(n)
        for start in range(0, n, batch_size):
            batch = order[start:start + batch_size]
            grad_sum = {k: np.zeros_like(a) for k, a in model.params.items()}
            for idx in batch:
                seq, label = dataset[idx]
                probs, cache = forward(model, seq, training=True, rng=rng)
                for name, g in backward(model, cache, label).items():
                    grad_sum[name] += g
            scale = 1.0 / len(batch)
            grads = {k: g * scale for k, g in grad_sum.items()}
            adam_step(model.params, grads, adam_state, model.config.learning_rate)
        total_loss = 0.0
        correct = 0
        for seq, label in dataset:
            probs, _ = forward(model, seq, training=False)
            total_loss += loss(probs, label)
            if int(np.argmax(probs)) == label:
                correct += 1
        history.losses.append(total_loss / n)
        history.accuracies.append(correct / n)
    return history


def predict(model: LstmModel, vocab: Vocabulary, text: str):
    """Classify raw text; returns (class, probabilities), ties to smallest class."""
    seq = encode(vocab, tokenize(text), model.config.max_len)
    probs, _ = forward(model, seq, training=False)
    return int(np.argmax(probs)), probs


def polarity(cls: int) -> str:
    """Star class to polarity: 0-1 negative, 2 neutral, 3-4 positive."""
    if cls in (0, 1):
        return "negative"
    if cls == 2:
        return "neutral"
    if cls in (3, 4):
        return "positive"
    raise ValueError(f"class {cls} out of range")


def save_model(model: LstmModel, vocab: Vocabulary, path) -> None:
    payload = {
        "version": CHECKPOINT_VERSION,
        "config": asdict(model.config),
        "vocab": vocab.word_to_index,
        "shapes": {k: list(a.shape) for k, a in model.params.items()},
        "tensors": {k: a.ravel().tolist() for k, a in model.params.items()},
    }
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(payload, fh)


def load_model(path) -> tuple[LstmModel, Vocabulary]:
    with open(path, encoding="utf-8") as fh:
        payload = json.load(fh)
    if payload.get("version") != CHECKPOINT_VERSION:
        raise ValueError(f"unsupported checkpoint version {payload.get('version')!r}")
    config = LstmConfig(**payload["config"])
    vocab = Vocabulary(payload["vocab"])
    params = {
        name: np.array(payload["tensors"][name], dtype=np.float64).reshape(shape)
        for name, shape in payload["shapes"].items()
    }
    expected = set(_param_names(config))
    if set(params) != expected:
        raise ValueError("checkpoint tensors do not match the expected parameter set")
    return LstmModel(config=config, vocab_size=vocab.size, params=params), vocab
