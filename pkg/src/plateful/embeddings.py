"""Word vectors, mean-of-words sentence embedding, and cosine similarity."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .corpus import DataFormatError


@dataclass(frozen=True)
class EmbeddingTable:
    dim: int
    vectors: dict[str, np.ndarray]

    def __contains__(self, word: str) -> bool:
        return word in self.vectors


def load_embeddings(path, expected_dim: int) -> EmbeddingTable:
    """Load `word v1 v2 ... v_dim` lines; duplicate words keep the first occurrence."""
    if expected_dim < 1:
        raise ValueError(f"expected_dim must be positive, got {expected_dim}")
    vectors: dict[str, np.ndarray] = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            parts = line.split()
            if not parts:
                continue
            word, values = parts[0], parts[1:]
            if len(values) != expected_dim:
                raise DataFormatError(
                    f"line {lineno}: expected {expected_dim} floats, got {len(values)}"
                )
            try:
                vec = np.array([float(v) for v in values], dtype=np.float64)
            except ValueError as exc:
                raise DataFormatError(f"line {lineno}: unparsable float") from exc
            if word not in vectors:
                vectors[word] = vec
    return EmbeddingTable(dim=expected_dim, vectors=vectors)


def embed_sentence(table: EmbeddingTable, tokens) -> np.ndarray:
    """Mean of in-vocabulary token vectors; zero vector if none are known."""
    known = [table.vectors[t] for t in tokens if t in table.vectors]
    if not known:
        return np.zeros(table.dim, dtype=np.float64)
    return np.mean(known, axis=0)


def cosine(u, v) -> float:
    """u.v / (|u||v|), defined as 0.0 when either norm is zero."""
    u = np.asarray(u, dtype=np.float64)
    v = np.asarray(v, dtype=np.float64)
    if u.shape != v.shape:
        raise ValueError(f"length mismatch: {u.shape} vs {v.shape}")
    nu = np.linalg.norm(u)
    nv = np.linalg.norm(v)
    if nu == 0.0 or nv == 0.0:
        return 0.0
    return float(np.dot(u, v) / (nu * nv))


def load_doc_vectors(path, expected_dim: int) -> dict[str, np.ndarray]:
    """Load precomputed document vectors: doc_id<TAB>v1,v2,...,v_dim."""
    out: dict[str, np.ndarray] = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.rstrip("\n")
            if not line:
                continue
            parts = line.split("\t")
            if len(parts) != 2:
                raise DataFormatError(f"line {lineno}: expected doc_id<TAB>v1,v2,...")
            doc_id, raw = parts
            values = raw.split(",")
            if len(values) != expected_dim:
                raise DataFormatError(
                    f"line {lineno}: expected {expected_dim} floats, got {len(values)}"
                )
            try:
                out[doc_id] = np.array([float(v) for v in values], dtype=np.float64)
            except ValueError as exc:
                raise DataFormatError(f"line {lineno}: unparsable float") from exc
    return out
