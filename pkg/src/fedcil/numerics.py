"""Dense kernels for the attention/loss path.

Matrices are plain C-contiguous float64 ndarrays (row-major), which is the
artifact-wide convention; the wire format is the only place 32-bit floats
appear. All kernels are pure functions with fixed reduction order, so equal
inputs give bit-equal outputs across runs and thread schedules. Shapes may
carry leading batch dimensions; the contracts below are stated for the
trailing two axes.
"""

from __future__ import annotations

import numpy as np


class ShapeError(ValueError):
    """Operand dimensions violate an operation's contract."""


class DegenerateInputError(ValueError):
    """Input is outside an operation's domain (e.g. zero vector)."""


def as_matrix(a) -> np.ndarray:
    m = np.asarray(a, dtype=np.float64)
    if m.ndim < 2:
        raise ShapeError(f"expected a matrix, got shape {m.shape}")
    return m


def matmul(a, b) -> np.ndarray:
    """Matrix product with 64-bit accumulation.

    Supports broadcast batch dimensions; the contraction requires
    a.shape[-1] == b.shape[-2].
    """
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    if a.shape[-1] != b.shape[-2 if b.ndim > 1 else 0]:
        raise ShapeError(f"matmul inner dims differ: {a.shape} x {b.shape}")
    return np.matmul(a, b)


def softmax_rows(m) -> np.ndarray:
    """Row-wise softmax with per-row max subtraction (overflow-safe)."""
    m = np.asarray(m, dtype=np.float64)
    shifted = m - m.max(axis=-1, keepdims=True)
    e = np.exp(shifted)
    return e / e.sum(axis=-1, keepdims=True)


def scaled_dot_attention(q, k, v) -> np.ndarray:
    """softmax(q kᵀ / sqrt(d)) v with d = q.shape[-1].

    Output rows are convex combinations of v's rows.
    """
    q = np.asarray(q, dtype=np.float64)
    k = np.asarray(k, dtype=np.float64)
    v = np.asarray(v, dtype=np.float64)
    if q.shape[-1] != k.shape[-1]:
        raise ShapeError(f"query/key widths differ: {q.shape} vs {k.shape}")
    if k.shape[-2] != v.shape[-2]:
        raise ShapeError(f"key/value row counts differ: {k.shape} vs {v.shape}")
    scores = np.matmul(q, np.swapaxes(k, -1, -2)) / np.sqrt(q.shape[-1])
    return np.matmul(softmax_rows(scores), v)


def log_softmax_rows(m) -> np.ndarray:
    m = np.asarray(m, dtype=np.float64)
    shifted = m - m.max(axis=-1, keepdims=True)
    return shifted - np.log(np.exp(shifted).sum(axis=-1, keepdims=True))


def cross_entropy(logits, label: int) -> float:
    """-log softmax(logits)[label] for a single logit vector."""
    logits = np.asarray(logits, dtype=np.float64)
    if logits.ndim != 1:
        raise ShapeError(f"expected a logit vector, got shape {logits.shape}")
    if not 0 <= label < logits.shape[0]:
        raise IndexError(f"label {label} outside [0, {logits.shape[0]})")
    return float(-log_softmax_rows(logits[None, :])[0, label])


def cosine_sim(u, v) -> float:
    """u·v / (‖u‖‖v‖), in [-1, 1]; both vectors must be nonzero."""
    u = np.asarray(u, dtype=np.float64).ravel()
    v = np.asarray(v, dtype=np.float64).ravel()
    if u.shape != v.shape:
        raise ShapeError(f"vector lengths differ: {u.shape} vs {v.shape}")
    nu = np.linalg.norm(u)
    nv = np.linalg.norm(v)
    if nu == 0.0 or nv == 0.0:
        raise DegenerateInputError("cosine similarity of a zero vector")
    return float(np.clip(np.dot(u, v) / (nu * nv), -1.0, 1.0))
