"""Deterministic, keyed random-number substreams.

Every source of randomness in a simulation is an `RngStream` addressed by a
root seed plus a structured key such as ``("train", client_id, round, task)``.
Streams with different keys are statistically independent, and the same
(seed, key) pair replays the identical sequence in any process or thread
schedule, which is what makes whole experiments bit-reproducible.
"""

from __future__ import annotations

import hashlib

import numpy as np

_MASK32 = 0xFFFFFFFF


def _key_words(part) -> tuple[int, ...]:
    """Map one key component to a stable pair of 32-bit words."""
    if isinstance(part, bool):
        part = int(part)
    if isinstance(part, (int, np.integer)):
        v = int(part) & 0xFFFFFFFFFFFFFFFF
        return (v & _MASK32, (v >> 32) & _MASK32)
    if isinstance(part, str):
        digest = hashlib.sha256(part.encode("utf-8")).digest()
        return (
            int.from_bytes(digest[:4], "little"),
            int.from_bytes(digest[4:8], "little"),
        )
    raise TypeError(f"unsupported key component {part!r} (use int or str)")


class RngStream:
    """One independent random stream for a (root seed, key) pair.

    The key is an arbitrary tuple of ints/strings naming the purpose of the
    stream, e.g. ``RngStream(2021, "select", round_idx, task_id)``. Python's
    built-in ``hash`` is salted per process, so string components are hashed
    with SHA-256 instead.
    """

    def __init__(self, root_seed: int, *key):
        if root_seed < 0:
            raise ValueError("root_seed must be non-negative")
        words: list[int] = []
        for part in key:
            words.extend(_key_words(part))
        self.root_seed = root_seed
        self.key = tuple(key)
        seq = np.random.SeedSequence(entropy=root_seed, spawn_key=tuple(words))
        self._gen = np.random.default_rng(seq)

    def normal(self, shape, std: float = 1.0) -> np.ndarray:
        return self._gen.normal(0.0, std, size=shape)

    def uniform(self, low: float = 0.0, high: float = 1.0, size=None):
        return self._gen.uniform(low, high, size=size)

    def permutation(self, n: int) -> np.ndarray:
        return self._gen.permutation(n)

    def integers(self, low: int, high: int, size=None):
        return self._gen.integers(low, high, size=size)

    def choice_without_replacement(self, n: int, k: int) -> np.ndarray:
        """k distinct draws from range(n), order as drawn."""
        if k > n:
            raise ValueError(f"cannot draw {k} distinct values from {n}")
        return self._gen.choice(n, size=k, replace=False)

    def __repr__(self) -> str:  # pragma: no cover
        return f"RngStream(seed={self.root_seed}, key={self.key})"
