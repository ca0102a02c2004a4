"""Splittable, order-independent seed derivation for random trials.

Every trial gets its own 64-bit substream id derived from the root
seed, a text label and the trial index; the id keys a counter-based
Philox generator, so trials can run in any order or in parallel and a
single trial can be replayed bit-for-bit from its id.
"""

import numpy as np

__all__ = ["fnv1a64", "mix64", "trial_seed", "generator"]

_MASK = (1 << 64) - 1
_FNV_OFFSET = 0xCBF29CE484222325
_FNV_PRIME = 0x100000001B3
_GOLDEN = 0x9E3779B97F4A7C15


def fnv1a64(text):
    """FNV-1a hash of a string, 64 bits."""
    h = _FNV_OFFSET
    for byte in text.encode("utf-8"):
        h ^= byte
        h = (h * _FNV_PRIME) & _MASK
    return h


def mix64(value):
    """SplitMix64 finalizer; a bijection on 64-bit integers."""
    z = value & _MASK
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
    return (z ^ (z >> 31)) & _MASK


def trial_seed(seed, label, index):
    """Substream id for trial ``index`` of the stream named ``label``."""
    z = (int(seed) ^ fnv1a64(label)) & _MASK
    z = (z + (int(index) + 1) * _GOLDEN) & _MASK
    return mix64(z)


def generator(substream):
    """Philox generator keyed by a 64-bit substream id."""
    key = np.array([substream & _MASK, 0], dtype=np.uint64)
    return np.random.Generator(np.random.Philox(key=key))
