"""Word families used for testing, sweeps and extremal search.

Deterministic constructions, a seeded uniform sampler, and an exhaustive
iterator over canonical words (one representative per class under alphabet
permutation).
"""

from __future__ import annotations

from typing import Iterator

import numpy as np

from .errors import InputError
from .words import Word

FAMILIES = ("cyclic", "zeroes-ones-power", "unary", "squares-blocks", "random")


def cyclic(k: int, n: int) -> Word:
    """The word (a_1 a_2 ... a_k)^(n/k); requires k | n."""
    if k < 1:
        raise InputError("k must be >= 1")
    if n < 0 or n % k != 0:
        raise InputError(f"k={k} must divide n={n}")
    return Word(np.tile(np.arange(k, dtype=np.int32), n // k), k)


def unary(n: int) -> Word:
    """a^n over a one-letter alphabet."""
    return cyclic(1, n)


def zeroes_ones_power(n: int) -> Word:
    """(0011)^(n/4) over a binary alphabet; requires 4 | n."""
    if n < 0 or n % 4 != 0:
        raise InputError(f"n must be a multiple of 4, got {n}")
    return Word(np.tile(np.array([0, 0, 1, 1], dtype=np.int32), n // 4), 2)


def squares_blocks(k: int, p: int) -> Word:
    """k/2 concatenated blocks (a a b b)^(p/4), each over its own two letters.

    Block t uses letters 2t and 2t+1, so the blocks share no letters; the
    total length is k*p/2.  Requires k even and 4 | p.
    """
    if k < 2 or k % 2 != 0:
        raise InputError(f"k must be even and >= 2, got {k}")
    if p < 0 or p % 4 != 0:
        raise InputError(f"p must be a multiple of 4, got {p}")
    parts = []
    for t in range(k // 2):
        block = np.array([2 * t, 2 * t, 2 * t + 1, 2 * t + 1], dtype=np.int32)
        parts.append(np.tile(block, p // 4))
    return Word(np.concatenate(parts) if parts else [], k)


def random_word(k: int, n: int, seed: int) -> Word:
    """Uniform word of length n over k letters, reproducible from the seed."""
    if k < 1:
        raise InputError("k must be >= 1")
    if n < 0:
        raise InputError("n must be >= 0")
    rng = np.random.default_rng(seed)
    return Word(rng.integers(0, k, size=n, dtype=np.int32), k)


def all_words(k: int, n: int) -> Iterator[Word]:
    """Canonical words of length n over at most k letters, lexicographically.

    Canonical means first occurrences of distinct symbols appear in
    increasing symbol order, so exactly one word per equivalence class under
    alphabet permutation is produced.
    """
    if k < 1:
        raise InputError("k must be >= 1")
    if n < 0:
        raise InputError("n must be >= 0")
    if n == 0:
        yield Word([], k)
        return
    digits = [0] * n
    while True:
        yield Word(digits, k)
        # odometer step under the restricted-growth constraint
        i = n - 1
        while i > 0:
            cap = min(max(digits[:i]) + 1, k - 1)
            if digits[i] < cap:
                break
            i -= 1
        if i == 0:
            return
        digits[i] += 1
        for j in range(i + 1, n):
            digits[j] = 0


def canonical_count(k: int, n: int) -> int:
    """Number of canonical words of length n over at most k letters.

    Restricted-growth-string count: sum over j <= k of Stirling numbers of
    the second kind S(n, j).
    """
    if n == 0:
        return 1
    # S[j] holds S(i, j) as i advances
    s = [0] * (k + 1)
    s[1] = 1 if k >= 1 else 0
    for _ in range(1, n):
        new = [0] * (k + 1)
        for j in range(1, k + 1):
            new[j] = j * s[j] + (s[j - 1] if j >= 1 else 0)
        s = new
    return sum(s)
