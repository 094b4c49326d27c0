"""Detection of maximal repetitions of exponent > 1.

Two independent routes compute the same set:

* :func:`oracle_enumerate` applies the definition literally to every
  interval (quadratic table of minimal periods; intended for short words).
* :func:`enumerate_repetitions` scans match blocks per period and keeps a
  candidate exactly when no repetition of smaller period contains it, which
  is equivalent to "the interval's minimal period equals the scan period".

Also here: minimal periods of subwords, the repetition defined by a letter
match, and the two-class classification of repetitions by root/letter
isolation.
"""

from __future__ import annotations

import enum

from . import _kernels
from .errors import InputError
from .words import Repetition, RepetitionSet, Word


def minimal_period(word: Word, start: int, end: int) -> int:
    """Least p >= 1 with w[i] == w[i+p] throughout [start, end).

    Computed as length minus longest border of the subword.
    """
    n = len(word)
    if not (0 <= start < end <= n):
        raise InputError(f"empty or invalid range [{start}, {end}) for length {n}")
    w = word.symbols[start:end].tolist()
    m = len(w)
    f = [0] * (m + 1)
    k = 0
    for x in range(1, m):
        c = w[x]
        while k and c != w[k]:
            k = f[k]
        if c == w[k]:
            k += 1
        f[x + 1] = k
    return m - f[m]


def enumerate_repetitions(word: Word) -> RepetitionSet:
    """All maximal repetitions of exponent > 1, sorted by (start, end, period)."""
    starts, ends, periods = _kernels.collect(word.symbols)
    return RepetitionSet(word, starts, ends, periods)


def oracle_enumerate(word: Word) -> RepetitionSet:
    """Reference enumeration by exhaustive interval checking (O(n^2) space)."""
    starts, ends, periods = _kernels.oracle_collect(word.symbols)
    return RepetitionSet(word, starts, ends, periods)


def _extend(word: Word, start: int, end: int, p: int) -> tuple[int, int]:
    """Grow [start, end) while the distance-p letter match is preserved."""
    sym = word.symbols
    n = len(word)
    while start > 0 and sym[start - 1] == sym[start - 1 + p]:
        start -= 1
    while end < n and sym[end] == sym[end - p]:
        end += 1
    return start, end


def repetition_from_match(word: Word, i: int, j: int) -> Repetition:
    """The maximal repetition induced by the equal letters at positions i < j.

    The distance-(j-i) match region around the pair is extended outwards as
    far as it persists; the interval's period is then re-minimized and the
    interval re-extended at that period.  The result is always a member of
    ``enumerate_repetitions(word)`` containing both positions.
    """
    n = len(word)
    if not (0 <= i < j < n):
        raise InputError(f"need 0 <= i < j < n, got i={i}, j={j}, n={n}")
    if word[i] != word[j]:
        raise InputError(
            f"positions {i} and {j} hold different symbols ({word[i]} vs {word[j]})"
        )
    d = j - i
    start, end = _extend(word, i, i + d + 1, d)
    p = minimal_period(word, start, end)
    if p < d:
        start, end = _extend(word, start, end, p)
    return Repetition(start, end, p)


def is_maximal(word: Word, r: Repetition) -> bool:
    """Whether r is a well-formed member of the word's repetition set."""
    n = len(word)
    if not (0 <= r.start < r.end <= n) or not (1 <= r.period < r.length):
        return False
    if minimal_period(word, r.start, r.end) != r.period:
        return False
    if r.start > 0 and minimal_period(word, r.start - 1, r.end) <= r.period:
        return False
    if r.end < n and minimal_period(word, r.start, r.end + 1) <= r.period:
        return False
    return True


class RepetitionType(enum.Enum):
    """Binary classification used by the bounded-period sum analysis.

    TYPE1 repetitions have pairwise distinct letters inside the root and use
    letters occurring nowhere else in the word; every other maximal
    repetition is TYPE2.  Distinct TYPE1 intervals never intersect anything.
    """

    TYPE1 = 1
    TYPE2 = 2


def classify(word: Word, r: Repetition) -> RepetitionType:
    """Tag a maximal repetition as TYPE1 or TYPE2 (see RepetitionType)."""
    if not is_maximal(word, r):
        raise InputError(f"{r} is not a maximal repetition of this word")
    root = word.symbols[r.start : r.start + r.period].tolist()
    if len(set(root)) != r.period:
        return RepetitionType.TYPE2
    letters = set(word.symbols[r.start : r.end].tolist())
    outside = word.symbols[: r.start].tolist() + word.symbols[r.end :].tolist()
    if letters.intersection(outside):
        return RepetitionType.TYPE2
    return RepetitionType.TYPE1
