"""Gap profiles, the letter-exchange descent move, and exhaustive search.

The gap sum (sum of 1/d over the distances d between consecutive
occurrences of each letter) is a lower bound on the decremented exponent
sum and is what the exchange move strictly decreases.  The move applies
only to words whose prefix before the first "close pair" is perfectly
cyclic; anything else is rejected loudly rather than handled heuristically.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np

from . import detect, generate, stats
from .errors import BudgetError, InputError, PreconditionError
from .words import Word

DEFAULT_SEARCH_BUDGET = 10**8


@dataclass(frozen=True)
class GapProfile:
    """Distances between consecutive occurrences, one tuple per letter."""

    alphabet_size: int
    gaps: tuple  # tuple of tuples of ints, indexed by symbol id

    def total_gaps(self) -> int:
        return sum(len(g) for g in self.gaps)


def gap_profile(word: Word) -> GapProfile:
    """Consecutive-occurrence distance lists for every letter of the alphabet."""
    last = {}
    gaps = [[] for _ in range(word.alphabet_size)]
    for pos, s in enumerate(word):
        if s in last:
            gaps[s].append(pos - last[s])
        last[s] = pos
    return GapProfile(word.alphabet_size, tuple(tuple(g) for g in gaps))


def gap_sum(profile: GapProfile) -> Fraction:
    """Exact sum of 1/d over all recorded gaps."""
    total = Fraction(0)
    for g in profile.gaps:
        for d in g:
            total += Fraction(1, d)
    return total


def find_close_pair(word: Word, k: Optional[int] = None) -> Optional[tuple[int, int]]:
    """Positions (ml, mr), ml < mr, of equal letters at distance < k.

    Among all such pairs the one with minimal mr is returned, with ml the
    closest previous occurrence (maximal ml).  None if no pair exists.
    """
    k = word.alphabet_size if k is None else k
    if k < 2:
        raise InputError("k must be >= 2")
    last = {}
    for pos, s in enumerate(word):
        prev = last.get(s)
        if prev is not None and pos - prev < k:
            return prev, pos
        last[s] = pos
    return None


def _check_cyclic_prefix(word: Word, k: int, mr: int) -> None:
    """Verify w[0:mr] is (s_0 ... s_{k-1})^q s_0 ... with q >= 1."""
    if mr < k:
        raise PreconditionError(
            f"prefix of length {mr} before the close pair is shorter than "
            f"one full cycle of {k} distinct letters"
        )
    lead = word.symbols[:k].tolist()
    if len(set(lead)) != k:
        raise PreconditionError(
            "the first k letters are not pairwise distinct, so the prefix "
            "before the close pair is not a cyclic power"
        )
    sym = word.symbols
    for x in range(k, mr):
        if sym[x] != sym[x - k]:
            raise PreconditionError(
                f"prefix is not cyclic: position {x + 1} breaks the period-{k} "
                "pattern before the close pair"
            )


def exchange_move(word: Word, k: Optional[int] = None) -> Word:
    """One strict-descent step on the gap sum.

    Requires a close pair (ml, mr) whose preceding prefix is a cyclic power
    of k distinct letters.  The letter at mr is replaced from mr onwards by
    the letter that would continue the cycle, and (if that letter occurs
    again after mr, at position m') the two letters swap roles from m'
    onwards.  The gap sum of the result is strictly smaller.
    """
    k = word.alphabet_size if k is None else k
    pair = find_close_pair(word, k)
    if pair is None:
        raise PreconditionError("word has no pair of equal letters at distance < k")
    ml, mr = pair
    _check_cyclic_prefix(word, k, mr)
    sym = word.symbols
    a_j = int(sym[mr])
    a_i2 = int(sym[mr - k])  # the letter continuing the cyclic prefix
    if a_j == a_i2:
        # impossible for a minimal close pair; guard against misuse
        raise PreconditionError("close-pair letter already continues the cycle")
    n = len(word)
    m_prime = None
    for x in range(mr + 1, n):
        if sym[x] == a_i2:
            m_prime = x
            break
    out = sym.copy()
    out[mr:][sym[mr:] == a_j] = a_i2
    if m_prime is not None:
        out[m_prime:][sym[m_prime:] == a_i2] = a_j
    return Word(out, word.alphabet_size, chars=word.chars)


@dataclass(frozen=True)
class ExtremalResult:
    """Outcome of an exhaustive scan over canonical words."""

    objective: str  # "min" | "max"
    optimum: Fraction
    witnesses: tuple  # all canonical words attaining the optimum, lex order
    examined: int


def _search(k: int, n: int, budget: int, want_max: bool) -> ExtremalResult:
    total = generate.canonical_count(k, n)
    if total > budget:
        raise BudgetError(
            f"exhaustive search needs {total} evaluations, over the budget of {budget}"
        )
    best = None
    witnesses = []
    examined = 0
    for w in generate.all_words(k, n):
        examined += 1
        value = stats.word_summary(w).total
        if best is None or (value > best if want_max else value < best):
            best = value
            witnesses = [w]
        elif value == best:
            witnesses.append(w)
    if best is None:
        best = Fraction(0)
        witnesses = []
    return ExtremalResult(
        "max" if want_max else "min", best, tuple(witnesses), examined
    )


def search_min(k: int, n: int, budget: int = DEFAULT_SEARCH_BUDGET) -> ExtremalResult:
    """Exact minimum of the decremented exponent sum over canonical words."""
    return _search(k, n, budget, want_max=False)


def search_max(k: int, n: int, budget: int = DEFAULT_SEARCH_BUDGET) -> ExtremalResult:
    """Exact maximum of the decremented exponent sum over canonical words."""
    return _search(k, n, budget, want_max=True)
