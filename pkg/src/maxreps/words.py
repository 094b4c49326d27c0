"""Core domain types: words over a small integer alphabet and repetitions.

A word is an immutable sequence of symbol ids 0..k-1 together with its
declared alphabet size k.  A repetition is a half-open interval of the word
plus the minimal period of that subword; its exponent length/period is kept
as an exact `fractions.Fraction`.

Internal indexing is 0-based half-open everywhere.  The CLI layer converts
to 1-based inclusive positions for display.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, NamedTuple, Optional, Sequence

import numpy as np

from .errors import InputError

#: characters used to render symbol ids when no explicit alphabet is attached
DEFAULT_CHARSET = (
    "0123456789abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ"
)


class Word:
    """Immutable word over the alphabet {0, ..., alphabet_size-1}.

    ``alphabet_size`` is declared, not inferred: a word may leave letters
    unused.  ``chars`` optionally maps symbol ids to display characters and
    never participates in equality.
    """

    __slots__ = ("_symbols", "alphabet_size", "chars")

    def __init__(self, symbols, alphabet_size: int, chars: Optional[str] = None):
        arr = np.ascontiguousarray(symbols, dtype=np.int32)
        if arr.ndim != 1:
            raise InputError("symbols must be a flat sequence")
        if alphabet_size < 1:
            raise InputError(f"alphabet_size must be >= 1, got {alphabet_size}")
        if arr.size and (arr.min() < 0 or arr.max() >= alphabet_size):
            bad = int(np.argmax((arr < 0) | (arr >= alphabet_size)))
            raise InputError(
                f"symbol {int(arr[bad])} at position {bad + 1} outside "
                f"alphabet of size {alphabet_size}"
            )
        if chars is not None and len(chars) < alphabet_size:
            raise InputError("chars must cover every symbol id")
        arr.setflags(write=False)
        self._symbols = arr
        self.alphabet_size = int(alphabet_size)
        self.chars = chars

    @property
    def symbols(self) -> np.ndarray:
        """Read-only int32 array of symbol ids."""
        return self._symbols

    def __len__(self) -> int:
        return self._symbols.size

    def __getitem__(self, i) -> int:
        return int(self._symbols[i])

    def __iter__(self) -> Iterator[int]:
        return iter(self._symbols.tolist())

    def __eq__(self, other) -> bool:
        if not isinstance(other, Word):
            return NotImplemented
        return (
            self.alphabet_size == other.alphabet_size
            and self._symbols.size == other._symbols.size
            and bool(np.array_equal(self._symbols, other._symbols))
        )

    def __hash__(self) -> int:
        return hash((self.alphabet_size, self._symbols.tobytes()))

    def __repr__(self) -> str:
        return f"Word({self.text()!r}, k={self.alphabet_size})"

    def text(self) -> str:
        """Render the word as a string, one character per symbol."""
        charset = self.chars if self.chars is not None else DEFAULT_CHARSET
        if self.alphabet_size > len(charset):
            raise InputError(
                f"no display characters for alphabet of size {self.alphabet_size}"
            )
        return "".join(charset[s] for s in self._symbols.tolist())


def word_from_text(text: str, alphabet: Optional[str] = None) -> Word:
    """Encode a character string as a Word.

    With an explicit ``alphabet``, symbol ids are the character positions in
    it and every character of ``text`` must occur there.  Without one, ids
    are assigned in order of first occurrence (so the result is canonical)
    and k is the number of distinct characters.
    """
    if alphabet is not None:
        index = {c: i for i, c in enumerate(alphabet)}
        if len(index) != len(alphabet):
            raise InputError("alphabet contains repeated characters")
        symbols = []
        for pos, c in enumerate(text):
            if c not in index:
                raise InputError(
                    f"character {c!r} at position {pos + 1} not in alphabet {alphabet!r}"
                )
            symbols.append(index[c])
        return Word(symbols, max(len(alphabet), 1), chars=alphabet or None)
    index = {}
    symbols = []
    for c in text:
        if c not in index:
            index[c] = len(index)
        symbols.append(index[c])
    k = max(len(index), 1)
    return Word(symbols, k, chars="".join(index) or None)


class Repetition(NamedTuple):
    """Occurrence [start, end) whose subword has minimal period ``period``.

    Stored repetitions always satisfy period < end - start, i.e. exponent
    strictly greater than 1, and cannot be extended in either direction
    without increasing the minimal period.
    """

    start: int
    end: int
    period: int

    @property
    def length(self) -> int:
        return self.end - self.start

    @property
    def exponent(self) -> Fraction:
        return Fraction(self.end - self.start, self.period)


def exponent_of(r: Repetition) -> Fraction:
    """Exact exponent length/period of a repetition."""
    return r.exponent


class RepetitionSet:
    """Deduplicated collection of the maximal repetitions of one word.

    Backed by three parallel int64 arrays sorted by (start, end, period);
    iteration materializes `Repetition` tuples lazily so that large sets
    stay cheap to hold.
    """

    __slots__ = ("word", "starts", "ends", "periods")

    def __init__(self, word: Word, starts, ends, periods):
        self.word = word
        self.starts = np.ascontiguousarray(starts, dtype=np.int64)
        self.ends = np.ascontiguousarray(ends, dtype=np.int64)
        self.periods = np.ascontiguousarray(periods, dtype=np.int64)
        if not (self.starts.size == self.ends.size == self.periods.size):
            raise InputError("parallel arrays must have equal length")

    @classmethod
    def from_repetitions(cls, word: Word, reps: Iterable[Sequence[int]]) -> "RepetitionSet":
        triples = sorted({(int(s), int(e), int(p)) for s, e, p in reps})
        if triples:
            s, e, p = zip(*triples)
        else:
            s = e = p = ()
        return cls(word, s, e, p)

    def __len__(self) -> int:
        return self.starts.size

    def __iter__(self) -> Iterator[Repetition]:
        for s, e, p in zip(self.starts.tolist(), self.ends.tolist(), self.periods.tolist()):
            yield Repetition(s, e, p)

    def __getitem__(self, i: int) -> Repetition:
        return Repetition(int(self.starts[i]), int(self.ends[i]), int(self.periods[i]))

    def __eq__(self, other) -> bool:
        if not isinstance(other, RepetitionSet):
            return NotImplemented
        return (
            len(self) == len(other)
            and bool(np.array_equal(self.starts, other.starts))
            and bool(np.array_equal(self.ends, other.ends))
            and bool(np.array_equal(self.periods, other.periods))
        )

    def __repr__(self) -> str:
        return f"RepetitionSet({len(self)} repetitions of {self.word!r})"

    def triples(self) -> list[tuple[int, int, int]]:
        """All (start, end, period) triples as plain tuples."""
        return list(zip(self.starts.tolist(), self.ends.tolist(), self.periods.tolist()))


def canonicalize(word: Word) -> Word:
    """Relabel symbols so first occurrences appear in increasing order.

    This picks the canonical representative of the word's equivalence class
    under permutations of the alphabet; the alphabet size is preserved.
    """
    mapping = {}
    out = []
    for s in word:
        if s not in mapping:
            mapping[s] = len(mapping)
        out.append(mapping[s])
    return Word(out, word.alphabet_size)


def is_canonical(word: Word) -> bool:
    return canonicalize(word) == word
