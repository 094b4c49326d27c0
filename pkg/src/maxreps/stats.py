"""Exact exponent-sum statistics and the bound evaluations.

The central quantity is the sum of (exponent - 1) over all maximal
repetitions of a word, kept as an exact rational.  Measured values are
always exact; only the transcendental bound side uses floats, with a 1e-9
relative tolerance applied to the bound.

Two computation routes are provided: the set-based operations take a
materialized :class:`~maxreps.words.RepetitionSet`, while
:func:`word_summary` aggregates per period in one streaming kernel pass and
never stores individual repetitions, which is what makes 10^5-length words
practical.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np

from . import _kernels
from .errors import InputError, PreconditionError
from .words import RepetitionSet, Word

#: relative tolerance applied to the float bound side of every comparison
BOUND_REL_TOL = Fraction(1, 10**9)

# kernel-side exponent filters multiply int64 lengths by these; keep them sane
_MAX_FILTER_MAGNITUDE = 2**31


@dataclass(frozen=True)
class SumFilter:
    """Restriction of the sum to a period window and/or an exponent floor."""

    min_period: Optional[int] = None
    max_period: Optional[int] = None
    min_exponent: Optional[Fraction] = None

    def __post_init__(self):
        if (
            self.min_period is not None
            and self.max_period is not None
            and self.min_period > self.max_period
        ):
            raise InputError("min_period must not exceed max_period")
        if self.min_exponent is not None:
            t = Fraction(self.min_exponent)
            if t <= 1:
                raise InputError("min_exponent must be > 1")
            if t.numerator > _MAX_FILTER_MAGNITUDE or t.denominator > _MAX_FILTER_MAGNITUDE:
                raise InputError("min_exponent numerator/denominator too large")
            object.__setattr__(self, "min_exponent", t)


def _selection(reps: RepetitionSet, flt: Optional[SumFilter]) -> np.ndarray:
    lengths = reps.ends - reps.starts
    mask = np.ones(len(reps), dtype=bool)
    if flt is not None:
        if flt.min_period is not None:
            mask &= reps.periods >= flt.min_period
        if flt.max_period is not None:
            mask &= reps.periods <= flt.max_period
        if flt.min_exponent is not None:
            t = flt.min_exponent
            mask &= lengths * t.denominator >= reps.periods * t.numerator
    return mask


def _exact_sum(periods: np.ndarray, excess: np.ndarray) -> Fraction:
    """Sum of excess/period with integer per-period aggregation first."""
    if periods.size == 0:
        return Fraction(0)
    order = np.argsort(periods, kind="stable")
    ps = periods[order]
    exs = excess[order]
    bounds = np.flatnonzero(np.diff(ps) != 0) + 1
    starts = np.concatenate(([0], bounds))
    sums = np.add.reduceat(exs, starts)
    total = Fraction(0)
    for p, s in zip(ps[starts].tolist(), sums.tolist()):
        total += Fraction(int(s), int(p))
    return total


def decremented_sum(reps: RepetitionSet) -> Fraction:
    """Exact sum of (exponent - 1) = (length - period)/period over the set."""
    return _exact_sum(reps.periods, reps.ends - reps.starts - reps.periods)


def filtered_sum(reps: RepetitionSet, flt: Optional[SumFilter] = None) -> Fraction:
    """Decremented sum restricted to the repetitions passing the filter."""
    mask = _selection(reps, flt)
    periods = reps.periods[mask]
    excess = (reps.ends - reps.starts - reps.periods)[mask]
    return _exact_sum(periods, excess)


def count_at_least(reps: RepetitionSet, threshold) -> int:
    """Number of repetitions whose exponent is >= threshold (exact compare)."""
    t = Fraction(threshold)
    if t <= 1:
        raise InputError("threshold must be > 1")
    return int(np.count_nonzero(_selection(reps, SumFilter(min_exponent=t))))


def max_period(reps: RepetitionSet) -> int:
    """Largest minimal period in the set; 0 for an empty set."""
    return int(reps.periods.max(initial=0))


@dataclass(frozen=True)
class WordSummary:
    """Aggregate statistics of one word's repetitions (possibly filtered)."""

    n: int
    alphabet_size: int
    total: Fraction
    count: int
    max_period: int


def word_summary(word: Word, flt: Optional[SumFilter] = None) -> WordSummary:
    """Streaming equivalent of filtered_sum/count/max_period on a whole word.

    Runs one per-period kernel pass; memory stays O(n) regardless of how
    many repetitions the word has.
    """
    n = len(word)
    if flt is not None and flt.min_exponent is not None:
        t = flt.min_exponent
        _, _, count_p, excess_p = _kernels.tally(word.symbols, t.numerator, t.denominator)
    else:
        count_p, excess_p, _, _ = _kernels.tally(word.symbols)
    lo = 1 if flt is None or flt.min_period is None else max(1, flt.min_period)
    hi = n - 1 if flt is None or flt.max_period is None else min(n - 1, flt.max_period)
    total = Fraction(0)
    count = 0
    maxp = 0
    if lo <= hi:
        window = slice(lo, hi + 1)
        active = np.flatnonzero(count_p[window]) + lo
        for p in active.tolist():
            total += Fraction(int(excess_p[p]), p)
            count += int(count_p[p])
            maxp = p
    return WordSummary(n, word.alphabet_size, total, count, maxp)


def theorem2_lower_terms(n: int) -> float:
    """(n/4 - 1) + 4 * sum_{i=1}^{n/4} (n/4 - i + 1)/(4i - 3), as a decimal.

    Evaluated exactly before the final float conversion.
    """
    if n < 4 or n % 4 != 0:
        raise InputError(f"n must be a positive multiple of 4, got {n}")
    m = n // 4
    acc = sum(Fraction(m - i + 1, 4 * i - 3) for i in range(1, m + 1))
    return float((m - 1) + 4 * acc)


def _le_with_tol(measured: Fraction, bound: float) -> bool:
    b = Fraction(bound)
    return measured <= b + abs(b) * BOUND_REL_TOL


def _ge_with_tol(measured: Fraction, bound: float) -> bool:
    b = Fraction(bound)
    return measured >= b - abs(b) * BOUND_REL_TOL


@dataclass(frozen=True)
class BoundReport:
    """One evaluated bound: measured exact value vs the bound's float value.

    ``satisfied`` means measured <= bound for upper bounds and measured >=
    bound for lower bounds, with the 1e-9 relative tolerance on the bound
    side only.  ``slack`` is always bound - measured.
    """

    name: str
    direction: str  # "upper" | "lower"
    n: int
    alphabet_size: int
    measured: Fraction
    bound: float
    satisfied: bool
    vacuous: bool = False

    @property
    def measured_decimal(self) -> float:
        return float(self.measured)

    @property
    def slack(self) -> float:
        return self.bound - float(self.measured)


def _row(name, direction, n, k, measured, bound, vacuous=False) -> BoundReport:
    ok = _le_with_tol(measured, bound) if direction == "upper" else _ge_with_tol(measured, bound)
    return BoundReport(name, direction, n, k, measured, bound, ok, vacuous)


def bound_report(
    word: Word,
    reps: Optional[RepetitionSet] = None,
    *,
    eps: Optional[Fraction] = None,
    p: Optional[int] = None,
    k: Optional[int] = None,
) -> list[BoundReport]:
    """Evaluate every applicable bound for one word.

    Rows theorem1 and theorem3 are always produced; corollary1/1a and
    theorem4 need the period parameter ``p``; corollary2 needs ``eps``.
    When ``reps`` is omitted the streaming route is used, so this works on
    words far too large to materialize.  theorem4 requires p to be at least
    the largest period present (its premise), else PreconditionError.
    """
    n = len(word)
    k = word.alphabet_size if k is None else k
    if k < 1:
        raise InputError("alphabet size must be >= 1")

    if reps is not None:
        total = decremented_sum(reps)
        maxp = max_period(reps)

        def fsum(flt):
            return filtered_sum(reps, flt)

        def cge(t):
            return count_at_least(reps, t)

    else:
        base = word_summary(word)
        total, maxp = base.total, base.max_period

        def fsum(flt):
            return word_summary(word, flt).total

        def cge(t):
            return word_summary(word, SumFilter(min_exponent=t)).count

    rows = []
    nlogn = n * math.log(n) if n > 0 else 0.0
    rows.append(_row("theorem1", "upper", n, k, total, nlogn, vacuous=n <= 2))
    if p is not None:
        if p < 1:
            raise InputError("p must be >= 1")
        rows.append(
            _row("corollary1", "upper", n, k,
                 fsum(SumFilter(max_period=p)), n * (math.log(p) + 1))
        )
        if p <= n and n > 0:
            rows.append(
                _row("corollary1a", "upper", n, k,
                     fsum(SumFilter(min_period=p)), n * math.log(n / p))
            )
    if eps is not None:
        eps = Fraction(eps)
        if eps <= 0:
            raise InputError("eps must be > 0")
        rows.append(
            _row("corollary2", "upper", n, k,
                 Fraction(cge(1 + eps)), float(1 / eps) * nlogn)
        )
    rows.append(_row("theorem3", "lower", n, k, total, n / k - 1))
    if p is not None:
        if maxp > p:
            raise PreconditionError(
                f"theorem4 requires p >= max period, but a repetition has "
                f"period {maxp} > p = {p}"
            )
        rows.append(
            _row("theorem4", "upper", n, k, total,
                 n + 3 * k * p * (math.log(p) + 1))
        )
    return rows
