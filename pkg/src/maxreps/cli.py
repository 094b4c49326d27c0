"""Command-line interface.

Subcommands: find | stats | bounds | sweep | search | classify | exchange.

All positions in the output are 1-based inclusive, unlike the 0-based
half-open intervals used internally.  Exact rationals are emitted as
"num/den" strings next to their decimal renderings.  Identical invocations
(including seeds) produce byte-identical output.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from fractions import Fraction

from . import detect, extremal, generate, stats
from ._kernels import backend_name
from .errors import BudgetError, InputError, PreconditionError
from .words import Word, word_from_text


def frac_str(x: Fraction) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def _parse_fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise InputError(f"cannot parse {text!r} as a rational number")


def _add_input_args(sp, with_gen=True):
    sp.add_argument("--word", help="inline word; characters are symbols")
    sp.add_argument("--file", help="path to a UTF-8 file, one word per line")
    if with_gen:
        sp.add_argument("--gen", choices=generate.FAMILIES, help="generated word family")
    sp.add_argument("--n", help="length parameter (sweep accepts LO:HI:STEP)")
    sp.add_argument("--k", type=int, help="alphabet-size parameter")
    sp.add_argument("--p", type=int, help="period parameter")
    sp.add_argument("--seed", type=int, default=0, help="seed for random generation")
    sp.add_argument("--alphabet", help="explicit alphabet for --word/--file input")


def _add_format_arg(sp):
    sp.add_argument("--format", choices=("json", "tsv", "csv"), default="json")


def _int_n(args) -> int:
    if args.n is None:
        raise InputError("--n is required for this generator")
    try:
        return int(args.n)
    except ValueError:
        raise InputError(f"--n must be an integer here, got {args.n!r}")


def _generated(args) -> Word:
    fam = args.gen
    if fam == "cyclic":
        if args.k is None:
            raise InputError("cyclic generator needs --k")
        return generate.cyclic(args.k, _int_n(args))
    if fam == "zeroes-ones-power":
        return generate.zeroes_ones_power(_int_n(args))
    if fam == "unary":
        return generate.unary(_int_n(args))
    if fam == "squares-blocks":
        if args.k is None or args.p is None:
            raise InputError("squares-blocks generator needs --k and --p")
        return generate.squares_blocks(args.k, args.p)
    if fam == "random":
        if args.k is None:
            raise InputError("random generator needs --k")
        return generate.random_word(args.k, _int_n(args), args.seed)
    raise InputError(f"unknown family {fam!r}")


def _input_words(args) -> list[Word]:
    sources = [s for s in ("word", "file", "gen") if getattr(args, s, None) is not None]
    if len(sources) != 1:
        raise InputError("exactly one of --word, --file or --gen is required")
    if args.word is not None:
        return [word_from_text(args.word, args.alphabet)]
    if getattr(args, "gen", None) is not None:
        return [_generated(args)]
    words = []
    with open(args.file, encoding="utf-8") as fh:
        for line in fh:
            line = line.rstrip("\n")
            if line:
                words.append(word_from_text(line, args.alphabet))
    return words


def _emit(payload: dict, rows: list[dict], args, stream) -> None:
    """Render one command's result: json object, or delimited rows."""
    if args.format == "json":
        json.dump(payload, stream, indent=2, default=str)
        stream.write("\n")
        return
    delim = "\t" if args.format == "tsv" else ","
    writer = csv.writer(stream, delimiter=delim, lineterminator="\n")
    if rows:
        writer.writerow(rows[0].keys())
        for r in rows:
            writer.writerow(r.values())


def _word_entry(word: Word) -> dict:
    return {"word": word.text(), "n": len(word), "alphabet_size": word.alphabet_size}


def cmd_find(args, stream) -> int:
    payload_words = []
    rows = []
    for idx, w in enumerate(_input_words(args)):
        reps = detect.enumerate_repetitions(w)
        entry = _word_entry(w)
        entry["repetitions"] = []
        for r in reps:
            rec = {
                "start": r.start + 1,
                "end": r.end,
                "period": r.period,
                "exponent": frac_str(r.exponent),
                "exponent_decimal": float(r.exponent),
            }
            entry["repetitions"].append(rec)
            rows.append({"word_index": idx, **rec})
        payload_words.append(entry)
    _emit({"command": "find", "words": payload_words}, rows, args, stream)
    return 0


def _stats_entry(w: Word, args) -> dict:
    base = stats.word_summary(w)
    entry = _word_entry(w)
    entry.update(
        sum=frac_str(base.total),
        sum_decimal=float(base.total),
        count=base.count,
        max_period=base.max_period,
    )
    flt_kw = {}
    if args.min_period is not None:
        flt_kw["min_period"] = args.min_period
    if args.max_period is not None:
        flt_kw["max_period"] = args.max_period
    if flt_kw:
        fs = stats.word_summary(w, stats.SumFilter(**flt_kw))
        entry["filtered_sum"] = frac_str(fs.total)
        entry["filtered_sum_decimal"] = float(fs.total)
        entry["filtered_count"] = fs.count
    if args.eps is not None:
        eps = _parse_fraction(args.eps)
        if eps <= 0:
            raise InputError("--eps must be > 0")
        fe = stats.word_summary(w, stats.SumFilter(min_exponent=1 + eps))
        entry["eps"] = frac_str(eps)
        entry["count_at_least"] = fe.count
        entry["sum_at_least"] = frac_str(fe.total)
    return entry


def cmd_stats(args, stream) -> int:
    entries = [_stats_entry(w, args) for w in _input_words(args)]
    rows = [{"word_index": i, **{k: v for k, v in e.items() if k != "word" or len(e["word"]) <= 64}}
            for i, e in enumerate(entries)]
    _emit({"command": "stats", "words": entries}, rows, args, stream)
    return 0


def cmd_bounds(args, stream) -> int:
    eps = _parse_fraction(args.eps) if args.eps is not None else None
    all_ok = True
    payload_words = []
    rows = []
    for idx, w in enumerate(_input_words(args)):
        report = stats.bound_report(w, eps=eps, p=args.p, k=args.k)
        entry = _word_entry(w)
        entry["bounds"] = []
        for row in report:
            rec = {
                "name": row.name,
                "direction": row.direction,
                "measured": frac_str(row.measured),
                "measured_decimal": row.measured_decimal,
                "bound": row.bound,
                "slack": row.slack,
                "satisfied": row.satisfied,
                "vacuous": row.vacuous,
            }
            entry["bounds"].append(rec)
            rows.append({"word_index": idx, **rec})
            if not row.vacuous and not row.satisfied:
                all_ok = False
        payload_words.append(entry)
    _emit({"command": "bounds", "all_satisfied": all_ok, "words": payload_words},
          rows, args, stream)
    return 0 if (all_ok or args.report_only) else 1


def _parse_range(text: str) -> range:
    parts = text.split(":")
    try:
        if len(parts) == 1:
            v = int(parts[0])
            return range(v, v + 1)
        lo, hi = int(parts[0]), int(parts[1])
        step = int(parts[2]) if len(parts) == 3 else 1
        if step <= 0 or hi < lo:
            raise ValueError
        return range(lo, hi + 1, step)
    except ValueError:
        raise InputError(f"--n must be N or LO:HI:STEP, got {text!r}")


def _sweep_word(args, n: int) -> Word:
    fam = args.gen
    if fam == "cyclic":
        if args.k is None:
            raise InputError("cyclic sweep needs --k")
        return generate.cyclic(args.k, n)
    if fam == "zeroes-ones-power":
        return generate.zeroes_ones_power(n)
    if fam == "unary":
        return generate.unary(n)
    if fam == "squares-blocks":
        if args.k is None:
            raise InputError("squares-blocks sweep needs --k")
        if n % args.k != 0 or (2 * n // args.k) % 4 != 0:
            raise InputError(f"n={n} is not k*p/2 for an admissible p with k={args.k}")
        return generate.squares_blocks(args.k, 2 * n // args.k)
    if fam == "random":
        if args.k is None:
            raise InputError("random sweep needs --k")
        return generate.random_word(args.k, n, args.seed)
    raise InputError("sweep requires --gen")


SWEEP_COLUMNS = ("n", "sum_exact", "sum_decimal", "count",
                 "nlogn_bound", "theorem2_lower", "count_over_n2")


def cmd_sweep(args, stream) -> int:
    if args.gen is None:
        raise InputError("sweep requires --gen")
    if args.n is None:
        raise InputError("sweep requires --n LO:HI:STEP")
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(SWEEP_COLUMNS)
    for n in _parse_range(args.n):
        w = _sweep_word(args, n)
        summary = stats.word_summary(w)
        t2 = stats.theorem2_lower_terms(n) if n >= 4 and n % 4 == 0 else ""
        writer.writerow([
            n,
            frac_str(summary.total),
            float(summary.total),
            summary.count,
            n * math.log(n) if n > 0 else 0.0,
            t2,
            summary.count / n**2 if n > 0 else 0.0,
        ])
    return 0


def cmd_search(args, stream) -> int:
    if args.k is None or args.n is None:
        raise InputError("search needs --k and --n")
    k, n = args.k, _int_n(args)
    fn = extremal.search_max if args.objective == "max" else extremal.search_min
    result = fn(k, n, budget=args.budget)
    payload = {
        "command": "search",
        "objective": result.objective,
        "k": k,
        "n": n,
        "optimum": frac_str(result.optimum),
        "optimum_decimal": float(result.optimum),
        "witnesses": [w.text() for w in result.witnesses],
        "examined": result.examined,
    }
    if result.objective == "min" and k >= 1 and n % k == 0:
        expected = Fraction(n, k) - 1
        cyc = generate.cyclic(k, n)
        value_matches = result.optimum == expected
        witnesses_match = list(result.witnesses) == [cyc] if n > 0 else True
        payload["cyclic_minimum"] = {
            "expected": frac_str(expected),
            "expected_decimal": float(expected),
            "value_matches": value_matches,
            "witnesses_match": witnesses_match,
            "confirmed": value_matches and witnesses_match,
        }
    rows = [{k_: v for k_, v in payload.items() if k_ != "witnesses"}
            | {"witnesses": ";".join(payload["witnesses"])}]
    _emit(payload, rows, args, stream)
    return 0


def cmd_classify(args, stream) -> int:
    payload_words = []
    rows = []
    for idx, w in enumerate(_input_words(args)):
        reps = detect.enumerate_repetitions(w)
        entry = _word_entry(w)
        entry["repetitions"] = []
        type1_length = 0
        type1_sum = Fraction(0)
        for r in reps:
            tag = detect.classify(w, r)
            rec = {
                "start": r.start + 1,
                "end": r.end,
                "period": r.period,
                "exponent": frac_str(r.exponent),
                "type": 1 if tag is detect.RepetitionType.TYPE1 else 2,
            }
            if tag is detect.RepetitionType.TYPE1:
                type1_length += r.length
                type1_sum += r.exponent - 1
            entry["repetitions"].append(rec)
            rows.append({"word_index": idx, **rec})
        entry["type1_total_length"] = type1_length
        entry["type1_sum"] = frac_str(type1_sum)
        entry["type1_fits_in_word"] = type1_length <= len(w)
        payload_words.append(entry)
    _emit({"command": "classify", "words": payload_words}, rows, args, stream)
    return 0


def cmd_exchange(args, stream) -> int:
    k = args.k
    payload_words = []
    rows = []
    for idx, w in enumerate(_input_words(args)):
        kk = k if k is not None else w.alphabet_size
        pair = extremal.find_close_pair(w, kk)
        before = extremal.gap_sum(extremal.gap_profile(w))
        result = extremal.exchange_move(w, kk)
        after = extremal.gap_sum(extremal.gap_profile(result))
        rec = {
            "word": w.text(),
            "result": result.text(),
            "k": kk,
            "close_pair": [pair[0] + 1, pair[1] + 1],
            "gap_sum_before": frac_str(before),
            "gap_sum_before_decimal": float(before),
            "gap_sum_after": frac_str(after),
            "gap_sum_after_decimal": float(after),
            "decreased": after < before,
        }
        payload_words.append(rec)
        rows.append({"word_index": idx, **{k_: v for k_, v in rec.items() if k_ != "close_pair"},
                     "close_pair": f"{pair[0] + 1},{pair[1] + 1}"})
    _emit({"command": "exchange", "words": payload_words}, rows, args, stream)
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="maxreps",
        description="Maximal repetitions of exponent > 1: detection, exact "
                    "exponent-sum statistics, bound reports and extremal search. "
                    "Output positions are 1-based inclusive.",
    )
    ap.add_argument("--version", action="version", version="%(prog)s 0.1.0")
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("find", help="list all maximal repetitions")
    _add_input_args(sp)
    _add_format_arg(sp)
    sp.set_defaults(fn=cmd_find)

    sp = sub.add_parser("stats", help="exact decremented exponent sum and counts")
    _add_input_args(sp)
    _add_format_arg(sp)
    sp.add_argument("--eps", help="also count repetitions of exponent >= 1+eps")
    sp.add_argument("--min-period", type=int, dest="min_period")
    sp.add_argument("--max-period", type=int, dest="max_period")
    sp.set_defaults(fn=cmd_stats)

    sp = sub.add_parser("bounds", help="evaluate every applicable bound")
    _add_input_args(sp)
    _add_format_arg(sp)
    sp.add_argument("--eps", help="epsilon for the count bound")
    sp.add_argument("--report-only", action="store_true",
                    help="exit 0 even if a bound row is unsatisfied")
    sp.set_defaults(fn=cmd_bounds)

    sp = sub.add_parser("sweep", help="CSV of statistics across a range of n")
    _add_input_args(sp)
    sp.set_defaults(format="csv")
    sp.set_defaults(fn=cmd_sweep)

    sp = sub.add_parser("search", help="exhaustive extremal search over canonical words")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--n", required=True)
    sp.add_argument("--objective", choices=("min", "max"), default="min")
    sp.add_argument("--budget", type=int, default=extremal.DEFAULT_SEARCH_BUDGET,
                    help="maximum number of words to evaluate")
    _add_format_arg(sp)
    sp.set_defaults(fn=cmd_search)

    sp = sub.add_parser("classify", help="tag repetitions as type 1 or type 2")
    _add_input_args(sp)
    _add_format_arg(sp)
    sp.set_defaults(fn=cmd_classify)

    sp = sub.add_parser("exchange", help="apply the gap-sum descent move")
    _add_input_args(sp)
    _add_format_arg(sp)
    sp.set_defaults(fn=cmd_exchange)

    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args, sys.stdout)
    except (InputError, PreconditionError, BudgetError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def run(argv=None) -> tuple[int, str]:
    """Run the CLI capturing stdout; convenience hook for tests."""
    buf = io.StringIO()
    args = build_parser().parse_args(argv)
    try:
        code = args.fn(args, buf)
    except (InputError, PreconditionError, BudgetError, OSError) as exc:
        return 1, f"error: {exc}\n"
    return code, buf.getvalue()


if __name__ == "__main__":
    sys.exit(main())
