"""Command-line front end: topk, decode, and bench subcommands.

Exit codes: 0 success, 1 decode did not find a valid candidate, 2 usage or
parse error, 3 non-finite numeric input.

Input files hold one number pair per line as "a,b" (an optional header
line is detected by a non-numeric first token), or JSON of the form
{"pairs": [[a, b], ...]}. The decode input uses the same shape with one
confidence pair per bit.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

from .bench import BenchConfig, fit_quadratic, run_bench, write_csv
from .core import Direction, InvalidK, NonFiniteInput, top_k
from .decode import DEFAULT_MAX_CANDIDATES, Checksum, decode_best

EXIT_OK = 0
EXIT_NOT_FOUND = 1
EXIT_USAGE = 2
EXIT_NONFINITE = 3


class ParseError(ValueError):
    """Input file did not parse as pairs."""


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _int_list(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated int list: {text!r}")


def read_pairs(path: str) -> list[tuple[float, float]]:
    """Load (a, b) rows from a CSV or JSON file."""
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}")
    if text.lstrip().startswith("{"):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"{path}: bad JSON: {exc}")
        rows = obj.get("pairs")
        if not isinstance(rows, list):
            raise ParseError(f'{path}: JSON must carry a "pairs" list')
    else:
        rows = [line.split(",") for line in text.splitlines() if line.strip()]
        if rows:
            try:
                float(rows[0][0])
            except ValueError:
                rows = rows[1:]  # header line
    pairs = []
    for idx, row in enumerate(rows, start=1):
        if len(row) != 2:
            raise ParseError(f"{path}: row {idx}: expected two values, got {len(row)}")
        try:
            pairs.append((float(row[0]), float(row[1])))
        except (TypeError, ValueError):
            raise ParseError(f"{path}: row {idx}: non-numeric value in {row!r}")
    if not pairs:
        raise ParseError(f"{path}: no data rows")
    return pairs


def _open_output(path: str):
    if path == "-":
        return sys.stdout, False
    return open(path, "w"), True


def _emit(path: str, text: str) -> None:
    out, close = _open_output(path)
    try:
        out.write(text)
    finally:
        if close:
            out.close()


def _format_topk(results, fmt: str) -> str:
    if fmt == "csv":
        lines = ["rank,sum,selection"]
        lines += [f"{r.rank},{r.sum:.17g},{r.selection_str()}" for r in results]
        return "\n".join(lines) + "\n"
    if fmt == "json":
        return (
            json.dumps(
                [
                    {"rank": r.rank, "sum": r.sum, "selection": r.selection_str()}
                    for r in results
                ],
                indent=2,
            )
            + "\n"
        )
    width = max(len(str(r.sum)) for r in results)
    lines = [f"{'rank':>6}  {'sum':>{width}}  selection"]
    lines += [f"{r.rank:>6}  {str(r.sum):>{width}}  {r.selection_str()}" for r in results]
    return "\n".join(lines) + "\n"


def cmd_topk(args) -> int:
    pairs = read_pairs(args.input)
    results = top_k(pairs, args.k, Direction(args.direction))
    _emit(args.output, _format_topk(results, args.format))
    return EXIT_OK


def _format_decode(result, fmt: str) -> str:
    row = {
        "found": result.found,
        "bits": result.bits,
        "rank": result.rank,
        "confidence": result.confidence,
        "candidates_tested": result.candidates_tested,
    }
    if fmt == "json":
        return json.dumps(row, indent=2) + "\n"
    if fmt == "csv":
        cells = [
            str(result.found).lower(),
            result.bits or "",
            "" if result.rank is None else str(result.rank),
            "" if result.confidence is None else f"{result.confidence:.17g}",
            str(result.candidates_tested),
        ]
        return "found,bits,rank,confidence,candidates_tested\n" + ",".join(cells) + "\n"
    lines = [f"{key}: {value}" for key, value in row.items()]
    return "\n".join(lines) + "\n"


def cmd_decode(args) -> int:
    confidences = read_pairs(args.input)
    result = decode_best(
        confidences, Checksum(args.checksum), max_candidates=args.max_candidates
    )
    _emit(args.output, _format_decode(result, args.format))
    return EXIT_OK if result.found else EXIT_NOT_FOUND


def cmd_bench(args) -> int:
    config = BenchConfig(
        n_values=args.n,
        k_max=args.k_max,
        k_samples=args.samples,
        seed=args.seed,
        trials=args.trials,
    )
    records = run_bench(config)
    out, close = _open_output(args.output)
    try:
        write_csv(records, out)
    finally:
        if close:
            out.close()
    if args.fit:
        print("n,c2,c1,c0,r_squared")
        for n in config.n_values:
            fit = fit_quadratic([r for r in records if r.n == n])
            print(f"{n},{fit.c2:.6e},{fit.c1:.6e},{fit.c0:.6e},{fit.r_squared:.6f}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pairsums",
        description="Rank the 2^N choice-sums of N number pairs without "
        "enumerating them all.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_topk = sub.add_parser("topk", help="emit the k best choice combinations")
    p_topk.add_argument("--input", required=True, help="CSV or JSON pair file")
    p_topk.add_argument("--k", type=_positive_int, required=True)
    p_topk.add_argument("--direction", choices=["min", "max"], default="min")
    p_topk.add_argument("--format", choices=["table", "csv", "json"], default="table")
    p_topk.add_argument("--output", default="-", help="output path, - for stdout")
    p_topk.set_defaults(func=cmd_topk)

    p_dec = sub.add_parser(
        "decode", help="recover the best checksum-valid bit string"
    )
    p_dec.add_argument("--input", required=True, help="CSV/JSON of conf0,conf1 rows")
    p_dec.add_argument(
        "--checksum", choices=[c.value for c in Checksum], default="none"
    )
    p_dec.add_argument(
        "--max-candidates", type=_positive_int, default=DEFAULT_MAX_CANDIDATES
    )
    p_dec.add_argument("--format", choices=["table", "csv", "json"], default="table")
    p_dec.add_argument("--output", default="-", help="output path, - for stdout")
    p_dec.set_defaults(func=cmd_decode)

    p_bench = sub.add_parser("bench", help="run scaling measurements, emit CSV")
    p_bench.add_argument("--n", type=_int_list, default=[15, 100, 1000])
    p_bench.add_argument("--k-max", type=_positive_int, default=100_000)
    p_bench.add_argument("--samples", type=_positive_int, default=50)
    p_bench.add_argument("--trials", type=_positive_int, default=1)
    p_bench.add_argument("--seed", type=int, default=42)
    p_bench.add_argument("--fit", action="store_true", help="print quadratic fits")
    p_bench.add_argument("--output", default="-", help="CSV path, - for stdout")
    p_bench.set_defaults(func=cmd_bench)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except NonFiniteInput as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NONFINITE
    except (ParseError, InvalidK, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def entry() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    raise SystemExit(main())
