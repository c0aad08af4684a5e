"""Command-line interface: ``nonwordgen generate`` and ``nonwordgen bench``."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import List, Optional, Sequence

from .bench import ALGORITHMS, format_bench_report, replicate_seed, run_bench, run_replicates
from .lexicon import LexiconError, build_syllable_inventory, read_lexicon
from .output import FORMATS, write_solutions
from .problem import BIGRAM, KINDS, CriterionConfig, Problem
from .search import SearchParams
from .stats import MODES, build_bigram_table, dump_bigram_table


def _int_list(text: str) -> List[int]:
    try:
        values = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N[,N...], got {text!r}") from None
    if not values or any(v < 1 for v in values):
        raise argparse.ArgumentTypeError("syllable counts must be positive integers")
    return values


def _range(text: str):
    try:
        a, b = (int(x) for x in text.split(":"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected A:B, got {text!r}") from None
    if not 0 <= a <= b:
        raise argparse.ArgumentTypeError("range needs 0 <= A <= B")
    return a, b


def _seed(text: str) -> int:
    value = int(text)
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError("seed must be a 64-bit unsigned integer")
    return value


def _positive(kind):
    def parse(text: str):
        value = kind(text)
        if not value > 0:
            raise argparse.ArgumentTypeError(f"expected a positive value, got {text!r}")
        return value
    return parse


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--lexicon", required=True, type=Path, help="tab-separated syllabified lexicon")
    p.add_argument("--criterion", choices=KINDS, default=BIGRAM)
    p.add_argument("--mode", choices=MODES, default="type", help="bigram frequency mode")
    p.add_argument("--syllables", type=_int_list, default=[2], metavar="N[,N...]")
    p.add_argument("--range", type=_range, default=(1, 4), metavar="A:B",
                   help="accepted orthographic neighbor counts (inclusive)")
    p.add_argument("--delta-b", type=_positive(float), default=None,
                   help="bigram penalty scale (default: table maximum count)")
    p.add_argument("--delta-n", type=_positive(float), default=100.0)
    p.add_argument("--iterations", type=_positive(int), default=500)
    p.add_argument("--target-solutions", type=_positive(int), default=None)
    p.add_argument("--chi-max", type=_positive(int), default=300)
    p.add_argument("--rep", type=_positive(int), default=3)
    p.add_argument("--chaos", type=_positive(int), default=3)
    p.add_argument("--increase", type=float, default=1.3)
    p.add_argument("--decrease", type=float, default=0.8)
    p.add_argument("--rmax", type=_positive(int), default=8000)
    p.add_argument("--prohibited-choice", choices=("random", "best"), default="random",
                   help="move choice when every move is prohibited")
    p.add_argument("--admissible-only", action="store_true",
                   help="record only solutions reached through admissible moves")
    p.add_argument("--seed", type=_seed, default=0)
    p.add_argument("--replicates", type=_positive(int), default=10)
    p.add_argument("--jobs", type=_positive(int), default=1, help="parallel worker processes")
    p.add_argument("--dump-tables", action="store_true",
                   help="also write the positional bigram table (bigram, position, count)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="nonwordgen", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="run one algorithm and write its nonwords")
    _add_common(gen)
    gen.add_argument("--algorithm", choices=tuple(ALGORITHMS), default="crs")
    gen.add_argument("--output", type=Path, required=True,
                     help="output path; replicate i is written to <stem>.<i><suffix>")
    gen.add_argument("--format", choices=FORMATS, default="lines")

    bench = sub.add_parser("bench", help="replicated comparison report")
    _add_common(bench)
    bench.add_argument("--algorithm", choices=tuple(ALGORITHMS) + ("both",), default="both")
    bench.add_argument("--output", type=Path, default=None, help="report path (default: stdout)")
    bench.add_argument("--no-timing", action="store_true",
                       help="omit the running-time row so reports are byte-reproducible")
    return parser


def replicate_path(output: Path, i: int) -> Path:
    return output.with_name(f"{output.stem}.{i}{output.suffix}")


def _criterion(args) -> CriterionConfig:
    return CriterionConfig(
        kind=args.criterion,
        mode=args.mode,
        delta_b=args.delta_b,
        delta_n=args.delta_n,
        neighbor_range=args.range,
    )


def _params(args) -> SearchParams:
    return SearchParams(
        rep=args.rep,
        chaos=args.chaos,
        increase=args.increase,
        decrease=args.decrease,
        chi_max=args.chi_max,
        r_max=args.rmax,
        max_iterations=args.iterations,
        target_solutions=args.target_solutions,
        prohibited_choice=args.prohibited_choice,
        record_prohibited=not args.admissible_only,
    )


def _dump_tables(lex, args, out: Optional[Path]) -> None:
    text = dump_bigram_table(build_bigram_table(lex, args.mode))
    if out is None:
        sys.stdout.write(text)
    else:
        path = out.with_name(f"{out.stem}.bigrams.tsv")
        path.write_text(text, encoding="utf-8")


def cmd_generate(args, parser) -> int:
    if len(args.syllables) != 1:
        parser.error("generate takes a single --syllables value")
    d = args.syllables[0]
    if args.criterion == BIGRAM and d < 2:
        parser.error("the bigram criterion needs --syllables >= 2")
    lex = read_lexicon(args.lexicon)
    problem = Problem(lex, build_syllable_inventory(lex), _criterion(args), d)
    params = _params(args)
    if args.dump_tables:
        _dump_tables(lex, args, args.output)
    runs = run_replicates(args.algorithm, problem, params, args.seed, args.replicates, args.jobs)
    print("replicate\tseed\talgorithm\tsyllables\titerations\tsolutions\tdiversifications\tseconds")
    for i, (solutions, stats) in enumerate(runs):
        write_solutions(solutions, replicate_path(args.output, i), args.format)
        print(f"{i}\t{replicate_seed(args.seed, i)}\t{stats.algorithm}\t{d}\t{stats.iterations}"
              f"\t{stats.solutions}\t{stats.diversifications}\t{stats.seconds:.3f}")
    return 0


def cmd_bench(args, parser) -> int:
    if args.criterion == BIGRAM and min(args.syllables) < 2:
        parser.error("the bigram criterion needs --syllables >= 2")
    lex = read_lexicon(args.lexicon)
    algorithms = tuple(ALGORITHMS) if args.algorithm == "both" else (args.algorithm,)
    if args.dump_tables:
        _dump_tables(lex, args, args.output)
    report = run_bench(lex, _criterion(args), args.syllables, algorithms, _params(args),
                       args.seed, args.replicates, args.jobs)
    text = format_bench_report(report, include_timing=not args.no_timing)
    if args.output is None:
        sys.stdout.write(text)
    else:
        args.output.write_text(text, encoding="utf-8")
    return 0


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _params(args)
    except ValueError as exc:
        parser.error(str(exc))
    try:
        if args.command == "generate":
            return cmd_generate(args, parser)
        return cmd_bench(args, parser)
    except (LexiconError, OSError) as exc:
        print(f"nonwordgen: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
