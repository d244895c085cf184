"""Command-line front end.

Commands:
    lcong verify <id> [param flags]      one congruence over small flag-given grids
    lcong sweep --config FILE            parameter-grid sweep from a JSON config
    lcong table <kind> [flags]           exact value tables
    lcong cache <stat|clear|verify>      persistent value-cache maintenance

Exit codes: 0 all verdicts hold, 1 at least one fails, 2 configuration or
usage error, 3 internal/cache error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .bernoulli import (
    BernoulliCache,
    ParityError,
    UndefinedCaseError,
    bernoulli_number,
    euler_number,
    generalized_bernoulli,
    l_value,
    script_l,
)
from .characters import character, enumerate_primitive
from .sweep import (
    ConfigError,
    SweepConfig,
    SweepJob,
    lookup,
    registered_ids,
    run_sweep,
    table_text,
)
from . import valuecache

EXIT_OK = 0
EXIT_FAILURES = 1
EXIT_CONFIG = 2
EXIT_INTERNAL = 3

PARAM_FLAGS = ("p", "m", "k", "l", "n", "q", "a", "h", "d", "chi_p", "chi_m")


def parse_values(text: str) -> list[int]:
    """Parse '3', '1,3,5', '0..20', or '0..20:2' into a list of ints."""
    out: list[int] = []
    for chunk in str(text).split(","):
        chunk = chunk.strip()
        if ".." in chunk:
            span, _, step = chunk.partition(":")
            lo, _, hi = span.partition("..")
            out.extend(range(int(lo), int(hi) + 1, int(step) if step else 1))
        elif chunk:
            out.append(int(chunk))
    if not out:
        raise ConfigError(f"empty parameter value {text!r}")
    return out


def _normalize_axis(value) -> list:
    if isinstance(value, str):
        return parse_values(value)
    if isinstance(value, int):
        return [value]
    if isinstance(value, list):
        out = []
        for v in value:
            out.extend(parse_values(v) if isinstance(v, str) else [v])
        return out
    raise ConfigError(f"cannot interpret parameter value {value!r}")


def _job_from_mapping(mapping: dict) -> SweepJob:
    if "id" not in mapping:
        raise ConfigError("every job needs an 'id'")
    params = {}
    for key, value in mapping.items():
        if key == "id":
            continue
        if key == "parity":
            params[key] = value
        elif key == "chi":
            if isinstance(value, str):
                value = [value.split(",")]
            params[key] = [list(map(int, images)) for images in value]
        else:
            params[key] = _normalize_axis(value)
    return SweepJob(id=str(mapping["id"]), params=params)


def load_config(path: str | Path) -> SweepConfig:
    try:
        raw = json.loads(Path(path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise ConfigError(f"cannot read config file: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config file is not valid JSON: {exc}") from exc
    jobs = raw.get("jobs")
    if not isinstance(jobs, list) or not jobs:
        raise ConfigError("config must contain a non-empty 'jobs' list")
    return SweepConfig(
        jobs=tuple(_job_from_mapping(j) for j in jobs),
        csv_path=raw.get("csv"),
        records_path=raw.get("records"),
        cache_path=raw.get("cache"),
        parallelism=int(raw.get("parallelism", 1)),
    )


def _report_and_exit(config: SweepConfig) -> int:
    # Each command starts from the persistent file, not from whatever the
    # process happens to have memoized: the file is the reuse layer.
    cache = BernoulliCache()
    cache_path = config.cache_path
    if cache_path:
        try:
            valuecache.load_into(cache_path, cache)
        except valuecache.CacheError as exc:
            print(f"cache error: {exc}", file=sys.stderr)
            return EXIT_INTERNAL
    try:
        report = run_sweep(config, cache=cache)
    except ConfigError:
        raise
    except OSError as exc:
        print(f"cannot write report: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    if cache_path:
        valuecache.append_new(cache_path, cache)
    print(table_text(report, max_rows=200))
    return EXIT_OK if report.all_hold else EXIT_FAILURES


def cmd_verify(args) -> int:
    spec = lookup(args.id)
    params: dict = {}
    for flag in PARAM_FLAGS:
        value = getattr(args, flag)
        if value is not None:
            params[flag] = parse_values(value)
    if args.parity:
        params["parity"] = args.parity
    if args.chi:
        params["chi"] = [[int(e) for e in args.chi.split(",")]]
    job = SweepJob(id=spec.id, params=params)
    config = SweepConfig(
        jobs=(job,),
        csv_path=args.csv,
        records_path=args.records,
        cache_path=args.cache,
    )
    return _report_and_exit(config)


def cmd_sweep(args) -> int:
    config = load_config(args.config)
    overrides = {}
    if args.csv:
        overrides["csv_path"] = args.csv
    if args.records:
        overrides["records_path"] = args.records
    if args.cache:
        overrides["cache_path"] = args.cache
    if args.jobs:
        overrides["parallelism"] = args.jobs
    if overrides:
        import dataclasses

        config = dataclasses.replace(config, **overrides)
    return _report_and_exit(config)


def _table_rows_classical(kind: str, max_k: int):
    fn = bernoulli_number if kind == "bernoulli" else euler_number
    for k in range(max_k + 1):
        yield k, str(fn(k))


def _table_rows_character(kind: str, chi, max_k: int):
    for k in range(max_k + 1):
        if kind == "generalized-bernoulli":
            yield k, str(generalized_bernoulli(k, chi))
            continue
        try:
            value = l_value(k, chi) if kind == "l-values" else script_l(k, chi)
            yield k, str(value)
        except (ParityError, UndefinedCaseError) as exc:
            yield k, f"undefined ({exc})"


def cmd_table(args) -> int:
    kind = args.kind
    if kind in ("bernoulli", "euler"):
        rows = list(_table_rows_classical(kind, args.max_k))
    else:
        if args.p is None or args.m is None:
            raise ConfigError(f"table '{kind}' needs --p and --m (and usually --chi)")
        if args.chi:
            chis = [character(args.p, args.m, tuple(int(e) for e in args.chi.split(",")))]
        else:
            chis = enumerate_primitive(args.p, args.m)
            if args.parity:
                chis = [c for c in chis if c.parity() == args.parity]
        rows = []
        for chi in chis:
            rows.extend(
                ((f"chi={chi.label()} k={k}"), v)
                for k, v in _table_rows_character(kind, chi, args.max_k)
            )
    width = max(len(str(label)) for label, _ in rows)
    for label, value in rows:
        print(f"{str(label).ljust(width)}  {value}")
    return EXIT_OK


def cmd_cache(args) -> int:
    path = Path(args.path) if args.path else valuecache.default_cache_path()
    try:
        if args.action == "stat":
            print(f"{valuecache.entry_count(path)} entries in {path}")
        elif args.action == "clear":
            valuecache.clear(path)
            print(f"cleared {path}")
        elif args.action == "verify":
            mismatches = valuecache.verify(path, limit=args.limit)
            print(f"{len(mismatches)} mismatches in {path}")
            for key in mismatches:
                print(f"  MISMATCH {key}")
            if mismatches:
                return EXIT_INTERNAL
    except valuecache.CacheError as exc:
        print(f"cache error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lcong",
        description="Exact verification of Bernoulli/Euler/L-value congruences.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="run one congruence id over flag-given parameters")
    p_verify.add_argument("id", help=f"congruence id ({', '.join(registered_ids())})")
    for flag in PARAM_FLAGS:
        p_verify.add_argument(f"--{flag.replace('_', '-')}", dest=flag,
                              help="int, comma list, or lo..hi[:step]")
    p_verify.add_argument("--chi", help="character image exponents, e.g. '0,1'")
    p_verify.add_argument("--parity", choices=("even", "odd"))
    p_verify.add_argument("--csv", help="write a CSV report to this path")
    p_verify.add_argument("--records", help="write a JSONL record report to this path")
    p_verify.add_argument("--cache", help="value-cache file to load/extend")
    p_verify.set_defaults(fn=cmd_verify)

    p_sweep = sub.add_parser("sweep", help="run a sweep from a JSON config")
    p_sweep.add_argument("--config", required=True)
    p_sweep.add_argument("--csv")
    p_sweep.add_argument("--records")
    p_sweep.add_argument("--cache")
    p_sweep.add_argument("--jobs", type=int, help="parallel worker count")
    p_sweep.set_defaults(fn=cmd_sweep)

    p_table = sub.add_parser("table", help="print exact value tables")
    p_table.add_argument(
        "kind",
        choices=("bernoulli", "euler", "generalized-bernoulli", "l-values", "script-l"),
    )
    p_table.add_argument("--max-k", type=int, default=10)
    p_table.add_argument("--p", type=int)
    p_table.add_argument("--m", type=int)
    p_table.add_argument("--chi")
    p_table.add_argument("--parity", choices=("even", "odd"))
    p_table.set_defaults(fn=cmd_table)

    p_cache = sub.add_parser("cache", help="inspect or maintain the value cache")
    p_cache.add_argument("action", choices=("stat", "clear", "verify"))
    p_cache.add_argument("--path")
    p_cache.add_argument("--limit", type=int, help="verify at most this many entries")
    p_cache.set_defaults(fn=cmd_cache)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors, which matches our convention
        return int(exc.code or 0)
    try:
        return args.fn(args)
    except ConfigError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except (ParityError, UndefinedCaseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
