"""Parameter-grid sweeps over the congruence catalog, with CSV/JSONL
reports and an aligned human-readable table.

Grid points whose hypotheses fail are recorded as skips, never as
failed verdicts.  Identical configs produce byte-identical
machine-readable reports (the only timestamp lives in the JSONL header
record), and parallel execution yields the same verdict sequence as
serial execution because results are collected in submission order.
"""

from __future__ import annotations

import csv
import dataclasses
import io
import json
import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterator, Optional

from . import congruences as cg
from .bernoulli import DEFAULT_CACHE, BernoulliCache, ParityError, UndefinedCaseError
from .characters import DirichletCharacter, enumerate_characters, enumerate_primitive
from .congruences import CongruenceVerdict
from .power_sums import DomainError


class ConfigError(ValueError):
    """Invalid sweep configuration."""


@dataclass(frozen=True)
class SweepJob:
    id: str
    params: dict

    def axis(self, name: str) -> list:
        value = self.params.get(name)
        if value is None or value == []:
            raise ConfigError(f"job '{self.id}': missing or empty axis '{name}'")
        if not isinstance(value, (list, tuple)):
            value = [value]
        return list(value)


@dataclass(frozen=True)
class SweepConfig:
    jobs: tuple[SweepJob, ...]
    csv_path: Optional[str] = None
    records_path: Optional[str] = None
    cache_path: Optional[str] = None
    parallelism: int = 1

    def echo(self) -> dict:
        return {
            "jobs": [{"id": job.id, **job.params} for job in self.jobs],
            "parallelism": self.parallelism,
        }


@dataclass(frozen=True)
class SkipRecord:
    id: str
    params: dict
    reason: str


@dataclass
class SweepReport:
    config: dict
    verdicts: list[CongruenceVerdict]
    skips: list[SkipRecord]
    duration: float = 0.0
    summary: dict = field(default_factory=dict)

    def finalize(self) -> "SweepReport":
        per_id: dict[str, dict] = {}
        for v in self.verdicts:
            row = per_id.setdefault(
                v.id, {"total": 0, "holds": 0, "fails": 0, "skips": 0, "min_margin": math.inf}
            )
            row["total"] += 1
            row["holds" if v.holds else "fails"] += 1
            row["min_margin"] = min(row["min_margin"], v.observed_margin)
        for s in self.skips:
            row = per_id.setdefault(
                s.id, {"total": 0, "holds": 0, "fails": 0, "skips": 0, "min_margin": math.inf}
            )
            row["skips"] += 1
        self.summary = {
            "total": len(self.verdicts),
            "holds": sum(1 for v in self.verdicts if v.holds),
            "fails": sum(1 for v in self.verdicts if not v.holds),
            "skips": len(self.skips),
            "per_id": per_id,
        }
        return self

    @property
    def all_hold(self) -> bool:
        return all(v.holds for v in self.verdicts)


# ---------------------------------------------------------------------
# Congruence registry


@dataclass(frozen=True)
class CongruenceSpec:
    id: str
    aliases: tuple[str, ...]
    axes: tuple[str, ...]
    runner: Callable[..., CongruenceVerdict]
    char_mode: Optional[str] = None  # None | "primitive" | "all" | "vanishing"
    char_axes: tuple[str, str] = ("p", "m")
    char_fixed_p: Optional[int] = None  # conductor prime fixed by the congruence
    description: str = ""


def _vanishing_family(p: int, m: int) -> list[DirichletCharacter]:
    # Primitive characters, plus the parity-free character mod 2 standing
    # in for the m = 1 statements at p = 2.
    if p == 2 and m == 1:
        return enumerate_characters(2, 1)
    return enumerate_primitive(p, m)


_CHAR_FAMILIES = {
    "primitive": enumerate_primitive,
    "all": enumerate_characters,
    "vanishing": _vanishing_family,
}


def _rebadged(verdict: CongruenceVerdict, id_: str) -> CongruenceVerdict:
    return dataclasses.replace(verdict, id=id_)


def _run_sum_lift(chi, p, m, k, n, cache):
    if cg.sum_lift_excluded(chi, k):
        raise DomainError("excluded case: p = 2, m = 1, odd k")
    return cg.verify_sum_lift(chi, k, n)


def _run_sum_lift_excluded(chi, p, m, k, n, cache):
    if not cg.sum_lift_excluded(chi, k):
        raise DomainError("not in the excluded region")
    return _rebadged(cg.verify_sum_lift(chi, k, n), "2.1x")


def _run_vanishing_two(chi, p, m, k, n, cache):
    if not cg.strengthened_vanishing_applies(chi, k):
        raise DomainError("outside the strengthened-vanishing cases")
    return cg.verify_sum_vanishing_two(chi, k, n)


def _run_vanishing_two_excluded(chi, p, m, k, n, cache):
    if cg.strengthened_vanishing_applies(chi, k):
        raise DomainError("not in the excluded region")
    return _rebadged(cg.verify_sum_vanishing_two(chi, k, n), "2.5x")


REGISTRY: dict[str, CongruenceSpec] = {}


def _register(spec: CongruenceSpec) -> None:
    for name in (spec.id, *spec.aliases):
        if name in REGISTRY:
            raise ValueError(f"duplicate congruence id {name}")
        REGISTRY[name] = spec


_register(CongruenceSpec(
    id="kummer", aliases=(), axes=("p", "k", "l", "n"),
    runner=lambda p, k, l, n, cache: cg.verify_kummer_classical(p, k, l, n, cache),
    description="Bernoulli-quotient congruence (1 - p^(k-1)) B_k/k == ... (mod p^n)",
))
_register(CongruenceSpec(
    id="ernvall", aliases=("1.1",), axes=("p", "k", "l", "n"),
    char_mode="primitive", char_axes=("chi_p", "chi_m"),
    runner=lambda chi, chi_p, chi_m, p, k, l, n, cache: cg.verify_ernvall(chi, p, k, l, n, cache),
    description="twisted Bernoulli Kummer congruence, conductor coprime to p",
))
_register(CongruenceSpec(
    id="euler-kummer", aliases=("1.2",), axes=("p", "k", "l"),
    runner=lambda p, k, l, cache: cg.verify_euler_kummer(p, k, l, cache),
    description="E_k == E_l (mod p) for even k == l (mod p-1)",
))
_register(CongruenceSpec(
    id="stern", aliases=("1.3",), axes=("k", "n", "q"),
    runner=lambda k, n, q, cache: cg.verify_stern(k, n, q, cache),
    description="E_(k + 2^n q) == E_k + 2^n (mod 2^(n+1))",
))
_register(CongruenceSpec(
    id="stern-iff", aliases=(), axes=("k", "l", "n"),
    runner=lambda k, l, n, cache: cg.verify_stern_iff(k, l, n, cache),
    description="E_k == E_l (mod 2^n) iff k == l (mod 2^n), both directions",
))
_register(CongruenceSpec(
    id="1.4", aliases=("lshift-two",), axes=("m", "k", "n", "q"), char_mode="primitive",
    char_fixed_p=2,
    runner=lambda chi, p, m, k, n, q, cache: cg.verify_lvalue_shift_two(chi, k, n, q, cache),
    description="normalized L-value shift congruence, conductor 2^m (m >= 3)",
))
_register(CongruenceSpec(
    id="1.5", aliases=("lshift-two-iff",), axes=("m", "k", "l", "n"), char_mode="primitive",
    char_fixed_p=2,
    runner=lambda chi, p, m, k, l, n, cache: cg.verify_lvalue_shift_two_iff(chi, k, l, n, cache),
    description="L*_k == L*_l (mod 2^(n+2)) iff k == l (mod 2^n)",
))
_register(CongruenceSpec(
    id="1.6", aliases=("1.7", "lshift-odd"), axes=("p", "m", "k", "n", "q"),
    char_mode="primitive",
    runner=lambda chi, p, m, k, n, q, cache: cg.verify_lvalue_shift_odd(chi, k, n, q, cache),
    description="L-value shift congruence, odd prime-power conductor (branches i/ii)",
))
_register(CongruenceSpec(
    id="1.8", aliases=("lshift-odd-iff",), axes=("p", "m", "k", "h", "n"),
    char_mode="primitive",
    runner=lambda chi, p, m, k, h, n, cache: cg.verify_lvalue_shift_odd_iff(chi, k, h, n, cache),
    description="L*_(k+(p-1)h) == L*_k (mod p^n) iff h == 0 (mod p^(n-1))",
))
_register(CongruenceSpec(
    id="2.1", aliases=("sum-lift",), axes=("p", "m", "k", "n"), char_mode="all",
    runner=_run_sum_lift,
    description="S_k(p^n) == p^(n-m) S_k(p^m) (mod p^n)",
))
_register(CongruenceSpec(
    id="2.1x", aliases=("sum-lift-excluded",), axes=("p", "m", "k", "n"), char_mode="all",
    runner=_run_sum_lift_excluded,
    description="probe of the excluded region of the power-sum lift congruence",
))
_register(CongruenceSpec(
    id="2.2", aliases=("sum-twist",), axes=("p", "m", "k", "a"), char_mode="primitive",
    runner=lambda chi, p, m, k, a, cache: cg.verify_sum_twist(chi, k, a),
    description="(1 - chi(a) a^k) S_k(p^m, chi) == 0 (mod p^m)",
))
_register(CongruenceSpec(
    id="2.3", aliases=("char-orders",), axes=("p", "m"), char_mode="primitive",
    runner=lambda chi, p, m, cache: cg.verify_character_orders(chi),
    description="exact orders of chi(1 + p^j) for primitive chi",
))
_register(CongruenceSpec(
    id="2.4", aliases=("sum-vanishing",), axes=("p", "m", "k", "n"), char_mode="vanishing",
    runner=lambda chi, p, m, k, n, cache: cg.verify_sum_vanishing(chi, k, n),
    description="S_k(p^n, chi) == 0 (mod p^(n-1))",
))
_register(CongruenceSpec(
    id="2.5", aliases=("sum-vanishing-two",), axes=("m", "k", "n"), char_mode="vanishing",
    char_fixed_p=2,
    runner=_run_vanishing_two,
    description="S_k(2^n, chi) == 0 (mod 2^n) in the strengthened cases",
))
_register(CongruenceSpec(
    id="2.5x", aliases=("sum-vanishing-two-excluded",), axes=("m", "k", "n"),
    char_mode="vanishing", char_fixed_p=2,
    runner=_run_vanishing_two_excluded,
    description="probe of the excluded cases of the strengthened vanishing",
))
_register(CongruenceSpec(
    id="sun", aliases=("3.1",), axes=("k", "n"),
    runner=lambda k, n, cache: cg.verify_sun(k, n, cache),
    description="Euler-number floor-sum congruence mod 2^n",
))
_register(CongruenceSpec(
    id="3.2", aliases=("twisted-voronoi",), axes=("p", "m", "a", "k", "n"), char_mode="all",
    runner=lambda chi, p, m, a, k, n, cache: cg.verify_twisted_voronoi(chi, a, k, n, cache),
    description="(1 - chi(a) a^(k+1)) L(-k, chi) == chi(a) a^k floor-sum (mod p^n)",
))
_register(CongruenceSpec(
    id="voronoi", aliases=(), axes=("a", "p", "k"),
    runner=lambda a, p, k, cache: cg.verify_voronoi(a, p, k, cache),
    description="classical Bernoulli floor-sum congruence mod p",
))
_register(CongruenceSpec(
    id="lerch", aliases=(), axes=("a", "n"),
    runner=lambda a, n, cache: cg.verify_lerch(a, n),
    description="Fermat-quotient floor-sum congruence mod n",
))
_register(CongruenceSpec(
    id="nondiv", aliases=(), axes=("p", "m", "d"), char_mode="primitive",
    runner=lambda chi, p, m, d, cache: cg.check_nondivisibility(chi, d, cache),
    description="sharpness: normalized L*_d has p-valuation exactly at its bound",
))
_register(CongruenceSpec(
    id="floor-parity", aliases=(), axes=("m",),
    runner=lambda m, cache: cg.verify_floor_count(m),
    description="parity of the two-interval floor count, 3 <= m <= 6",
))


def registered_ids() -> list[str]:
    return sorted({spec.id for spec in REGISTRY.values()})


#: Lemma id -> jobs it expands to; "2.4" covers both the p^(n-1)
#: divisibility and, where the grid includes p = 2, the full 2^n form.
_LEMMA_JOBS = {
    "2.1": ("2.1",),
    "2.2": ("2.2",),
    "2.3": ("2.3",),
    "2.4": ("2.4", "2.5"),
}


def check_lemma_sweep(
    lemma_id: str, grid: dict, cache: BernoulliCache = DEFAULT_CACHE
) -> list[CongruenceVerdict]:
    """Run one power-sum lemma over a parameter grid, returning verdicts.

    ``grid`` maps axis names (p, m, k, n, a as applicable) to value
    lists; out-of-hypothesis points are silently skipped, matching the
    sweep runner.
    """
    ids = _LEMMA_JOBS.get(lemma_id)
    if ids is None:
        raise ConfigError(
            f"unknown lemma id '{lemma_id}' (known: {', '.join(sorted(_LEMMA_JOBS))})"
        )
    verdicts: list[CongruenceVerdict] = []
    for id_ in ids:
        spec = lookup(id_)
        if spec.char_fixed_p is not None and 2 not in grid.get("p", [2]):
            continue
        params = {a: grid[a] for a in grid if a != "p" or spec.char_fixed_p is None}
        for spec_, inst in expand_job(SweepJob(id_, params)):
            result = run_instance(spec_, inst, cache)
            if isinstance(result, CongruenceVerdict):
                verdicts.append(result)
    return verdicts


def lookup(id_: str) -> CongruenceSpec:
    spec = REGISTRY.get(id_)
    if spec is None:
        raise ConfigError(f"unknown congruence id '{id_}' (known: {', '.join(registered_ids())})")
    return spec


# ---------------------------------------------------------------------
# Grid expansion and execution


def _select_characters(spec: CongruenceSpec, job: SweepJob) -> list[tuple[int, int, DirichletCharacter]]:
    p_axis, m_axis = spec.char_axes
    out = []
    parity = job.params.get("parity")
    if parity not in (None, "even", "odd"):
        raise ConfigError(f"job '{job.id}': parity must be 'even' or 'odd'")
    restrict = job.params.get("chi")
    if restrict is not None:
        restrict = [tuple(int(e) for e in images) for images in restrict]
    p_values = [spec.char_fixed_p] if spec.char_fixed_p else job.axis(p_axis)
    for p in p_values:
        for m in job.axis(m_axis):
            for chi in _CHAR_FAMILIES[spec.char_mode](p, m):
                if parity and chi.parity() != parity:
                    continue
                if restrict is not None and chi.images not in restrict:
                    continue
                out.append((p, m, chi))
    return out


def expand_job(job: SweepJob) -> Iterator[tuple[CongruenceSpec, dict]]:
    """Instances of a job in deterministic grid order."""
    spec = lookup(job.id)
    numeric_axes = [a for a in spec.axes if spec.char_mode is None or a not in spec.char_axes]
    axis_values = [job.axis(a) for a in numeric_axes]

    def numeric_grid() -> Iterator[dict]:
        def rec(i: int, acc: dict) -> Iterator[dict]:
            if i == len(numeric_axes):
                yield dict(acc)
                return
            for value in axis_values[i]:
                acc[numeric_axes[i]] = value
                yield from rec(i + 1, acc)
        yield from rec(0, {})

    if spec.char_mode is None:
        for inst in numeric_grid():
            yield spec, inst
    else:
        for p, m, chi in _select_characters(spec, job):
            for inst in numeric_grid():
                full = {spec.char_axes[0]: p, spec.char_axes[1]: m, "chi": chi, **inst}
                yield spec, full


def run_instance(
    spec: CongruenceSpec, inst: dict, cache: BernoulliCache
) -> CongruenceVerdict | SkipRecord:
    kwargs = dict(inst)
    chi = kwargs.pop("chi", None)
    try:
        if chi is not None:
            return spec.runner(chi, **kwargs, cache=cache)
        return spec.runner(**kwargs, cache=cache)
    except (DomainError, ParityError, UndefinedCaseError) as exc:
        params = {k: v for k, v in inst.items() if k != "chi"}
        if chi is not None:
            params = {"chi": chi.label(), **params}
        return SkipRecord(id=spec.id, params=params, reason=str(exc))


def run_sweep(config: SweepConfig, cache: BernoulliCache = DEFAULT_CACHE) -> SweepReport:
    """Evaluate every grid point of every job; write configured reports."""
    if not config.jobs:
        raise ConfigError("no jobs configured")
    if config.parallelism < 1:
        raise ConfigError("parallelism must be >= 1")
    work: list[tuple[CongruenceSpec, dict]] = []
    for job in config.jobs:
        work.extend(expand_job(job))

    t0 = time.perf_counter()
    if config.parallelism == 1:
        results = [run_instance(spec, inst, cache) for spec, inst in work]
    else:
        with ThreadPoolExecutor(max_workers=config.parallelism) as pool:
            results = list(
                pool.map(lambda item: run_instance(item[0], item[1], cache), work)
            )
    duration = time.perf_counter() - t0

    verdicts = [r for r in results if isinstance(r, CongruenceVerdict)]
    skips = [r for r in results if isinstance(r, SkipRecord)]
    report = SweepReport(
        config=config.echo(), verdicts=verdicts, skips=skips, duration=duration
    ).finalize()
    if config.csv_path:
        write_csv(report, config.csv_path)
    if config.records_path:
        write_records(report, config.records_path)
    return report


# ---------------------------------------------------------------------
# Report rendering

CSV_PARAM_COLUMNS = ("chi", "p", "m", "k", "l", "d", "h", "n", "q", "a")
CSV_HEADER = ("id", "branch", *CSV_PARAM_COLUMNS, "holds", "required_exponent", "observed_margin", "extra")


def _margin_str(margin) -> str:
    return "inf" if margin == math.inf else str(margin)


def _csv_row(v: CongruenceVerdict) -> list[str]:
    extra = {k: v_ for k, v_ in v.params.items() if k not in CSV_PARAM_COLUMNS}
    return [
        v.id,
        v.branch or "",
        *[str(v.params.get(col, "")) for col in CSV_PARAM_COLUMNS],
        "true" if v.holds else "false",
        str(v.required_modulus_exponent),
        _margin_str(v.observed_margin),
        json.dumps(extra, sort_keys=True) if extra else "",
    ]


def csv_text(report: SweepReport) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for v in report.verdicts:
        writer.writerow(_csv_row(v))
    return buf.getvalue()


def write_csv(report: SweepReport, path) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(csv_text(report))


def _element_record(el) -> dict:
    return {"order": el.order, "coeffs": [str(c) for c in el.coeffs]}


def records_lines(report: SweepReport, timestamp: str | None = None) -> list[str]:
    """Line-delimited records; the timestamp appears only in the header."""
    header = {
        "type": "header",
        "timestamp": timestamp if timestamp is not None else time.strftime("%Y-%m-%dT%H:%M:%SZ", time.gmtime()),
        "config": report.config,
    }
    lines = [json.dumps(header, sort_keys=True)]
    for v in report.verdicts:
        lines.append(json.dumps({
            "type": "verdict",
            "id": v.id,
            "branch": v.branch,
            "params": v.params,
            "holds": v.holds,
            "required_exponent": v.required_modulus_exponent,
            "observed_margin": _margin_str(v.observed_margin),
            "lhs": _element_record(v.lhs),
            "rhs": _element_record(v.rhs),
        }, sort_keys=True))
    for s in report.skips:
        lines.append(json.dumps(
            {"type": "skip", "id": s.id, "params": s.params, "reason": s.reason},
            sort_keys=True,
        ))
    summary = dict(report.summary)
    summary["per_id"] = {
        id_: {**row, "min_margin": _margin_str(row["min_margin"])}
        for id_, row in report.summary["per_id"].items()
    }
    lines.append(json.dumps({"type": "summary", **summary}, sort_keys=True))
    return lines


def write_records(report: SweepReport, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(records_lines(report)) + "\n")


def table_text(report: SweepReport, max_rows: int | None = None) -> str:
    rows = [["id", "branch", "params", "holds", "req", "margin"]]
    shown = report.verdicts if max_rows is None else report.verdicts[:max_rows]
    for v in shown:
        params = " ".join(f"{k}={val}" for k, val in v.params.items())
        rows.append([
            v.id, v.branch or "-", params,
            "yes" if v.holds else "NO",
            str(v.required_modulus_exponent),
            _margin_str(v.observed_margin),
        ])
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    out = []
    for i, r in enumerate(rows):
        out.append("  ".join(cell.ljust(w) for cell, w in zip(r, widths)).rstrip())
        if i == 0:
            out.append("  ".join("-" * w for w in widths))
    if max_rows is not None and len(report.verdicts) > max_rows:
        out.append(f"... ({len(report.verdicts) - max_rows} more verdicts)")
    s = report.summary
    out.append(
        f"total={s['total']} holds={s['holds']} fails={s['fails']} skips={s['skips']}"
        f"  ({report.duration:.2f}s)"
    )
    return "\n".join(out)
