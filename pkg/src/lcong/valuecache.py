"""Append-only file cache for twisted Bernoulli numbers.

One JSON record per line, keyed by (p, m, exponent vector, k), holding
the exact power-basis coefficients as "num/den" strings.  Append-only
with last-entry-wins on duplicate keys, so a single writer needs no
coordination beyond O_APPEND.
"""

from __future__ import annotations

import json
import os
from fractions import Fraction
from pathlib import Path

from .bernoulli import BernoulliCache, CharKey
from .characters import character
from .cyclotomic import CyclotomicElement

CacheKey = tuple[CharKey, int]


class CacheError(RuntimeError):
    """Unreadable or internally inconsistent cache file."""


def default_cache_path() -> Path:
    root = os.environ.get("LCONG_CACHE_DIR")
    base = Path(root) if root else Path.cwd() / ".lcong-cache"
    return base / "values.jsonl"


def _encode(key: CacheKey, value: CyclotomicElement) -> str:
    (p, m, images), k = key
    record = {
        "p": p,
        "m": m,
        "chi": list(images),
        "k": k,
        "order": value.order,
        "coeffs": [str(c) for c in value.coeffs],
    }
    return json.dumps(record, sort_keys=True)


def _decode(line: str, lineno: int) -> tuple[CacheKey, CyclotomicElement]:
    try:
        record = json.loads(line)
        key = (
            (int(record["p"]), int(record["m"]), tuple(int(e) for e in record["chi"])),
            int(record["k"]),
        )
        value = CyclotomicElement(
            int(record["order"]), [Fraction(c) for c in record["coeffs"]]
        )
    except (ValueError, KeyError, TypeError) as exc:
        raise CacheError(f"corrupt cache record at line {lineno}: {exc}") from exc
    return key, value


def read_entries(path: Path | str) -> dict[CacheKey, CyclotomicElement]:
    """All records, later lines overriding earlier ones with the same key."""
    entries: dict[CacheKey, CyclotomicElement] = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            if line.strip():
                key, value = _decode(line, lineno)
                entries[key] = value
    return entries


def load_into(path: Path | str, cache: BernoulliCache) -> int:
    """Seed a memo cache from the file; returns the number of entries."""
    path = Path(path)
    if not path.exists():
        return 0
    entries = read_entries(path)
    for key, value in entries.items():
        cache.store_twisted(key, value)
    return len(entries)


def append_new(path: Path | str, cache: BernoulliCache) -> int:
    """Append every value computed since the last sync; returns the count."""
    path = Path(path)
    keys = sorted(cache.dirty_keys)
    if not keys:
        return 0
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "a", encoding="utf-8") as fh:
        for key in keys:
            fh.write(_encode(key, cache._twisted[key]) + "\n")
    cache.dirty_keys.clear()
    return len(keys)


def entry_count(path: Path | str) -> int:
    path = Path(path)
    if not path.exists():
        return 0
    return len(read_entries(path))


def clear(path: Path | str) -> None:
    Path(path).unlink(missing_ok=True)


def verify(path: Path | str, limit: int | None = None) -> list[str]:
    """Recompute cached entries from scratch and compare bit-exactly.

    Returns the serialized keys of any mismatches; raises CacheError if
    the file cannot be parsed.
    """
    path = Path(path)
    if not path.exists():
        return []
    entries = read_entries(path)
    fresh = BernoulliCache()
    mismatches = []
    for i, (key, value) in enumerate(sorted(entries.items())):
        if limit is not None and i >= limit:
            break
        (p, m, images), k = key
        chi = character(p, m, images)
        recomputed = fresh.twisted_bernoulli(chi, k)
        if not (
            recomputed.order == value.order and recomputed.coeffs == value.coeffs
        ):
            mismatches.append(f"p={p} m={m} chi={list(images)} k={k}")
    return mismatches
