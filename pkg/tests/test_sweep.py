import json

import pytest

from lcong.bernoulli import BernoulliCache
from lcong.sweep import (
    ConfigError,
    SweepConfig,
    SweepJob,
    check_lemma_sweep,
    csv_text,
    expand_job,
    lookup,
    records_lines,
    registered_ids,
    run_sweep,
    table_text,
    write_csv,
)
from lcong import valuecache


def stern_config(**kwargs):
    return SweepConfig(
        jobs=(SweepJob("1.3", {"k": [0, 2, 4], "n": [1, 2], "q": [1, 3]}),),
        **kwargs,
    )


class TestConfigValidation:
    def test_unknown_id(self):
        with pytest.raises(ConfigError, match="unknown congruence id"):
            run_sweep(SweepConfig(jobs=(SweepJob("9.9", {"k": [1]}),)))

    def test_empty_axis(self):
        with pytest.raises(ConfigError, match="missing or empty axis"):
            run_sweep(SweepConfig(jobs=(SweepJob("1.3", {"k": [], "n": [1], "q": [1]}),)))

    def test_missing_axis(self):
        with pytest.raises(ConfigError):
            run_sweep(SweepConfig(jobs=(SweepJob("1.3", {"k": [0]}),)))

    def test_no_jobs(self):
        with pytest.raises(ConfigError):
            run_sweep(SweepConfig(jobs=()))

    def test_bad_parallelism(self):
        with pytest.raises(ConfigError):
            run_sweep(stern_config(parallelism=0))

    def test_bad_parity(self):
        with pytest.raises(ConfigError):
            run_sweep(SweepConfig(jobs=(
                SweepJob("1.4", {"m": [3], "k": [1], "n": [1], "q": [1], "parity": "left"}),
            )))

    def test_aliases_resolve(self):
        assert lookup("1.3").id == "stern"
        assert lookup("lshift-two").id == "1.4"
        assert "stern" in registered_ids()


class TestExpansion:
    def test_grid_order_deterministic(self):
        job = SweepJob("1.3", {"k": [2, 0], "n": [1], "q": [1]})
        ks = [inst["k"] for _, inst in expand_job(job)]
        assert ks == [2, 0]  # given order preserved

    def test_character_axes(self):
        job = SweepJob("1.4", {"m": [3], "k": [1], "n": [1], "q": [1]})
        instances = list(expand_job(job))
        assert len(instances) == 2  # two primitive characters mod 8
        assert all(inst["p"] == 2 for _, inst in instances)


class TestRunSweep:
    def test_stern_job(self):
        report = run_sweep(stern_config())
        assert report.summary["total"] == 12
        assert report.summary["fails"] == 0
        assert report.all_hold
        assert report.summary["per_id"]["stern"]["min_margin"] >= 2

    def test_out_of_hypothesis_points_become_skips(self):
        report = run_sweep(SweepConfig(jobs=(
            SweepJob("1.4", {"m": [3], "k": [0, 1], "n": [1], "q": [1]}),
        )))
        assert report.summary["skips"] == 2  # parity mismatches
        assert report.summary["fails"] == 0
        assert all(s.reason for s in report.skips)

    def test_summary_counts_match_lists(self):
        report = run_sweep(SweepConfig(jobs=(
            SweepJob("2.2", {"p": [3], "m": [2], "k": [0, 1, 2], "a": [1, 2, 3, 4]}),
        )))
        s = report.summary
        assert s["total"] == len(report.verdicts)
        assert s["skips"] == len(report.skips)
        assert s["holds"] + s["fails"] == s["total"]

    def test_parallel_equals_serial(self):
        serial = run_sweep(stern_config())
        parallel = run_sweep(stern_config(parallelism=4))
        assert [v.sort_key() for v in serial.verdicts] == [v.sort_key() for v in parallel.verdicts]
        assert csv_text(serial) == csv_text(parallel)

    def test_isolated_cache(self, chi8):
        cache = BernoulliCache()
        report = run_sweep(
            SweepConfig(jobs=(SweepJob("1.4", {"m": [3], "k": [1], "n": [1], "q": [1]}),)),
            cache=cache,
        )
        assert report.all_hold
        assert (chi8.key(), 2) in cache._twisted  # B_(2,chi8) entered the memo


class TestReports:
    def test_csv_deterministic(self, tmp_path):
        p1, p2 = tmp_path / "a.csv", tmp_path / "b.csv"
        write_csv(run_sweep(stern_config()), p1)
        write_csv(run_sweep(stern_config()), p2)
        assert p1.read_bytes() == p2.read_bytes()

    def test_records_deterministic_modulo_header(self, tmp_path):
        r1 = records_lines(run_sweep(stern_config()), timestamp="X")
        r2 = records_lines(run_sweep(stern_config()), timestamp="Y")
        assert r1[0] != r2[0]          # timestamps differ, isolated to header
        assert r1[1:] == r2[1:]        # bodies byte-identical

    def test_records_carry_exact_sides(self):
        lines = records_lines(run_sweep(stern_config()), timestamp="T")
        verdicts = [json.loads(l) for l in lines if '"type": "verdict"' in l]
        assert verdicts
        for v in verdicts:
            assert set(v["lhs"]) == {"order", "coeffs"}
            int(v["lhs"]["coeffs"][0])  # exact integer string

    def test_infinite_margin_serialization(self):
        report = run_sweep(SweepConfig(jobs=(
            SweepJob("euler-kummer", {"p": [3], "k": [2], "l": [2]}),
        )))
        assert "inf" in csv_text(report)
        # every record line must be strict JSON (no bare Infinity tokens)
        for line in records_lines(report, timestamp="T"):
            assert "Infinity" not in line
            json.loads(line)

    def test_table_text_summary_line(self):
        text = table_text(run_sweep(stern_config()))
        assert "total=12 holds=12 fails=0" in text

    def test_written_files(self, tmp_path):
        csv_path = tmp_path / "out.csv"
        rec_path = tmp_path / "out.jsonl"
        run_sweep(stern_config(csv_path=str(csv_path), records_path=str(rec_path)))
        assert csv_path.read_text().startswith("id,branch,chi")
        first = json.loads(rec_path.read_text().splitlines()[0])
        assert first["type"] == "header" and "timestamp" in first


class TestLemmaSweep:
    def test_scaling_lemma_grid(self):
        verdicts = check_lemma_sweep(
            "2.1", {"p": [2, 3], "m": [1, 2], "k": [0, 1, 2], "n": [2, 3]}
        )
        assert verdicts and all(v.holds for v in verdicts)

    def test_vanishing_covers_both_forms(self):
        verdicts = check_lemma_sweep(
            "2.4", {"p": [2, 3], "m": [2], "k": [0, 2], "n": [2, 3]}
        )
        assert {v.id for v in verdicts} == {"2.4", "2.5"}

    def test_odd_only_grid_has_no_two_power_form(self):
        verdicts = check_lemma_sweep("2.4", {"p": [3], "m": [2], "k": [0, 1], "n": [2]})
        assert {v.id for v in verdicts} == {"2.4"}

    def test_order_lemma(self):
        verdicts = check_lemma_sweep("2.3", {"p": [2, 3], "m": [3, 2]})
        assert verdicts and all(v.holds for v in verdicts)

    def test_unknown_lemma(self):
        with pytest.raises(ConfigError):
            check_lemma_sweep("9.9", {})


class TestValueCache:
    def _sweep_with_cache(self, path, cache):
        config = SweepConfig(
            jobs=(SweepJob("1.4", {"m": [3], "k": [1, 3], "n": [1], "q": [1]}),),
        )
        valuecache.load_into(path, cache)
        report = run_sweep(config, cache=cache)
        valuecache.append_new(path, cache)
        return report

    def test_roundtrip_and_verify(self, tmp_path):
        path = tmp_path / "values.jsonl"
        self._sweep_with_cache(path, BernoulliCache())
        count = valuecache.entry_count(path)
        assert count > 0
        assert valuecache.verify(path) == []

    def test_cached_values_reused_not_rewritten(self, tmp_path):
        path = tmp_path / "values.jsonl"
        self._sweep_with_cache(path, BernoulliCache())
        size = path.stat().st_size
        report = self._sweep_with_cache(path, BernoulliCache())
        assert report.all_hold
        assert path.stat().st_size == size  # second run appended nothing

    def test_corrupt_line_detected(self, tmp_path):
        path = tmp_path / "values.jsonl"
        self._sweep_with_cache(path, BernoulliCache())
        with open(path, "a") as fh:
            fh.write("{not json\n")
        with pytest.raises(valuecache.CacheError, match="line"):
            valuecache.verify(path)

    def test_mismatch_detected(self, tmp_path):
        path = tmp_path / "values.jsonl"
        self._sweep_with_cache(path, BernoulliCache())
        lines = path.read_text().splitlines()
        record = json.loads(lines[0])
        record["coeffs"] = ["12345"] + record["coeffs"][1:]
        lines.append(json.dumps(record))  # later line wins, with a wrong value
        path.write_text("\n".join(lines) + "\n")
        bad = valuecache.verify(path)
        assert len(bad) == 1 and f"k={record['k']}" in bad[0]

    def test_clear(self, tmp_path):
        path = tmp_path / "values.jsonl"
        self._sweep_with_cache(path, BernoulliCache())
        valuecache.clear(path)
        assert valuecache.entry_count(path) == 0
