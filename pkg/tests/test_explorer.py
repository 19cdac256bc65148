import csv
import json

import pytest

from pseudopal import attractor, directive, explorer
from pseudopal.directive import SequenceFamily
from pseudopal.explorer import ScanRecord


def regenerate(record: ScanRecord) -> str:
    chain = directive.generate(directive.parse(record.delta, record.theta), record.n)
    return chain.word(record.n)


class TestScan:
    def test_small_scan_shape(self):
        result = explorer.scan(3, 60)
        assert result.leaf_count == 64
        assert result.last_index == 63
        assert not result.truncated
        assert result.violations == 0
        assert all(len(r.delta) == r.n == len(r.theta) for r in result.records)
        first = result.records[0]
        assert (first.delta, first.theta, first.n, first.minimal_size) == ("0", "R", 1, 1)

    def test_records_deduplicate_by_word(self):
        result = explorer.scan(3, 60)
        seen_words = [regenerate(r) for r in result.records]
        assert len(seen_words) == len(set(seen_words))

    def test_records_are_reverifiable(self):
        result = explorer.scan(3, 60)
        for record in result.records:
            word = regenerate(record)
            assert record.length == len(word)
            gamma = attractor.minimal_attractor(word)
            assert len(gamma.positions) == record.minimal_size
            assert attractor.verify(word, gamma).valid
            if record.theorem_size is not None:
                assert record.theorem_size >= record.minimal_size

    def test_rerun_is_byte_identical(self):
        one = explorer.scan(4, 60)
        two = explorer.scan(4, 60)
        as_bytes = lambda res: "\n".join(explorer.record_to_json_line(r) for r in res.records)
        assert as_bytes(one) == as_bytes(two)

    def test_bound_one_flags_every_two_letter_prefix(self):
        result = explorer.scan(2, 60, bound=1)
        for record in result.records:
            assert record.ok == (record.minimal_size <= 1)
        assert result.violations == sum(1 for r in result.records if len(set(regenerate(r))) == 2)
        assert result.violations > 0

    def test_rejects_silly_bound(self):
        with pytest.raises(ValueError):
            explorer.scan(2, 60, bound=0)

    def test_word_length_budget_prunes(self):
        tight = explorer.scan(4, 8)
        assert all(r.length <= 8 for r in tight.records)

    def test_checkpoint_resume_matches_full_run(self, tmp_path):
        marker = tmp_path / "scan.checkpoint"
        full = explorer.scan(3, 60)
        partial = explorer.scan(3, 60, checkpoint_path=str(marker), max_leaves=10)
        assert partial.truncated
        assert marker.read_text().strip() == str(partial.last_index)
        resumed = explorer.scan(3, 60, checkpoint_path=str(marker))
        assert not resumed.truncated
        combined = partial.records + resumed.records
        assert combined == full.records

    def test_streaming_callback_sees_every_record(self):
        streamed = []
        result = explorer.scan(3, 60, on_record=streamed.append)
        assert streamed == result.records


class TestFamilyReport:
    def test_sturmian_family(self):
        result = explorer.family_report(SequenceFamily.STANDARD_STURMIAN, 6, 60)
        assert result.records
        for record in result.records:
            assert set(record.theta) == {"R"}
            assert record.theorem_size is not None
            word = regenerate(record)
            assert record.theorem_size == record.minimal_size == len(set(word))

    def test_pseudostandard_family_sizes_follow_trichotomy(self):
        result = explorer.family_report(SequenceFamily.PSEUDOSTANDARD, 5, 60)
        assert result.records
        for record in result.records:
            assert set(record.theta) == {"E"}
            assert record.theorem_size in (2, 3)
            assert record.minimal_size in (2, 3)
            first = record.delta[0]
            flipped = "1" if first == "0" else "0"
            if record.delta == first * record.n:
                assert record.theorem_size == 2 == record.minimal_size
            elif record.n >= 2 and record.delta == first + flipped * (record.n - 1):
                assert record.theorem_size == 3 and record.minimal_size == 2
            else:
                assert record.theorem_size == 3 == record.minimal_size

    def test_rote_family(self):
        result = explorer.family_report(SequenceFamily.CS_ROTE_VALID, 6, 60)
        assert result.records
        for record in result.records:
            word = regenerate(record)
            assert record.theorem_size == len(set(word))
            if record.length <= 60:
                assert record.minimal_size == len(set(word))

    def test_other_family_has_no_enumeration(self):
        with pytest.raises(ValueError):
            explorer.family_report(SequenceFamily.OTHER, 3, 60)


class TestSerialization:
    def test_jsonl_round_trip(self, tmp_path):
        result = explorer.scan(3, 60)
        path = tmp_path / "records.jsonl"
        explorer.write_jsonl(result.records, str(path))
        lines = path.read_text().splitlines()
        assert len(lines) == len(result.records)
        parsed = [json.loads(line) for line in lines]
        for obj, record in zip(parsed, result.records):
            assert obj == record.to_json_obj()
            assert list(obj) == list(explorer.CSV_COLUMNS)

    def test_csv_round_trip(self, tmp_path):
        result = explorer.scan(3, 60)
        path = tmp_path / "records.csv"
        explorer.write_csv(result.records, str(path))
        with open(path, newline="") as fh:
            rows = list(csv.DictReader(fh))
        assert len(rows) == len(result.records)
        for row, record in zip(rows, result.records):
            assert row["delta"] == record.delta
            assert row["theta"] == record.theta
            assert int(row["n"]) == record.n
            assert int(row["len"]) == record.length
            assert int(row["minimal_size"]) == record.minimal_size
            assert row["theorem_size"] == ("" if record.theorem_size is None else str(record.theorem_size))
            assert row["ok"] == str(record.ok)
