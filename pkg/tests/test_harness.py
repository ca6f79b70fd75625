"""Tests for the verification harness."""

import json

import pytest

from sglib.benchmark import VerifyHarness
from sglib.registry import CheckRegistry


class TestVerifyHarness:
    """Test the VerifyHarness functionality."""

    def test_defaults_to_every_registered_check(self):
        harness = VerifyHarness(count=0)
        assert harness.check_names == sorted(CheckRegistry.list())

    def test_invalid_arguments(self):
        with pytest.raises(ValueError):
            VerifyHarness(count=-1)
        with pytest.raises(ValueError):
            VerifyHarness(workers=0)

    def test_run_check(self):
        result = VerifyHarness(count=5, seed=3).run_check("wang_wang")
        assert result["check"] == "wang_wang"
        assert result["category"] == "sylvester"
        assert result["passed"] == 5
        assert result["failed"] == 0
        assert result["failures"] == []

    def test_results_do_not_depend_on_workers(self):
        checks = ["apery_invariants", "unique_representation"]
        serial = VerifyHarness(count=6, seed=11, workers=1, checks=checks).run()
        threaded = VerifyHarness(count=6, seed=11, workers=3, checks=checks).run()
        assert serial["passed"] == threaded["passed"] == 12
        assert serial["checks"] == threaded["checks"]

    def test_summary_written_to_file(self, tmp_path):
        output_file = tmp_path / "nested" / "verify.json"
        summary = VerifyHarness(count=2, checks=["wang_wang", "hilbert_series"]).run(
            output_path=output_file
        )

        assert output_file.exists()
        with open(output_file, encoding="utf-8") as f:
            saved = json.load(f)
        assert saved["passed"] == summary["passed"] == 4
        assert saved["failed"] == 0
        assert [c["check"] for c in saved["checks"]] == ["hilbert_series", "wang_wang"]
        for key in ("timestamp", "seed", "count", "workers", "runtime_seconds"):
            assert key in saved

    def test_failures_are_reported(self, monkeypatch):
        from sglib.checks import sylvester_checks
        from sglib.errors import RelationViolation

        def broken(*args, **kwargs):
            raise RelationViolation("forced")

        monkeypatch.setattr(sylvester_checks, "wang_wang_T", broken)
        result = VerifyHarness(count=2).run_check("wang_wang")
        assert result["failed"] == 2
        assert "RelationViolation" in result["failures"][0]["error"]
