"""Verification and timing utilities for sglib."""

from .harness import DEFAULT_BENCH_PAIR, VerifyHarness, bench_sylvester

__all__ = ["VerifyHarness", "bench_sylvester", "DEFAULT_BENCH_PAIR"]
