"""Pytest configuration for benchmarks."""

import json
from pathlib import Path

import numpy as np
import pytest

from charclass.f2linalg import F2Matrix

RESULTS_DIR = Path(__file__).parent / "results"


@pytest.fixture
def random_f2_matrix():
    """Factory for seeded dense F2 matrices."""
    rng = np.random.default_rng(0)

    def make(rows: int, cols: int) -> F2Matrix:
        return F2Matrix.from_rows(rng.integers(0, 2, size=(rows, cols), dtype=np.uint8), cols=cols)

    return make


@pytest.fixture
def save_result(benchmark):
    """Write a summary for ``python -m benchmarks --results``."""

    def write(name: str, summary: str, **details) -> None:
        stats = benchmark.stats
        RESULTS_DIR.mkdir(exist_ok=True)
        (RESULTS_DIR / f"{name}.json").write_text(
            json.dumps(
                {
                    "success": True,
                    "summary": summary,
                    **details,
                    "benchmark_stats": {
                        "mean": stats["mean"] if stats else 0.0,
                        "stddev": stats["stddev"] if stats else 0.0,
                    },
                },
                indent=2,
            )
        )

    return write
