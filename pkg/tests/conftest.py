"""Shared fixtures: golden-table loading and frozen reference values."""

import csv
import pathlib

import numpy as np
import pytest

GOLDEN_DIR = pathlib.Path(__file__).parent / "data" / "golden"


def _tag(s: str) -> str:
    return s.replace("-", "m").replace("/", "over").replace(".", "p")


def load_golden(n: int, alpha: str, beta: str):
    """Golden rule as float arrays: dict with theta, x, w, omega."""
    path = GOLDEN_DIR / f"golden_n{n}_a{_tag(alpha)}_b{_tag(beta)}.csv"
    if not path.exists():
        pytest.skip(f"golden file missing: {path.name}")
    cols = {"theta": [], "x": [], "w": [], "omega": []}
    with open(path) as fh:
        for row in csv.DictReader(fh):
            for key in cols:
                cols[key].append(float(row[key]))
    return {key: np.array(val) for key, val in cols.items()}


@pytest.fixture(scope="session")
def golden_100_mild():
    return load_golden(100, "0.1", "-0.3")


@pytest.fixture(scope="session")
def golden_1000_mild():
    return load_golden(1000, "0.1", "-0.3")
