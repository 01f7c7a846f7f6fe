import logging

import numpy as np
import pytest

from owalinkbase.geometry import CondensedDistanceMatrix, PointSet, matrix_from_square
from owalinkbase.sequences import CoefficientSequence, sequence

log = logging.getLogger("owalink")
log.setLevel(logging.DEBUG)


@pytest.fixture(scope="session")
def inverting_rows():
    """Four objects where the mean of the two smallest distances inverts at the last merge."""
    return [
        [0.0, 0.4, 0.6, 0.9],
        [0.4, 0.0, 0.9, 0.6],
        [0.6, 0.9, 0.0, 0.7],
        [0.9, 0.6, 0.7, 0.0],
    ]


@pytest.fixture(scope="session")
def inverting_matrix(inverting_rows) -> CondensedDistanceMatrix:
    return matrix_from_square(inverting_rows)


@pytest.fixture(scope="session")
def eight_terms() -> CoefficientSequence:
    """Passes the monotone and ratio checks, yet admits a counterexample."""
    return sequence([1, 0.5, 0.375, 0.375, 0.28125, 0.28125, 0.28125, 0.28125])


@pytest.fixture(scope="session")
def log_concave() -> CoefficientSequence:
    return sequence([1, 0.5, 0.2, 7 / 75])


@pytest.fixture(scope="session")
def triangle_points() -> PointSet:
    """Centroid linkage merges the third point below the height of the first merge."""
    return PointSet.from_rows([[0.0, 0.0], [2.0, 0.0], [1.0, 1.8]])


@pytest.fixture()
def rng():
    return np.random.default_rng(20240517)


@pytest.fixture()
def random_points(rng):
    def _random_points(n, dimension=2):
        return PointSet(rng.uniform(0, 10, size=(n, dimension)))

    return _random_points


@pytest.fixture()
def write_csv(tmp_path):
    """Write rows (or raw text) to a CSV file inside the test directory."""

    def _write_csv(rows, name="input.csv"):
        path = tmp_path / name
        if isinstance(rows, str):
            path.write_text(rows)
        else:
            path.write_text("".join(",".join(repr(float(x)) for x in row) + "\n" for row in rows))
        return path

    return _write_csv
