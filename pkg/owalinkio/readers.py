# -*- coding: utf-8 -*-
import csv
import logging
import math
from pathlib import Path
from typing import List, Tuple, Union

from owalinkbase.geometry import CondensedDistanceMatrix, PointSet, matrix_from_square

from .consts import DELIMITER
from .exceptions import ParseError

log = logging.getLogger(__name__)

PathLike = Union[str, Path]


def _is_numeric(cell: str) -> bool:
    try:
        float(cell)
    except ValueError:
        return False
    return True


def read_rows(path: PathLike) -> List[Tuple[int, List[float]]]:
    """
    Read numeric CSV rows as ``(line number, values)`` pairs.

    Blank lines are skipped. A first row with any non-numeric cell is treated as a header.

    :raises ParseError: on unreadable files, non-numeric or non-finite cells, and ragged rows
    """
    try:
        handle = open(path, newline="")
    except OSError as exc:
        raise ParseError(path, 0, exc.strerror or str(exc))

    rows = []
    first = True
    with handle:
        for line, record in enumerate(csv.reader(handle, delimiter=DELIMITER), start=1):
            cells = [cell.strip() for cell in record]
            if not any(cells):
                continue
            header, first = first and not all(_is_numeric(cell) for cell in cells), False
            if header:
                log.debug("%s: treating first row as header", path)
                continue
            try:
                values = [float(cell) for cell in cells]
            except ValueError:
                bad = next(cell for cell in cells if not _is_numeric(cell))
                raise ParseError(path, line, "non-numeric value {!r}".format(bad))
            if not all(math.isfinite(value) for value in values):
                raise ParseError(path, line, "non-finite value")
            if rows and len(values) != len(rows[0][1]):
                raise ParseError(
                    path, line, "expected {} columns, found {}".format(len(rows[0][1]), len(values))
                )
            rows.append((line, values))
    if not rows:
        raise ParseError(path, 0, "no data rows")
    return rows


def read_points(path: PathLike) -> PointSet:
    """One point per row."""
    rows = read_rows(path)
    log.info("read %d points of dimension %d from %s", len(rows), len(rows[0][1]), path)
    return PointSet.from_rows(values for _, values in rows)


def read_matrix(path: PathLike) -> CondensedDistanceMatrix:
    """Square distance matrix, ``n`` rows of ``n`` columns."""
    rows = read_rows(path)
    n = len(rows)
    if len(rows[0][1]) != n:
        raise ParseError(path, rows[0][0], "expected a square matrix, found {} rows of {}".format(n, len(rows[0][1])))
    return matrix_from_square([values for _, values in rows])
