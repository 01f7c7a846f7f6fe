# -*- coding: utf-8 -*-
"""Hand-off formats: linkage-matrix CSV, Newick and JSON reports."""
import io
import json
import logging
import math
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, TextIO, Union

import numpy as np

from owalinkbase.sequences import format_number

from .consts import DELIMITER, JSON_FLOAT_FORMAT, JSON_INDENT, NEWICK_NEGATIVE_COMMENT

log = logging.getLogger(__name__)

PathLike = Union[str, Path]


def linkage_rows(dendrogram) -> List[List[Any]]:
    """``[left_id, right_id, height, new_size]`` for each merge, in execution order."""
    return [[m.left_id, m.right_id, m.height, m.new_size] for m in dendrogram.merges]


def format_linkage_csv(dendrogram) -> str:
    out = io.StringIO()
    for left, right, height, size in linkage_rows(dendrogram):
        out.write(DELIMITER.join([str(left), str(right), format_number(height), str(size)]))
        out.write("\n")
    return out.getvalue()


def _write_text(text: str, target: Union[PathLike, TextIO]) -> None:
    if hasattr(target, "write"):
        target.write(text)
        return
    with open(target, "w", newline="") as handle:
        handle.write(text)
    log.debug("wrote %d bytes to %s", len(text), target)


def write_linkage_csv(dendrogram, target: Union[PathLike, TextIO]) -> None:
    _write_text(format_linkage_csv(dendrogram), target)


def to_newick(dendrogram, labels: Optional[Sequence[str]] = None) -> str:
    """
    Newick tree with branch lengths equal to height differences.

    Inversions yield negative branch lengths; the output then starts with a comment line saying so.
    """
    n = dendrogram.n
    labels = [str(i) for i in range(n)] if labels is None else [str(label) for label in labels]
    nodes: Dict[int, str] = dict(enumerate(labels))
    heights: Dict[int, float] = dict.fromkeys(range(n), 0.0)
    negative = False
    for step, merge in enumerate(dendrogram.merges, start=1):
        branches = []
        for child in (merge.left_id, merge.right_id):
            length = merge.height - heights[child]
            negative = negative or length < 0
            branches.append("{}:{}".format(nodes.pop(child), format_number(length)))
        nodes[n - 1 + step] = "({})".format(",".join(branches))
        heights[n - 1 + step] = merge.height
    (tree,) = nodes.values()
    newick = tree + ";\n"
    if negative:
        newick = NEWICK_NEGATIVE_COMMENT + "\n" + newick
    return newick


def write_newick(dendrogram, target: Union[PathLike, TextIO], labels: Optional[Sequence[str]] = None) -> None:
    _write_text(to_newick(dendrogram, labels), target)


def _encode(obj: Any, level: int) -> str:
    pad = " " * (JSON_INDENT * (level + 1))
    end = " " * (JSON_INDENT * level)
    if isinstance(obj, np.ndarray):
        obj = obj.tolist()
    if obj is None or isinstance(obj, (bool, np.bool_)):
        return json.dumps(None if obj is None else bool(obj))
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        if not math.isfinite(obj):
            raise ValueError("{!r} has no JSON representation".format(float(obj)))
        return JSON_FLOAT_FORMAT.format(float(obj))
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = ["{}{}: {}".format(pad, json.dumps(str(key)), _encode(value, level + 1)) for key, value in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + end + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        return "[\n" + ",\n".join(pad + _encode(value, level + 1) for value in obj) + "\n" + end + "]"
    raise TypeError("cannot serialize {!r}".format(type(obj)))


def dumps_json(obj: Any) -> str:
    """
    Serialize reports with floats at 17 significant digits.

    >>> dumps_json({"epsilon": 1e-12, "inversions": []})
    '{\\n  "epsilon": 9.9999999999999998e-13,\\n  "inversions": []\\n}'
    """
    return _encode(obj, 0)


def write_json(obj: Any, target: Union[PathLike, TextIO]) -> None:
    _write_text(dumps_json(obj) + "\n", target)
