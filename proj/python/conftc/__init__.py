"""Cell complexes of disks in a strip: Betti numbers, tori certificates, TC values."""

import json

from ._core import (
    Error,
    InvalidParams,
    NotApplicable,
    ResourceLimit,
    UnknownSpace,
    bgrt_upper,
    cell_counts,
    cells,
    cofaces,
    faces,
    lower_bound,
)
from . import _core

__all__ = [
    "Error", "InvalidParams", "NotApplicable", "ResourceLimit", "UnknownSpace",
    "bgrt_upper", "betti", "cell_counts", "cells", "certify", "cofaces", "faces",
    "lower_bound", "reference", "tc", "witness",
]


def betti(n, w, memory_budget=0):
    """Cell counts, Betti numbers over F2 and Euler characteristic of cell(n, w)."""
    return json.loads(_core.betti_json(n, w, memory_budget))


def certify(n, w, r=2, verify="auto"):
    return json.loads(_core.certify_json(n, w, r, verify))


def tc(n, w, r):
    return json.loads(_core.tc_json(n, w, r))


def witness(m, l, r):
    return json.loads(_core.witness_json(m, l, r))


def reference(space, n, k=2, r=2):
    return json.loads(_core.reference_json(space, n, k, r))
