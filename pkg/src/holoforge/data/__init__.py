"""Matrices transcribed from the worked examples, checked against a stored sha256."""

from __future__ import annotations

import hashlib
import json
from functools import lru_cache
from importlib import resources

from ..matrix import Matrix
from ..ring import RingSpec

_FILE = "worked_matrices.json"


class ChecksumError(RuntimeError):
    pass


def load_checked(raw: bytes, expected: str) -> dict:
    """Parse the table after confirming its sha256 digest."""
    actual = hashlib.sha256(raw).hexdigest()
    if actual != expected.strip():
        raise ChecksumError(f"{_FILE} checksum {actual} does not match {expected.strip()}")
    return json.loads(raw)


@lru_cache(maxsize=1)
def _table() -> dict:
    root = resources.files(__name__)
    return load_checked(root.joinpath(_FILE).read_bytes(), root.joinpath("worked_matrices.sha256").read_text())


def names() -> list[str]:
    return sorted(_table())


def signed_rows(name: str) -> list[list[int]]:
    return [list(r) for r in _table()[name]["rows"]]


def matrix(name: str, ring: RingSpec | None = None) -> Matrix:
    """Stored matrix over its own ring, or over ``ring`` for the p-generic entries."""
    entry = _table()[name]
    if ring is None:
        if entry["ring"] is None:
            raise ValueError(f"{name} is stored for every p; pass a ring")
        ring = RingSpec(*entry["ring"])
    return Matrix.from_rows(ring, entry["rows"])
