"""Enumeration caps and search budgets."""

from __future__ import annotations

import os
from contextlib import contextmanager
from dataclasses import dataclass

DEFAULT_CAP = 2**20

_override: list[int] = []


def enumeration_cap() -> int:
    """Closure cap: innermost ``cap_scope`` if any, else HOLOFORGE_CAP, else the default."""
    if _override:
        return _override[-1]
    raw = os.environ.get("HOLOFORGE_CAP")
    return int(raw) if raw else DEFAULT_CAP


@contextmanager
def cap_scope(cap: int):
    """Use ``cap`` as the default enumeration cap inside the block."""
    _override.append(cap)
    try:
        yield
    finally:
        _override.pop()


@dataclass
class Limits:
    cap: int = DEFAULT_CAP
    oracle_budget: int = 10**7
    ring_budget: int = 10**5
    seed: int = 0

    @classmethod
    def from_env(cls, **overrides) -> "Limits":
        limits = cls(cap=enumeration_cap())
        for k, v in overrides.items():
            if v is not None:
                setattr(limits, k, v)
        return limits
