"""Configurable size ceilings for the exact searches.

Defaults suit desk-scale inputs.  Every limit can be overridden through the
``SUPERFLATS_LIMITS`` environment variable, a comma-separated list of
``name=value`` pairs, e.g. ``SUPERFLATS_LIMITS=permanent_side=12,minor_n=11``.
"""

import os
from dataclasses import dataclass, replace

from .errors import ParseError


@dataclass(frozen=True)
class Limits:
    permanent_side: int = 10        # max side for permanent enumeration
    rank_dim: int = 20              # max min(rows, cols) for sb_rank
    lattice_elements: int = 4096    # max elements in a closure
    lattice_iso_elements: int = 256 # max lattice size for isomorphism search
    chromatic_n: int = 16           # max n for exact chromatic number
    minor_n: int = 10               # max host size for minor testing
    cm_n: int = 9                   # max n for cm-rank
    wildcard_side: int = 12         # max side for wildcard rank
    vertex_capacity: int = 64       # single-word bitset rows
    max_chains: int = 10**6         # maximal-chain enumeration cap


def _from_env() -> Limits:
    base = Limits()
    raw = os.environ.get("SUPERFLATS_LIMITS", "").strip()
    if not raw:
        return base
    overrides = {}
    for item in raw.split(","):
        item = item.strip()
        if not item:
            continue
        name, sep, value = item.partition("=")
        if not sep or not hasattr(base, name.strip()):
            raise ParseError(f"bad SUPERFLATS_LIMITS entry: {item!r}")
        try:
            overrides[name.strip()] = int(value)
        except ValueError:
            raise ParseError(f"bad SUPERFLATS_LIMITS value: {item!r}") from None
    return replace(base, **overrides)


LIMITS = _from_env()
