"""Checked-in transcriptions of the published reference diagrams.

These pin the acceptance surface to the source material rather than to this
implementation: the 14 level-2 types with their step words, the 21 level-2
Hasse edges with their dashed/solid styling, and the 42 level-3 node labels.
"""

from __future__ import annotations

import json
from functools import lru_cache
from importlib import resources


@lru_cache(maxsize=1)
def _load() -> dict:
    path = resources.files("cofinaltypes").joinpath("data/reference_figures.json")
    return json.loads(path.read_text(encoding="utf-8"))


def figure2_codes() -> dict[str, str]:
    """Level-2 canonical type -> comma-separated step word (14 entries)."""
    return dict(_load()["figure2_codes"])


def figure3_edges() -> list[dict]:
    """Level-2 Hasse edges as {lower, upper, dashed} dicts (21 entries)."""
    return [dict(e) for e in _load()["figure3_edges"]]


def figure4_nodes() -> list[str]:
    """The 42 level-3 canonical type labels."""
    return list(_load()["figure4_nodes"])
