"""Grundy domination numbers of graphs and X-join products."""

import json

from ._core import *  # noqa: F401,F403
from ._core import GrundyError, decompose_json

__all__ = [name for name in dir() if not name.startswith("_")]


def decompose(g):
    """Modular decomposition tree of ``g`` as nested dicts."""
    return json.loads(decompose_json(g))
