from __future__ import annotations

import os

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from hyperforge import Hypergraph

settings.register_profile("default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("ci", max_examples=200, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


def edges(max_vertex: int = 7, min_size: int = 1, max_size: int = 4):
    return st.frozensets(st.integers(0, max_vertex), min_size=min_size, max_size=max_size)


@st.composite
def hypergraphs(draw, max_vertex: int = 7, max_edges: int = 6, max_size: int = 4):
    return Hypergraph(draw(st.lists(edges(max_vertex, 1, max_size), min_size=0, max_size=max_edges)))


@st.composite
def uniform_hypergraphs(draw, k: int | None = None, max_vertex: int = 7, max_edges: int = 6):
    if k is None:
        k = draw(st.integers(1, 4))
    fam = draw(st.lists(edges(max_vertex, k, k), min_size=1, max_size=max_edges))
    return Hypergraph(fam)


@st.composite
def intersecting_hypergraphs(draw, max_vertex: int = 7, max_edges: int = 6, max_size: int = 4):
    """Greedy: keep drawn edges that meet everything kept so far."""
    kept: list[frozenset[int]] = []
    for e in draw(st.lists(edges(max_vertex, 1, max_size), min_size=1, max_size=3 * max_edges)):
        if all(e & f for f in kept):
            kept.append(e)
        if len(kept) == max_edges:
            break
    return Hypergraph(kept)
