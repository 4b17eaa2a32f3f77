"""Finite hypergraphs as ordered edge lists, plus the plain-text edge format.

Vertices are nonnegative integers. Edges are frozensets and may repeat, so
every pairwise predicate ranges over index pairs ``i < j``. Isolated vertices
cannot be represented: the vertex set is the union of the edges.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable

from .errors import FormatError, PreconditionError

Edge = frozenset


def _as_edge(vertices: Iterable[int]) -> frozenset[int]:
    items = list(vertices)
    edge = frozenset(items)
    if not edge:
        raise PreconditionError("edges must be nonempty")
    if len(edge) != len(items):
        raise PreconditionError(f"edge {sorted(edge)} lists a vertex twice")
    for v in edge:
        if not isinstance(v, int) or isinstance(v, bool) or v < 0:
            raise PreconditionError(f"vertex ids must be nonnegative integers, got {v!r}")
    return edge


@dataclass(frozen=True)
class Hypergraph:
    edges: tuple[frozenset[int], ...]

    def __init__(self, edges: Iterable[Iterable[int]] = ()):
        object.__setattr__(self, "edges", tuple(_as_edge(e) for e in edges))

    def __len__(self) -> int:
        return len(self.edges)

    def __iter__(self):
        return iter(self.edges)

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def support(self) -> frozenset[int]:
        return frozenset().union(*self.edges)

    @property
    def order(self) -> int:
        """Number of non-isolated vertices."""
        return len(self.support)

    @cached_property
    def degrees(self) -> dict[int, int]:
        counts = Counter(v for e in self.edges for v in e)
        return dict(sorted(counts.items()))

    def degree(self, v: int) -> int:
        return self.degrees.get(v, 0)

    @property
    def max_degree(self) -> int:
        return max(self.degrees.values(), default=0)

    @cached_property
    def uniformity(self) -> int | None:
        """Common edge size, or None for mixed sizes and for the empty hypergraph."""
        sizes = {len(e) for e in self.edges}
        return sizes.pop() if len(sizes) == 1 else None

    def pair_intersection_sizes(self) -> Counter:
        return Counter(len(a & b) for a, b in combinations(self.edges, 2))

    def is_intersecting(self) -> bool:
        return all(a & b for a, b in combinations(self.edges, 2))

    def is_lambda_intersecting(self, lam: int) -> bool:
        return all(len(a & b) == lam for a, b in combinations(self.edges, 2))

    def infer_lambda(self) -> int | None:
        """The common pairwise intersection size, or None if sizes differ."""
        if self.m < 2:
            raise PreconditionError("intersection size is undefined for fewer than 2 edges")
        lam = len(self.edges[0] & self.edges[1])
        return lam if self.is_lambda_intersecting(lam) else None

    def core(self) -> frozenset[int]:
        if not self.edges:
            raise PreconditionError("core of the empty hypergraph is undefined")
        return frozenset.intersection(*self.edges)

    def is_sunflower(self) -> bool:
        if self.m <= 2:
            return True
        c = self.core()
        return all(a & b == c for a, b in combinations(self.edges, 2))

    def is_trivial_intersecting(self) -> bool:
        return not self.edges or bool(self.core())

    def max_vertex(self) -> int:
        return max(self.support, default=-1)

    def relabel(self, mapping: dict[int, int]) -> Hypergraph:
        return Hypergraph([mapping[v] for v in e] for e in self.edges)

    def sorted_edges(self) -> list[tuple[int, ...]]:
        return [tuple(sorted(e)) for e in self.edges]

    def to_text(self) -> str:
        return format_text(self)

    def __repr__(self) -> str:
        return f"Hypergraph({self.sorted_edges()!r})"


# The module-level forms read better in reports and tests.
def order(h: Hypergraph) -> int:
    return h.order


def uniformity(h: Hypergraph) -> int | None:
    return h.uniformity


def max_degree(h: Hypergraph) -> int:
    return h.max_degree


def parse_text(text: str) -> Hypergraph:
    """Read the edge-per-line format. ``#`` starts a comment."""
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            ids = [int(tok) for tok in line.split()]
        except ValueError:
            raise FormatError(f"line {lineno}: expected integer vertex ids, got {raw!r}") from None
        if any(v < 0 for v in ids):
            raise FormatError(f"line {lineno}: vertex ids must be nonnegative")
        if len(set(ids)) != len(ids):
            raise FormatError(f"line {lineno}: repeated vertex within an edge")
        edges.append(ids)
    return Hypergraph(edges)


def format_text(h: Hypergraph) -> str:
    """Canonical form: one edge per line, ids ascending, edge order kept."""
    return "".join(" ".join(map(str, edge)) + "\n" for edge in h.sorted_edges())


def read_hypergraph(path) -> Hypergraph:
    with open(path, encoding="utf-8") as fh:
        return parse_text(fh.read())


def write_hypergraph(h: Hypergraph, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(format_text(h))
