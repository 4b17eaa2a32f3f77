"""Set pair systems and the tree machinery behind the (2, n) order bound.

A set pair system is an indexed list of pairs ``(a_i, b_i)`` with
``a_i & b_j`` nonempty exactly when ``i != j``.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .bounds import BoundReport, sps_order_bound, sps_size_bound
from .errors import FormatError, PreconditionError


def _vertex_set(items: Iterable[int]) -> frozenset[int]:
    items = list(items)
    for v in items:
        if not isinstance(v, int) or isinstance(v, bool) or v < 0:
            raise PreconditionError(f"vertex ids must be nonnegative integers, got {v!r}")
    if len(set(items)) != len(items):
        raise PreconditionError(f"set {sorted(items)} lists a vertex twice")
    return frozenset(items)


@dataclass(frozen=True)
class SetPairSystem:
    pairs: tuple[tuple[frozenset[int], frozenset[int]], ...]

    def __init__(self, pairs: Iterable[tuple[Iterable[int], Iterable[int]]] = ()):
        object.__setattr__(self, "pairs", tuple((_vertex_set(a), _vertex_set(b)) for a, b in pairs))

    def __len__(self) -> int:
        return len(self.pairs)

    @property
    def m(self) -> int:
        return len(self.pairs)

    @property
    def a_sets(self) -> list[frozenset[int]]:
        return [a for a, _ in self.pairs]

    @property
    def b_sets(self) -> list[frozenset[int]]:
        return [b for _, b in self.pairs]

    @property
    def support(self) -> frozenset[int]:
        return frozenset().union(*(a | b for a, b in self.pairs))

    def to_json(self) -> str:
        return format_sps(self)


def verify_sps(s: SetPairSystem) -> bool:
    pairs = s.pairs
    for i, (a, _) in enumerate(pairs):
        for j, (_, b) in enumerate(pairs):
            if bool(a & b) != (i != j):
                return False
    return True


def is_bounded(s: SetPairSystem, a: int, b: int) -> bool:
    return all(len(x) <= a and len(y) <= b for x, y in s.pairs)


def is_one_cross_intersecting(s: SetPairSystem) -> bool:
    if not verify_sps(s):
        raise PreconditionError("not a set pair system")
    return all(
        len(a & b) == 1 for i, (a, _) in enumerate(s.pairs) for j, (_, b) in enumerate(s.pairs) if i != j
    )


def sps_order(s: SetPairSystem) -> int:
    return len(s.support)


def parse_sps(text: str) -> SetPairSystem:
    """Read ``{"pairs": [{"a": [...], "b": [...]}, ...]}``."""
    try:
        doc = json.loads(text)
        pairs = doc["pairs"]
        return SetPairSystem((p["a"], p["b"]) for p in pairs)
    except (ValueError, KeyError, TypeError) as exc:
        if isinstance(exc, PreconditionError):
            raise FormatError(str(exc)) from None
        raise FormatError(f"not an SPS document: {exc}") from None


def format_sps(s: SetPairSystem) -> str:
    """Canonical SPS JSON: one pair per line, ids ascending."""
    if not s.pairs:
        return '{"pairs": []}\n'
    lines = [
        f'  {{"a": {json.dumps(sorted(a))}, "b": {json.dumps(sorted(b))}}}' for a, b in s.pairs
    ]
    return '{"pairs": [\n' + ",\n".join(lines) + "\n]}\n"


def read_sps(path) -> SetPairSystem:
    with open(path, encoding="utf-8") as fh:
        return parse_sps(fh.read())


def write_sps(s: SetPairSystem, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(format_sps(s))


# -- trees -------------------------------------------------------------------


@dataclass(frozen=True)
class Tree:
    vertices: frozenset[int]
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if not self.vertices:
            raise PreconditionError("a tree needs at least one vertex")
        if len(self.edges) != len(self.vertices) - 1:
            raise PreconditionError("a tree on v vertices has v - 1 edges")
        for u, v in self.edges:
            if u == v or u not in self.vertices or v not in self.vertices:
                raise PreconditionError(f"bad tree edge {(u, v)}")
        if len(self._distances(min(self.vertices))) != len(self.vertices):
            raise PreconditionError("tree is not connected")

    @classmethod
    def from_edges(cls, edges: Iterable[Iterable[int]], vertices: Iterable[int] | None = None) -> Tree:
        norm = []
        for e in edges:
            u, v = sorted(e)
            norm.append((u, v))
        verts = set(vertices) if vertices is not None else {x for e in norm for x in e}
        return cls(frozenset(verts), tuple(norm))

    @property
    def t(self) -> int:
        return len(self.edges)

    def adjacency(self) -> dict[int, list[int]]:
        adj = {v: [] for v in self.vertices}
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return adj

    def _distances(self, *sources: int, adj=None) -> dict[int, int]:
        adj = adj or self.adjacency()
        dist = {s: 0 for s in sources}
        queue = deque(sources)
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if y not in dist:
                    dist[y] = dist[x] + 1
                    queue.append(y)
        return dist

    def bipartition(self) -> tuple[frozenset[int], frozenset[int]]:
        """Colour classes, smaller first (ties: the class of the least vertex)."""
        dist = self._distances(min(self.vertices))
        even = frozenset(v for v, d in dist.items() if d % 2 == 0)
        odd = self.vertices - even
        return (even, odd) if len(even) <= len(odd) else (odd, even)

    def is_star(self) -> bool:
        if self.t <= 1:
            return True
        return max(len(n) for n in self.adjacency().values()) == self.t


def odd_distance_set(tree: Tree, index: int) -> frozenset[int]:
    """Vertices whose distance to edge ``index`` (nearer endpoint) is odd."""
    if not 0 <= index < tree.t:
        raise PreconditionError(f"tree has no edge {index}")
    dist = tree._distances(*tree.edges[index])
    return frozenset(v for v, d in dist.items() if d % 2 == 1)


class TreeOddSum(NamedTuple):
    total: int
    b: int
    w: int


def tree_odd_sum(tree: Tree) -> TreeOddSum:
    """Sum of odd-distance set sizes over all edges, with colour class sizes b <= w."""
    # Root the tree once. A vertex is nearer the child end of an edge exactly
    # when it lies in the child's subtree, and in a tree the parity of a
    # distance is the parity of the depth difference, so per-subtree counts of
    # even/odd depth vertices give every |V_e| without further searches.
    adj = tree.adjacency()
    root = min(tree.vertices)
    parent: dict[int, int | None] = {root: None}
    depth = {root: 0}
    order = [root]
    for x in order:
        for y in adj[x]:
            if y not in parent:
                parent[y] = x
                depth[y] = depth[x] + 1
                order.append(y)
    sub = {v: [0, 0] for v in order}
    for v in reversed(order):
        sub[v][depth[v] & 1] += 1
        p = parent[v]
        if p is not None:
            sub[p][0] += sub[v][0]
            sub[p][1] += sub[v][1]
    everything = sub[root]
    total = 0
    for u, v in tree.edges:
        child, par = (v, u) if parent[v] == u else (u, v)
        inside = sub[child]
        total += inside[1 - (depth[child] & 1)]
        other = 1 - (depth[par] & 1)
        total += everything[other] - inside[other]
    b, w = sorted(everything)
    return TreeOddSum(total, b, w)


# -- A-side shape ------------------------------------------------------------


class AGraphShape(NamedTuple):
    kind: str  # "odd_cycle", "forest" or "other"
    length: int | None = None
    components: int | None = None


def classify_a_graph(s: SetPairSystem) -> AGraphShape:
    """Classify the graph formed by the A-sets (each must have 2 vertices)."""
    edges = []
    for a in s.a_sets:
        if len(a) != 2:
            raise PreconditionError(f"A-set {sorted(a)} does not have exactly 2 vertices")
        edges.append(tuple(sorted(a)))
    verts = {v for e in edges for v in e}
    parent = {v: v for v in verts}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    cyclic = False
    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru == rv:
            cyclic = True
        else:
            parent[ru] = rv
    components = len({find(v) for v in verts})
    if not cyclic:
        return AGraphShape("forest", components=components)
    degree = {v: 0 for v in verts}
    for u, v in edges:
        degree[u] += 1
        degree[v] += 1
    if components == 1 and all(d == 2 for d in degree.values()) and len(edges) % 2 == 1:
        return AGraphShape("odd_cycle", length=len(edges))
    return AGraphShape("other")


def sps_report(s: SetPairSystem, n: int) -> BoundReport:
    """Pair count and order of a (2, n)-bounded 1-cross-intersecting SPS vs. their bounds."""
    if not is_bounded(s, 2, n):
        raise PreconditionError(f"system is not (2, {n})-bounded")
    if not is_one_cross_intersecting(s):
        raise PreconditionError("system is not 1-cross-intersecting")
    report = BoundReport(
        stats={
            "n": n,
            "m": s.m,
            "order": sps_order(s),
            "a_graph": classify_a_graph(s)._asdict() if all(len(a) == 2 for a in s.a_sets) else None,
        }
    )
    report.add("sps-size", s.m, lambda: sps_size_bound(n), None if n >= 4 else "needs n >= 4")
    # at n = 1 two disjoint A-edges with singleton B-sets reach order 4 > 100/27
    order_reason = None if n >= 2 else "the closed form is exceeded at n = 1"
    report.add("sps-order", sps_order(s), lambda: sps_order_bound(n), order_reason)
    return report

