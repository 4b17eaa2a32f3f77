"""Generators for the extremal families, each with closed-form predictions.

Every generator is deterministic. New vertices come from a single counter
that starts above every id already in use, so outputs are reproducible
byte for byte.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .errors import PreconditionError
from .geometry import affine_plane, is_prime, projective_plane
from .hypergraph import Hypergraph
from .sps import SetPairSystem


@dataclass(frozen=True)
class ConstructionManifest:
    name: str
    parameters: dict = field(default_factory=dict)
    predicted_order: int = 0
    predicted_edge_count: int = 0
    predicted_kernel: int | None = None

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "parameters": dict(self.parameters),
            "predicted_order": self.predicted_order,
            "predicted_edge_count": self.predicted_edge_count,
            "predicted_kernel": self.predicted_kernel,
        }


class _Fresh:
    def __init__(self, start: int):
        self.next = start

    def take(self, count: int = 1) -> list[int]:
        out = list(range(self.next, self.next + count))
        self.next += count
        return out


def _require_prime(q: int) -> None:
    if not is_prime(q):
        raise PreconditionError(f"q must be prime, got {q}")


def furedi_order_family(q: int, delta: int, k: int | None = None) -> tuple[Hypergraph, ConstructionManifest]:
    """Projective plane of order q, each line repeated ``delta // (q+1)`` times,
    every copy padded with ``k - q - 1`` private vertices."""
    _require_prime(q)
    if k is None:
        k = 2 * (q + 1)
    if k < q + 1:
        raise PreconditionError(f"k = {k} is smaller than the line size q + 1 = {q + 1}")
    copies = delta // (q + 1)
    if copies < 1:
        raise PreconditionError(f"delta = {delta} < q + 1 = {q + 1} gives no copies of each line")
    plane = projective_plane(q)
    n = q * q + q + 1
    fresh = _Fresh(n)
    edges = [line | frozenset(fresh.take(k - q - 1)) for line in plane.lines for _ in range(copies)]
    manifest = ConstructionManifest(
        name="furedi-order",
        parameters={"q": q, "delta": delta, "k": k},
        predicted_order=n * copies * (k - q - 1) + n,
        predicted_edge_count=n * copies,
    )
    return Hypergraph(edges), manifest


def default_h_a_order(k: int) -> int:
    """Largest prime q with ``q + 1 + ceil(q/2) <= k``."""
    best = None
    q = 2
    while q + 1 + (q + 1) // 2 <= k:
        if is_prime(q):
            best = q
        q += 1
    if best is None:
        raise PreconditionError(f"k = {k} is too small; need k >= 4")
    return best


def one_intersecting_h_a(k: int, a: int, q: int | None = None) -> tuple[Hypergraph, ConstructionManifest]:
    """1-intersecting non-sunflower k-graph from the affine plane of order q.

    The first ``a`` parallel classes are split by line index into a group of
    ``q // 2`` lines and a group of the rest, each group getting one new
    common vertex; every other class gets one new vertex on all its lines.
    Each pair of lines left disjoint then receives its own shared vertex and
    all edges are padded to size k.
    """
    if k < 4:
        raise PreconditionError("k must be at least 4")
    if q is None:
        q = default_h_a_order(k)
    _require_prime(q)
    half_up = (q + 1) // 2
    if k < q + 1 + half_up:
        raise PreconditionError(f"k = {k} < q + 1 + ceil(q/2) = {q + 1 + half_up}")
    if not 0 <= a <= q + 1:
        raise PreconditionError(f"a must lie in [0, {q + 1}]")

    plane = affine_plane(q)
    fresh = _Fresh(q * q)
    edges: list[set[int]] = []
    for index, cls in enumerate(plane.classes):
        lines = [set(line) for line in cls]
        if index < a:
            for group in (lines[: q // 2], lines[q // 2 :]):
                (v,) = fresh.take()
                for line in group:
                    line.add(v)
        else:
            (v,) = fresh.take()
            for line in lines:
                line.add(v)
        edges.extend(lines)
    for e, f in combinations(edges, 2):
        if not e & f:
            (v,) = fresh.take()
            e.add(v)
            f.add(v)
    for e in edges:
        e.update(fresh.take(k - len(e)))

    split_pairs = a * (q * q // 4)
    n0 = q * q + q + 1
    manifest = ConstructionManifest(
        name="h-a",
        parameters={"k": k, "a": a, "q": q},
        predicted_order=n0 + a - split_pairs + q * (q + 1) * (k - q - 1),
        predicted_edge_count=q * (q + 1),
        # the closed form counts group vertices that have degree 1 when q < 5
        predicted_kernel=n0 + a + split_pairs if q >= 5 else None,
    )
    return Hypergraph(edges), manifest


def lambda_lift(h: Hypergraph, lam: int) -> Hypergraph:
    """Add the same ``lam - 1`` new vertices to every edge of a 1-intersecting,
    uniform, non-sunflower hypergraph."""
    if lam < 1:
        raise PreconditionError("lambda must be positive")
    if h.uniformity is None:
        raise PreconditionError("input must be uniform")
    if h.m < 2 or not h.is_lambda_intersecting(1):
        raise PreconditionError("input must be 1-intersecting")
    if h.is_sunflower():
        raise PreconditionError("input must not be a sunflower")
    if lam == 1:
        return h
    start = h.max_vertex() + 1
    extra = frozenset(range(start, start + lam - 1))
    return Hypergraph(e | extra for e in h.edges)


def sunflower_family(k: int, lam: int, m: int) -> Hypergraph:
    """m edges on the core {1..lam} with disjoint petals; ids start at 1."""
    if not 0 <= lam < k:
        raise PreconditionError("need 0 <= lambda < k")
    if m < 1:
        raise PreconditionError("need m >= 1")
    core = list(range(1, lam + 1))
    fresh = _Fresh(lam + 1)
    return Hypergraph(core + fresh.take(k - lam) for _ in range(m))


def sps_star_family(n: int) -> tuple[SetPairSystem, ConstructionManifest]:
    """(n+3)/3 stars of (n+3)/3 edges each; B-sets as in the order-extremal system."""
    if n < 1 or n % 3:
        raise PreconditionError(f"n must be a positive multiple of 3, got {n}")
    s = (n + 3) // 3
    fresh = _Fresh(0)
    stars = []
    for _ in range(s):
        (center,) = fresh.take()
        stars.append((center, fresh.take(s)))
    pairs = []
    for i, (center, leaves) in enumerate(stars):
        others = [c for j, (c, _) in enumerate(stars) if j != i]
        for leaf in leaves:
            b = [x for x in leaves if x != leaf] + others + fresh.take(n // 3)
            pairs.append(([center, leaf], b))
    manifest = ConstructionManifest(
        name="sps-star",
        parameters={"n": n},
        predicted_order=s**3 + s,
        predicted_edge_count=s * s,
    )
    return SetPairSystem(pairs), manifest
