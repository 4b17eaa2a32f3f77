"""Brute-force ground truth at desk scale.

Families are enumerated over the k-subsets of ``range(n_max)`` taken in
lexicographic order, so the first family to reach a maximum is the
lexicographically least witness. The only symmetry breaking is to fix the
first edge to ``{0, ..., k-1}``: every nonempty family has a relabelling that
contains it, and the least witness always does, so maxima and witnesses are
unchanged.
"""

from __future__ import annotations

import heapq
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations, product
from math import comb
from typing import Callable, Iterator

from .errors import BudgetExceeded, PreconditionError, resolve_budget
from .hypergraph import Hypergraph
from .kernel import is_kernel
from .sps import Tree

MAX_GROUND_SET = 12
MAX_TREE_VERTICES = 10
MAX_BRUTE_SUPPORT = 20


@dataclass(frozen=True)
class SearchSpace:
    """k-uniform families on ``range(n_max)`` filtered by composable predicates.

    ``intersecting``, ``lam`` (exact pairwise intersection size) and
    ``max_degree`` are closed under taking subfamilies and prune the search;
    ``non_sunflower`` is checked per family.
    """

    k: int
    n_max: int
    m_max: int | None = None
    intersecting: bool = False
    lam: int | None = None
    non_sunflower: bool = False
    max_degree: int | None = None
    budget: int | None = None

    def __post_init__(self):
        if self.k < 1 or self.n_max < self.k:
            raise PreconditionError("need 1 <= k <= n_max")
        if self.n_max > MAX_GROUND_SET:
            raise PreconditionError(f"n_max is capped at {MAX_GROUND_SET}")
        if self.lam is not None and not 0 <= self.lam < self.k:
            raise PreconditionError("need 0 <= lambda < k")
        if self.max_degree is not None and self.max_degree < 1:
            raise PreconditionError("max_degree must be positive")

    def describe(self) -> str:
        parts = []
        if self.intersecting:
            parts.append("intersecting")
        if self.lam is not None:
            parts.append(f"{self.lam}-intersecting")
        if self.non_sunflower:
            parts.append("non-sunflower")
        if self.max_degree is not None:
            parts.append(f"max-degree<={self.max_degree}")
        if self.m_max is not None:
            parts.append(f"m<={self.m_max}")
        return " and ".join(parts) or "any"

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "n_max": self.n_max,
            "m_max": self.m_max,
            "predicate": self.describe(),
        }


@dataclass(frozen=True)
class OracleResult:
    value: int | None
    witness: Hypergraph | None
    visited: int


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class _Enumerator:
    def __init__(self, space: SearchSpace, budget: int):
        self.space = space
        self.budget = budget
        self.visited = 0
        self.cands = list(combinations(range(space.n_max), space.k))
        self.vmask = [sum(1 << v for v in c) for c in self.cands]
        n = len(self.cands)
        self.compat = []
        for i in range(n):
            mask = 0
            for j in range(i + 1, n):
                size = bin(self.vmask[i] & self.vmask[j]).count("1")
                if space.intersecting and size == 0:
                    continue
                if space.lam is not None and size != space.lam:
                    continue
                mask |= 1 << j
            self.compat.append(mask)
        self.containing = [
            sum(1 << i for i, c in enumerate(self.cands) if v in c) for v in range(space.n_max)
        ]

    def accepts(self, fam: list[int]) -> bool:
        if self.space.non_sunflower:
            if len(fam) <= 2:
                return False
            masks = [self.vmask[i] for i in fam]
            core = masks[0]
            for x in masks[1:]:
                core &= x
            if all(a & b == core for a, b in combinations(masks, 2)):
                return False
        return True

    def hypergraph(self, fam: list[int]) -> Hypergraph:
        return Hypergraph(self.cands[i] for i in fam)

    def root_children(self) -> tuple[list[int], int, list[int]]:
        """State after fixing the first edge to candidate 0."""
        deg = [0] * self.space.n_max
        allowed = self.compat[0]
        allowed = self._apply_degrees(0, allowed, deg)
        return [0], allowed, deg

    def _apply_degrees(self, j: int, allowed: int, deg: list[int]) -> int:
        cap = self.space.max_degree
        for v in self.cands[j]:
            deg[v] += 1
            if cap is not None and deg[v] >= cap:
                allowed &= ~self.containing[v]
        return allowed

    def walk(
        self,
        fam: list[int],
        allowed: int,
        deg: list[int],
        visit: Callable[[list[int]], None],
        bound: Callable[[list[int], int], bool] | None = None,
    ) -> None:
        self.visited += 1
        if self.visited > self.budget:
            raise BudgetExceeded("oracle budget exhausted", visited=self.visited)
        visit(fam)
        if self.space.m_max is not None and len(fam) >= self.space.m_max:
            return
        for j in _bits(allowed):
            rest = allowed & self.compat[j]
            if bound is not None and not bound(fam, rest | (1 << j)):
                continue
            child_deg = list(deg)
            rest = self._apply_degrees(j, rest, child_deg)
            fam.append(j)
            self.walk(fam, rest, child_deg, visit, bound)
            fam.pop()


class _Best:
    def __init__(self, score: Callable[[list[int]], int], enum: _Enumerator):
        self.score = score
        self.enum = enum
        self.value: int | None = None
        self.fam: list[int] | None = None

    def __call__(self, fam: list[int]) -> None:
        if not self.enum.accepts(fam):
            return
        s = self.score(fam)
        if self.value is None or s > self.value:
            self.value, self.fam = s, list(fam)


def _objective(enum: _Enumerator, kind: str):
    m_cap = enum.space.m_max
    if kind == "size":

        def score(fam):
            return len(fam)

        def can_beat(best, fam, pool):
            extra = bin(pool).count("1")
            if m_cap is not None:
                extra = min(extra, m_cap - len(fam))
            return best.value is None or len(fam) + extra > best.value

    else:

        def score(fam):
            union = 0
            for i in fam:
                union |= enum.vmask[i]
            return bin(union).count("1")

        def can_beat(best, fam, pool):
            if best.value is None:
                return True
            union = 0
            for i in fam:
                union |= enum.vmask[i]
            for j in _bits(pool):
                union |= enum.vmask[j]
            return bin(union).count("1") > best.value

    return score, can_beat


def _search_subtree(args):
    space, kind, second, budget = args
    enum = _Enumerator(space, budget)
    score, can_beat = _objective(enum, kind)
    best = _Best(score, enum)
    fam, allowed, deg = enum.root_children()
    rest = enum._apply_degrees(second, allowed & enum.compat[second], deg)
    try:
        enum.walk(fam + [second], rest, deg, best, lambda f, p: can_beat(best, f, p))
    except BudgetExceeded:
        return False, None, None, enum.visited
    return True, best.value, best.fam, enum.visited


def _maximize(space: SearchSpace, kind: str, workers: int) -> OracleResult:
    budget = resolve_budget(space.budget)
    enum = _Enumerator(space, budget)
    score, can_beat = _objective(enum, kind)
    best = _Best(score, enum)
    best([])
    if space.m_max == 0:
        return OracleResult(best.value, enum.hypergraph(best.fam) if best.fam is not None else None, 1)
    fam, allowed, deg = enum.root_children()
    bound = lambda f, p: can_beat(best, f, p)  # noqa: E731
    try:
        if workers <= 1 or space.m_max == 1:
            enum.walk(fam, allowed, deg, best, bound)
        else:
            # serial order is [], [0], then the subtrees under [0, j] for ascending j;
            # each worker bounds against its own best, which keeps its least witness
            enum.visited += 1
            best(fam)
            tasks = [(space, kind, j, budget) for j in _bits(allowed)]
            with ProcessPoolExecutor(max_workers=workers) as pool:
                results = list(pool.map(_search_subtree, tasks))
            for finished, value, found, visited in results:
                enum.visited += visited
                if not finished:
                    raise BudgetExceeded("oracle budget exhausted in a worker", visited=enum.visited)
                if value is not None and (best.value is None or value > best.value):
                    best.value, best.fam = value, found
    except BudgetExceeded as exc:
        witness = enum.hypergraph(best.fam) if best.fam is not None else None
        raise BudgetExceeded(
            f"oracle budget of {budget} nodes exhausted", visited=exc.visited, best=best.value, witness=witness
        ) from None
    witness = enum.hypergraph(best.fam) if best.fam is not None else None
    return OracleResult(best.value, witness, enum.visited)


def max_size(space: SearchSpace, *, workers: int = 1) -> OracleResult:
    """Largest edge count of a family in ``space``, with the least witness."""
    return _maximize(space, "size", workers)


def max_order(space: SearchSpace, *, workers: int = 1) -> OracleResult:
    """Largest number of covered vertices of a family in ``space``."""
    return _maximize(space, "order", workers)


def iter_families(space: SearchSpace, *, fix_first_edge: bool = True) -> Iterator[Hypergraph]:
    """Every nonempty family in ``space`` (up to the first-edge normalization)."""
    budget = resolve_budget(space.budget)
    enum = _Enumerator(space, budget)
    found: list[Hypergraph] = []

    def visit(fam):
        if fam and enum.accepts(fam):
            found.append(enum.hypergraph(fam))

    if fix_first_edge:
        fam, allowed, deg = enum.root_children()
        enum.walk(fam, allowed, deg, visit)
    else:
        full = (1 << len(enum.cands)) - 1
        # the empty root: every candidate is a possible first edge
        for j in _bits(full):
            deg = [0] * space.n_max
            rest = enum._apply_degrees(j, enum.compat[j], deg)
            enum.walk([j], rest, deg, visit)
    return iter(found)


def min_kernel_brute(h: Hypergraph, *, budget: int | None = None) -> int:
    """Minimum kernel size by plain subset enumeration in order of size."""
    budget = resolve_budget(budget)
    if not h.is_intersecting():
        raise PreconditionError("kernels are defined for intersecting hypergraphs only")
    verts = sorted(h.support)
    if len(verts) > MAX_BRUTE_SUPPORT:
        raise PreconditionError(f"support above {MAX_BRUTE_SUPPORT} vertices")
    tried = 0
    for size in range(len(verts) + 1):
        for subset in combinations(verts, size):
            tried += 1
            if tried > budget:
                raise BudgetExceeded("brute-force kernel budget exhausted", visited=tried, best=len(verts))
            chosen = set(subset)
            if not all(chosen & e for e in h.edges):
                continue
            if is_kernel(h, chosen).valid:
                return size
    raise AssertionError("unreachable: the support is a kernel")  # pragma: no cover


def _prufer_decode(seq: tuple[int, ...], n: int) -> list[tuple[int, int]]:
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((min(leaf, x), max(leaf, x)))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    u, v = heapq.heappop(leaves), heapq.heappop(leaves)
    edges.append((u, v))
    return edges


def enumerate_trees(n: int) -> Iterator[Tree]:
    """All n**(n-2) labelled trees on ``range(n)``, in Prufer-sequence order."""
    if not 1 <= n <= MAX_TREE_VERTICES:
        raise PreconditionError(f"need 1 <= n <= {MAX_TREE_VERTICES}")
    if n == 1:
        yield Tree(frozenset({0}), ())
        return
    verts = frozenset(range(n))
    for seq in product(range(n), repeat=n - 2):
        yield Tree(verts, tuple(_prufer_decode(seq, n)))


def tree_count(n: int) -> int:
    return 1 if n == 1 else n ** (n - 2)


def candidate_count(space: SearchSpace) -> int:
    return comb(space.n_max, space.k)
