"""Kernels of intersecting hypergraphs.

A kernel is a vertex set ``A`` meeting every edge whose traces ``A & e`` are
pairwise intersecting. ``min_kernel_exact`` finds a smallest one by searching
subsets in order of size, then lexicographically on the sorted support.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations

from .errors import BudgetExceeded, PreconditionError, resolve_budget
from .hypergraph import Hypergraph

DEFAULT_SUPPORT_LIMIT = 24
DEFAULT_KERNEL_BUDGET = 1 << 24


@dataclass(frozen=True)
class KernelCertificate:
    subset: frozenset[int]
    is_transversal: bool
    traces_intersecting: bool

    @property
    def valid(self) -> bool:
        return self.is_transversal and self.traces_intersecting


@dataclass(frozen=True)
class KernelResult:
    size: int
    witness: frozenset[int]
    exact: bool = True
    visited: int = 0


def is_kernel(h: Hypergraph, subset) -> KernelCertificate:
    A = frozenset(subset)
    stray = A - h.support
    if stray:
        raise PreconditionError(f"vertices {sorted(stray)} are not in the hypergraph")
    traces = [A & e for e in h.edges]
    return KernelCertificate(
        subset=A,
        is_transversal=all(traces),
        traces_intersecting=all(s & t for s, t in combinations(traces, 2)),
    )


def kernel_degree_rule(h: Hypergraph) -> frozenset[int]:
    """Vertices of degree at least 2; the unique minimum kernel when every
    two edges share exactly one vertex."""
    if h.m < 2:
        raise PreconditionError("degree rule needs at least 2 edges")
    if not h.is_lambda_intersecting(1):
        raise PreconditionError("degree rule needs a 1-intersecting hypergraph")
    return frozenset(v for v, d in h.degrees.items() if d >= 2)


class _Search:
    """Fixed-size subset search over bit positions of the sorted support."""

    def __init__(self, n: int, masks: list[int], budget: int):
        self.n = n
        self.budget = budget
        self.visited = 0
        # edges sorted by highest bit: the final ones form a prefix
        order = sorted(range(len(masks)), key=lambda i: masks[i].bit_length())
        self.masks = [masks[i] for i in order]
        self.top = [m.bit_length() - 1 for m in self.masks]

    def _tick(self):
        self.visited += 1
        if self.visited > self.budget:
            raise BudgetExceeded("kernel search budget exhausted", visited=self.visited)

    def _viable(self, chosen: int, last: int) -> bool:
        # positions > last are still available
        future = ((1 << self.n) - 1) & ~((1 << (last + 1)) - 1)
        final = []
        for mask, top in zip(self.masks, self.top):
            trace = mask & chosen
            if not trace and not mask & future:
                return False
            if top <= last:
                for other in final:
                    if not other & trace:
                        return False
                final.append(trace)
        return True

    def _complete(self, chosen: int) -> bool:
        traces = [mask & chosen for mask in self.masks]
        if not all(traces):
            return False
        return all(s & t for s, t in combinations(traces, 2))

    def run(self, size: int, start: int = 0, chosen: int = 0, first_only: int | None = None) -> int | None:
        """Lexicographically first viable subset of ``size`` more positions."""
        self._tick()
        if size == 0:
            return chosen if self._complete(chosen) else None
        stop = self.n - size + 1
        if first_only is not None:
            start, stop = first_only, first_only + 1
        for p in range(start, stop):
            nxt = chosen | (1 << p)
            if not self._viable(nxt, p):
                continue
            found = self.run(size - 1, p + 1, nxt)
            if found is not None:
                return found
        return None


def _prepare(h: Hypergraph, max_support: int):
    if not h.is_intersecting():
        raise PreconditionError("kernels are defined for intersecting hypergraphs only")
    verts = sorted(h.support)
    if len(verts) > max_support:
        raise PreconditionError(
            f"support has {len(verts)} vertices, above the limit {max_support}; raise the limit explicitly"
        )
    pos = {v: i for i, v in enumerate(verts)}
    masks = [sum(1 << pos[v] for v in e) for e in h.edges]
    return verts, masks


def _decode(verts: list[int], mask: int) -> frozenset[int]:
    return frozenset(v for i, v in enumerate(verts) if mask >> i & 1)


def _branch(args):
    n, masks, budget, size, p = args
    search = _Search(n, masks, budget)
    try:
        return search.run(size, first_only=p), search.visited
    except BudgetExceeded as exc:
        return BudgetExceeded, exc.visited


def min_kernel_exact(
    h: Hypergraph,
    *,
    max_support: int = DEFAULT_SUPPORT_LIMIT,
    budget: int | None = None,
    workers: int = 1,
) -> KernelResult:
    """Smallest kernel and the lexicographically least witness of that size.

    Raises ``BudgetExceeded`` carrying the whole support as the best known
    (valid but possibly non-minimal) kernel when the node budget runs out.
    """
    budget = resolve_budget(budget, DEFAULT_KERNEL_BUDGET)
    verts, masks = _prepare(h, max_support)
    n = len(verts)
    if h.m == 0:
        return KernelResult(0, frozenset())
    visited = 0
    for size in range(1, n + 1):
        if workers <= 1:
            search = _Search(n, masks, budget - visited)
            try:
                found = search.run(size)
            except BudgetExceeded as exc:
                raise BudgetExceeded(
                    f"kernel search budget of {budget} nodes exhausted at size {size}",
                    visited=visited + exc.visited,
                    best=n,
                    witness=frozenset(verts),
                ) from None
            visited += search.visited
        else:
            tasks = [(n, masks, budget, size, p) for p in range(n - size + 1)]
            with ProcessPoolExecutor(max_workers=workers) as pool:
                results = list(pool.map(_branch, tasks))
            # branches are in lexicographic order; the serial run would stop at
            # the first success, so later branches cannot affect the outcome
            found = None
            for result, count in results:
                visited += count
                if result is BudgetExceeded:
                    raise BudgetExceeded(
                        f"kernel search budget of {budget} nodes per branch exhausted at size {size}",
                        visited=visited,
                        best=n,
                        witness=frozenset(verts),
                    )
                if result is not None:
                    found = result
                    break
        if found is not None:
            return KernelResult(size, _decode(verts, found), True, visited)
    raise AssertionError("an intersecting hypergraph is its own kernel")  # pragma: no cover
