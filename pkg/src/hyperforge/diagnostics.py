"""Structural checks for lambda-intersecting k-graphs.

These are theorem-shaped assertions: on a valid input every check must come
back true, so a false result points at a bug or a malformed input. All
thresholds are compared in exact integer arithmetic (1.1 * mu is 11 * mu / 10).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import PreconditionError
from .hypergraph import Hypergraph


@dataclass(frozen=True)
class LambdaProfile:
    lam: int
    mu: int
    k: int
    m: int


@dataclass(frozen=True)
class DegreeClassification:
    low: frozenset[int]
    heavy: frozenset[int]
    violations: frozenset[int]


def lambda_profile(h: Hypergraph, lam: int) -> LambdaProfile:
    if lam < 1:
        raise PreconditionError("lambda must be positive")
    k = h.uniformity
    if k is None:
        raise PreconditionError("hypergraph must be uniform and nonempty")
    if k <= lam:
        raise PreconditionError(f"need k > lambda (k={k}, lambda={lam})")
    if not h.is_lambda_intersecting(lam):
        raise PreconditionError(f"hypergraph is not {lam}-intersecting")
    return LambdaProfile(lam=lam, mu=k - lam, k=k, m=h.m)


def edge_vertex_bound_check(h: Hypergraph, lam: int) -> bool:
    """Order is at most mu * m + lambda."""
    p = lambda_profile(h, lam)
    return h.order <= p.mu * p.m + p.lam


def mccarthy_vanstone_residual(h: Hypergraph, lam: int, v: int) -> int:
    """``(d - mu)(mu + lambda m) - lambda d^2``; never positive on valid input."""
    p = lambda_profile(h, lam)
    if v not in h.support:
        raise PreconditionError(f"vertex {v} is not in the hypergraph")
    return _residual(p, h.degree(v))


def _residual(p: LambdaProfile, d: int) -> int:
    return (d - p.mu) * (p.mu + p.lam * p.m) - p.lam * d * d


def mccarthy_vanstone_residuals(h: Hypergraph, lam: int) -> dict[int, int]:
    p = lambda_profile(h, lam)
    return {v: _residual(p, d) for v, d in h.degrees.items()}


def _many_edges_profile(h: Hypergraph, lam: int) -> LambdaProfile:
    p = lambda_profile(h, lam)
    if p.m < 20 * p.mu:
        raise PreconditionError(f"needs m >= 20 mu (m={p.m}, mu={p.mu})")
    return p


def classify_degrees(h: Hypergraph, lam: int) -> DegreeClassification:
    """Split vertices into low (d <= 1.1 mu) and heavy (d >= m - 1.1 mu).

    Requires m >= 20 mu, where the two ranges are disjoint and should cover
    every vertex; anything else lands in ``violations``.
    """
    p = _many_edges_profile(h, lam)
    low, heavy, bad = set(), set(), set()
    for v, d in h.degrees.items():
        if 10 * d <= 11 * p.mu:
            low.add(v)
        elif 10 * d >= 10 * p.m - 11 * p.mu:
            heavy.add(v)
        else:
            bad.add(v)
    return DegreeClassification(frozenset(low), frozenset(heavy), frozenset(bad))


def heavy_edge_bound_check(h: Hypergraph, lam: int) -> bool:
    """With t heavy vertices: t < lambda gives m <= 2 mu^2, otherwise m <= 3 lambda mu."""
    p = _many_edges_profile(h, lam)
    if h.is_sunflower():
        raise PreconditionError("needs a hypergraph that is not a sunflower")
    t = len(classify_degrees(h, lam).heavy)
    if t < p.lam:
        return p.m <= 2 * p.mu * p.mu
    return p.m <= 3 * p.lam * p.mu


def diagnostics_report(h: Hypergraph, lam: int) -> list[dict]:
    """One record per lemma; inapplicable lemmas say why instead of failing."""
    p = lambda_profile(h, lam)
    records = [
        {
            "lemma": "edge-vertex",
            "applicable": True,
            "holds": edge_vertex_bound_check(h, lam),
            "order": h.order,
            "bound": p.mu * p.m + p.lam,
        }
    ]
    residuals = mccarthy_vanstone_residuals(h, lam)
    records.append(
        {
            "lemma": "mccarthy-vanstone",
            "applicable": True,
            "holds": all(r <= 0 for r in residuals.values()),
            "max_residual": max(residuals.values(), default=None),
            "positive_vertices": sorted(v for v, r in residuals.items() if r > 0),
        }
    )
    if p.m < 20 * p.mu:
        reason = f"needs m >= 20 mu (m={p.m}, mu={p.mu})"
        records.append({"lemma": "degree-separation", "applicable": False, "reason": reason})
        records.append({"lemma": "heavy-edge", "applicable": False, "reason": reason})
        return records
    cls = classify_degrees(h, lam)
    records.append(
        {
            "lemma": "degree-separation",
            "applicable": True,
            "holds": not cls.violations,
            "low": len(cls.low),
            "heavy": sorted(cls.heavy),
            "violations": sorted(cls.violations),
        }
    )
    if h.is_sunflower():
        records.append({"lemma": "heavy-edge", "applicable": False, "reason": "is a sunflower"})
    else:
        records.append(
            {
                "lemma": "heavy-edge",
                "applicable": True,
                "holds": heavy_edge_bound_check(h, lam),
                "heavy_count": len(cls.heavy),
                "m": p.m,
            }
        )
    return records
