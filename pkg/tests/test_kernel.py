from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hyperforge import (
    BudgetExceeded,
    Hypergraph,
    PreconditionError,
    is_kernel,
    kernel_degree_rule,
    majumder_kernel_bound,
    min_kernel_exact,
    projective_plane,
)

from conftest import intersecting_hypergraphs


def naive_min_kernel(h):
    """Definition-level oracle: smallest subset whose traces are nonempty and pairwise meet."""
    verts = sorted(h.support)
    for size in range(len(verts) + 1):
        for sub in combinations(verts, size):
            traces = [set(sub) & e for e in h.edges]
            if all(traces) and all(a & b for a, b in combinations(traces, 2)):
                return size, frozenset(sub)
    raise AssertionError


TRIANGLE = Hypergraph([{1, 2}, {2, 3}, {1, 3}])
STAR = Hypergraph([{1, 2, 3}, {1, 4, 5}, {1, 6, 7}])


def test_is_kernel_certificate():
    cert = is_kernel(TRIANGLE, {1, 2})
    assert cert.is_transversal and not cert.traces_intersecting and not cert.valid
    assert is_kernel(TRIANGLE, {1, 2, 3}).valid
    assert not is_kernel(STAR, {2}).is_transversal
    with pytest.raises(PreconditionError):
        is_kernel(STAR, {99})


@pytest.mark.parametrize(
    "h, size, witness",
    [
        (TRIANGLE, 3, {1, 2, 3}),
        (STAR, 1, {1}),
        (Hypergraph([{0, 1, 2}]), 1, {0}),
        (projective_plane(2).hypergraph(), 7, set(range(7))),
    ],
)
def test_known_kernels(h, size, witness):
    res = min_kernel_exact(h)
    assert res.size == size and res.witness == frozenset(witness) and res.exact


def test_empty_hypergraph_has_empty_kernel():
    assert min_kernel_exact(Hypergraph()).size == 0


def test_non_intersecting_rejected():
    with pytest.raises(PreconditionError):
        min_kernel_exact(Hypergraph([{0}, {1}]))


def test_support_limit():
    with pytest.raises(PreconditionError):
        min_kernel_exact(projective_plane(5).hypergraph(), max_support=24)


def test_pg3_kernel_is_all_points():
    assert min_kernel_exact(projective_plane(3).hypergraph()).size == 13


def test_budget_exceeded_reports_support_as_upper_bound():
    h = projective_plane(3).hypergraph()
    with pytest.raises(BudgetExceeded) as info:
        min_kernel_exact(h, budget=50)
    assert info.value.best == 13
    assert info.value.witness == h.support
    assert is_kernel(h, info.value.witness).valid


def test_budget_from_environment(monkeypatch):
    monkeypatch.setenv("HYPERFORGE_BUDGET", "10")
    with pytest.raises(BudgetExceeded):
        min_kernel_exact(projective_plane(3).hypergraph())


def test_parallel_matches_serial():
    h = Hypergraph([{0, 1, 2}, {0, 3, 4}, {1, 3, 5}, {2, 4, 5}, {0, 5, 6}])
    serial, parallel = min_kernel_exact(h), min_kernel_exact(h, workers=2)
    assert (serial.size, serial.witness) == (parallel.size, parallel.witness)


def test_degree_rule_requires_one_intersecting():
    with pytest.raises(PreconditionError):
        kernel_degree_rule(Hypergraph([{0, 1}, {0, 1}]))
    with pytest.raises(PreconditionError):
        kernel_degree_rule(Hypergraph([{0, 1}]))


@given(intersecting_hypergraphs())
def test_exact_search_matches_definition(h):
    size, witness = naive_min_kernel(h)
    res = min_kernel_exact(h)
    assert res.size == size
    assert res.witness == witness  # both return the lexicographically least
    assert is_kernel(h, res.witness).valid or h.m == 0


@given(intersecting_hypergraphs())
def test_degree_rule_is_minimum_on_one_intersecting(h):
    if h.m >= 2 and h.is_lambda_intersecting(1):
        rule = kernel_degree_rule(h)
        assert is_kernel(h, rule).valid
        assert len(rule) == min_kernel_exact(h).size


@given(intersecting_hypergraphs(max_size=3))
def test_kernel_within_majumder_bound(h):
    k = h.uniformity
    if k is not None:
        assert min_kernel_exact(h).size <= majumder_kernel_bound(k).floor_certified


@given(intersecting_hypergraphs(), st.integers(1, 3))
def test_padding_with_private_vertices_keeps_kernels(h, pad):
    fresh = iter(range(100, 100 + pad * max(h.m, 1)))
    padded = Hypergraph(set(e) | {next(fresh) for _ in range(pad)} for e in h.edges)
    res = min_kernel_exact(h)
    if h.m:
        assert is_kernel(padded, res.witness).valid
    if h.m >= 2:
        assert min_kernel_exact(padded, max_support=32).size == res.size
