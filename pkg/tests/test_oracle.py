from itertools import combinations

import pytest

from hyperforge import BudgetExceeded, Hypergraph, PreconditionError, SearchSpace, max_order, max_size, min_kernel_brute
from hyperforge.oracle import candidate_count, enumerate_trees, iter_families, tree_count


def naive(space: SearchSpace):
    """Every subset of the candidate edges, filtered by the definitions."""
    cands = list(combinations(range(space.n_max), space.k))
    out = []
    for r in range(1, len(cands) + 1):
        if space.m_max is not None and r > space.m_max:
            break
        for idx in combinations(range(len(cands)), r):
            h = Hypergraph(cands[i] for i in idx)
            if space.intersecting and not h.is_intersecting():
                continue
            if space.lam is not None and not h.is_lambda_intersecting(space.lam):
                continue
            if space.max_degree is not None and h.max_degree > space.max_degree:
                continue
            if space.non_sunflower and h.is_sunflower():
                continue
            out.append((idx, h))
    return out


def naive_best(space, score):
    fams = naive(space)
    if not fams:
        return None, None
    top = max(score(h) for _, h in fams)
    idx, h = min(((i, h) for i, h in fams if score(h) == top), key=lambda x: x[0])
    return top, h


SPACES = [
    SearchSpace(k=2, n_max=5, intersecting=True),
    SearchSpace(k=2, n_max=6, intersecting=True, max_degree=2),
    SearchSpace(k=2, n_max=5, lam=1, non_sunflower=True),
    SearchSpace(k=2, n_max=6, max_degree=1),
    SearchSpace(k=3, n_max=5, intersecting=True, non_sunflower=True),
    SearchSpace(k=3, n_max=5, lam=2),
    SearchSpace(k=2, n_max=5, intersecting=True, m_max=2),
]


@pytest.mark.parametrize("space", SPACES, ids=lambda s: f"k{s.k}n{s.n_max}-{s.describe()}")
def test_max_size_matches_naive(space):
    value, witness = naive_best(space, lambda h: h.m)
    res = max_size(space)
    assert res.value == value
    assert res.witness == witness


@pytest.mark.parametrize("space", SPACES, ids=lambda s: f"k{s.k}n{s.n_max}-{s.describe()}")
def test_max_order_matches_naive(space):
    value, witness = naive_best(space, lambda h: h.order)
    res = max_order(space)
    assert res.value == value
    assert res.witness == witness


@pytest.mark.parametrize("space", SPACES[:4], ids=str)
def test_iter_families_counts(space):
    containing_first = [h for idx, h in naive(space) if idx[0] == 0]
    assert sorted(map(repr, iter_families(space))) == sorted(map(repr, containing_first))
    assert len(list(iter_families(space, fix_first_edge=False))) == len(naive(space))


def test_known_maxima():
    tri = max_size(SearchSpace(k=2, n_max=6, intersecting=True, max_degree=2))
    assert tri.value == 3 and tri.witness.sorted_edges() == [(0, 1), (0, 2), (1, 2)]
    fano = max_size(SearchSpace(k=3, n_max=7, lam=1, non_sunflower=True))
    assert fano.value == 7
    assert fano.witness.is_lambda_intersecting(1) and fano.witness.order == 7
    assert max_order(SearchSpace(k=2, n_max=6, intersecting=True)).value == 6  # a star


def test_workers_agree():
    space = SearchSpace(k=3, n_max=7, lam=1, non_sunflower=True)
    a, b = max_size(space), max_size(space, workers=2)
    assert (a.value, a.witness) == (b.value, b.witness)
    a, b = max_order(space), max_order(space, workers=2)
    assert (a.value, a.witness) == (b.value, b.witness)


def test_empty_space():
    res = max_size(SearchSpace(k=2, n_max=4, m_max=0))
    assert res.value == 0 and res.witness == Hypergraph()
    res = max_size(SearchSpace(k=2, n_max=4, lam=1, non_sunflower=True, m_max=2))
    assert res.value is None and res.witness is None


def test_budget():
    space = SearchSpace(k=3, n_max=7, intersecting=True, budget=100)
    with pytest.raises(BudgetExceeded) as info:
        max_size(space)
    assert info.value.best is not None and info.value.best >= 1
    assert info.value.witness.is_intersecting()


@pytest.mark.parametrize(
    "kwargs",
    [dict(k=0, n_max=3), dict(k=4, n_max=3), dict(k=2, n_max=13), dict(k=2, n_max=4, lam=2), dict(k=2, n_max=4, max_degree=0)],
)
def test_space_preconditions(kwargs):
    with pytest.raises(PreconditionError):
        SearchSpace(**kwargs)


def test_describe():
    s = SearchSpace(k=3, n_max=7, lam=1, non_sunflower=True, max_degree=3)
    assert s.describe() == "1-intersecting and non-sunflower and max-degree<=3"
    assert candidate_count(s) == 35


def test_min_kernel_brute():
    assert min_kernel_brute(Hypergraph([{1, 2}, {2, 3}, {1, 3}])) == 3
    assert min_kernel_brute(Hypergraph([{0, 1}, {0, 2}])) == 1
    with pytest.raises(PreconditionError):
        min_kernel_brute(Hypergraph([{0}, {1}]))
    with pytest.raises(BudgetExceeded):
        min_kernel_brute(Hypergraph([{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}]), budget=5)


@pytest.mark.parametrize("n", range(1, 8))
def test_tree_enumeration_is_complete_and_distinct(n):
    seen = set()
    for tree in enumerate_trees(n):
        assert tree.vertices == frozenset(range(n))
        seen.add(frozenset(tree.edges))
    assert len(seen) == tree_count(n) == (1 if n == 1 else n ** (n - 2))


def test_tree_enumeration_bounds():
    with pytest.raises(PreconditionError):
        list(enumerate_trees(0))
    with pytest.raises(PreconditionError):
        list(enumerate_trees(11))
