"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Every check is exact (integer or Fraction equality); wall-clock limits are
enforced inside the timed block.
"""

from __future__ import annotations

import io
import os
import subprocess
import sys
import time
from contextlib import contextmanager, redirect_stdout
from fractions import Fraction

import pytest

from hyperforge import (
    SearchSpace,
    classify_degrees,
    deza_order_f,
    deza_size_bound,
    edge_vertex_bound_check,
    format_sps,
    format_text,
    furedi_order_family,
    furedi_size_bound,
    is_bounded,
    is_one_cross_intersecting,
    kernel_degree_rule,
    lambda_lift,
    majumder_kernel_bound,
    max_size,
    min_kernel_brute,
    min_kernel_exact,
    one_intersecting_h_a,
    ord_ker_bound_1_intersecting,
    parse_sps,
    parse_text,
    projective_plane,
    sps_order,
    sps_star_family,
    sunflower_family,
    tree_odd_sum,
    verify_sps,
)
from hyperforge.cli import run
from hyperforge.diagnostics import mccarthy_vanstone_residuals
from hyperforge.oracle import enumerate_trees, iter_families, tree_count


@contextmanager
def criterion(capsys, number: int, title: str, limit: float):
    start = time.perf_counter()
    try:
        yield
        elapsed = time.perf_counter() - start
        assert elapsed < limit, f"took {elapsed:.2f}s, limit {limit}s"
    except BaseException as exc:
        elapsed = time.perf_counter() - start
        with capsys.disabled():
            print(f"\nACCEPTANCE {number}: FAIL  {title} ({elapsed:.2f}s): {exc}")
        raise
    with capsys.disabled():
        print(f"\nACCEPTANCE {number}: PASS  {title} ({elapsed:.2f}s, limit {limit:g}s)")


def cli_output(*argv) -> tuple[int, str]:
    buf = io.StringIO()
    with redirect_stdout(buf):
        code = run([str(a) for a in argv])
    return code, buf.getvalue()


def plane_order_formula(q: int, delta: int, k: int) -> int:
    n = q * q + q + 1
    return n * (delta // (q + 1)) * (k - q - 1) + n


def h_a_instances():
    """(q, k, a) for q in {2, 3, 5}: the smallest admissible k and one larger."""
    for q in (2, 3, 5):
        k0 = q + 1 + (q + 1) // 2
        for k in (k0, k0 + 2):
            for a in range(q + 2):
                yield q, k, a


def lifted_instances():
    for a in range(4):
        h, _ = one_intersecting_h_a(5, a, 2)
        for lam in (2, 3):
            yield h, lam, lambda_lift(h, lam)


def test_criterion_1_fano_extremality(capsys):
    with criterion(capsys, 1, "Fano plane meets both edge bounds with equality", 1.0):
        code, text = cli_output("construct", "projective-plane", "--q", 2)
        assert code == 0
        h = parse_text(text)
        assert h.uniformity == 3
        assert h.is_lambda_intersecting(1)
        assert not h.is_sunflower()
        assert h.m == 7
        assert deza_size_bound(3, 1).exact == 7 == h.m
        assert furedi_size_bound(3, 3).exact == 7 == h.m
        assert h.max_degree == 3


def test_criterion_2_plane_order_equality(capsys):
    with criterion(capsys, 2, "repeated padded plane reaches the order formula exactly", 1.0):
        h, _ = furedi_order_family(2, 3, 6)
        k, delta = 6, 3
        assert h.order == 28
        assert h.order == (Fraction(k * k, 4) - Fraction(k, 2) + 1) * (delta + 1)
        assert h.order == plane_order_formula(2, 3, 6)
        assert h.is_intersecting() and h.max_degree <= delta and h.uniformity == k
        g, _ = furedi_order_family(3, 4, 8)
        assert g.order == plane_order_formula(3, 4, 8) == 65
        assert g.is_intersecting() and g.max_degree <= 4 and g.uniformity == 8


def test_criterion_3_h_a_family(capsys):
    with criterion(capsys, 3, "h_a family: structure, q=5 kernel formula, order+kernel bracket", 30.0):
        count = 0
        for q, k, a in h_a_instances():
            h, man = one_intersecting_h_a(k, a, q)
            assert h.is_lambda_intersecting(1), (q, k, a)
            assert h.uniformity == k
            assert not h.is_sunflower()
            kernel = len(kernel_degree_rule(h))
            if q == 5:
                assert kernel == q * q + q + 1 + a + a * (q * q // 4)
            bound = ord_ker_bound_1_intersecting(k)
            total = h.order + kernel
            assert total <= bound.ceiling
            assert bound.verdict(total) in ("satisfied", "indeterminate")
            count += 1
        assert count == 2 * (4 + 5 + 7)


def test_criterion_4_lambda_lift(capsys):
    with criterion(capsys, 4, "lambda-lift of q=2 h_a: lambda-intersecting, order +lambda-1, order bound", 5.0):
        seen = 0
        for h, lam, g in lifted_instances():
            assert g.is_lambda_intersecting(lam)
            assert g.order == h.order + lam - 1
            k = g.uniformity
            assert k == h.uniformity + lam - 1
            bound = deza_order_f(k, lam)
            assert g.order <= bound.ceiling
            assert bound.verdict(g.order) in ("satisfied", "indeterminate")
            seen += 1
        assert seen == 8


def test_criterion_5_lemma_suite(capsys):
    with criterion(capsys, 5, "edge-vertex, residuals and degree classification", 5.0):
        instances = []
        for q, k, a in h_a_instances():
            instances.append((1, one_intersecting_h_a(k, a, q)[0]))
        instances += [(lam, g) for _, lam, g in lifted_instances()]
        controls = [(1, sunflower_family(3, 1, 45)), (2, sunflower_family(5, 2, 10)), (1, sunflower_family(4, 1, 3))]
        for lam, h in instances + controls:
            assert edge_vertex_bound_check(h, lam)
            assert max(mccarthy_vanstone_residuals(h, lam).values()) <= 0
        fano = projective_plane(2).hypergraph()
        assert mccarthy_vanstone_residuals(fano, 1) == {v: 0 for v in range(7)}
        sun = sunflower_family(3, 1, 45)
        assert sun.m >= 20 * (3 - 1)
        cls = classify_degrees(sun, 1)
        assert not cls.violations
        assert cls.heavy == sun.core() == {1}
        assert cls.low == sun.support - {1}


@pytest.mark.parametrize("n", [3, 6, 9, 12])
def test_criterion_6_sps_extremality(capsys, n):
    with criterion(capsys, 6, f"star SPS at n={n} reaches the order formula", 1.0):
        s, _ = sps_star_family(n)
        assert verify_sps(s)
        assert is_bounded(s, 2, n)
        assert is_one_cross_intersecting(s)
        t = (n + 3) // 3
        closed = Fraction((n + 3) ** 3, 27) + Fraction(n + 3, 3)
        counted = t * t * (n // 3) + t * t + t
        assert sps_order(s) == closed == counted
        assert sps_order(s) == {3: 10, 6: 30, 9: 68, 12: 130}[n]


def test_criterion_7_tree_claim_exhaustive(capsys):
    with criterion(capsys, 7, "odd-distance sum over every labelled tree on n <= 8 vertices", 60.0):
        total = 0
        for n in range(1, 9):
            seen = 0
            for tree in enumerate_trees(n):
                res = tree_odd_sum(tree)
                t = tree.t
                assert res.total == res.b * (res.b - 1) + res.w * (res.w - 1)
                assert res.total >= t * t // 2
                assert (res.total == t * t // 2) == (abs(res.b - res.w) <= 1)
                seen += 1
            assert seen == tree_count(n)
            total += seen
        assert total == sum(tree_count(n) for n in range(1, 9)) == 280393


def _concordance(space: SearchSpace, k: int) -> int:
    bound = majumder_kernel_bound(k).exact
    checked = 0
    for h in iter_families(space):
        brute = min_kernel_brute(h)
        assert brute == min_kernel_exact(h).size, h
        if h.m >= 2 and h.is_lambda_intersecting(1):
            assert len(kernel_degree_rule(h)) == brute, h
        assert brute <= bound, h
        checked += 1
    return checked


def test_criterion_8_oracle_concordance(capsys):
    with criterion(capsys, 8, "oracle maxima and kernel concordance on small k-graphs", 600.0):
        for n_max in range(2, 7):
            res = max_size(SearchSpace(k=2, n_max=n_max, intersecting=True, max_degree=2))
            assert res.value == 3 if n_max >= 3 else res.value == 1
        nonsun = max_size(SearchSpace(k=2, n_max=6, lam=1, non_sunflower=True))
        assert nonsun.value == 3 == deza_size_bound(2, 1).exact
        fano = max_size(SearchSpace(k=3, n_max=7, lam=1, non_sunflower=True))
        assert fano.value == 7
        assert fano.witness.is_lambda_intersecting(1) and not fano.witness.is_sunflower()

        assert majumder_kernel_bound(2).exact == 3 and majumder_kernel_bound(3).exact == 9
        checked = _concordance(SearchSpace(k=2, n_max=6, intersecting=True), 2)
        checked += _concordance(SearchSpace(k=3, n_max=6, intersecting=True, budget=1 << 24), 3)
        checked += _concordance(SearchSpace(k=3, n_max=7, intersecting=True, max_degree=3, budget=1 << 24), 3)
        checked += _concordance(SearchSpace(k=3, n_max=7, lam=1), 3)
        assert checked > 20000


GENERATORS = [
    ["projective-plane", "--q", 2],
    ["projective-plane", "--q", 3],
    ["projective-plane", "--q", 5],
    ["affine-plane", "--q", 3],
    ["affine-plane", "--q", 5],
    ["furedi-order", "--q", 2, "--delta", 3, "--k", 6],
    ["furedi-order", "--q", 3, "--delta", 4, "--k", 8],
    ["sunflower", "--k", 3, "--lambda", 1, "--m", 45],
    ["sunflower", "--k", 5, "--lambda", 2, "--m", 10],
    *(["h-a", "--k", k, "--a", a, "--q", q] for q, k, a in h_a_instances()),
    *(["sps-star", "--n", n] for n in (3, 6, 9, 12)),
]


def test_criterion_9_determinism_and_round_trip(capsys, tmp_path):
    with criterion(capsys, 9, "byte-identical constructions, round-trips and verify-on-construct", 120.0):
        for i, gen in enumerate(GENERATORS):
            code, first = cli_output("construct", *gen)
            assert code == 0
            code, second = cli_output("construct", *gen)
            assert code == 0 and first == second, gen
            is_sps = gen[0] == "sps-star"
            again = format_sps(parse_sps(first)) if is_sps else format_text(parse_text(first))
            assert again == first, gen
            path = tmp_path / f"g{i}.{'json' if is_sps else 'txt'}"
            path.write_text(first, encoding="utf-8")
            code, _ = cli_output("verify", path)
            assert code == 0, gen
            if gen == ["projective-plane", "--q", 2]:
                base = path
        for lam in (2, 3):
            _, a = cli_output("construct", "lambda-lift", base, "--lambda", lam)
            _, b = cli_output("construct", "lambda-lift", base, "--lambda", lam)
            assert a == b and format_text(parse_text(a)) == a
            lifted = tmp_path / f"lift{lam}.txt"
            lifted.write_text(a)
            assert cli_output("verify", lifted, "--lambda", lam)[0] == 0

        # a fresh interpreter with a different hash seed gives the same bytes
        env = dict(os.environ, PYTHONHASHSEED="12345")
        for gen in (["h-a", "--k", 9, "--a", 3, "--q", 5], ["sps-star", "--n", 12], ["furedi-order", "--q", 3, "--delta", 4, "--k", 8]):
            proc = subprocess.run(
                [sys.executable, "-m", "hyperforge", "construct", *map(str, gen)],
                capture_output=True, text=True, env=env, check=True,
            )
            assert proc.stdout == cli_output("construct", *gen)[1]

        # worker counts do not change search results
        h = parse_text(cli_output("construct", "projective-plane", "--q", 3)[1])
        serial, parallel = min_kernel_exact(h), min_kernel_exact(h, workers=2)
        assert (serial.size, serial.witness) == (parallel.size, parallel.witness)
        space = SearchSpace(k=3, n_max=7, lam=1, non_sunflower=True)
        one, two = max_size(space), max_size(space, workers=2)
        assert (one.value, format_text(one.witness)) == (two.value, format_text(two.witness))
        code1, out1 = cli_output("kernel", "exact", base, "--format", "json")
        code2, out2 = cli_output("kernel", "exact", base, "--workers", 2, "--format", "json")
        assert code1 == code2 == 0 and out1 == out2
