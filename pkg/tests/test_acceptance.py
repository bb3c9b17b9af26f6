"""Acceptance criteria 1-10, one test each, all in exact arithmetic.

Every test records a PASS/FAIL line in ``conftest.ACCEPTANCE``; the lines are
printed in the terminal summary.  Run this file directly for the same report
without the rest of the suite.
"""

import itertools
import random
import sys
import time
from fractions import Fraction

import pytest

import conftest
from graphfree import nc_lattice
from graphfree.cumulants import (CumulantSpec, Letter, cumulants_to_moments,
                                 mixed_moment, moments_to_cumulants,
                                 semicircular_spec, sequence_spec)
from graphfree.gfps import (are_g_free_numerical,
                            build_context, embed, expectation, mul, scale)
from graphfree.graph import complete_graph, disjoint, path_graph
from graphfree.nc_lattice import (alt_union, catalan, enumerate_nc, kreweras,
                                  moebius, parse_partition, refinement_leq)
from graphfree.polynomial import Polynomial
from graphfree.rtransform import (alt_union_series, boxed_g, index_words,
                                  is_g_circular, is_g_r_diagonal,
                                  is_g_semicircular, moment_series, r_series,
                                  semicircular_witness)
from graphfree.scalars import GaussianRational

import oracles
from cli_cases import CASES, golden_path, golden_text, run
from helpers import rand_q, random_spec, random_variable


def record(k, desc):
    """Decorator: store PASS or FAIL for criterion ``k`` and re-raise failures."""
    def wrap(fn):
        def test(*args, **kwargs):
            try:
                fn(*args, **kwargs)
            except BaseException as exc:
                conftest.ACCEPTANCE[k] = ("FAIL", f"{desc} ({type(exc).__name__}: {exc})"[:300])
                print(f"criterion {k}: FAIL")
                raise
            conftest.ACCEPTANCE[k] = ("PASS", desc)
            print(f"criterion {k}: PASS")
        test.__name__ = fn.__name__
        test.__doc__ = fn.__doc__
        return test
    return wrap


def free_pair(seed, cap=12):
    """G-free x, y on the path 1-2-3: on shared words they use disjoint vertex sets."""
    rng = random.Random(seed)
    g = path_graph(3)
    ctx = build_context(g, {v: random_spec(rng, v, cap=cap) for v in g.vertices})
    x = random_variable(rng, ctx, ["1", "1,2", "1,2,3"], {"1"})
    y = random_variable(rng, ctx, ["2,3", "1,2", "1,2,3", "3"], {"2", "3"})
    return rng, ctx, x, y


def S(v, gen="s"):
    return Polynomial.of(Letter(gen, v))


@record(1, "|NC(n)| is Catalan for n = 1..12 in under 10 s")
def test_criterion_01_catalan_counts():
    # start cold so the timing covers the whole enumeration
    nc_lattice._enumerate.cache_clear()
    nc_lattice._nc_offsets.cache_clear()
    start = time.perf_counter()
    counts = [len(enumerate_nc(n, cap=12)) for n in range(1, 13)]
    elapsed = time.perf_counter() - start
    assert counts == [1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796, 58786, 208012]
    assert counts == [catalan(n) for n in range(1, 13)]
    for n in range(1, 7):
        assert [p.blocks for p in enumerate_nc(n)] == oracles.nc_bruteforce(n)
    assert elapsed < 10, f"{elapsed:.1f} s"


@record(2, "Kreweras and alternating union of the 8-point example")
def test_criterion_02_kreweras_example():
    p = parse_partition("1,4,5|2,3|6,8|7", 8)
    k = kreweras(p)
    assert k.blocks == ((1, 3), (2,), (4,), (5, 8), (6, 7))
    assert k.blocks == oracles.kreweras_bruteforce(p.blocks, 8)
    u = alt_union(p, k)
    # the singleton (8) is the block (4) of Kr(pi) moved to the even points
    listed = {(1, 7, 9), (2, 6), (3, 5), (4,), (10, 16), (11, 15), (12, 14), (13,)}
    assert set(u.blocks) == listed | {(8,)}
    assert u.n == 16 and not oracles.crosses(list(u.blocks))


@record(3, "Moebius round trip on 100 random length-8 sequences; interval sums are delta")
def test_criterion_03_moebius():
    rng = random.Random(3)
    for _ in range(100):
        seq = [rand_q(rng, 9, 7) for _ in range(8)]
        assert list(moments_to_cumulants(cumulants_to_moments(seq))) == seq
        assert list(cumulants_to_moments(moments_to_cumulants(seq))) == seq
    for n in range(1, 6):
        parts = enumerate_nc(n)
        for p in parts:
            for q in parts:
                if not refinement_leq(p, q):
                    continue
                total = sum(moebius(p, t) for t in parts
                            if refinement_leq(p, t) and refinement_leq(t, q))
                assert total == (1 if p == q else 0)
    ref_parts, inv = oracles.moebius_matrix(5)
    parts = enumerate_nc(5)
    assert [p.blocks for p in parts] == ref_parts
    for i, j in itertools.product(range(len(parts)), repeat=2):
        assert moebius(parts[i], parts[j]) == inv[i, j]


@record(4, "k = (0,1,0,...) gives m = (0,1,0,2,0,5,0,14) = pairing counts")
def test_criterion_04_semicircle_moments():
    k = [0, 1, 0, 0, 0, 0, 0, 0]
    m = list(cumulants_to_moments(k))
    assert m == [0, 1, 0, 2, 0, 5, 0, 14]
    assert m == [oracles.nc_pairings(n) for n in range(1, 9)]
    assert m == [oracles.moments_from_cumulants_bruteforce(k, n) for n in range(1, 9)]
    assert list(moments_to_cumulants(m)) == k


@record(5, "disjoint-word variables are G-free to order 6; shared-vertex ones fail with a witness")
def test_criterion_05_freeness():
    g = path_graph(3)
    specs = {}
    for v in g.vertices:
        a, b = Letter("a", v), Letter("b", v)
        specs[v] = CumulantSpec(v, 8, {(a, a.star()): 1, (a, a): Fraction(1, 2),
                                       (b, b.star()): 2, (a,): Fraction(1, 3)})
    ctx = build_context(g, specs)
    a1 = Polynomial.of(Letter("a", "1"))
    a3 = Polynomial.of(Letter("a", "3"))
    x = embed(ctx, "1", a1)
    y = embed(ctx, "3", a3)
    assert disjoint(ctx.word("1"), ctx.word("3"))
    assert are_g_free_numerical(ctx, x, y, 6)
    x12 = embed(ctx, "1,2", a1 + Polynomial.of(Letter("b", "2")))
    assert are_g_free_numerical(ctx, x12, y, 6)
    # the same vertex inside one path
    z = embed(ctx, "1", a1 * 2 + 1)
    verdict = are_g_free_numerical(ctx, x, z, 6, names=("x", "z"))
    assert not verdict
    assert verdict.word == ctx.word("1") and verdict.value
    labels = {t.rstrip("*") for t in verdict.witness}
    assert labels == {"x", "z"} and len(verdict.witness) == 2
    assert verdict.describe().startswith("k₂(")
    u = embed(ctx, "1,2,3", Polynomial.of(Letter("a", "2")))
    w = embed(ctx, "1,2,3", Polynomial.of(Letter("a", "2", True)))
    assert not are_g_free_numerical(ctx, u, w, 6)


def _phi_single(specs):
    def phi(poly):
        return sum((c * mixed_moment(word, specs) if word else c) for word, c in poly.items())
    return phi


@record(6, "K3 mixed moments: gfps = mixed_moment = centering oracle on >= 50 words")
def test_criterion_06_k3_mixed_moments():
    rng = random.Random(6)
    g = complete_graph(3)
    specs = {v: random_spec(rng, v, order=4, cap=10, density=0.6) for v in g.vertices}
    ctx = build_context(g, specs)
    multi = [w for w in ctx.words if len(w) >= 2]
    checked = 0
    for _ in range(60):
        w = rng.choice(multi)
        pool = [Letter(gen, v, star) for v in w.vertices for gen in ("a", "b")
                for star in (False, True)]
        n = rng.randint(2, 6)
        letters = tuple(rng.choice(pool) for _ in range(n))
        got = expectation(ctx, embed(ctx, w, Polynomial.of(*letters)))[w]
        assert got == mixed_moment(letters, ctx.specs)
        assert got == oracles.free_product_moment(letters, lambda l: l.vertex,
                                                  _phi_single(ctx.specs))
        assert got == oracles.nc_word_moment(letters, lambda ls: ctx.specs[ls[0].vertex]
                                             .cumulant(tuple(ls)), lambda l: l.vertex)
        checked += 1
    assert checked >= 50


@record(7, "r_series(x+y) is additive to order 6; juxtaposition to order 4 with s = 2")
def test_criterion_07_additivity():
    rng, ctx, x, y = free_pair(70)
    N = 6
    assert r_series(ctx, [x + y], N) == r_series(ctx, [x], N) + r_series(ctx, [y], N)
    x2 = random_variable(rng, ctx, ["1,2", "1"], {"1"})
    y2 = random_variable(rng, ctx, ["1,2,3", "2,3"], {"2", "3"})
    J = r_series(ctx, [x, x2, y, y2], 4)
    assert J.restrict([1, 2]) == r_series(ctx, [x, x2], 4)
    assert J.restrict([3, 4]) == r_series(ctx, [y, y2], 4)
    for idx in index_words(4, 4):
        if {i <= 2 for i in idx} == {True, False}:
            assert not J[idx], idx
    assert r_series(ctx, [x + y, x2 + y2], 4) == \
        r_series(ctx, [x, x2], 4) + r_series(ctx, [y, y2], 4)


@record(8, "boxed_g equals the moment route to order 5; alternating-union form to order 4")
def test_criterion_08_boxed_convolution():
    rng, ctx, x, y = free_pair(80)
    N = 5
    B = boxed_g(r_series(ctx, [x], N), r_series(ctx, [y], N))
    M = moment_series(ctx, [mul(x, y)], N)
    for w in [None] + list(ctx.words):
        seq = moments_to_cumulants([M[(1,) * n][w] for n in range(1, N + 1)])
        assert [B[(1,) * n][w] for n in range(1, N + 1)] == list(seq)
    assert B == r_series(ctx, [mul(x, y)], N)
    A = alt_union_series(ctx, [x], [y], 4)
    assert A == boxed_g(r_series(ctx, [x], 4), r_series(ctx, [y], 4))


@record(9, "path sum of semicirculars is G-semicircular; circular pair is R-diagonal; k4 perturbation rejected")
def test_criterion_09_recognizers():
    g = path_graph(3)
    ctx = build_context(g, {v: semicircular_spec("s", v, order_cap=8) for v in g.vertices})
    path_sum = embed(ctx, "1,2,3", S("1") + S("2") + S("3"))
    assert is_g_semicircular(ctx, path_sum, 8)
    total = embed(ctx, "1", S("1")) + embed(ctx, "2", S("2")) + embed(ctx, "3", S("3"))
    assert is_g_semicircular(ctx, total, 8)

    specs = {v: CumulantSpec(v, 8, {(Letter("s", v),) * 2: 1, (Letter("t", v),) * 2: 1},
                             self_adjoint={"s", "t"}) for v in g.vertices}
    two = build_context(g, specs)
    c1 = embed(two, "2", S("2", "s"))
    c2 = embed(two, "2", S("2", "t"))
    assert is_g_circular(two, c1, c2, 6)
    a = c1 + scale(GaussianRational(0, 1), c2)
    assert is_g_r_diagonal(two, a, 6)

    pert = build_context(path_graph(1), {"1": sequence_spec(
        "s", "1", [0, 1, 0, Fraction(1, 5)], order_cap=8)})
    x = embed(pert, "1", S("1"))
    assert not is_g_semicircular(pert, x, 8)
    n, k = semicircular_witness(pert, x, 8)
    assert n == 4 and k[pert.word("1")] == Fraction(1, 5)


@record(10, "CLI goldens byte-stable across two runs; suite under 2 min")
def test_criterion_10_cli_goldens():
    for name, argv, expected in CASES:
        first = run(argv)
        second = run(argv)
        assert first == second, name
        code, out, err = first
        assert code == expected, name
        with open(golden_path(name), encoding="utf-8") as fh:
            assert golden_text(code, out, err) == fh.read(), name
    elapsed = time.time() - conftest.SESSION_START
    assert elapsed < 120, f"suite already at {elapsed:.0f} s"


if __name__ == "__main__":
    code = pytest.main([__file__, "-q", "-p", "no:cacheprovider"])
    sys.exit(code)
