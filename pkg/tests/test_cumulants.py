import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from graphfree.cumulants import (CumulantSpec, Letter, MomentEvaluator,
                                 cumulants_to_moments, merge_specs,
                                 mixed_moment, moments_to_cumulants,
                                 parse_letter, scalar_mult_cumulants,
                                 semicircular_spec, sequence_spec)
from graphfree.errors import SpecInvalid, UnknownVertex, WordTooLong
from graphfree.scalars import GaussianRational

from oracles import moments_from_cumulants_bruteforce, nc_bruteforce, nc_word_moment

small = st.fractions(min_value=-5, max_value=5, max_denominator=7)


def test_parse_letter_forms():
    assert parse_letter("a@1") == Letter("a", "1")
    assert parse_letter("a*@v2") == Letter("a", "v2", True)
    assert parse_letter("b@3#1") == Letter("b", "3", False, 1)
    assert parse_letter("c*", vertex="7") == Letter("c", "7", True)
    assert str(Letter("a", "1", True, 2)) == "a*@1#2"
    with pytest.raises(ValueError):
        parse_letter("a")


def test_spec_fills_conjugate_partners():
    a, ast = Letter("a", "1"), Letter("a", "1", True)
    spec = CumulantSpec("1", 4, {(a, a): GaussianRational(1, 2)})
    assert spec.cumulant((ast, ast)) == GaussianRational(1, -2)
    with pytest.raises(SpecInvalid):
        CumulantSpec("1", 4, {(a, a): 1, (ast, ast): 2})


def test_spec_validation():
    a = Letter("a", "1")
    with pytest.raises(SpecInvalid):
        CumulantSpec("1", 2, {(a, a, a): 1})
    with pytest.raises(SpecInvalid):
        CumulantSpec("1", 2, {(Letter("a", "2"),): 1})
    with pytest.raises(SpecInvalid):
        CumulantSpec("1", 0, {})


def test_self_adjoint_folding():
    spec = semicircular_spec("s", "1")
    s, sst = Letter("s", "1"), Letter("s", "1", True)
    assert spec.cumulant((s, sst)) == 1


def test_moment_cumulant_known_values():
    assert cumulants_to_moments([0, 1, 0, 0, 0, 0, 0, 0]) == (0, 1, 0, 2, 0, 5, 0, 14)
    # free Poisson with rate 1: moments are Catalan numbers
    assert cumulants_to_moments([1] * 6) == (1, 2, 5, 14, 42, 132)
    assert moments_to_cumulants([1, 2, 5, 14, 42, 132]) == (1,) * 6


@pytest.mark.parametrize("n", range(1, 8))
def test_moments_match_nc_sum(n):
    rng = random.Random(n)
    k = [Fraction(rng.randint(-4, 4), rng.randint(1, 4)) for _ in range(n)]
    assert cumulants_to_moments(k)[-1] == moments_from_cumulants_bruteforce(k, n)


@settings(max_examples=40, deadline=None)
@given(st.lists(small, min_size=1, max_size=8))
def test_roundtrip_both_ways(seq):
    assert cumulants_to_moments(moments_to_cumulants(seq)) == tuple(seq)
    assert moments_to_cumulants(cumulants_to_moments(seq)) == tuple(seq)


def _random_spec(rng, vertex, gens=("a", "b"), order=4, self_adjoint=False):
    letters = []
    for g in gens:
        letters.append(Letter(g, vertex))
        if not self_adjoint:
            letters.append(Letter(g, vertex, True))
    table = {}
    probe = CumulantSpec(vertex, order, {}, self_adjoint=set(gens) if self_adjoint else ())
    for n in range(1, order + 1):
        for key in itertools.product(letters, repeat=n):
            if rng.random() > 0.5:
                continue
            partner = tuple(probe.normalize(l.star()) for l in reversed(key))
            if key in table or partner in table:
                continue
            re = Fraction(rng.randint(-3, 3), rng.randint(1, 3))
            im = 0 if partner == key else Fraction(rng.randint(-3, 3), rng.randint(1, 3))
            table[key] = GaussianRational(re, im)
    return CumulantSpec(vertex, 10, table, self_adjoint=set(gens) if self_adjoint else ())


def test_mixed_moment_matches_bruteforce_nc_sum():
    rng = random.Random(11)
    specs = {v: _random_spec(rng, v) for v in ("1", "2", "3")}
    pool = [Letter(g, v, st) for v in specs for g in "ab" for st in (False, True)]

    def kappa(letters):
        return specs[letters[0].vertex].cumulant(letters)

    ev = MomentEvaluator(specs)
    for _ in range(60):
        word = tuple(rng.choice(pool) for _ in range(rng.randint(1, 7)))
        expected = nc_word_moment(word, kappa, lambda l: l.vertex)
        assert ev.moment(word) == expected
        assert mixed_moment(word, specs) == expected


def test_mixed_moment_errors():
    specs = {"1": semicircular_spec("s", "1", order_cap=4)}
    s = Letter("s", "1")
    with pytest.raises(WordTooLong):
        mixed_moment((s,) * 5, specs)
    with pytest.raises(UnknownVertex):
        mixed_moment((Letter("s", "2"),), specs)


def test_cross_vertex_product_of_means():
    specs = {"1": sequence_spec("a", "1", [3], order_cap=2),
             "2": sequence_spec("a", "2", [5], order_cap=2)}
    assert mixed_moment((Letter("a", "1"), Letter("a", "2")), specs) == 15


def test_free_semicirculars_alternating_word_vanishes():
    specs = {v: semicircular_spec("s", v) for v in "12"}
    s1, s2 = Letter("s", "1"), Letter("s", "2")
    assert mixed_moment((s1, s2, s1, s2), specs) == 0
    assert mixed_moment((s1, s1, s2, s2), specs) == 1


def test_merge_specs():
    a = semicircular_spec("a", "1")
    b = sequence_spec("b", "1", [1, 2])
    m = merge_specs(a, b)
    assert m.cumulant((Letter("b", "1"),)) == 1
    with pytest.raises(SpecInvalid):
        merge_specs(a, a)


@pytest.mark.parametrize("n", range(1, 7))
def test_scalar_mult_cumulants_matches_moment_route(n):
    rng = random.Random(100 + n)
    kx = [Fraction(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(n)]
    ky = [Fraction(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(n)]
    specs = {"1": sequence_spec("x", "1", kx, order_cap=2 * n),
             "2": sequence_spec("y", "2", ky, order_cap=2 * n)}
    x, y = Letter("x", "1"), Letter("y", "2")
    moments = [mixed_moment((x, y) * m, specs) for m in range(1, n + 1)]
    assert scalar_mult_cumulants(kx, ky, n) == moments_to_cumulants(moments)[n - 1]


def test_scalar_mult_cumulants_errors():
    with pytest.raises(WordTooLong):
        scalar_mult_cumulants([1], [1], 2)
    with pytest.raises(ValueError):
        scalar_mult_cumulants([1], [1], 0)


def test_nc_bruteforce_sanity():
    assert len(nc_bruteforce(6)) == 132
