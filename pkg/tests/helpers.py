"""Random instances shared by the test modules."""

import itertools
from fractions import Fraction

from graphfree.cumulants import CumulantSpec, Letter
from graphfree.gfps import GRandomVariable
from graphfree.polynomial import Polynomial
from graphfree.scalars import GaussianRational


def rand_q(rng, span=3, den=3):
    return Fraction(rng.randint(-span, span), rng.randint(1, den))


def random_spec(rng, vertex, gens=("a", "b"), order=4, self_adjoint=False, cap=10,
                density=0.5, complex_values=True):
    """A star-compatible joint cumulant table with random rational entries."""
    sa = set(gens) if self_adjoint else set()
    letters = []
    for g in gens:
        letters.append(Letter(g, vertex))
        if not self_adjoint:
            letters.append(Letter(g, vertex, True))
    probe = CumulantSpec(vertex, order, {}, self_adjoint=sa)
    table = {}
    for n in range(1, order + 1):
        for key in itertools.product(letters, repeat=n):
            if rng.random() > density:
                continue
            partner = tuple(probe.normalize(l.star()) for l in reversed(key))
            if key in table or partner in table:
                continue
            im = 0 if partner == key or not complex_values else rand_q(rng)
            table[key] = GaussianRational(rand_q(rng), im)
    return CumulantSpec(vertex, cap, table, self_adjoint=sa)


def letters_of(ctx, vertices):
    out = []
    for v in vertices:
        spec = ctx.specs[v]
        for g in spec.generators():
            out.append(Letter(g, v))
            if g not in spec.self_adjoint:
                out.append(Letter(g, v, True))
    return out


def random_poly(rng, pool, terms=3, degree=1, constant=True):
    poly = Polynomial()
    for _ in range(terms):
        k = rng.randint(1, degree)
        poly = poly + Polynomial.of(*(rng.choice(pool) for _ in range(k)), coeff=rand_q(rng))
    if constant:
        poly = poly + rand_q(rng)
    return poly


def random_variable(rng, ctx, words, vertices, terms=2, degree=1, scalar=True):
    """Components at ``words`` built only from letters at ``vertices`` (restricted to each word)."""
    comps = {}
    for w in words:
        w = ctx.word(w)
        pool = letters_of(ctx, [v for v in w.vertices if v in vertices])
        if not pool:
            continue
        comps[w] = random_poly(rng, pool, terms, degree)
    return GRandomVariable(ctx, comps, rand_q(rng) if scalar else 0)
