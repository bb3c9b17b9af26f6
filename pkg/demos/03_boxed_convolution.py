"""Products of G-free variables: the boxed convolution of R-series.

x uses vertex 1 and y uses vertices 2 and 3, so on every shared word they
sit in different vertex algebras and are G-free.  The R-series of ``xy``
is then the Kreweras-pair sum of the R-series of x and of y.
"""

import random
from fractions import Fraction

from graphfree import (CumulantSpec, GRandomVariable, Letter, Polynomial,
                       boxed_g, build_context, mul, path_graph, r_series)

rng = random.Random(0)
g = path_graph(3)
specs = {}
for v in g.vertices:
    a = Letter("a", v)
    specs[v] = CumulantSpec(v, 12, {(a,): Fraction(rng.randint(1, 3)), (a, a): 1},
                            self_adjoint={"a"})
ctx = build_context(g, specs)


def a(v, c=1):
    return Polynomial.of(Letter("a", v), coeff=c)


x = GRandomVariable(ctx, {"1": a("1"), "1,2": a("1", 2) + 1})
y = GRandomVariable(ctx, {"1,2": a("2"), "2,3": a("2") + a("3")})

N = 4
Rx, Ry = r_series(ctx, [x], N), r_series(ctx, [y], N)
B = boxed_g(Rx, Ry)
direct = r_series(ctx, [mul(x, y)], N)
for n in range(1, N + 1):
    print(f"order {n}: {B[(1,) * n]}")
print("\nboxed convolution equals the R-series of xy:", B == direct)
