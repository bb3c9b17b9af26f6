"""Semicircular elements on the vertices of the path 1-2-3.

Each vertex carries one standard semicircular ``s``.  The graph moments live
in the diagonal algebra, one coordinate per path word.
"""

from graphfree import (Letter, Polynomial, are_g_free_numerical, build_context,
                       embed, g_moment, is_g_semicircular, path_graph, r_series,
                       semicircular_spec)

g = path_graph(3)
ctx = build_context(g, {v: semicircular_spec("s", v) for v in g.vertices})
print("path words:", ", ".join(str(w) for w in ctx.words))


def s(v):
    return Polynomial.of(Letter("s", v))


x = embed(ctx, "1", s("1"))
y = embed(ctx, "3", s("3"))
print("\nE^G(x^4) =", g_moment(ctx, x, 4))
print("x on [1], y on [3] G-free to order 6:", bool(are_g_free_numerical(ctx, x, y, 6)))

# the same vertex inside one path word is not free of itself
z = embed(ctx, "1,2,3", s("2"))
verdict = are_g_free_numerical(ctx, z, z, 4, names=("z", "z'"))
print("z, z' on a shared vertex:", verdict.describe())

w = embed(ctx, "1,2,3", s("1") + s("2") + s("3"))
print("\ns1 + s2 + s3 on [1,2,3] G-semicircular to order 8:", is_g_semicircular(ctx, w, 8))
for idx, c in r_series(ctx, [w], 6).items():
    print(f"  R-coefficient at order {len(idx)}: {c}")
