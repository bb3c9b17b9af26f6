"""Graph moment series, graph R-transforms and the boxed convolution.

Series are truncated formal power series in noncommuting indeterminates
``z_1..z_s`` with coefficients in D^G.  A coefficient is addressed by its
index word ``(i_1, ..., i_n)`` with ``1 <= i_k <= s``; absent index words are
zero.
"""

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional

from .errors import NotSelfAdjoint, ShapeMismatch
from .gfps import (DiagonalElement, JointMoments, adjoint, are_g_free_numerical,
                   is_self_adjoint)
from .graph import disjoint
from .nc_lattice import alt_union, enumerate_nc, kreweras, moebius_to_top

__all__ = [
    "GSeries",
    "index_words",
    "moment_series",
    "r_series",
    "series_add",
    "boxed_g",
    "alt_union_series",
    "r_series_from_moments",
    "moments_from_r_series",
    "is_g_semicircular",
    "semicircular_witness",
    "CircularVerdict",
    "is_g_circular",
    "is_g_r_diagonal",
    "r_diagonal_witness",
]


def index_words(s, order):
    """All index words of length 1..order over ``1..s``, by length then lexicographically."""
    for n in range(1, order + 1):
        yield from itertools.product(range(1, s + 1), repeat=n)


class GSeries:
    """A truncated series in ``D^G<<z_1, ..., z_s>>`` (no constant term)."""

    __slots__ = ("ctx", "num_vars", "order", "coefficients")

    def __init__(self, ctx, num_vars, order, coefficients=None):
        self.ctx = ctx
        self.num_vars = num_vars
        self.order = order
        coeffs = {}
        for idx, c in (coefficients or {}).items():
            idx = tuple(idx)
            if not 1 <= len(idx) <= order or not all(1 <= i <= num_vars for i in idx):
                raise ShapeMismatch(f"index word {idx} outside the series shape")
            if c:
                coeffs[idx] = c
        self.coefficients = coeffs

    def __getitem__(self, idx):
        return self.coefficients.get(tuple(idx), DiagonalElement())

    def items(self):
        return sorted(self.coefficients.items(), key=lambda kv: (len(kv[0]), kv[0]))

    def __bool__(self):
        return bool(self.coefficients)

    def __eq__(self, other):
        if not isinstance(other, GSeries):
            return NotImplemented
        return (self.num_vars == other.num_vars and self.order == other.order
                and self.coefficients == other.coefficients)

    def __repr__(self):
        return f"GSeries(s={self.num_vars}, N={self.order}, {len(self.coefficients)} nonzero)"

    def _shape(self, other):
        if not isinstance(other, GSeries):
            raise ShapeMismatch("not a GSeries")
        if (self.ctx is not other.ctx or self.num_vars != other.num_vars
                or self.order != other.order):
            raise ShapeMismatch("series differ in context, variable count or order")

    def __add__(self, other):
        return series_add(self, other)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return series_add(self, other.scale(-1))

    def scale(self, c):
        return GSeries(self.ctx, self.num_vars, self.order,
                       {k: v * c for k, v in self.coefficients.items()})

    __rmul__ = scale

    def restrict(self, variables):
        """Sub-series on the index words using only ``variables``, renumbered 1..len."""
        variables = list(variables)
        pos = {v: k + 1 for k, v in enumerate(variables)}
        out = {}
        for idx, c in self.coefficients.items():
            if all(i in pos for i in idx):
                out[tuple(pos[i] for i in idx)] = c
        return GSeries(self.ctx, len(variables), self.order, out)


def _series(ctx, xs, order, which):
    xs = list(xs)
    joint = JointMoments(ctx, xs)
    get = joint.moment if which == "moment" else joint.cumulant
    coeffs = {}
    for idx in index_words(len(xs), order):
        c = get(tuple(i - 1 for i in idx))
        if c:
            coeffs[idx] = c
    return GSeries(ctx, len(xs), order, coeffs)


def moment_series(ctx, xs, order):
    """Coefficient at ``(i_1..i_n)`` is ``E^G(x_{i1} ... x_{in})``."""
    return _series(ctx, xs, order, "moment")


def r_series(ctx, xs, order):
    """Coefficient at ``(i_1..i_n)`` is ``k_n^{E^G}(x_{i1}, ..., x_{in})``."""
    return _series(ctx, xs, order, "cumulant")


def series_add(S, T):
    S._shape(T)
    coeffs = dict(S.coefficients)
    for k, v in T.coefficients.items():
        coeffs[k] = coeffs[k] + v if k in coeffs else v
    return GSeries(S.ctx, S.num_vars, S.order, coeffs)


@lru_cache(maxsize=None)
def _kreweras_pairs(n):
    return tuple((p.blocks, kreweras(p).blocks) for p in enumerate_nc(n))


def _block_product(series, idx, blocks):
    out = None
    for b in blocks:
        c = series.coefficients.get(tuple(idx[i - 1] for i in b))
        if c is None:
            return None
        out = c if out is None else out * c
        if not out:
            return None
    return out


def boxed_g(Rx, Ry):
    """The Kreweras-pair sum ``Rx [*]_G Ry``.

    Coefficient at ``(i_1..i_n)``: sum over ``pi`` in NC(n) of the product of
    ``Rx`` over the blocks of ``pi`` times the product of ``Ry`` over the
    blocks of ``Kr(pi)``, each block reading the index word at its positions.
    """
    Rx._shape(Ry)
    coeffs = {}
    for idx in index_words(Rx.num_vars, Rx.order):
        total = DiagonalElement()
        for pb, kb in _kreweras_pairs(len(idx)):
            left = _block_product(Rx, idx, pb)
            if left is None:
                continue
            right = _block_product(Ry, idx, kb)
            if right is None:
                continue
            total = total + left * right
        if total:
            coeffs[idx] = total
    return GSeries(Rx.ctx, Rx.num_vars, Rx.order, coeffs)


def alt_union_series(ctx, xs, ys, order):
    """``sum_pi k_{pi u_alt Kr(pi)}(x_{i1}, y_{i1}, ..., x_{in}, y_{in})`` as an s-variable series.

    The joint cumulant of the interleaved ``2n``-tuple is evaluated block by
    block on ``pi`` placed on the odd positions and ``Kr(pi)`` on the even
    ones; only the cumulants those blocks select are ever computed.
    """
    xs, ys = list(xs), list(ys)
    s = len(xs)
    if len(ys) != s:
        raise ShapeMismatch("need as many y's as x's")
    joint = JointMoments(ctx, xs + ys)
    cache = {}

    def kappa(sub):
        hit = cache.get(sub)
        if hit is None:
            hit = cache[sub] = joint.cumulant(tuple(i - 1 for i in sub))
        return hit

    coeffs = {}
    for idx in index_words(s, order):
        inter = []
        for i in idx:
            inter += [i, s + i]
        total = DiagonalElement()
        for p in enumerate_nc(len(idx)):
            term = None
            for b in alt_union(p, kreweras(p)).blocks:
                c = kappa(tuple(inter[j - 1] for j in b))
                term = c if term is None else term * c
                if not term:
                    break
            if term:
                total = total + term
        if total:
            coeffs[idx] = total
    return GSeries(ctx, s, order, coeffs)


def _convert(series, with_moebius):
    coeffs = {}
    for idx in index_words(series.num_vars, series.order):
        n = len(idx)
        mus = moebius_to_top(n) if with_moebius else None
        total = DiagonalElement()
        for k, p in enumerate(enumerate_nc(n)):
            c = _block_product(series, idx, p.blocks)
            if c is None:
                continue
            total = total + (c * Fraction(mus[k]) if with_moebius else c)
        if total:
            coeffs[idx] = total
    return GSeries(series.ctx, series.num_vars, series.order, coeffs)


def r_series_from_moments(M):
    """Coefficientwise Moebius inversion of a moment series."""
    return _convert(M, True)


def moments_from_r_series(R):
    """Moment series recovered from an R-series (sum over NC(n) of block products)."""
    return _convert(R, False)


def _require_self_adjoint(x, name="x"):
    if not is_self_adjoint(x):
        raise NotSelfAdjoint(f"{name} is not self-adjoint")


def semicircular_witness(ctx, x, order):
    """``None`` when x is G-semicircular up to ``order``; else the offending ``(n, k_n)``."""
    _require_self_adjoint(x)
    if order < 2:
        raise ValueError("need order >= 2")
    joint = JointMoments(ctx, [x])
    for n in range(1, order + 1):
        k = joint.cumulant((0,) * n)
        if (n == 2) != bool(k):
            return n, k
    return None


def is_g_semicircular(ctx, x, order):
    """Only the second graph cumulant of ``x`` is nonvanishing (orders 1..order)."""
    return semicircular_witness(ctx, x, order) is None


@dataclass(frozen=True)
class CircularVerdict:
    """Whether ``x1 + i x2`` is G-circular, and which kind.

    ``kind`` is ``"w-circular"`` when both parts live on one common word,
    ``"(w1,w2)-circular"`` when they live on two disjoint words, ``"G-circular"``
    otherwise, and ``None`` when the check fails.
    """

    circular: bool
    kind: Optional[str] = None
    words: tuple = ()
    reason: Optional[str] = None

    def __bool__(self):
        return self.circular


def is_g_circular(ctx, x1, x2, order, names=("x1", "x2")):
    _require_self_adjoint(x1, names[0])
    _require_self_adjoint(x2, names[1])
    for name, x in zip(names, (x1, x2)):
        bad = semicircular_witness(ctx, x, order)
        if bad is not None:
            return CircularVerdict(False, reason=f"{name} is not G-semicircular (order {bad[0]})")
    verdict = are_g_free_numerical(ctx, x1, x2, order, names=tuple(names))
    if not verdict:
        return CircularVerdict(False, reason=f"{names[0]}, {names[1]} not G-free: {verdict.describe()}")
    s1, s2 = x1.support(), x2.support()
    if len(s1) == 1 and s1 == s2:
        return CircularVerdict(True, "w-circular", (s1[0],))
    if len(s1) == 1 and len(s2) == 1 and disjoint(s1[0], s2[0]):
        return CircularVerdict(True, "(w1,w2)-circular", (s1[0], s2[0]))
    return CircularVerdict(True, "G-circular", tuple(s1) + tuple(s2))


def _alternating(pattern):
    n = len(pattern)
    if n % 2:
        return False
    return all(pattern[k] != pattern[k + 1] for k in range(n - 1))


def r_diagonal_witness(ctx, a, order):
    """First non-alternating star pattern with a nonvanishing cumulant, or ``None``.

    Patterns are tuples over ``{0: a, 1: a*}``; the allowed ones have even
    length and alternate.
    """
    joint = JointMoments(ctx, [a, adjoint(a)])
    for n in range(1, order + 1):
        for pattern in itertools.product((0, 1), repeat=n):
            if _alternating(pattern):
                continue
            k = joint.cumulant(pattern)
            if k:
                return pattern, k
    return None


def is_g_r_diagonal(ctx, a, order):
    return r_diagonal_witness(ctx, a, order) is None
