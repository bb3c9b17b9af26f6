"""The graph free product space (A^G, E^G) over the G-diagonal algebra D^G.

``A^G`` is the direct sum of the distinguished scalar summand and one free
product ``A_w`` per word ``w`` of the (truncated) free semigroupoid.  A graph
random variable is stored as its scalar part plus one noncommutative
polynomial per word; ``E^G`` evaluates every component with the free-product
state of its word, which here is the vanishing-mixed-cumulant expansion of
:class:`~graphfree.cumulants.MomentEvaluator`.

Because ``D^G`` is commutative and commutes with ``A^G``, graph moments and
cumulants are computed coordinate by coordinate, with the scalar Moebius
inversion over NC(n).
"""

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .cumulants import CumulantSpec, Letter, MomentEvaluator
from .errors import (ContextMismatch, MissingVertexSpec,
                     SpecInvalid, UnknownWord, VertexContainmentViolated,
                     WordTooLong)
from .graph import (SIMPLE, WALK, PathWord, SimplicialGraph, canonicalize,
                    disjoint, enumerate_semigroupoid, validate_graph)
from .nc_lattice import enumerate_nc, moebius_to_top
from .polynomial import Polynomial
from .scalars import as_scalar, conj, render

__all__ = [
    "DiagonalElement",
    "GraphContext",
    "GRandomVariable",
    "JointMoments",
    "FreenessVerdict",
    "build_context",
    "embed",
    "from_diagonal",
    "add",
    "mul",
    "adjoint",
    "scale",
    "mul_diag",
    "mul_diag_left",
    "is_self_adjoint",
    "expectation",
    "g_moment",
    "g_cumulant",
    "are_g_free_structural",
    "are_g_free_numerical",
]

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _scalar(c):
    if isinstance(c, int) and not isinstance(c, bool):
        return Fraction(c)
    if isinstance(c, Fraction):
        return c
    return as_scalar(c)


class DiagonalElement:
    """An element of D^G: the unit coordinate plus one scalar per word.

    Absent words have coordinate 0.  Arithmetic is coordinatewise.
    """

    __slots__ = ("unit", "coords")

    def __init__(self, unit=0, coords=None):
        self.unit = _scalar(unit)
        self.coords = {}
        for w, c in (coords or {}).items():
            c = _scalar(c)
            if c:
                self.coords[w] = c

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def indicator(cls, word, value=1):
        return cls(0, {word: value})

    def __getitem__(self, word):
        if word is None:
            return self.unit
        return self.coords.get(word, _ZERO)

    def __bool__(self):
        return bool(self.unit) or bool(self.coords)

    def is_zero(self):
        return not self

    def __eq__(self, other):
        if isinstance(other, DiagonalElement):
            return self.unit == other.unit and self.coords == other.coords
        if isinstance(other, int) and other == 0:
            return not self
        return NotImplemented

    def __hash__(self):
        return hash((self.unit, frozenset(self.coords.items())))

    def __repr__(self):
        inner = ", ".join(f"{w}: {render(c)}" for w, c in self.items())
        return f"DiagonalElement(unit={render(self.unit)}, {{{inner}}})"

    def items(self):
        """Nonzero word coordinates in the global word order."""
        return sorted(self.coords.items(), key=lambda kv: kv[0].sort_key())

    def __neg__(self):
        return DiagonalElement(-self.unit, {w: -c for w, c in self.coords.items()})

    def __add__(self, other):
        if not isinstance(other, DiagonalElement):
            return NotImplemented
        coords = dict(self.coords)
        for w, c in other.coords.items():
            coords[w] = coords.get(w, _ZERO) + c
        return DiagonalElement(self.unit + other.unit, coords)

    def __sub__(self, other):
        if not isinstance(other, DiagonalElement):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, DiagonalElement):
            small, big = sorted((self.coords, other.coords), key=len)
            coords = {w: c * big[w] for w, c in small.items() if w in big}
            return DiagonalElement(self.unit * other.unit, coords)
        c = _scalar(other)
        return DiagonalElement(self.unit * c, {w: v * c for w, v in self.coords.items()})

    def __rmul__(self, other):
        return self * other

    def conjugate(self):
        return DiagonalElement(conj(self.unit), {w: conj(c) for w, c in self.coords.items()})


@dataclass(frozen=True, eq=False)
class GraphContext:
    """A graph with probability-space vertices, truncated to finite size.

    ``words`` is the enumerated semigroupoid (in the global word order);
    ``order_cap`` bounds the length of every letter word that is evaluated.
    """

    graph: SimplicialGraph
    specs: dict
    max_len: Optional[int]
    mode: str
    order_cap: int
    words: tuple
    evaluator: MomentEvaluator
    index: dict

    def word(self, w):
        """Look up an enumerated word from a :class:`PathWord` or a vertex sequence."""
        if isinstance(w, PathWord):
            pw = w
        else:
            if isinstance(w, str):
                w = [x.strip() for x in w.strip("[]").split(",")]
            try:
                pw = canonicalize(self.graph, w, self.mode)
            except Exception as exc:
                raise UnknownWord(f"{w!r} is not a word of this context: {exc}") from None
        if pw not in self.index:
            raise UnknownWord(f"{pw} is not in the enumerated semigroupoid")
        return pw

    def normalize_letter(self, letter):
        spec = self.specs.get(letter.vertex)
        if spec is None or not letter.starred or letter.generator not in spec.self_adjoint:
            return letter
        return Letter(letter.generator, letter.vertex, False, letter.slot)

    def normalize(self, poly):
        return poly.map_letters(self.normalize_letter)

    def phi(self, word, poly):
        """``phi_w`` of a polynomial whose letters live in ``word``."""
        total = _ZERO
        for letters, c in poly.terms.items():
            if len(letters) > self.order_cap:
                raise WordTooLong(
                    f"letter word of length {len(letters)} at {word} exceeds "
                    f"order_cap {self.order_cap}")
            m = self.evaluator.moment(letters) if letters else _ONE
            if m:
                total = total + c * m
        return total

    def one(self):
        """The identity of D^G (every coordinate 1)."""
        return DiagonalElement(1, {w: 1 for w in self.words})

    def zero(self):
        return GRandomVariable(self, {}, 0)


def build_context(graph, vertex_specs, max_len=None, mode=SIMPLE, order_cap=None):
    """Validate the graph and specs and enumerate the semigroupoid."""
    if not isinstance(graph, SimplicialGraph):
        vertices, edges = graph
        graph = SimplicialGraph(vertices, edges, validate=False)
    validate_graph(graph)
    specs = {str(v): s for v, s in dict(vertex_specs).items()}
    for v in graph.vertices:
        if v not in specs:
            raise MissingVertexSpec(f"vertex {v!r} has no cumulant spec")
    for v, s in specs.items():
        if v not in graph.vertices:
            raise SpecInvalid(f"spec given for unknown vertex {v!r}")
        if not isinstance(s, CumulantSpec):
            raise SpecInvalid(f"spec for vertex {v!r} is not a CumulantSpec")
        if s.vertex != v:
            raise SpecInvalid(f"spec keyed {v!r} describes vertex {s.vertex!r}")
    if order_cap is None:
        order_cap = min(s.order_cap for s in specs.values())
    for v, s in specs.items():
        if s.order_cap < order_cap:
            raise SpecInvalid(
                f"spec at vertex {v!r} has order_cap {s.order_cap} < context order_cap {order_cap}")
    if mode not in (SIMPLE, WALK):
        raise SpecInvalid(f"unknown mode {mode!r}")
    words = tuple(enumerate_semigroupoid(graph, max_len, mode))
    return GraphContext(graph, specs, max_len, mode, order_cap, words,
                        MomentEvaluator(specs, order_cap),
                        {w: k for k, w in enumerate(words)})


class GRandomVariable:
    """An element of A^G: scalar part plus one polynomial per word."""

    __slots__ = ("ctx", "scalar", "components")

    def __init__(self, ctx, components=None, scalar=0):
        self.ctx = ctx
        self.scalar = _scalar(scalar)
        comps = {}
        for w, poly in (components or {}).items():
            w = ctx.word(w)
            poly = ctx.normalize(Polynomial.lift(poly))
            _check_containment(ctx, w, poly)
            if poly:
                comps[w] = poly
        self.components = comps

    @classmethod
    def _raw(cls, ctx, components, scalar):
        self = object.__new__(cls)
        self.ctx = ctx
        self.scalar = scalar
        self.components = {w: p for w, p in components.items() if p}
        return self

    def component(self, w):
        return self.components.get(self.ctx.word(w), Polynomial._raw({}))

    def support(self):
        return sorted(self.components, key=PathWord.sort_key)

    def __bool__(self):
        return bool(self.scalar) or bool(self.components)

    def __eq__(self, other):
        if isinstance(other, GRandomVariable):
            return (self.ctx is other.ctx and self.scalar == other.scalar
                    and self.components == other.components)
        return NotImplemented

    def __hash__(self):
        return hash((id(self.ctx), self.scalar, frozenset(self.components.items())))

    def __repr__(self):
        parts = [f"{w}: {p}" for w, p in sorted(self.components.items(),
                                               key=lambda kv: kv[0].sort_key())]
        if self.scalar:
            parts.insert(0, f"unit: {render(self.scalar)}")
        return "GRandomVariable{" + "; ".join(parts) + "}"

    def __add__(self, other):
        return add(self, other)

    def __sub__(self, other):
        return add(self, scale(-1, other))

    def __neg__(self):
        return scale(-1, self)

    def __mul__(self, other):
        if isinstance(other, GRandomVariable):
            return mul(self, other)
        if isinstance(other, DiagonalElement):
            return mul_diag(self, other)
        return scale(other, self)

    def __rmul__(self, other):
        if isinstance(other, DiagonalElement):
            return mul_diag_left(other, self)
        return scale(other, self)

    def adjoint(self):
        return adjoint(self)


def _check_containment(ctx, w, poly):
    for l in poly.letters():
        if l.vertex not in w.vertices:
            raise VertexContainmentViolated(
                f"letter {l} does not belong to the algebra of {w}")
        if l.slot < 0 or l.slot >= w.multiplicity(l.vertex):
            raise VertexContainmentViolated(
                f"letter {l} names occurrence {l.slot} of vertex {l.vertex} "
                f"which appears {w.multiplicity(l.vertex)} time(s) in {w}")


def embed(ctx, w, poly):
    """The graph random variable with the single component ``poly`` at ``w``."""
    return GRandomVariable(ctx, {ctx.word(w): poly})


def from_diagonal(ctx, d):
    """View ``d`` in D^G as an element of A^G."""
    return GRandomVariable(ctx, {w: Polynomial.constant(c) for w, c in d.coords.items()},
                           d.unit)


def _same_ctx(*xs):
    ctx = xs[0].ctx
    for x in xs[1:]:
        if x.ctx is not ctx:
            raise ContextMismatch("graph random variables from different contexts")
    return ctx


def add(x, y):
    ctx = _same_ctx(x, y)
    comps = dict(x.components)
    for w, p in y.components.items():
        comps[w] = comps[w] + p if w in comps else p
    return GRandomVariable._raw(ctx, comps, x.scalar + y.scalar)


def mul(x, y):
    """Componentwise product."""
    ctx = _same_ctx(x, y)
    comps = {w: p * y.components[w] for w, p in x.components.items() if w in y.components}
    return GRandomVariable._raw(ctx, comps, x.scalar * y.scalar)


def scale(c, x):
    c = _scalar(c)
    return GRandomVariable._raw(x.ctx, {w: p.scale(c) for w, p in x.components.items()},
                                x.scalar * c)


def adjoint(x):
    ctx = x.ctx
    return GRandomVariable._raw(
        ctx, {w: p.adjoint(ctx.normalize_letter) for w, p in x.components.items()},
        conj(x.scalar))


def is_self_adjoint(x):
    return adjoint(x) == x


def mul_diag(x, d):
    """``x d``; equal to ``d x`` because D^G is central."""
    comps = {w: p.scale(d[w]) for w, p in x.components.items()}
    return GRandomVariable._raw(x.ctx, comps, x.scalar * d.unit)


def mul_diag_left(d, x):
    comps = {w: p.scale(d[w]) for w, p in x.components.items()}
    return GRandomVariable._raw(x.ctx, comps, d.unit * x.scalar)


def expectation(ctx, x):
    """``E^G(x)``: the coordinate at ``w`` is ``phi_w(x_w)``."""
    if x.ctx is not ctx:
        raise ContextMismatch("variable belongs to another context")
    return DiagonalElement(x.scalar, {w: ctx.phi(w, p) for w, p in x.components.items()})


def g_moment(ctx, x, n):
    """``E^G(x^n)``, computed componentwise."""
    if n < 1:
        raise ValueError("n must be positive")
    if n > ctx.order_cap:
        raise WordTooLong(f"moment order {n} exceeds order_cap {ctx.order_cap}")
    return JointMoments(ctx, [x]).moment((0,) * n)


class JointMoments:
    """Mixed graph moments and cumulants of a fixed list of variables.

    Index words refer to positions in ``variables``.  Component products and
    their expectations are cached per (word, index word), so computing a
    whole series of moments or cumulants reuses every partial product.
    """

    def __init__(self, ctx, variables):
        variables = list(variables)
        for x in variables:
            if x.ctx is not ctx:
                raise ContextMismatch("variable belongs to another context")
        self.ctx = ctx
        self.variables = variables
        # identical arguments share cache entries
        self._canon = []
        for k, x in enumerate(variables):
            for j in range(k):
                if variables[j] is x or variables[j] == x:
                    self._canon.append(self._canon[j])
                    break
            else:
                self._canon.append(k)
        self._products = {}
        self._phis = {}
        self._moments = {}

    def _key(self, idx):
        return tuple(self._canon[i] for i in idx)

    def _common_support(self, idx):
        supp = None
        for i in set(idx):
            comps = self.variables[i].components
            supp = set(comps) if supp is None else supp & comps.keys()
            if not supp:
                return set()
        return supp

    def _product(self, w, key):
        hit = self._products.get((w, key))
        if hit is not None:
            return hit
        if len(key) == 1:
            poly = self.variables[key[0]].components[w]
        else:
            poly = self._product(w, key[:-1]) * self.variables[key[-1]].components[w]
        self._products[(w, key)] = poly
        return poly

    def _phi(self, w, key):
        hit = self._phis.get((w, key))
        if hit is not None:
            return hit
        if w is None:
            val = _ONE
            for i in key:
                val = val * self.variables[i].scalar
        else:
            val = self.ctx.phi(w, self._product(w, key))
        self._phis[(w, key)] = val
        return val

    def _check_order(self, idx):
        if len(idx) > self.ctx.order_cap:
            raise WordTooLong(f"order {len(idx)} exceeds order_cap {self.ctx.order_cap}")

    def moment(self, idx):
        """``E^G(x_{i1} ... x_{in})`` as a :class:`DiagonalElement`."""
        idx = tuple(idx)
        self._check_order(idx)
        key = self._key(idx)
        hit = self._moments.get(key)
        if hit is not None:
            return hit
        coords = {w: self._phi(w, key) for w in self._common_support(key)}
        out = DiagonalElement(self._phi(None, key), coords)
        self._moments[key] = out
        return out

    def cumulant(self, idx):
        """``k_n(x_{i1}, ..., x_{in})``: Moebius inversion in every coordinate."""
        idx = tuple(idx)
        self._check_order(idx)
        key = self._key(idx)
        n = len(key)
        coords = {}
        words = [None] + sorted(self._common_support(key), key=PathWord.sort_key)
        parts = enumerate_nc(n)
        mus = moebius_to_top(n)
        unit = _ZERO
        for w in words:
            local = {}
            total = _ZERO
            for p, mu in zip(parts, mus):
                term = Fraction(mu)
                for b in p.blocks:
                    sub = tuple(key[i - 1] for i in b)
                    v = local.get(sub)
                    if v is None:
                        v = self._phi(w, sub)
                        local[sub] = v
                    if not v:
                        term = _ZERO
                        break
                    term = term * v
                if term:
                    total = total + term
            if w is None:
                unit = total
            elif total:
                coords[w] = total
        return DiagonalElement(unit, coords)


def g_cumulant(ctx, xs):
    """``k_n^{E^G}(x_1, ..., x_n)`` for the tuple ``xs``."""
    xs = list(xs)
    if not xs:
        raise ValueError("need at least one argument")
    return JointMoments(ctx, xs).cumulant(range(len(xs)))


def are_g_free_structural(ctx, w1, w2):
    """Disjoint supporting words generate G-free subalgebras."""
    return disjoint(ctx.word(w1), ctx.word(w2))


@dataclass(frozen=True)
class FreenessVerdict:
    """Outcome of a numerical G-freeness check.

    ``witness`` is ``None`` when free; otherwise the labels of the first
    nonvanishing mixed cumulant, the coordinate (``None`` for the unit) and
    its value.
    """

    free: bool
    order: int
    witness: Optional[tuple] = None
    word: Optional[PathWord] = None
    value: object = None

    def __bool__(self):
        return self.free

    def describe(self):
        if self.free:
            return "free"
        sub = str(len(self.witness)).translate(str.maketrans("0123456789", "₀₁₂₃₄₅₆₇₈₉"))
        where = "unit" if self.word is None else str(self.word)
        return f"k{sub}({','.join(self.witness)})@{where}={render(self.value)}"


def _star_pool(name, x):
    pool = [(name, x)]
    xs = adjoint(x)
    if xs != x:
        pool.append((name + "*", xs))
    return pool


def are_g_free_numerical(ctx, x, y, up_to, names=("x", "y")):
    """Check that every mixed cumulant over ``{x, x*, y, y*}`` of order 2..up_to vanishes.

    Tuples are scanned by increasing order and then lexicographically over
    the pool ``x, x*, y, y*`` (starred entries omitted when self-adjoint);
    the first nonvanishing one is reported.
    """
    _same_ctx(x, y)
    if up_to > ctx.order_cap:
        raise WordTooLong(f"order {up_to} exceeds order_cap {ctx.order_cap}")
    px = _star_pool(names[0], x)
    py = _star_pool(names[1], y)
    pool = px + py
    nx = len(px)
    joint = JointMoments(ctx, [v for _, v in pool])
    for n in range(2, up_to + 1):
        for idx in itertools.product(range(len(pool)), repeat=n):
            if all(i < nx for i in idx) or all(i >= nx for i in idx):
                continue
            k = joint.cumulant(idx)
            if k:
                labels = tuple(pool[i][0] for i in idx)
                if k.unit:
                    return FreenessVerdict(False, up_to, labels, None, k.unit)
                w, v = k.items()[0]
                return FreenessVerdict(False, up_to, labels, w, v)
    return FreenessVerdict(True, up_to)
