"""Scalar free-probability kernel.

Moment/cumulant conversion by Moebius inversion over NC(n), mixed moments of
free families described by joint cumulant tables, and the Kreweras-pair
product formula for cumulants of ``xy`` with ``x`` and ``y`` free.

A vertex's probability space is described only through its joint free
cumulants (:class:`CumulantSpec`).  Letters living at different vertices have
vanishing joint cumulants, which is exactly the statement that the vertex
algebras are free; a mixed moment is then the sum over NC(n) of products of
monochrome block cumulants.
"""

import itertools
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Mapping

from .errors import SpecInvalid, UnknownVertex, WordTooLong
from .nc_lattice import enumerate_nc, kreweras, moebius_to_top
from .scalars import as_scalar, conj

__all__ = [
    "Letter",
    "CumulantSpec",
    "MomentEvaluator",
    "mixed_moment",
    "moments_to_cumulants",
    "cumulants_to_moments",
    "scalar_mult_cumulants",
    "semicircular_spec",
    "sequence_spec",
    "merge_specs",
    "parse_letter",
]

_ZERO = Fraction(0)
_ONE = Fraction(1)


@dataclass(frozen=True)
class Letter:
    """A generator (or its formal adjoint) of one vertex algebra.

    ``slot`` distinguishes repeated occurrences of a vertex along a walk; it
    is always 0 for simple paths.
    """

    generator: str
    vertex: str
    starred: bool = False
    slot: int = 0

    def __post_init__(self):
        if not self.generator:
            raise ValueError("generator id must be nonempty")

    def star(self):
        return Letter(self.generator, self.vertex, not self.starred, self.slot)

    def __str__(self):
        s = self.generator + ("*" if self.starred else "") + "@" + self.vertex
        if self.slot:
            s += f"#{self.slot}"
        return s

    def sort_key(self):
        return (self.vertex, self.slot, self.generator, self.starred)


def parse_letter(text, vertex=None):
    """Parse ``"a"``, ``"a*"``, ``"a@v"``, ``"a*@v"`` or ``"a@v#k"``."""
    slot = 0
    if "#" in text:
        text, raw = text.rsplit("#", 1)
        slot = int(raw)
    if "@" in text:
        text, vertex = text.rsplit("@", 1)
    if vertex is None:
        raise ValueError(f"letter {text!r} has no vertex")
    starred = text.endswith("*")
    gen = text[:-1] if starred else text
    if not gen or "*" in gen or " " in gen:
        raise ValueError(f"bad generator id {text!r}")
    return Letter(gen, str(vertex), starred, slot)


@dataclass(frozen=True)
class CumulantSpec:
    """Joint free cumulants of the generators of one vertex algebra.

    ``table`` maps nonempty letter tuples (all at ``vertex``) to their joint
    cumulant; absent tuples have cumulant 0.  Generators listed in
    ``self_adjoint`` satisfy ``a* = a`` and their starred letters are folded
    onto the plain ones.  When ``star_compatible`` is set, the value of the
    reversed, star-flipped tuple is the complex conjugate of the original;
    missing partners are filled in and contradicting ones are rejected.
    """

    vertex: str
    order_cap: int
    table: Mapping = field(default_factory=dict)
    self_adjoint: frozenset = frozenset()
    star_compatible: bool = True

    def __post_init__(self):
        vertex = str(self.vertex)
        object.__setattr__(self, "vertex", vertex)
        object.__setattr__(self, "self_adjoint", frozenset(self.self_adjoint))
        if self.order_cap < 1:
            raise SpecInvalid("order_cap must be positive")
        table = {}
        for key, value in dict(self.table).items():
            letters = tuple(self._coerce(x) for x in key)
            if not letters:
                raise SpecInvalid("cumulant of the empty tuple")
            if len(letters) > self.order_cap:
                raise SpecInvalid(
                    f"tuple of length {len(letters)} exceeds order_cap {self.order_cap}")
            value = as_scalar(value)
            if letters in table and table[letters] != value:
                raise SpecInvalid(f"conflicting values for {_fmt(letters)}")
            table[letters] = value
        if self.star_compatible:
            for letters, value in list(table.items()):
                partner = tuple(self.normalize(l.star()) for l in reversed(letters))
                want = conj(value)
                have = table.get(partner)
                if have is None:
                    table[partner] = want
                elif have != want:
                    raise SpecInvalid(
                        f"{_fmt(partner)} = {have} is not the conjugate of "
                        f"{_fmt(letters)} = {value}")
        table = {k: v for k, v in table.items() if v}
        object.__setattr__(self, "table", table)
        object.__setattr__(self, "_longest", max((len(k) for k in table), default=0))

    def _coerce(self, x):
        if isinstance(x, Letter):
            letter = x
        else:
            letter = parse_letter(str(x), self.vertex)
        if letter.vertex != self.vertex:
            raise SpecInvalid(
                f"letter {letter} does not live at vertex {self.vertex}")
        return self.normalize(letter)

    def normalize(self, letter):
        """Drop the slot and fold ``a*`` onto ``a`` for self-adjoint generators."""
        starred = letter.starred and letter.generator not in self.self_adjoint
        if starred == letter.starred and letter.slot == 0:
            return letter
        return Letter(letter.generator, letter.vertex, starred, 0)

    @property
    def longest(self):
        return self._longest

    def generators(self):
        return sorted({l.generator for k in self.table for l in k})

    def cumulant(self, letters):
        key = tuple(self.normalize(l) for l in letters)
        return self.table.get(key, _ZERO)


def _fmt(letters):
    return "(" + ",".join(map(str, letters)) + ")"


def semicircular_spec(generator, vertex, variance=1, order_cap=8):
    """A single self-adjoint semicircular generator: only ``k2`` is nonzero."""
    vertex = str(vertex)
    return CumulantSpec(vertex, order_cap,
                        {(Letter(generator, vertex),) * 2: variance},
                        self_adjoint={generator})


def sequence_spec(generator, vertex, cumulants, order_cap=None, self_adjoint=True):
    """A single generator with ``k_n(a, ..., a) = cumulants[n-1]``.

    Only meaningful for a self-adjoint generator or when mixed star patterns
    are meant to vanish.
    """
    vertex = str(vertex)
    cumulants = list(cumulants)
    if order_cap is None:
        order_cap = max(len(cumulants), 1)
    letter = Letter(generator, vertex)
    table = {(letter,) * n: k for n, k in enumerate(cumulants, start=1) if k}
    return CumulantSpec(vertex, order_cap, table,
                        self_adjoint={generator} if self_adjoint else (),
                        star_compatible=self_adjoint)


def merge_specs(*specs):
    """Union of specs at one vertex whose generators are mutually free."""
    if not specs:
        raise ValueError("nothing to merge")
    vertex = specs[0].vertex
    table = {}
    sa = set()
    for s in specs:
        if s.vertex != vertex:
            raise SpecInvalid("cannot merge specs of different vertices")
        if set(s.generators()) & {l.generator for k in table for l in k}:
            raise SpecInvalid("merged specs share a generator")
        table.update(s.table)
        sa |= s.self_adjoint
    return CumulantSpec(vertex, min(s.order_cap for s in specs), table,
                        self_adjoint=sa,
                        star_compatible=all(s.star_compatible for s in specs))


class MomentEvaluator:
    """Memoised mixed moments of letters drawn from free vertex algebras.

    The moment of a word is expanded over the block containing its first
    letter: that block picks positions of the same colour (vertex and slot),
    contributes its joint cumulant, and cuts the remaining positions into
    independent intervals.  This enumerates exactly the noncrossing
    partitions whose blocks are monochrome.
    """

    def __init__(self, specs, order_cap=None):
        self.specs = {str(v): s for v, s in dict(specs).items()}
        self.order_cap = order_cap
        self._memo = {(): _ONE}

    def _check(self, word):
        caps = []
        for letter in word:
            spec = self.specs.get(letter.vertex)
            if spec is None:
                raise UnknownVertex(f"no cumulant spec for vertex {letter.vertex!r}")
            caps.append(spec.order_cap)
        cap = self.order_cap if self.order_cap is not None else min(caps, default=0)
        if word and len(word) > cap:
            raise WordTooLong(f"word of length {len(word)} exceeds order cap {cap}")

    def moment(self, word):
        word = tuple(word)
        self._check(word)
        return self._moment(word)

    def _moment(self, word):
        hit = self._memo.get(word)
        if hit is not None:
            return hit
        head = word[0]
        colour = (head.vertex, head.slot)
        spec = self.specs[head.vertex]
        same = [i for i in range(1, len(word))
                if word[i].vertex == colour[0] and word[i].slot == colour[1]]
        end = len(word)
        total = _ZERO
        for k in range(min(len(same), spec.longest - 1) + 1):
            for chosen in itertools.combinations(same, k):
                block = (0,) + chosen
                term = spec.cumulant([word[i] for i in block])
                if not term:
                    continue
                bounds = block + (end,)
                for a, b in zip(bounds, bounds[1:]):
                    if b - a > 1:
                        inner = self._moment(word[a + 1:b])
                        if not inner:
                            term = _ZERO
                            break
                        term = term * inner
                if term:
                    total = total + term
        self._memo[word] = total
        return total


def mixed_moment(word, specs, order_cap=None):
    """``phi(a_1 ... a_n)`` for letters of free vertex algebras."""
    return MomentEvaluator(specs, order_cap).moment(word)


@lru_cache(maxsize=None)
def _moebius_profile(n):
    """``{sorted block sizes: sum of mu(pi, 1_n)}`` over NC(n)."""
    prof = Counter()
    for p, mu in zip(enumerate_nc(n), moebius_to_top(n)):
        prof[tuple(sorted(p.block_sizes()))] += mu
    return tuple((sizes, c) for sizes, c in sorted(prof.items()) if c)


@lru_cache(maxsize=None)
def _count_profile(n):
    prof = Counter(tuple(sorted(p.block_sizes())) for p in enumerate_nc(n))
    return tuple(sorted(prof.items()))


def _profile_sum(profile, seq):
    total = _ZERO
    for sizes, c in profile:
        term = Fraction(c)
        for s in sizes:
            term = term * seq[s - 1]
            if not term:
                break
        total = total + term
    return total


def moments_to_cumulants(moments):
    """``k_n = sum_{pi in NC(n)} mu(pi, 1_n) prod_{V in pi} m_|V|`` for ``n = 1..N``."""
    m = [as_scalar(x) if not isinstance(x, (int, Fraction)) else Fraction(x) for x in moments]
    return tuple(_profile_sum(_moebius_profile(n), m) for n in range(1, len(m) + 1))


def cumulants_to_moments(cumulants):
    """``m_n = sum_{pi in NC(n)} prod_{V in pi} k_|V|`` for ``n = 1..N``."""
    k = [as_scalar(x) if not isinstance(x, (int, Fraction)) else Fraction(x) for x in cumulants]
    return tuple(_profile_sum(_count_profile(n), k) for n in range(1, len(k) + 1))


def scalar_mult_cumulants(kx, ky, n):
    """``k_n(xy, ..., xy)`` for free ``x``, ``y``: the sum over Kreweras pairs."""
    if n < 1:
        raise ValueError("n must be positive")
    if n > len(kx) or n > len(ky):
        raise WordTooLong(f"order {n} exceeds the given cumulant sequences")
    total = _ZERO
    for p in enumerate_nc(n):
        term = _ONE
        for b in p.blocks:
            term = term * kx[len(b) - 1]
            if not term:
                break
        if not term:
            continue
        for b in kreweras(p).blocks:
            term = term * ky[len(b) - 1]
            if not term:
                break
        total = total + term
    return total
