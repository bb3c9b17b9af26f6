"""The lattice NC(n) of noncrossing partitions.

Partitions are stored canonically: blocks sorted by least element, points
inside a block ascending, points numbered ``1..n``.  Enumeration follows the
"block of 1" decomposition, so no crossing partition is ever generated and
filtered away.

The refinement order is encoded with a bitmask over the ``n(n-1)/2`` pairs
``{i, j}``: ``p <= q`` exactly when the pairs joined by ``p`` are a subset of
the pairs joined by ``q``.  Both the zeta and the Moebius function are defined
through that test.
"""

import itertools
import os
from fractions import Fraction
from functools import cached_property, lru_cache
from math import comb

from .errors import SizeExceedsCap, SizeMismatch

__all__ = [
    "DEFAULT_NC_CAP",
    "SetPartition",
    "NoncrossingPartition",
    "nc_cap",
    "parse_partition",
    "format_partition",
    "enumerate_nc",
    "catalan",
    "bottom",
    "top",
    "refinement_leq",
    "zeta",
    "moebius",
    "moebius_to_top",
    "kreweras",
    "alt_union",
    "is_noncrossing_blocks",
]

DEFAULT_NC_CAP = 14


def nc_cap():
    """Active size cap for NC(n); ``GFP_NC_CAP`` overrides the default."""
    raw = os.environ.get("GFP_NC_CAP")
    if raw is None or raw.strip() == "":
        return DEFAULT_NC_CAP
    return int(raw)


def _pair_bit(i, j):
    # 1-based points, i < j
    return 1 << ((j - 1) * (j - 2) // 2 + (i - 1))


def is_noncrossing_blocks(n, blocks):
    """Linear-time noncrossing test on a canonical block list.

    Scans the points left to right with a stack of open blocks; a point may
    only continue the innermost open block.
    """
    label = [0] * (n + 1)
    last = {}
    for b, block in enumerate(blocks):
        for x in block:
            label[x] = b
        last[b] = block[-1]
    stack = []
    for x in range(1, n + 1):
        b = label[x]
        if stack and stack[-1] == b:
            pass
        elif b in stack:
            return False
        else:
            stack.append(b)
        if last[b] == x:
            stack.pop()
    return True


class SetPartition:
    """A partition of ``{1, ..., n}``, stored canonically.

    Hashable and immutable; equality is structural.
    """

    __slots__ = ("n", "blocks", "__dict__")

    def __init__(self, n, blocks):
        n = int(n)
        if n < 1:
            raise ValueError("a partition needs n >= 1")
        canon = tuple(sorted((tuple(sorted(int(x) for x in b)) for b in blocks),
                             key=lambda b: b[0] if b else 0))
        seen = set()
        for b in canon:
            if not b:
                raise ValueError("empty block")
            for x in b:
                if x < 1 or x > n:
                    raise ValueError(f"point {x} outside 1..{n}")
                if x in seen:
                    raise ValueError(f"point {x} appears in two blocks")
                seen.add(x)
        if len(seen) != n:
            missing = sorted(set(range(1, n + 1)) - seen)
            raise ValueError(f"blocks do not cover points {missing}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "blocks", canon)
        self._check()

    def _check(self):
        pass

    @classmethod
    def _trusted(cls, n, blocks):
        self = object.__new__(cls)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "blocks", blocks)
        return self

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    def __eq__(self, other):
        if isinstance(other, SetPartition):
            return self.n == other.n and self.blocks == other.blocks
        return NotImplemented

    def __hash__(self):
        return hash((self.n, self.blocks))

    def __lt__(self, other):
        return (self.n, self.blocks) < (other.n, other.blocks)

    def __len__(self):
        return len(self.blocks)

    def __iter__(self):
        return iter(self.blocks)

    def __repr__(self):
        return f"{type(self).__name__}({self.n}, {format_partition(self)!r})"

    def __str__(self):
        return "{" + ",".join("(" + ",".join(map(str, b)) + ")" for b in self.blocks) + "}"

    @cached_property
    def labels(self):
        """``labels[i]`` is the index of the block containing point ``i`` (1-based; slot 0 unused)."""
        lab = [0] * (self.n + 1)
        for k, b in enumerate(self.blocks):
            for x in b:
                lab[x] = k
        return tuple(lab)

    @cached_property
    def mask(self):
        m = 0
        for b in self.blocks:
            for i, j in itertools.combinations(b, 2):
                m |= _pair_bit(i, j)
        return m

    def block_sizes(self):
        return tuple(len(b) for b in self.blocks)

    def is_noncrossing(self):
        return is_noncrossing_blocks(self.n, self.blocks)


class NoncrossingPartition(SetPartition):
    """An element of NC(n)."""

    __slots__ = ()

    def _check(self):
        if not is_noncrossing_blocks(self.n, self.blocks):
            raise ValueError(f"partition {self} is crossing")


def parse_partition(text, n=None):
    """Parse the ``"1,4,5|2,3|6,8|7"`` syntax.

    ``n`` defaults to the largest point mentioned.  Returns a
    :class:`NoncrossingPartition` when possible, else a :class:`SetPartition`.
    """
    blocks = []
    for chunk in text.strip().split("|"):
        chunk = chunk.strip()
        if not chunk:
            raise ValueError(f"empty block in {text!r}")
        blocks.append(tuple(int(x) for x in chunk.split(",")))
    if n is None:
        n = max(max(b) for b in blocks)
    part = SetPartition(n, blocks)
    if part.is_noncrossing():
        return NoncrossingPartition._trusted(part.n, part.blocks)
    return part


def format_partition(p):
    return "|".join(",".join(map(str, b)) for b in p.blocks)


def catalan(n):
    c = 1
    for k in range(n):
        c = c * 2 * (2 * k + 1) // (k + 2)
    return c


def bottom(n):
    return NoncrossingPartition._trusted(n, tuple((i,) for i in range(1, n + 1)))


def top(n):
    return NoncrossingPartition._trusted(n, (tuple(range(1, n + 1)),))


@lru_cache(maxsize=None)
def _nc_offsets(m):
    """Noncrossing partitions of ``range(m)`` as lists of 0-based blocks."""
    if m == 0:
        return ((),)
    out = []
    rest = range(1, m)
    for k in range(m):
        for others in itertools.combinations(rest, k):
            block = (0,) + others
            bounds = block + (m,)
            gaps = []
            for a, b in zip(bounds, bounds[1:]):
                if b - a > 1:
                    gaps.append((a + 1, b - a - 1))
            pools = [[tuple(tuple(x + start for x in blk) for blk in part)
                      for part in _nc_offsets(size)]
                     for start, size in gaps]
            for combo in itertools.product(*pools):
                blocks = [block]
                for part in combo:
                    blocks.extend(part)
                blocks.sort()
                out.append(tuple(blocks))
    return tuple(out)


@lru_cache(maxsize=None)
def _enumerate(n):
    raw = sorted(tuple(tuple(x + 1 for x in b) for b in part) for part in _nc_offsets(n))
    return tuple(NoncrossingPartition._trusted(n, blocks) for blocks in raw)


def enumerate_nc(n, cap=None):
    """All of NC(n), lexicographically ordered by canonical block list."""
    if cap is None:
        cap = nc_cap()
    if n < 1:
        raise ValueError("n must be positive")
    if n > cap:
        raise SizeExceedsCap(f"n={n} exceeds the NC size cap {cap}")
    return _enumerate(n)


def _same_size(p, q):
    if p.n != q.n:
        raise SizeMismatch(f"partitions of different sizes: {p.n} and {q.n}")


def refinement_leq(p, q):
    """True iff every block of ``p`` lies inside a block of ``q``."""
    _same_size(p, q)
    return p.mask & ~q.mask == 0


def zeta(p, q):
    return Fraction(1) if refinement_leq(p, q) else Fraction(0)


@lru_cache(maxsize=None)
def _masks(n):
    return tuple(p.mask for p in _enumerate(n))


_MOEBIUS_MEMO = {}


def moebius(p, q):
    """Moebius function of the interval ``[p, q]`` in NC(n); 0 when ``p`` is not below ``q``.

    Evaluated with the recursion ``mu(p, p) = 1``,
    ``sum_{p <= t <= q} mu(p, t) = 0`` and memoised on ``(n, p, q)``.
    """
    _same_size(p, q)
    if not refinement_leq(p, q):
        return Fraction(0)
    return Fraction(_moebius_rec(p, q))


def _moebius_rec(p, q):
    key = (p.n, p.blocks, q.blocks)
    hit = _MOEBIUS_MEMO.get(key)
    if hit is not None:
        return hit
    if p == q:
        val = 1
    else:
        pm, qm = p.mask, q.mask
        val = 0
        for t, tm in zip(_enumerate(p.n), _masks(p.n)):
            if tm != qm and pm & ~tm == 0 and tm & ~qm == 0:
                val -= _moebius_rec(p, t)
    _MOEBIUS_MEMO[key] = val
    return val


@lru_cache(maxsize=None)
def _moebius_bottom_top(n):
    """``mu(0_k, 1_k)`` for ``k = 0..n`` (index 0 unused).

    Every interval ``[sigma, 1_k]`` factors over the blocks of ``Kr(sigma)``
    and ``Kr`` permutes NC(k), so ``sum_{tau in NC(k)} prod_{V in tau} m_|V|``
    vanishes for ``k >= 2``.  Splitting off the block of 1 (size ``s``) leaves
    ``s`` gaps, each of which must hold 0 or 1 points once the smaller sums
    are known to vanish, hence ``m_k = -sum_{s<k} m_s * C(s, k-s)``.
    """
    m = [0, 1]
    for k in range(2, n + 1):
        m.append(-sum(m[s] * comb(s, k - s) for s in range(1, k)))
    return tuple(m)


@lru_cache(maxsize=None)
def moebius_to_top(n):
    """``mu(pi, 1_n)`` for every ``pi`` in ``enumerate_nc(n)``, as a tuple of ints.

    The interval ``[pi, 1_n]`` is isomorphic to ``[0_n, Kr(pi)]``, a product of
    full lattices NC(|V|) over the blocks ``V`` of ``Kr(pi)``, so the value is
    the product of the corresponding bottom-to-top values.
    """
    parts = enumerate_nc(n)
    m = _moebius_bottom_top(n)
    out = []
    for p in parts:
        val = 1
        for b in kreweras(p).blocks:
            val *= m[len(b)]
        out.append(val)
    return tuple(out)


def kreweras(p):
    """Kreweras complement of ``p``.

    Computed as the permutation ``p^{-1} o gamma`` with ``gamma = (1 2 ... n)``
    and the blocks of ``p`` read as increasing cycles.
    """
    n = p.n
    inv = [0] * (n + 1)
    for b in p.blocks:
        for k, x in enumerate(b):
            inv[b[(k + 1) % len(b)]] = x
    perm = [0] * (n + 1)
    for i in range(1, n + 1):
        perm[i] = inv[i % n + 1]
    seen = [False] * (n + 1)
    blocks = []
    for i in range(1, n + 1):
        if seen[i]:
            continue
        cyc = []
        j = i
        while not seen[j]:
            seen[j] = True
            cyc.append(j)
            j = perm[j]
        blocks.append(tuple(sorted(cyc)))
    blocks.sort()
    return NoncrossingPartition._trusted(n, tuple(blocks))


def alt_union(p, q):
    """Interleave ``p`` on the odd points and ``q`` on the even points of ``1..2n``."""
    _same_size(p, q)
    blocks = [tuple(2 * x - 1 for x in b) for b in p.blocks]
    blocks += [tuple(2 * x for x in b) for b in q.blocks]
    blocks.sort()
    n2 = 2 * p.n
    if is_noncrossing_blocks(n2, tuple(blocks)):
        return NoncrossingPartition._trusted(n2, tuple(blocks))
    return SetPartition._trusted(n2, tuple(blocks))
