"""Finite simplicial graphs and their free semigroupoid.

A path word is stored as its vertex sequence in the orientation that sorts
first, so ``[v1, ..., vk]`` and ``[vk, ..., v1]`` are the same object.  Vertex
ids are opaque strings.  Numeric ids sort by length and then lexically (so
``"2" < "10"``), and they come before non-numeric ids.
"""

from dataclasses import dataclass

from .errors import (DanglingEndpoint, DuplicateVertexId, LoopEdge,
                     NotAdmissible, UnknownVertex)

__all__ = [
    "SIMPLE",
    "WALK",
    "SimplicialGraph",
    "PathWord",
    "vertex_key",
    "validate_graph",
    "is_admissible",
    "canonicalize",
    "enumerate_semigroupoid",
    "concat",
    "disjoint",
    "path_graph",
    "complete_graph",
    "parse_word",
]

SIMPLE = "simple"
WALK = "walk"
_MODES = (SIMPLE, WALK)


def vertex_key(v):
    v = str(v)
    if v.isdigit():
        return (0, len(v), v)
    return (1, 0, v)


def _seq_key(seq):
    return tuple(vertex_key(v) for v in seq)


class SimplicialGraph:
    """Undirected graph without loops or multiple edges.

    The constructor records what it is given; :func:`validate_graph` (called
    by default) enforces the invariants.
    """

    def __init__(self, vertices, edges, validate=True):
        self.raw_vertices = tuple(str(v) for v in vertices)
        self.raw_edges = tuple(tuple(str(x) for x in e) for e in edges)
        self.vertices = tuple(sorted(set(self.raw_vertices), key=vertex_key))
        self.edges = frozenset(frozenset(e) for e in self.raw_edges)
        self._adj = {v: set() for v in self.vertices}
        for e in self.raw_edges:
            if len(e) == 2 and e[0] != e[1] and e[0] in self._adj and e[1] in self._adj:
                self._adj[e[0]].add(e[1])
                self._adj[e[1]].add(e[0])
        if validate:
            validate_graph(self)

    def __repr__(self):
        edges = sorted((tuple(sorted(e, key=vertex_key)) for e in self.edges),
                       key=_seq_key)
        return f"SimplicialGraph({list(self.vertices)}, {edges})"

    def __eq__(self, other):
        if not isinstance(other, SimplicialGraph):
            return NotImplemented
        return self.vertices == other.vertices and self.edges == other.edges

    def __hash__(self):
        return hash((self.vertices, self.edges))

    def neighbours(self, v):
        return sorted(self._adj[v], key=vertex_key)

    def adjacent(self, u, v):
        return v in self._adj.get(u, ())

    def sorted_edges(self):
        return sorted((tuple(sorted(e, key=vertex_key)) for e in self.edges), key=_seq_key)


def validate_graph(g):
    seen = set()
    for v in g.raw_vertices:
        if v in seen:
            raise DuplicateVertexId(f"vertex {v!r} declared twice")
        seen.add(v)
    for e in g.raw_edges:
        if len(e) != 2:
            raise DanglingEndpoint(f"edge {list(e)} does not have two endpoints")
        a, b = e
        if a == b:
            raise LoopEdge(f"loop edge at vertex {a!r}")
        for x in e:
            if x not in seen:
                raise DanglingEndpoint(f"edge {list(e)} uses undeclared vertex {x!r}")


@dataclass(frozen=True)
class PathWord:
    """An element of the free semigroupoid: a vertex or an admissible path.

    Always build through :func:`canonicalize` (or :func:`enumerate_semigroupoid`)
    so that the reversal identification holds.
    """

    vertices: tuple

    def __len__(self):
        return len(self.vertices) - 1

    @property
    def length(self):
        return len(self.vertices) - 1

    def vertex_set(self):
        return frozenset(self.vertices)

    def multiplicity(self, v):
        return self.vertices.count(v)

    def sort_key(self):
        return (len(self.vertices), _seq_key(self.vertices))

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __str__(self):
        return "[" + ",".join(self.vertices) + "]"

    def __repr__(self):
        return f"PathWord({str(self)})"


def _orient(seq):
    rev = tuple(reversed(seq))
    return seq if _seq_key(seq) <= _seq_key(rev) else rev


def is_admissible(g, seq, mode=SIMPLE):
    seq = tuple(str(v) for v in seq)
    if not seq:
        raise ValueError("empty vertex sequence")
    for v in seq:
        if v not in g._adj:
            raise UnknownVertex(f"unknown vertex {v!r}")
    if mode not in _MODES:
        raise ValueError(f"unknown mode {mode!r}")
    if mode == SIMPLE and len(set(seq)) != len(seq):
        return False
    return all(g.adjacent(a, b) for a, b in zip(seq, seq[1:]))


def canonicalize(g, seq, mode=SIMPLE):
    """The :class:`PathWord` for ``seq``, in its preferred orientation."""
    seq = tuple(str(v) for v in seq)
    if not is_admissible(g, seq, mode):
        raise NotAdmissible(f"{list(seq)} is not an admissible {mode} path")
    return PathWord(_orient(seq))


def parse_word(g, text, mode=SIMPLE):
    """Parse ``"1,2,3"`` (brackets optional) into a canonical word."""
    text = text.strip()
    if text.startswith("[") and text.endswith("]"):
        text = text[1:-1]
    return canonicalize(g, [x.strip() for x in text.split(",")], mode)


def enumerate_semigroupoid(g, max_len=None, mode=SIMPLE):
    """All words of length ``0..max_len``, deduplicated, ordered by (length, vertices).

    ``max_len=None`` means no bound; only allowed for simple paths.
    """
    if mode not in _MODES:
        raise ValueError(f"unknown mode {mode!r}")
    if mode == WALK and max_len is None:
        raise ValueError("walk mode needs a finite max_len")
    if max_len is not None and max_len < 0:
        raise ValueError("max_len must be nonnegative")
    found = set()

    def extend(path, used):
        found.add(_orient(path))
        if max_len is not None and len(path) - 1 >= max_len:
            return
        for u in g.neighbours(path[-1]):
            if mode == SIMPLE and u in used:
                continue
            extend(path + (u,), used | {u})

    for v in g.vertices:
        extend((v,), {v})
    return sorted((PathWord(seq) for seq in found), key=PathWord.sort_key)


def concat(g, w1, w2, mode=SIMPLE):
    """Join two words at a shared endpoint, or ``None`` when no admissible join exists.

    Every orientation pair whose end/start vertices agree is tried; the
    smallest admissible result is returned, so the answer is deterministic.
    """
    candidates = []
    for a in {w1.vertices, tuple(reversed(w1.vertices))}:
        for b in {w2.vertices, tuple(reversed(w2.vertices))}:
            if a[-1] == b[0]:
                seq = a + b[1:]
                if is_admissible(g, seq, mode):
                    candidates.append(PathWord(_orient(seq)))
    if not candidates:
        return None
    return min(candidates, key=PathWord.sort_key)


def disjoint(w1, w2):
    return not (set(w1.vertices) & set(w2.vertices))


def path_graph(n):
    """``1 - 2 - ... - n``."""
    vs = [str(i) for i in range(1, n + 1)]
    return SimplicialGraph(vs, list(zip(vs, vs[1:])))


def complete_graph(n):
    vs = [str(i) for i in range(1, n + 1)]
    return SimplicialGraph(vs, [(a, b) for i, a in enumerate(vs) for b in vs[i + 1:]])
