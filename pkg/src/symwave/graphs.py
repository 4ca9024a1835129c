"""Symplectic wave graphs and their bijections with words and walks.

A wave graph on vertices 1..m is a disjoint union of paths drawn in a book
with n pages.  Each path visits its vertices in increasing order, its page
sequence starts and ends on page 1 and moves by one page at a time, and
edges sharing a page do not cross.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Iterable, Sequence

from .errors import InvalidInputError
from .words import Word, enumerate_balanced_words, is_balanced, is_symplectic_lattice_word


@dataclass(frozen=True, order=True)
class Edge:
    u: int
    v: int
    page: int


@dataclass(frozen=True)
class WaveGraph:
    m: int
    edges: tuple[Edge, ...]

    def __init__(self, m: int, edges: Iterable[Edge | tuple[int, int, int]]):
        es = []
        for e in edges:
            if not isinstance(e, Edge):
                e = Edge(*e)
            if e.u > e.v:
                e = Edge(e.v, e.u, e.page)
            es.append(e)
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "edges", tuple(sorted(es)))

    def to_json(self) -> dict[str, Any]:
        return {
            "m": self.m,
            "edges": [{"u": e.u, "v": e.v, "page": e.page} for e in self.edges],
        }

    @classmethod
    def from_json(cls, data: dict[str, Any]) -> "WaveGraph":
        return cls(data["m"], [(e["u"], e["v"], e["page"]) for e in data["edges"]])


Walk = tuple[int, ...]


def components(g: WaveGraph) -> list[tuple[list[int], list[int]]]:
    """Split into (vertices, pages) per component, ordered by smallest vertex.

    Vertices are listed in increasing order; ``pages[j]`` is the page of the
    edge joining ``vertices[j]`` and ``vertices[j + 1]``.  Assumes every
    component is a path traversed in increasing vertex order, which
    ``validate`` checks.
    """
    nxt: dict[int, Edge] = {}
    has_prev = set()
    for e in g.edges:
        if e.u in nxt or e.v in has_prev:
            raise InvalidInputError(f"vertex degree too large near edge {e}")
        nxt[e.u] = e
        has_prev.add(e.v)
    out = []
    for start in sorted(set(nxt) - has_prev):
        verts, pages = [start], []
        while verts[-1] in nxt:
            e = nxt[verts[-1]]
            verts.append(e.v)
            pages.append(e.page)
        out.append((verts, pages))
    return out


def validate(g: WaveGraph, n: int) -> bool:
    if g.m < 0:
        return False
    touched: dict[int, int] = {}
    for e in g.edges:
        if not (1 <= e.u < e.v <= g.m and 1 <= e.page <= n):
            return False
        touched[e.u] = touched.get(e.u, 0) + 1
        touched[e.v] = touched.get(e.v, 0) + 1
    if len(touched) != g.m or max(touched.values(), default=0) > 2:
        return False
    try:
        comps = components(g)
    except InvalidInputError:
        return False
    # a cycle or a non-monotone path leaves vertices outside every component
    if sum(len(v) for v, _ in comps) != g.m:
        return False
    for _, pages in comps:
        if pages[0] != 1 or pages[-1] != 1:
            return False
        if any(abs(a - b) != 1 for a, b in zip(pages, pages[1:])):
            return False
    by_page: dict[int, list[Edge]] = {}
    for e in g.edges:
        by_page.setdefault(e.page, []).append(e)
    for es in by_page.values():
        for i, e in enumerate(es):
            for f in es[i + 1 :]:
                a, b, c, d = e.u, e.v, f.u, f.v
                if a == c or not (c > b or d < b):
                    return False
    return True


def _require_valid(g: WaveGraph, n: int) -> None:
    if not validate(g, n):
        raise InvalidInputError(f"not a valid wave graph with {n} pages: {g}")


def graph_to_word(g: WaveGraph, n: int | None = None) -> Word:
    """Lattice word of a wave graph.

    Each vertex gets the largest page among its edges, signed + where the
    path climbs (or starts) and - where it descends (or ends).
    """
    if n is None:
        n = max((e.page for e in g.edges), default=1)
    _require_valid(g, n)
    word = [0] * (g.m + 1)
    for verts, pages in components(g):
        word[verts[0]] = 1
        word[verts[-1]] = -1
        for j in range(1, len(verts) - 1):
            before, after = pages[j - 1], pages[j]
            word[verts[j]] = after if after > before else -before
    return tuple(word[1:])


def word_to_graph(w: Sequence[int], n: int) -> WaveGraph:
    """Inverse of graph_to_word: bracket-match each page separately.

    On page k, letters k and -(k+1) open a bracket, letters -k and k+1
    close one; matched pairs become page-k edges.
    """
    w = tuple(w)
    if not (is_symplectic_lattice_word(w, n) and is_balanced(w)):
        raise InvalidInputError(f"{w} is not a balanced symplectic lattice word over C_{n}")
    edges = []
    for k in range(1, n + 1):
        stack = []
        for pos, x in enumerate(w, start=1):
            if x == k or x == -(k + 1):
                stack.append(pos)
            elif x == -k or x == k + 1:
                edges.append(Edge(stack.pop(), pos, k))
    g = WaveGraph(len(w), edges)
    _require_valid(g, n)
    return g


def enumerate_graphs(m: int, n: int) -> list[WaveGraph]:
    return [word_to_graph(w, n) for w in enumerate_balanced_words(m, n)]


def is_connected(g: WaveGraph) -> bool:
    return g.m >= 2 and len(components(g)) == 1


def graph_to_walk(g: WaveGraph) -> Walk:
    """Page sequence of a connected graph, read edge by edge."""
    n = max((e.page for e in g.edges), default=1)
    _require_valid(g, n)
    if not is_connected(g):
        raise InvalidInputError(f"graph is not connected: {g}")
    return tuple(e.page for e in g.edges)


def is_walk(walk: Sequence[int], n: int | None = None) -> bool:
    if not walk or walk[0] != 1 or walk[-1] != 1:
        return False
    if any(abs(a - b) != 1 for a, b in zip(walk, walk[1:])):
        return False
    return n is None or max(walk) <= n


def walk_to_graph(walk: Sequence[int], n: int | None = None) -> WaveGraph:
    """Connected graph on len(walk) + 1 vertices whose k-th edge is on page walk[k]."""
    if not is_walk(walk, n):
        raise InvalidInputError(f"not a walk from page 1 to page 1: {tuple(walk)}")
    return WaveGraph(len(walk) + 1, [(k, k + 1, p) for k, p in enumerate(walk, start=1)])


def count_connected(m: int, n: int) -> int:
    """(1, 1) entry of A**(m - 2) for the adjacency matrix A of the n-vertex path."""
    if m < 2:
        raise InvalidInputError(f"a connected wave graph needs at least 2 vertices, got {m}")
    if n < 1:
        raise InvalidInputError(f"page count must be positive, got {n}")
    adj = [[1 if abs(i - j) == 1 else 0 for j in range(n)] for i in range(n)]
    return _matpow(adj, m - 2)[0][0]


def _matmul(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    cols = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in cols] for row in a]


def _matpow(a: list[list[int]], e: int) -> list[list[int]]:
    size = len(a)
    result = [[int(i == j) for j in range(size)] for i in range(size)]
    while e:
        if e & 1:
            result = _matmul(result, a)
        a = _matmul(a, a)
        e >>= 1
    return result
