"""Exact sparse tensors on V^{(x)m} and the invariants t_G.

V has basis p_1..p_n, q_1..q_n.  A basis vector is encoded as a signed
integer (``+i`` for p_i, ``-i`` for q_i), so a monomial is a tuple of
signed integers and a lattice word *is* its own monomial.  Monomials are
compared with ``words.word_key``, which realises the order

    p_1 < ... < p_n < q_n < ... < q_1.

Permutation convention: ``permute(t, sigma)`` moves the factor in slot k to
slot sigma(k).  With cycle notation read as a -> b -> c, this reproduces
the invariants listed for the 6-vertex figures, e.g. the three nested and
adjacent chords {1,6}, {2,3}, {4,5} give (w (x) w (x) w)^(2 6 5 4 3).
"""

from __future__ import annotations

import re
from functools import lru_cache
from itertools import combinations
from typing import Any, Iterable, Mapping, Sequence

from .errors import EmptyTensorError, InvalidInputError
from .graphs import WaveGraph, components, graph_to_word, validate, word_to_graph
from .words import Word, word_key

Monomial = tuple[int, ...]


def basis_name(x: int) -> str:
    return f"p{x}" if x > 0 else f"q{-x}"


_BASIS_RE = re.compile(r"^([pq])([1-9][0-9]*)$")


def parse_basis(name: str) -> int:
    match = _BASIS_RE.match(name)
    if not match:
        raise InvalidInputError(f"bad basis vector name {name!r}")
    i = int(match.group(2))
    return i if match.group(1) == "p" else -i


class SparseTensor:
    """Integer linear combination of monomials of a fixed degree.

    Zero coefficients are never stored.  Instances are treated as immutable.
    """

    __slots__ = ("m", "terms")

    def __init__(self, m: int, terms: Mapping[Monomial, int] | Iterable[tuple[Monomial, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[Monomial, int] = {}
        for mono, c in items:
            mono = tuple(mono)
            if len(mono) != m:
                raise InvalidInputError(f"monomial {mono} does not have degree {m}")
            clean[mono] = clean.get(mono, 0) + c
        self.m = m
        self.terms = {k: v for k, v in clean.items() if v}

    @classmethod
    def _raw(cls, m: int, terms: dict[Monomial, int]) -> "SparseTensor":
        t = cls.__new__(cls)
        t.m = m
        t.terms = {k: v for k, v in terms.items() if v}
        return t

    @classmethod
    def basis(cls, *factors: int) -> "SparseTensor":
        return cls._raw(len(factors), {tuple(factors): 1})

    def __repr__(self) -> str:
        if not self.terms:
            return f"SparseTensor({self.m}, 0)"
        body = " + ".join(
            f"{c}*{'(x)'.join(basis_name(x) for x in mono) or '1'}" for mono, c in self.sorted_terms()
        )
        return f"SparseTensor({self.m}, {body})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SparseTensor):
            return NotImplemented
        return self.m == other.m and self.terms == other.terms

    __hash__ = None  # type: ignore[assignment]

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def coefficient(self, mono: Sequence[int]) -> int:
        return self.terms.get(tuple(mono), 0)

    def sorted_terms(self) -> list[tuple[Monomial, int]]:
        return sorted(self.terms.items(), key=lambda kv: word_key(kv[0]))

    def _check_degree(self, other: "SparseTensor") -> None:
        if self.m != other.m:
            raise InvalidInputError(f"degree mismatch: {self.m} vs {other.m}")

    def __add__(self, other: "SparseTensor") -> "SparseTensor":
        self._check_degree(other)
        out = dict(self.terms)
        for mono, c in other.terms.items():
            out[mono] = out.get(mono, 0) + c
        return SparseTensor._raw(self.m, out)

    def __neg__(self) -> "SparseTensor":
        return SparseTensor._raw(self.m, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other: "SparseTensor") -> "SparseTensor":
        return self + (-other)

    def __mul__(self, scalar: int) -> "SparseTensor":
        return SparseTensor._raw(self.m, {k: scalar * v for k, v in self.terms.items()})

    __rmul__ = __mul__

    def to_json(self, n: int) -> dict[str, Any]:
        return {
            "m": self.m,
            "n": n,
            "terms": [
                {"monomial": [basis_name(x) for x in mono], "coeff": str(c)}
                for mono, c in self.sorted_terms()
            ],
        }

    @classmethod
    def from_json(cls, data: dict[str, Any]) -> "SparseTensor":
        return cls(
            data["m"],
            [(tuple(parse_basis(s) for s in t["monomial"]), int(t["coeff"])) for t in data["terms"]],
        )


def zero(m: int) -> SparseTensor:
    return SparseTensor._raw(m, {})


def tensor(a: SparseTensor, b: SparseTensor) -> SparseTensor:
    """Plain tensor product a (x) b, factors of a first."""
    return SparseTensor._raw(
        a.m + b.m, {ma + mb: ca * cb for ma, ca in a.terms.items() for mb, cb in b.terms.items()}
    )


def _check_permutation(sigma: Sequence[int], m: int) -> None:
    if len(sigma) != m or sorted(sigma) != list(range(1, m + 1)):
        raise InvalidInputError(f"{tuple(sigma)} is not a permutation of 1..{m}")


def permute(t: SparseTensor, sigma: Sequence[int]) -> SparseTensor:
    """t^sigma: the factor in slot k (1-based) moves to slot sigma[k-1]."""
    _check_permutation(sigma, t.m)
    src = [0] * t.m
    for k, dest in enumerate(sigma):
        src[dest - 1] = k
    return SparseTensor._raw(t.m, {tuple([mono[i] for i in src]): c for mono, c in t.terms.items()})


def cycles_to_permutation(cycles: Iterable[Sequence[int]], m: int) -> tuple[int, ...]:
    """Images of 1..m for a product of disjoint cycles, each read a -> b -> ..."""
    images = list(range(1, m + 1))
    for cyc in cycles:
        for a, b in zip(cyc, [*cyc[1:], cyc[0]]):
            images[a - 1] = b
    _check_permutation(images, m)
    return tuple(images)


@lru_cache(maxsize=256)
def _shuffles(k: int, m: int) -> list[tuple[int, tuple[int, ...]]]:
    """(sign, source-index map) for every placement of k slots among m."""
    out = []
    for chosen in combinations(range(m), k):
        sign = -1 if (sum(chosen) - k * (k - 1) // 2) % 2 else 1
        rest = [i for i in range(m) if i not in chosen]
        src = [0] * m
        for j, pos in enumerate(chosen):
            src[pos] = j
        for j, pos in enumerate(rest):
            src[pos] = k + j
        out.append((sign, tuple(src)))
    return out


def wedge(a: SparseTensor, b: SparseTensor) -> SparseTensor:
    """Signed shuffle product.

    Sum over slot sets i_1 < ... < i_k of (-1)^{sum(i_j - j)} times a (x) b
    with the factors of a moved to those slots and the factors of b filling
    the remaining slots in order.
    """
    k, m = a.m, a.m + b.m
    out: dict[Monomial, int] = {}
    for sign, src in _shuffles(k, m):
        for ma, ca in a.terms.items():
            for mb, cb in b.terms.items():
                both = ma + mb
                mono = tuple([both[i] for i in src])
                out[mono] = out.get(mono, 0) + sign * ca * cb
    return SparseTensor._raw(m, out)


def omega(n: int) -> SparseTensor:
    """The symplectic form sum_i (p_i (x) q_i - q_i (x) p_i)."""
    if n < 1:
        raise InvalidInputError(f"rank must be positive, got {n}")
    terms = {}
    for i in range(1, n + 1):
        terms[(i, -i)] = 1
        terms[(-i, i)] = -1
    return SparseTensor._raw(2, terms)


def word_monomial(w: Sequence[int], n: int) -> Monomial:
    """Letter +i becomes p_i, letter -i becomes q_i."""
    w = tuple(w)
    bad = [x for x in w if x == 0 or abs(x) > n]
    if bad:
        raise InvalidInputError(f"letter {bad[0]} is outside C_{n}")
    return w


def minimal_monomial(t: SparseTensor) -> tuple[Monomial, int]:
    if not t.terms:
        raise EmptyTensorError("the zero tensor has no minimal monomial")
    mono = min(t.terms, key=word_key)
    return mono, t.terms[mono]


def _reindex(verts: list[int], pages: list[int]) -> WaveGraph:
    pos = {v: i for i, v in enumerate(verts, start=1)}
    return WaveGraph(len(verts), [(pos[a], pos[b], p) for a, b, p in zip(verts, verts[1:], pages)])


def _shift_down(w: Word) -> Word:
    return tuple(x - 1 if x > 0 else x + 1 for x in w)


def build_invariant(g: WaveGraph, n: int) -> SparseTensor:
    """The invariant tensor t_G attached to a wave graph.

    A single chord gives omega.  A disconnected graph is split into the
    component through vertex 1 and the rest; the two tensors are multiplied
    and their factors sent back to the original vertex positions.  A path
    with word 1 beta -1 gives omega ^ t_B, where B is the graph of beta with
    every letter moved one page down.
    """
    if not validate(g, n):
        raise InvalidInputError(f"not a valid wave graph with {n} pages: {g}")
    return _build(g, n)


@lru_cache(maxsize=4096)
def _build(g: WaveGraph, n: int) -> SparseTensor:
    if g.m == 0:
        return SparseTensor._raw(0, {(): 1})
    comps = components(g)
    if len(comps) > 1:
        first, rest = comps[0], comps[1:]
        rest_verts = sorted(v for verts, _ in rest for v in verts)
        pos = {v: i for i, v in enumerate(rest_verts, start=1)}
        rest_graph = WaveGraph(
            len(rest_verts),
            [(pos[e.u], pos[e.v], e.page) for e in g.edges if e.u in pos],
        )
        t = tensor(_build(_reindex(*first), n), _build(rest_graph, n))
        return permute(t, first[0] + rest_verts)
    if g.m == 2:
        return omega(n)
    inner = _shift_down(graph_to_word(g, n)[1:-1])
    return wedge(omega(n), _build(word_to_graph(inner, n), n))
