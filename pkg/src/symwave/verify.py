"""Independent certification of the wave-graph basis.

Three checks, none of which trusts the others:

* every t_G is killed by a basis of sp(2n) acting by the Leibniz rule;
* the number of graphs matches both the S-tris count and, where the size
  budget allows, the kernel dimension of the sp(2n) action on V^{(x)m}
  computed by exact integer elimination;
* ordering graphs by their lattice words, the coefficients of t_G on the
  monomials b_{alpha(G')} form an upper triangular matrix with nonzero
  diagonal, so the t_G are linearly independent.
"""

from __future__ import annotations

import math
import time
from dataclasses import asdict, dataclass, field
from itertools import product
from typing import Any, Iterable, Optional

from .errors import BudgetExceededError, InvalidInputError
from .graphs import enumerate_graphs, graph_to_word
from .partitions import invariant_dimension
from .tensors import Monomial, SparseTensor, build_invariant, minimal_monomial, word_monomial
from .words import word_key

DEFAULT_BUDGET = 5000


def _vector(idx: int, n: int) -> int:
    # basis order (p_1..p_n, q_1..q_n)
    return idx + 1 if idx < n else -(idx - n + 1)


@dataclass(frozen=True)
class LieGenerator:
    """A 2n x 2n integer matrix in sp(2n), acting on column vectors."""

    name: str
    matrix: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return len(self.matrix) // 2

    def images(self) -> dict[int, list[tuple[int, int]]]:
        """For each basis vector x, the nonzero terms of X x as (vector, coeff)."""
        n, size = self.n, len(self.matrix)
        out = {}
        for col in range(size):
            x = _vector(col, n)
            out[x] = [(_vector(row, n), self.matrix[row][col]) for row in range(size) if self.matrix[row][col]]
        return out


def _form(u: int, v: int, n: int) -> int:
    """omega(e_u, e_v) for basis indices u, v in (p_1..p_n, q_1..q_n) order."""
    if u < n <= v and v - n == u:
        return 1
    if v < n <= u and u - n == v:
        return -1
    return 0


def preserves_form(g: LieGenerator) -> bool:
    """omega(Xu, v) + omega(u, Xv) == 0 for all basis u, v."""
    n, size, x = g.n, len(g.matrix), g.matrix
    for u in range(size):
        for v in range(size):
            total = sum(x[a][u] * _form(a, v, n) for a in range(size))
            total += sum(x[b][v] * _form(u, b, n) for b in range(size))
            if total:
                return False
    return True


def sp_basis(n: int) -> list[LieGenerator]:
    """n(2n+1) generators of the block form [[A, B], [C, -A^T]], B and C symmetric."""
    if n < 1:
        raise InvalidInputError(f"rank must be positive, got {n}")
    size = 2 * n

    def make(name: str, entries: Iterable[tuple[int, int, int]]) -> LieGenerator:
        mat = [[0] * size for _ in range(size)]
        for r, c, v in entries:
            mat[r][c] += v
        return LieGenerator(name, tuple(tuple(row) for row in mat))

    gens = []
    for i in range(n):
        for j in range(n):
            gens.append(make(f"A{i + 1}{j + 1}", [(i, j, 1), (n + j, n + i, -1)]))
    for i in range(n):
        for j in range(i, n):
            sym = [(i, n + j, 1)] if i == j else [(i, n + j, 1), (j, n + i, 1)]
            gens.append(make(f"B{i + 1}{j + 1}", sym))
    for i in range(n):
        for j in range(i, n):
            sym = [(n + i, j, 1)] if i == j else [(n + i, j, 1), (n + j, i, 1)]
            gens.append(make(f"C{i + 1}{j + 1}", sym))
    return gens


def lie_act(gen: LieGenerator, t: SparseTensor) -> SparseTensor:
    """Sum over slots k of X applied to the k-th factor of t."""
    n = gen.n
    images = gen.images()
    out: dict[Monomial, int] = {}
    for mono, c in t.terms.items():
        for k, x in enumerate(mono):
            if x == 0 or abs(x) > n:
                raise InvalidInputError(f"monomial {mono} is not over a rank-{n} basis")
            for y, a in images[x]:
                new = mono[:k] + (y,) + mono[k + 1 :]
                out[new] = out.get(new, 0) + a * c
    return SparseTensor(t.m, out)


def is_invariant(t: SparseTensor, n: int, generators: Optional[list[LieGenerator]] = None) -> bool:
    gens = sp_basis(n) if generators is None else generators
    return all(not lie_act(g, t) for g in gens)


def integer_rank(rows: Iterable[dict[int, int]]) -> int:
    """Rank over Q of a sparse integer matrix given row by row.

    Rows are reduced against the pivots found so far using integer
    combinations only, then divided by their content to keep entries small.
    """
    pivots: dict[int, dict[int, int]] = {}
    for row in rows:
        row = {c: v for c, v in row.items() if v}
        while row:
            lead = min(row)
            piv = pivots.get(lead)
            if piv is None:
                pivots[lead] = row
                break
            a, b = piv[lead], row[lead]
            g = math.gcd(a, b)
            a, b = a // g, b // g
            new = {c: a * v for c, v in row.items()}
            for c, v in piv.items():
                new[c] = new.get(c, 0) - b * v
            row = {c: v for c, v in new.items() if v}
            if row:
                content = math.gcd(*row.values())
                if content > 1:
                    row = {c: v // content for c, v in row.items()}
    return len(pivots)


def coefficient_rank(tensors: list[SparseTensor]) -> int:
    """Exact rank of the span of ``tensors``."""
    cols: dict[Monomial, int] = {}
    return integer_rank({cols.setdefault(k, len(cols)): v for k, v in t.terms.items()} for t in tensors)


def _weight(mono: Monomial, n: int) -> tuple[int, ...]:
    w = [0] * n
    for x in mono:
        w[abs(x) - 1] += 1 if x > 0 else -1
    return tuple(w)


def brute_force_invariant_dim(m: int, n: int, budget: int = DEFAULT_BUDGET) -> int:
    """Dimension of the joint kernel of sp(2n) on V^{(x)m}.

    Each generator shifts weights by a fixed amount, so the kernel splits
    along weight spaces; each block is handled separately, columns being
    the images of its basis monomials under every generator.
    """
    if m < 0 or n < 1:
        raise InvalidInputError(f"need m >= 0 and n >= 1, got m={m}, n={n}")
    required = (2 * n) ** m
    if required > budget:
        raise BudgetExceededError(required, budget)
    gens = sp_basis(n)
    letters = [*range(1, n + 1), *range(-1, -n - 1, -1)]
    blocks: dict[tuple[int, ...], list[Monomial]] = {}
    for mono in product(letters, repeat=m):
        blocks.setdefault(_weight(mono, n), []).append(mono)
    dim = 0
    for cols in blocks.values():
        # transpose: rank of the (generator, image) x column matrix equals the
        # rank of its transpose, whose rows are indexed by columns
        row_index: dict[tuple[int, Monomial], int] = {}
        matrix_rows = []
        for mono in cols:
            vec = {}
            basis = SparseTensor.basis(*mono)
            for gi, g in enumerate(gens):
                for out, c in lie_act(g, basis).terms.items():
                    key = (gi, out)
                    vec[row_index.setdefault(key, len(row_index))] = c
            matrix_rows.append(vec)
        dim += len(cols) - integer_rank(matrix_rows)
    return dim


@dataclass
class CertificationReport:
    m: int
    n: int
    graph_count: int
    dp_count: int
    brute_force_dim: Optional[int] = None
    rank: Optional[int] = None
    all_invariant: bool = False
    minimal_monomials: bool = False
    triangular: bool = False
    diagonal_nonzero: bool = False
    verdict: str = "fail"
    timings: dict[str, float] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    def to_json(self) -> dict[str, Any]:
        return asdict(self)


def certify_basis(
    m: int,
    n: int,
    with_brute_force: bool = False,
    budget: int = DEFAULT_BUDGET,
    with_rank: bool = False,
) -> CertificationReport:
    """Run every check for one (m, n) and collect the outcome.

    ``with_rank`` also computes the exact rank of the full coefficient
    matrix of the t_G.  It is slower than the triangularity test but tells a
    failed certificate apart from a genuine linear dependence.
    """
    timings = {}
    clock = time.perf_counter()

    graphs = enumerate_graphs(m, n)
    dp = invariant_dimension(m, n)
    timings["enumerate"] = time.perf_counter() - clock

    clock = time.perf_counter()
    brute = brute_force_invariant_dim(m, n, budget) if with_brute_force else None
    timings["brute_force"] = time.perf_counter() - clock

    clock = time.perf_counter()
    rows = sorted(((graph_to_word(g, n), build_invariant(g, n)) for g in graphs), key=lambda r: word_key(r[0]))
    timings["build"] = time.perf_counter() - clock

    clock = time.perf_counter()
    gens = sp_basis(n)
    all_invariant = all(preserves_form(g) for g in gens) and all(is_invariant(t, n, gens) for _, t in rows)
    timings["invariance"] = time.perf_counter() - clock

    clock = time.perf_counter()
    columns = [word_monomial(w, n) for w, _ in rows]
    minimal = all(
        t and minimal_monomial(t)[0] == col and minimal_monomial(t)[1] > 0 for col, (_, t) in zip(columns, rows)
    )
    triangular = all(t.coefficient(columns[j]) == 0 for i, (_, t) in enumerate(rows) for j in range(i))
    diagonal = all(t.coefficient(col) != 0 for col, (_, t) in zip(columns, rows))
    timings["triangularity"] = time.perf_counter() - clock

    rank = None
    if with_rank:
        clock = time.perf_counter()
        rank = coefficient_rank([t for _, t in rows])
        timings["rank"] = time.perf_counter() - clock

    counts_agree = len(graphs) == dp and (brute is None or brute == dp)
    ok = counts_agree and all_invariant and minimal and triangular and diagonal
    ok = ok and (rank is None or rank == len(graphs))
    return CertificationReport(
        m=m,
        n=n,
        graph_count=len(graphs),
        dp_count=dp,
        brute_force_dim=brute,
        rank=rank,
        all_invariant=all_invariant,
        minimal_monomials=minimal,
        triangular=triangular,
        diagonal_nonzero=diagonal,
        verdict="pass" if ok else "fail",
        timings=timings,
    )
