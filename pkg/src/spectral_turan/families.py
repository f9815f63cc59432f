"""Turan graphs, their closed-form invariants, and the extremal family.

All edge counts and part sizes are exact integers; floating point enters
only through eigenvalue-like quantities.  turan_params cross-checks every
derived quantity at construction time (three edge formulas, the secular
identity, the quadratic for the spectral radius, and the mean-degree gap
formula), so downstream code can rely on the fields blindly.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, NamedTuple

from .graphs import Graph, is_isomorphic, iter_bits, regular_degree


@dataclass(frozen=True)
class TuranParams:
    """Derived quantities of the balanced complete multipartite graph.

    n = r*a + b with 0 <= b < r; p and q are the numbers of vertices in
    large and small parts; m0 counts non-edges; lam0 is the spectral
    radius; L, M are the coefficients of its quadratic x^2 - L x - M = 0;
    C = r*a*(a+1); d_T is the average degree, d0 = d_T - 2/n, and
    delta = lam0 - d_T.
    """

    n: int
    r: int
    a: int
    b: int
    p: int
    q: int
    m0: int
    e0: int
    lam0: float
    L: int
    M: int
    C: int
    d_T: float
    d0: float
    delta: float


class TuranParamError(ValueError):
    pass


@lru_cache(maxsize=None)
def turan_params(n: int, r: int) -> TuranParams:
    """All derived invariants for the n-vertex balanced r-partite graph.

    Requires n >= r >= 1 so no part is empty (a >= 1).  r = 1 degenerates
    to the edgeless graph with lam0 = 0.
    """
    if r < 1:
        raise TuranParamError(f"r must be at least 1, got {r}")
    if n < r:
        raise TuranParamError(f"need n >= r so every part is nonempty (n={n}, r={r})")
    a, b = divmod(n, r)
    p = b * (a + 1)
    q = (r - b) * a
    m0 = b * math.comb(a + 1, 2) + (r - b) * math.comb(a, 2)
    twice = p * a + q * (a - 1)
    if twice != 2 * m0:
        raise TuranParamError("non-edge count formulas disagree")
    e0 = math.comb(n, 2) - m0

    # closed form ((r-1) n^2 - b (r - b)) / (2 r) must divide exactly
    num = (r - 1) * n * n - b * (r - b)
    e0_closed, rem = divmod(num, 2 * r)
    e0_parts = (n * n - b * (a + 1) ** 2 - (r - b) * a * a) // 2
    if rem != 0 or e0_closed != e0 or e0_parts != e0:
        raise TuranParamError("edge count formulas disagree")

    L = n - 2 * a - 1
    M = a * (a + 1) * (r - 1)
    C = r * a * (a + 1)
    if b == 0:
        lam0 = float((r - 1) * a)
    else:
        lam0 = (L + math.sqrt(L * L + 4.0 * M)) / 2.0

    secular = (p / (lam0 + a + 1) if p else 0.0) + q / (lam0 + a) - 1.0
    if abs(secular) > 1e-10:
        raise TuranParamError("secular identity violated")
    if abs(lam0 * lam0 - L * lam0 - M) > 1e-8 * (1.0 + lam0 * lam0):
        raise TuranParamError("quadratic identity violated")

    d_T = 2.0 * e0 / n
    d0 = d_T - 2.0 / n
    delta = lam0 - d_T
    delta_formula = a * (a + 1) * b * (r - b) / (n * n * (lam0 + C / n))
    if abs(delta - delta_formula) > 1e-8:
        raise TuranParamError("mean-degree gap formula violated")
    if delta < -1e-12 or (b == 0 and abs(delta) > 1e-12) or (b > 0 and delta <= 0):
        raise TuranParamError("gap sign violated")
    return TuranParams(n, r, a, b, p, q, m0, e0, lam0, L, M, C, d_T, d0, delta)


@lru_cache(maxsize=None)
def turan_graph(n: int, r: int) -> Graph:
    """Balanced complete r-partite graph: b parts of size a+1, then r-b of size a."""
    if not 1 <= r <= n:
        raise TuranParamError(f"need 1 <= r <= n (n={n}, r={r})")
    a, b = divmod(n, r)
    sizes = [a + 1] * b + [a] * (r - b)
    full = (1 << n) - 1
    rows = []
    start = 0
    for size in sizes:
        pmask = ((1 << size) - 1) << start
        rows.extend([full ^ pmask] * size)
        start += size
    return Graph(n, tuple(rows))


def turan_part_sizes(n: int, r: int) -> tuple[int, ...]:
    a, b = divmod(n, r)
    return tuple([a + 1] * b + [a] * (r - b))


@lru_cache(maxsize=None)
def turan_radius(m: int, parts: int) -> float:
    """lambda of the balanced multipartite graph on m vertices with at most
    ``parts`` classes; caps at the complete graph when m <= parts."""
    if m == 0:
        return 0.0
    if parts < 1:
        raise TuranParamError("parts must be positive for a nonempty graph")
    return turan_params(m, min(parts, m)).lam0


@lru_cache(maxsize=None)
def turan_edges(m: int, parts: int) -> int:
    """Edge count companion of turan_radius, exact integer."""
    if m == 0:
        return 0
    if parts < 1:
        raise TuranParamError("parts must be positive for a nonempty graph")
    return turan_params(m, min(parts, m)).e0


def secular_radius(part_sizes) -> float:
    """Positive root of sum(n_i / (x + n_i)) = 1 for a complete multipartite
    graph, by bisection to absolute width 1e-11."""
    sizes = list(part_sizes)
    if not sizes:
        raise ValueError("need at least one part")
    if any(s < 1 for s in sizes):
        raise ValueError("part sizes must be positive")

    def f(x: float) -> float:
        return sum(s / (x + s) for s in sizes) - 1.0

    lo, hi = 0.0, float(sum(sizes))
    while hi - lo > 1e-11:
        mid = 0.5 * (lo + hi)
        if f(mid) >= 0.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def enumerate_regular(n: int, d: int, distinct: bool = False) -> Iterator[Graph]:
    """Every labeled d-regular graph on n vertices exactly once.

    Backtracks over vertices in label order, choosing each vertex's
    remaining neighbors among higher labels in lexicographic order.  An odd
    n*d is infeasible by parity and yields an empty stream.  With
    distinct=True, collapses the output to isomorphism classes.
    """
    if n < 1 or n > 12:
        raise ValueError(f"regular enumeration is intended for 1 <= n <= 12, got {n}")
    if not 0 <= d < n:
        raise ValueError(f"degree {d} infeasible on {n} vertices")
    if (n * d) % 2 == 1:
        return iter(())  # parity: no such graph
    stream = _regular_stream(n, d)
    if distinct:
        return iter(_isomorphism_classes(stream))
    return stream


def _regular_stream(n: int, d: int) -> Iterator[Graph]:
    rows = [0] * n
    deficit = [d] * n

    def rec(v: int):
        if v == n:
            yield Graph(n, tuple(rows))
            return
        need = deficit[v]
        if need == 0:
            yield from rec(v + 1)
            return
        cands = [u for u in range(v + 1, n) if deficit[u] > 0]
        if len(cands) < need:
            return
        for combo in itertools.combinations(cands, need):
            for u in combo:
                rows[v] |= 1 << u
                rows[u] |= 1 << v
                deficit[u] -= 1
            deficit[v] = 0
            yield from rec(v + 1)
            deficit[v] = need
            for u in combo:
                rows[v] &= ~(1 << u)
                rows[u] &= ~(1 << v)
                deficit[u] += 1

    return rec(0)


def _triangle_profile(g: Graph) -> tuple[int, ...]:
    out = []
    for v in range(g.n):
        t = 0
        for u in iter_bits(g.adj[v]):
            t += (g.adj[v] & g.adj[u]).bit_count()
        out.append(t // 2)
    return tuple(sorted(out))


def _isomorphism_classes(graphs) -> list[Graph]:
    buckets: dict[tuple, list[Graph]] = {}
    reps = []
    for g in graphs:
        key = (g.edge_count, tuple(sorted(g.degree_sequence())), _triangle_profile(g))
        bucket = buckets.setdefault(key, [])
        if not any(is_isomorphic(g, h) for h in bucket):
            bucket.append(g)
            reps.append(g)
    return reps


@dataclass(frozen=True)
class FamilyWitness:
    """Partition certifying membership in the extremal family.

    For b = 0 the witness is degenerate: X is empty and the whole graph is
    regular of degree y_inner_degree.
    """

    x_vertices: tuple[int, ...]
    y_vertices: tuple[int, ...]
    x_inner_degree: int
    y_inner_degree: int


def family_membership(g: Graph, r: int) -> FamilyWitness | None:
    """Reconstruct the certifying partition from vertex degrees, or None.

    For b >= 1 the two degree values n-a-1 (X side) and n-a (Y side) are
    forced, so X and Y are recoverable from the degree sequence alone; the
    cross-join completeness and inner regularities are then checked
    explicitly.
    """
    n = g.n
    if r < 1:
        raise ValueError("r must be at least 1")
    if n < r:
        raise ValueError(f"need n >= r (n={n}, r={r})")
    a, b = divmod(n, r)
    if b == 0:
        d = (r - 1) * a
        if regular_degree(g) != d:
            return None
        return FamilyWitness((), tuple(range(n)), 0, d)

    p = b * (a + 1)
    q = (r - b) * a
    deg_x = n - a - 1
    deg_y = n - a
    xs, ys = [], []
    for v in range(n):
        dv = g.degree(v)
        if dv == deg_x:
            xs.append(v)
        elif dv == deg_y:
            ys.append(v)
        else:
            return None
    if len(xs) != p or len(ys) != q:
        return None
    xmask = 0
    for v in xs:
        xmask |= 1 << v
    ymask = 0
    for v in ys:
        ymask |= 1 << v
    din_x = (b - 1) * (a + 1)
    din_y = (r - b - 1) * a
    for v in xs:
        if g.adj[v] & ymask != ymask:
            return None
        if (g.adj[v] & xmask).bit_count() != din_x:
            return None
    for v in ys:
        if g.adj[v] & xmask != xmask:
            return None
        if (g.adj[v] & ymask).bit_count() != din_y:
            return None
    return FamilyWitness(tuple(xs), tuple(ys), din_x, din_y)


def enumerate_family(n: int, r: int, distinct: bool = False) -> Iterator[Graph]:
    """Stream the extremal family.

    b = 0: all (r-1)a-regular graphs on n vertices.  b >= 1: all graphs
    with an X part (any b(a+1)-subset of the vertices) carrying a
    (b-1)(a+1)-regular graph, a (r-b-1)a-regular graph on the rest, and all
    cross edges.  The labeled stream therefore contains every labeled
    member exactly once; distinct=True reduces to isomorphism classes.
    """
    params = turan_params(n, r)
    a, b = params.a, params.b
    if b == 0:
        yield from enumerate_regular(n, (r - 1) * a, distinct=distinct)
        return

    p, q = params.p, params.q
    din_x = (b - 1) * (a + 1)
    din_y = (r - b - 1) * a
    if (p * din_x) % 2 or (q * din_y) % 2:
        raise AssertionError("family regularities violate parity; impossible")
    x_graphs = list(enumerate_regular(p, din_x, distinct=distinct))
    y_graphs = list(enumerate_regular(q, din_y, distinct=distinct))
    if distinct:
        # the sides are recoverable from degrees, so class pairs do not collide
        for gx in x_graphs:
            for gy in y_graphs:
                yield _assemble_member(n, tuple(range(p)), tuple(range(p, n)), gx, gy)
        return
    for xset in itertools.combinations(range(n), p):
        in_x = set(xset)
        yset = tuple(v for v in range(n) if v not in in_x)
        for gx in x_graphs:
            for gy in y_graphs:
                yield _assemble_member(n, xset, yset, gx, gy)


def _assemble_member(n, xset, yset, gx: Graph, gy: Graph) -> Graph:
    rows = [0] * n
    xmask = 0
    for v in xset:
        xmask |= 1 << v
    ymask = 0
    for v in yset:
        ymask |= 1 << v
    for i, v in enumerate(xset):
        row = ymask
        for j in iter_bits(gx.adj[i]):
            row |= 1 << xset[j]
        rows[v] = row
    for i, v in enumerate(yset):
        row = xmask
        for j in iter_bits(gy.adj[i]):
            row |= 1 << yset[j]
        rows[v] = row
    return Graph(n, tuple(rows))


class ConvexityResult(NamedTuple):
    value: float
    argmin: tuple[int, ...]
    tie_count: int


def convexity_oracle(n: int, lambda0: float, budget: int) -> ConvexityResult:
    """Brute-force minimum of sum(1 / (lambda0 + c_i + 1)) over all
    order-insensitive integer tuples 0 <= c_i <= n-1 with sum <= budget.

    Returns the minimum, the lexicographically smallest minimizing
    multiset (nondecreasing), and how many multisets come within 1e-9 of
    the minimum.
    """
    if n < 1 or n > 8:
        raise ValueError("brute-force oracle is intended for 1 <= n <= 8")
    best = math.inf
    values = []
    for tup in itertools.combinations_with_replacement(range(n), n):
        if sum(tup) > budget:
            continue
        val = sum(1.0 / (lambda0 + c + 1.0) for c in tup)
        values.append((val, tup))
        if val < best:
            best = val
    window = 1e-9 * (1.0 + abs(best))
    near = sorted(tup for val, tup in values if val <= best + window)
    return ConvexityResult(best, near[0], len(near))
