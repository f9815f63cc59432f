"""Labeled simple graphs stored as bitset adjacency rows.

Vertices are the integers 0..n-1 and each adjacency row is a Python int
used as a bitset, so complement, join, and induced-subgraph extraction are
plain bit arithmetic.  That keeps exhaustive sweeps over all small graphs
cheap.  Graphs are immutable after construction; public constructors
validate symmetry and loop-freeness.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

MAX_VERTICES = 512


class GraphError(ValueError):
    """Invalid graph construction or vertex argument."""


def iter_bits(mask: int):
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Immutable labeled simple graph with one bitset row per vertex."""

    __slots__ = ("n", "adj")

    def __init__(self, n: int, adj: tuple[int, ...]):
        # Trusted constructor: rows must already be symmetric and loop-free.
        self.n = n
        self.adj = adj

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        es = list(itertools.islice(self.edges(), 13))
        tail = ", ..." if len(es) > 12 else ""
        return f"Graph(n={self.n}, edges=[{', '.join(map(str, es[:12]))}{tail}])"

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int):
        return iter_bits(self.adj[v])

    def edges(self):
        """Yield edges (u, v) with u < v in lexicographic order."""
        for u in range(self.n):
            for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1)):
                yield (u, v)

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    @property
    def average_degree(self) -> float:
        if self.n == 0:
            raise GraphError("average degree of the empty vertex set is undefined")
        return 2.0 * self.edge_count / self.n

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(row.bit_count() for row in self.adj)

    def adjacency_matrix(self):
        """Dense float64 adjacency matrix (numpy)."""
        import numpy as np

        n = self.n
        a = np.zeros((n, n))
        for u in range(n):
            for v in iter_bits(self.adj[u]):
                a[u, v] = 1.0
        return a


def regular_degree(g: Graph) -> int | None:
    """The common degree if ``g`` is regular, else None.  K0 counts as 0-regular."""
    if g.n == 0:
        return 0
    d = g.adj[0].bit_count()
    for row in g.adj:
        if row.bit_count() != d:
            return None
    return d


def _check_rows(n: int, adj: tuple[int, ...]) -> None:
    full = (1 << n) - 1
    for v, row in enumerate(adj):
        if row >> v & 1:
            raise GraphError(f"loop at vertex {v}")
        if row & ~full:
            raise GraphError(f"row {v} has bits outside 0..{n - 1}")
    for v in range(n):
        for u in iter_bits(adj[v]):
            if not adj[u] >> v & 1:
                raise GraphError(f"asymmetric adjacency between {u} and {v}")


def build_graph(n: int, edges) -> Graph:
    """Graph on n vertices with the given edge set (duplicates allowed)."""
    if n < 0 or n > MAX_VERTICES:
        raise GraphError(f"vertex count {n} outside 0..{MAX_VERTICES}")
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise GraphError(f"loop edge ({u}, {v})")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def empty_graph(n: int) -> Graph:
    if n < 0 or n > MAX_VERTICES:
        raise GraphError(f"vertex count {n} outside 0..{MAX_VERTICES}")
    return Graph(n, (0,) * n)


def complete_graph(n: int) -> Graph:
    if n < 0 or n > MAX_VERTICES:
        raise GraphError(f"vertex count {n} outside 0..{MAX_VERTICES}")
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << v) for v in range(n)))


def path_graph(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs at least 3 vertices")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple((full ^ row ^ (1 << v)) & full for v, row in enumerate(g.adj)))


def join(a: Graph, b: Graph) -> Graph:
    """Disjoint union of a and b plus all cross edges; a's vertices come first."""
    n = a.n + b.n
    if n > MAX_VERTICES:
        raise GraphError(f"join has {n} vertices, exceeding {MAX_VERTICES}")
    mask_a = (1 << a.n) - 1
    mask_b = ((1 << n) - 1) ^ mask_a
    rows = [row | mask_b for row in a.adj]
    rows += [(row << a.n) | mask_a for row in b.adj]
    return Graph(n, tuple(rows))


def k_fold_join(g: Graph, k: int) -> Graph:
    """k disjoint copies of g with all edges between distinct copies."""
    if k < 1:
        raise GraphError("k must be at least 1")
    n = g.n
    if k * n > MAX_VERTICES:
        raise GraphError(f"k-fold join has {k * n} vertices, exceeding {MAX_VERTICES}")
    total = (1 << (k * n)) - 1
    rows = []
    for i in range(k):
        block = ((1 << n) - 1) << (i * n)
        for row in g.adj:
            rows.append((row << (i * n)) | (total ^ block))
    return Graph(k * n, tuple(rows))


def induced_subgraph(g: Graph, vertices) -> tuple[Graph, tuple[int, ...]]:
    """Induced subgraph on the given vertices plus the relabeling map.

    Returns (h, labels) where labels[i] is the original name of vertex i of h;
    labels are in increasing original order.
    """
    labels = tuple(sorted(set(vertices)))
    if labels and not (0 <= labels[0] and labels[-1] < g.n):
        raise GraphError("vertex out of range")
    pos = {v: i for i, v in enumerate(labels)}
    rows = []
    for v in labels:
        row = 0
        for u in iter_bits(g.adj[v]):
            if u in pos:
                row |= 1 << pos[u]
        rows.append(row)
    return Graph(len(labels), tuple(rows)), labels


def induced_neighborhood(g: Graph, v: int) -> Graph:
    """The subgraph induced on N(v), vertices relabeled in increasing order."""
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} out of range")
    return induced_subgraph(g, iter_bits(g.adj[v]))[0]


def connected_components(g: Graph) -> list[int]:
    """Vertex bitmasks of the connected components, ordered by smallest vertex."""
    seen = 0
    out = []
    full = (1 << g.n) - 1
    while seen != full:
        start = (~seen & full) & -(~seen & full)
        comp = start
        frontier = start
        while frontier:
            grow = 0
            for v in iter_bits(frontier):
                grow |= g.adj[v]
            frontier = grow & ~comp
            comp |= grow
        out.append(comp)
        seen |= comp
    return out


def clique_number(g: Graph) -> int:
    """Exact clique number via branch and bound with pivoting.

    Convention: 1 for any nonempty edgeless graph, 0 only for n = 0.
    """
    return _max_clique(g, stop_at=g.n + 1)


def has_clique(g: Graph, k: int) -> bool:
    """True iff g contains a clique on k vertices (k <= 0 is trivially true)."""
    if k <= 0:
        return True
    return _max_clique(g, stop_at=k) >= k


def _max_clique(g: Graph, stop_at: int) -> int:
    adj = g.adj
    best = 0

    def expand(size: int, cand: int):
        nonlocal best
        if not cand:
            if size > best:
                best = size
            return
        if size + cand.bit_count() <= best:
            return
        # pivot on the candidate dominating most of cand
        pivot = -1
        pivot_hits = -1
        for u in iter_bits(cand):
            hits = (cand & adj[u]).bit_count()
            if hits > pivot_hits:
                pivot_hits = hits
                pivot = u
        ext = cand & ~adj[pivot]
        for v in iter_bits(ext):
            expand(size + 1, cand & adj[v])
            if best >= stop_at:
                return
            cand &= ~(1 << v)

    expand(0, (1 << g.n) - 1)
    return best


@lru_cache(maxsize=None)
def upper_pairs(n: int) -> tuple[tuple[int, int], ...]:
    """Upper-triangle vertex pairs in column-major order:
    (0,1), (0,2), (1,2), (0,3), ...  This is the bit order shared by edge
    masks, exhaustive enumeration, and the graph6 codec."""
    return tuple((i, j) for j in range(1, n) for i in range(j))


def edge_mask(g: Graph) -> int:
    """Edge set of g packed into an int along the upper_pairs order."""
    mask = 0
    for k, (i, j) in enumerate(upper_pairs(g.n)):
        if g.adj[i] >> j & 1:
            mask |= 1 << k
    return mask


def from_edge_mask(n: int, mask: int) -> Graph:
    """Inverse of edge_mask."""
    pairs = upper_pairs(n)
    if mask >> len(pairs):
        raise GraphError("edge mask has bits beyond the pair count")
    rows = [0] * n
    while mask:
        low = mask & -mask
        i, j = pairs[low.bit_length() - 1]
        rows[i] |= 1 << j
        rows[j] |= 1 << i
        mask ^= low
    return Graph(n, tuple(rows))


def _refine_colors(g: Graph) -> tuple[int, ...]:
    """Iterated neighborhood-invariant coloring used to prune isomorphism search."""
    colors = g.degree_sequence()
    for _ in range(g.n):
        sig = []
        for v in range(g.n):
            sig.append((colors[v], tuple(sorted(colors[u] for u in iter_bits(g.adj[v])))))
        table = {s: i for i, s in enumerate(sorted(set(sig)))}
        new = tuple(table[s] for s in sig)
        if new == colors:
            break
        colors = new
    return colors


def is_isomorphic(a: Graph, b: Graph) -> bool:
    """Exact isomorphism test by pruned permutation search (meant for n <= 10)."""
    if a.n != b.n:
        return False
    if a.edge_count != b.edge_count:
        return False
    if sorted(a.degree_sequence()) != sorted(b.degree_sequence()):
        return False
    ca = _refine_colors(a)
    cb = _refine_colors(b)
    if sorted(ca) != sorted(cb):
        return False
    n = a.n
    # map a-vertices in order of rarest color class first
    freq = {}
    for c in ca:
        freq[c] = freq.get(c, 0) + 1
    order = sorted(range(n), key=lambda v: (freq[ca[v]], ca[v], v))
    image = [-1] * n
    used = 0

    def backtrack(i: int) -> bool:
        nonlocal used
        if i == n:
            return True
        v = order[i]
        for w in range(n):
            if used >> w & 1 or cb[w] != ca[v]:
                continue
            ok = True
            for j in range(i):
                u = order[j]
                if (a.adj[v] >> u & 1) != (b.adj[w] >> image[u] & 1):
                    ok = False
                    break
            if ok:
                image[v] = w
                used |= 1 << w
                if backtrack(i + 1):
                    return True
                used &= ~(1 << w)
                image[v] = -1
        return False

    return backtrack(0)
