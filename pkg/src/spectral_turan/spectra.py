"""Dense symmetric eigencomputation and the spectral functionals of graphs.

Everything downstream (extremality checks, join radii, coronals) reads
eigenvalues through this module.  The backing solver is numpy's symmetric
eigendecomposition; an independent cyclic-Jacobi implementation and a
power-iteration readout are provided as cross-checking routes, and the
coronal is always computed two ways.

Tolerance ladder: 1e-12 for the solver and unit norms, 1e-9 for
eigen-equation residuals, 1e-8 for agreement between independent methods.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .graphs import (
    Graph,
    connected_components,
    empty_graph,
    induced_neighborhood,
    induced_subgraph,
    iter_bits,
    join,
)

TOL_SOLVER = 1e-12
TOL_RESIDUAL = 1e-9
TOL_CROSS = 1e-8
ARGMAX_TIE_REL = 1e-9
BISECT_WIDTH = 1e-11


class SpectraError(RuntimeError):
    """Numerics self-check failed; indicates a solver bug, not bad input."""


@dataclass(frozen=True)
class Spectrum:
    """Full eigendecomposition of an adjacency matrix.

    values are ascending; basis column i is the unit eigenvector for
    values[i]; residual is the largest infinity-norm of A u - lambda u
    over the basis.
    """

    values: np.ndarray
    basis: np.ndarray
    residual: float


@dataclass(frozen=True)
class PerronVector:
    """Nonnegative unit eigenvector for the spectral radius.

    On disconnected graphs the vector is supported on the lowest-index
    component of maximum spectral radius.  argmax lists the vertices whose
    entry is within a 1e-9 relative tie of the maximum.
    """

    entries: np.ndarray
    eigenvalue: float
    argmax: tuple[int, ...]


@dataclass(frozen=True)
class QuotientMatrix:
    """Average cross-degree matrix of a vertex partition."""

    cells: np.ndarray
    equitable: bool
    parts: tuple[tuple[int, ...], ...]


@lru_cache(maxsize=1 << 16)
def _eigenvalues(g: Graph) -> np.ndarray:
    vals = np.linalg.eigvalsh(g.adjacency_matrix())
    vals.setflags(write=False)
    return vals


def spectral_radius(g: Graph) -> float:
    """Largest adjacency eigenvalue (equals the spectral radius)."""
    if g.n == 0:
        raise ValueError("spectral radius of the empty graph is undefined")
    return float(_eigenvalues(g)[-1])


def least_eigenvalue(g: Graph) -> float:
    if g.n == 0:
        raise ValueError("least eigenvalue of the empty graph is undefined")
    return float(_eigenvalues(g)[0])


def _canonical_signs(basis: np.ndarray) -> np.ndarray:
    out = basis.copy()
    for i in range(out.shape[1]):
        col = out[:, i]
        j = int(np.argmax(np.abs(col)))
        if col[j] < 0:
            out[:, i] = -col
    return out


@lru_cache(maxsize=4096)
def spectrum(g: Graph) -> Spectrum:
    """Full Spectrum of g, with built-in consistency checks.

    Raises SpectraError if any internal identity fails (trace, edge count,
    orthonormality, or the all-ones expansion identities); these must hold
    for every adjacency matrix, so a failure signals a numerics bug.
    """
    n = g.n
    if n == 0:
        return Spectrum(np.zeros(0), np.zeros((0, 0)), 0.0)
    a = g.adjacency_matrix()
    try:
        vals, basis = np.linalg.eigh(a)
    except np.linalg.LinAlgError as exc:  # pragma: no cover
        raise SpectraError(f"eigendecomposition did not converge: {exc}") from exc
    basis = _canonical_signs(basis)
    two_e = 2.0 * g.edge_count

    resid = float(np.max(np.abs(a @ basis - basis * vals))) if n else 0.0
    gram = basis.T @ basis
    ortho_err = float(np.max(np.abs(gram - np.eye(n))))
    ones = np.ones(n)
    alphas_sq = (ones @ basis) ** 2

    checks = [
        (abs(float(vals.sum())) <= 1e-9 * max(n, 1), "trace"),
        (abs(float((vals**2).sum()) - two_e) <= 1e-8 * (1.0 + two_e), "sum of squares"),
        (ortho_err <= 1e-10, "orthonormality"),
        (abs(float(alphas_sq.sum()) - n) <= 1e-8 * max(n, 1), "all-ones norm"),
        (abs(float((alphas_sq * vals).sum()) - two_e) <= 1e-8 * (1.0 + two_e), "all-ones energy"),
        (resid <= TOL_RESIDUAL * (1.0 + abs(float(vals[-1]))), "eigen residual"),
    ]
    for ok, name in checks:
        if not ok:
            raise SpectraError(f"spectrum self-check failed: {name}")
    vals.setflags(write=False)
    basis.setflags(write=False)
    return Spectrum(vals, basis, resid)


def jacobi_eigh(a, tol: float = TOL_SOLVER, max_sweeps: int = 100):
    """Cyclic-sweep Jacobi eigendecomposition of a symmetric matrix.

    Independent of the LAPACK route; used to cross-validate it.  Sweeps a
    fixed (p, q) schedule until the off-diagonal Frobenius norm drops below
    tol * n.  Returns (ascending values, column eigenvectors).
    """
    a = np.array(a, dtype=float)
    n = a.shape[0]
    v = np.eye(n)
    if n <= 1:
        return np.diag(a).copy(), v
    for _ in range(max_sweeps):
        off_sq = float(((a - np.diag(np.diag(a))) ** 2).sum())
        if off_sq <= (tol * n) ** 2:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                # entries too small to affect the diagonal are flushed to zero
                if abs(apq) <= 1e-20 * (abs(a[p, p]) + abs(a[q, q]) + 1.0):
                    a[p, q] = a[q, p] = 0.0
                    continue
                tau = (a[q, q] - a[p, p]) / (2.0 * apq)
                if tau >= 0:
                    t = 1.0 / (tau + math.hypot(1.0, tau))
                else:
                    t = -1.0 / (-tau + math.hypot(1.0, tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                colp = a[:, p].copy()
                colq = a[:, q].copy()
                a[:, p] = c * colp - s * colq
                a[:, q] = s * colp + c * colq
                rowp = a[p, :].copy()
                rowq = a[q, :].copy()
                a[p, :] = c * rowp - s * rowq
                a[q, :] = s * rowp + c * rowq
                vp = v[:, p].copy()
                vq = v[:, q].copy()
                v[:, p] = c * vp - s * vq
                v[:, q] = s * vp + c * vq
    else:
        raise SpectraError("Jacobi sweeps did not converge")
    diag = np.diag(a).copy()
    order = np.argsort(diag, kind="stable")
    return diag[order], v[:, order]


def power_iteration_radius(g: Graph, steps: int = 200) -> float:
    """Rayleigh-quotient readout after shifted power iteration from all-ones."""
    if g.n == 0:
        raise ValueError("empty graph")
    a = g.adjacency_matrix()
    x = np.ones(g.n) / math.sqrt(g.n)
    for _ in range(steps):
        y = a @ x + x  # shift keeps the top eigenvalue dominant on bipartite graphs
        norm = float(np.linalg.norm(y))
        if norm == 0.0:
            return 0.0
        x = y / norm
    return float(x @ (a @ x))


def perron_vector(g: Graph) -> PerronVector:
    """Canonical nonnegative unit eigenvector for the spectral radius.

    For disconnected graphs, supported on the lowest-index component of
    maximum spectral radius; zero elsewhere.
    """
    if g.n == 0:
        raise ValueError("empty graph")
    comps = connected_components(g)
    best_lam = -math.inf
    best = None
    for comp in comps:
        sub, labels = induced_subgraph(g, iter_bits(comp))
        if sub.n == 1:
            lam = 0.0
            vec = np.ones(1)
        else:
            vals, basis = np.linalg.eigh(sub.adjacency_matrix())
            lam = float(vals[-1])
            vec = basis[:, -1]
        if lam > best_lam + 1e-12 * (1.0 + abs(lam)):
            best_lam = lam
            best = (labels, vec)
    labels, vec = best
    if vec.sum() < 0:
        vec = -vec
    if float(vec.min()) < -1e-9:
        raise SpectraError("Perron vector came out with negative entries")
    vec = np.maximum(vec, 0.0)
    vec = vec / float(np.linalg.norm(vec))
    full = np.zeros(g.n)
    full[list(labels)] = vec
    top = float(full.max())
    argmax = tuple(v for v in range(g.n) if full[v] >= top * (1.0 - ARGMAX_TIE_REL))
    a = g.adjacency_matrix()
    if float(np.max(np.abs(a @ full - best_lam * full))) > TOL_RESIDUAL * (1.0 + best_lam):
        raise SpectraError("Perron vector residual too large")
    full.setflags(write=False)
    return PerronVector(entries=full, eigenvalue=best_lam, argmax=argmax)


@lru_cache(maxsize=1 << 16)
def _coronal_terms(g: Graph):
    vals, basis = np.linalg.eigh(g.adjacency_matrix())
    alphas_sq = (np.ones(g.n) @ basis) ** 2
    vals.setflags(write=False)
    alphas_sq.setflags(write=False)
    return vals, alphas_sq


def coronal(g: Graph, x: float) -> float:
    """Sum of the entries of (x I - A)^-1, for x above the spectral radius.

    Computed twice: by linear solve and by eigen-expansion.  The two routes
    must agree to 1e-8 relative; the solve value is returned.
    """
    if g.n == 0:
        raise ValueError("empty graph")
    lam = spectral_radius(g)
    if x <= lam + 1e-9:
        raise ValueError(f"coronal needs x > spectral radius ({x} <= {lam})")
    a = g.adjacency_matrix()
    w = np.linalg.solve(x * np.eye(g.n) - a, np.ones(g.n))
    chi_solve = float(w.sum())
    vals, alphas_sq = _coronal_terms(g)
    chi_eigen = float((alphas_sq / (x - vals)).sum())
    if abs(chi_solve - chi_eigen) > TOL_CROSS * (1.0 + abs(chi_solve)):
        raise SpectraError("coronal routes disagree")
    return chi_solve


def join_radius_cap(g: Graph, s: int) -> float:
    """Upper bound (lambda + sqrt(lambda^2 + 4 n s)) / 2 for the join radius.

    Tight exactly when g is regular.
    """
    if g.n == 0:
        return 0.0
    lam = spectral_radius(g)
    return (lam + math.sqrt(lam * lam + 4.0 * g.n * s)) / 2.0


def join_radius_root(g: Graph, s: int) -> float:
    """The unique x > lambda(g) where (s/x) * coronal(g, x) = 1.

    Found by bisection, which is safe because the function is strictly
    decreasing; the result equals the spectral radius of the join of g with
    s isolated apex vertices.
    """
    if g.n == 0:
        raise ValueError("empty graph")
    if s < 1:
        raise ValueError("s must be at least 1")
    lam = spectral_radius(g)
    vals, alphas_sq = _coronal_terms(g)

    def beta_minus_one(x: float) -> float:
        return s / x * float((alphas_sq / (x - vals)).sum()) - 1.0

    lo = lam
    hi = join_radius_cap(g, s) + 1.0
    if beta_minus_one(hi) >= 0.0:
        raise SpectraError("join radius bracket failed")
    while hi - lo > BISECT_WIDTH:
        mid = 0.5 * (lo + hi)
        if beta_minus_one(mid) >= 0.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def _part_masks(g: Graph, parts) -> list[int]:
    masks = []
    for part in parts:
        mask = part if isinstance(part, int) else 0
        if not isinstance(part, int):
            for v in part:
                mask |= 1 << v
        masks.append(mask)
    full = (1 << g.n) - 1
    if any(m == 0 for m in masks):
        raise ValueError("empty part")
    cover = 0
    for m in masks:
        if m & cover:
            raise ValueError("parts overlap")
        cover |= m
    if cover != full:
        raise ValueError("parts do not cover the vertex set")
    return masks


def quotient_matrix(g: Graph, parts) -> QuotientMatrix:
    """Average cross-degrees between the parts; flags whether the partition
    is equitable (every vertex matches its part's counts exactly)."""
    masks = _part_masks(g, parts)
    k = len(masks)
    cells = np.zeros((k, k))
    equitable = True
    for i, mi in enumerate(masks):
        verts = list(iter_bits(mi))
        for j, mj in enumerate(masks):
            counts = [(g.adj[v] & mj).bit_count() for v in verts]
            cells[i, j] = sum(counts) / len(counts)
            if any(c != counts[0] for c in counts):
                equitable = False
    return QuotientMatrix(
        cells=cells,
        equitable=equitable,
        parts=tuple(tuple(iter_bits(m)) for m in masks),
    )


def quotient_spectral_radius(q: QuotientMatrix) -> float:
    vals = np.linalg.eigvals(q.cells)
    i = int(np.argmax(vals.real))
    if abs(vals[i].imag) > 1e-9:
        raise SpectraError("quotient matrix has a complex dominant eigenvalue")
    return float(vals[i].real)


def symmetrization_gap(g: Graph, v: int) -> float:
    """lambda(apexes joined to G[N(v)]) - lambda(G) for a max-weight vertex v.

    v must attain the maximum entry of the canonical Perron vector; the
    result is nonnegative up to 1e-8.
    """
    pv = perron_vector(g)
    if v not in pv.argmax:
        raise ValueError(f"vertex {v} does not attain the maximum Perron entry")
    h = induced_neighborhood(g, v)
    s = g.n - g.degree(v)
    return spectral_radius(join(empty_graph(s), h)) - spectral_radius(g)
