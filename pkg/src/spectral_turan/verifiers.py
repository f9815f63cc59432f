"""One executable checker per extremal statement.

Each verifier returns a structured Verdict carrying the branch taken,
re-checkable witnesses, and named residual slacks instead of a bare
boolean.  Floating-point ties never decide an equality claim on their own:
a tie triggers the combinatorial confirmation (family membership or
isomorphism), and any apparent strict violation is recomputed through the
independent Jacobi route before being reported.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .families import (
    family_membership,
    secular_radius,
    turan_edges,
    turan_graph,
    turan_params,
    turan_part_sizes,
    turan_radius,
)
from .graphs import (
    Graph,
    clique_number,
    complement,
    connected_components,
    empty_graph,
    induced_neighborhood,
    induced_subgraph,
    is_isomorphic,
    iter_bits,
    join,
    k_fold_join,
    regular_degree,
)
from .spectra import (
    SpectraError,
    coronal,
    jacobi_eigh,
    join_radius_root,
    least_eigenvalue,
    quotient_matrix,
    spectral_radius,
)

TOL_EQ = 1e-8
TOL_STRICT = 1e-8

VACUOUS_BRANCHES = ("vacuous", "not-applicable")


def _eqtol(scale: float, tol: float | None = None) -> float:
    return (TOL_EQ if tol is None else tol) * (1.0 + abs(scale))


@dataclass
class Verdict:
    """Outcome of one checker on one instance."""

    claim: str
    holds: bool
    branch: str
    witnesses: dict = field(default_factory=dict)
    residuals: dict = field(default_factory=dict)
    tolerance: float = TOL_EQ

    @property
    def category(self) -> str:
        """One of holds / vacuous / degenerate / violation, for reporting."""
        if self.branch.startswith(VACUOUS_BRANCHES):
            return "vacuous"
        if self.branch.startswith("degenerate"):
            return "degenerate"
        return "holds" if self.holds else "violation"


@dataclass(frozen=True)
class JoinContext:
    """The four radii compared by the join-preservation checks."""

    s: int
    lam: float  # radius of the extremal graph
    mu: float  # radius of its join with s apexes
    eta: float  # radius of the instance
    rho: float  # radius of the instance's join with s apexes

    def __post_init__(self):
        if not self.mu > self.lam:
            raise SpectraError("join radius failed to exceed the base radius")
        if not self.rho >= self.eta - 1e-9 * (1.0 + abs(self.eta)):
            raise SpectraError("adding apexes decreased the spectral radius")


@dataclass(frozen=True)
class ComplementProfile:
    """Complement degrees c_v, weights x_v = 1/(lam0 + c_v + 1), and S = sum x_v."""

    degrees: tuple[int, ...]
    weights: tuple[float, ...]
    total: float


def complement_profile(g: Graph, lam0: float) -> ComplementProfile:
    n = g.n
    degrees = tuple(n - 1 - g.degree(v) for v in range(n))
    weights = tuple(1.0 / (lam0 + c + 1.0) for c in degrees)
    return ComplementProfile(degrees, weights, sum(weights))


@lru_cache(maxsize=None)
def turan_join_radius(n: int, r: int, s: int) -> float:
    """Radius of the extremal r-partite graph joined with s apex vertices."""
    return secular_radius(turan_part_sizes(n, r) + (s,))


def _radius_reconfirmed(g: Graph) -> float:
    """Independent (Jacobi) recomputation, used only on apparent violations."""
    vals, _ = jacobi_eigh(g.adjacency_matrix())
    lam = float(vals[-1])
    if abs(lam - spectral_radius(g)) > 1e-7 * (1.0 + abs(lam)):
        raise SpectraError("eigensolver routes disagree on the spectral radius")
    return lam


def _quadratic_form(g: Graph, weights) -> float:
    """x^T A(g) x for a per-vertex weight vector."""
    total = 0.0
    for u in range(g.n):
        upper = g.adj[u] >> (u + 1) << (u + 1)
        for v in iter_bits(upper):
            total += 2.0 * weights[u] * weights[v]
    return total


def verify_spectral_turan(g: Graph, r: int, tol: float | None = None) -> Verdict:
    """Clique-constrained extremality: a K_{r+1}-free graph has radius at most
    the balanced r-partite optimum, with equality only for that graph."""
    if r < 2:
        raise ValueError("r must be at least 2")
    claim = "spectral-turan"
    if g.n == 0:
        return Verdict(claim, True, "degenerate-empty")
    omega = clique_number(g)
    if omega > r:
        return Verdict(claim, True, "not-applicable", witnesses={"clique_number": omega})
    lam = spectral_radius(g)
    lam0 = turan_radius(g.n, r)
    t = _eqtol(lam0, tol)
    residuals = {"lambda0_minus_lambda": lam0 - lam}
    if lam < lam0 - t:
        return Verdict(claim, True, "strict", residuals=residuals, tolerance=t)
    if lam <= lam0 + t:
        iso = is_isomorphic(g, turan_graph(g.n, min(r, g.n)))
        branch = "equality-isomorphic" if iso else "equality-not-extremal"
        return Verdict(claim, iso, branch, residuals=residuals, tolerance=t)
    lam = _radius_reconfirmed(g)
    residuals["lambda0_minus_lambda"] = lam0 - lam
    holds = lam <= lam0 + t
    return Verdict(claim, holds, "radius-exceeds-bound", residuals=residuals, tolerance=t)


def verify_edge_to_spectral(g: Graph, r: int, tol: float | None = None) -> Verdict:
    """Edge threshold forces the spectral threshold: e >= e0 implies
    lambda >= lam0, with the equality case landing in the extremal family.

    Also recomputes the proof chain on every non-vacuous instance: the
    convexity total S >= 1 and the Rayleigh quotient of the weight vector
    already meets lam0.
    """
    if r < 2:
        raise ValueError("r must be at least 2")
    if g.n < r:
        raise ValueError(f"need n >= r (n={g.n}, r={r})")
    claim = "edge-to-spectral"
    params = turan_params(g.n, r)
    m = g.edge_count
    if m < params.e0:
        return Verdict(claim, True, "vacuous", residuals={"e0_minus_e": float(params.e0 - m)})
    lam = spectral_radius(g)
    t = _eqtol(params.lam0, tol)
    profile = complement_profile(g, params.lam0)
    sum_sq = sum(w * w for w in profile.weights)
    rayleigh = _quadratic_form(g, profile.weights) / sum_sq
    residuals = {
        "lambda_minus_lambda0": lam - params.lam0,
        "S_minus_1": profile.total - 1.0,
        "rayleigh_minus_lambda0": rayleigh - params.lam0,
    }
    holds = lam >= params.lam0 - t
    holds = holds and profile.total >= 1.0 - 1e-9
    holds = holds and rayleigh >= params.lam0 - t
    witnesses = {}
    branch = "strict"
    if abs(lam - params.lam0) <= t:
        branch = "equality-family"
        witness = family_membership(g, r)
        if witness is None:
            lam = _radius_reconfirmed(g)
            if abs(lam - params.lam0) <= t:
                holds = False
                branch = "equality-not-in-family"
        else:
            witnesses["family"] = witness
    if not holds and branch == "strict":
        lam = _radius_reconfirmed(g)
        residuals["lambda_minus_lambda0"] = lam - params.lam0
        holds = lam >= params.lam0 - t and profile.total >= 1.0 - 1e-9
    return Verdict(claim, holds, branch, witnesses=witnesses, residuals=residuals, tolerance=t)


def verify_rayleigh_identity(g: Graph, r: int, tol: float | None = None) -> Verdict:
    """Exact decomposition of the weight-vector quadratic form:
    x^T A x = lam0 * sum x^2 + S(S-1) + sum over complement edges of (x_u - x_v)^2,
    valid for every graph on n >= r vertices."""
    if r < 2:
        raise ValueError("r must be at least 2")
    if g.n < r:
        raise ValueError(f"need n >= r (n={g.n}, r={r})")
    params = turan_params(g.n, r)
    profile = complement_profile(g, params.lam0)
    w = profile.weights
    lhs = _quadratic_form(g, w)
    h = complement(g)
    spread = 0.0
    for u in range(h.n):
        upper = h.adj[u] >> (u + 1) << (u + 1)
        for v in iter_bits(upper):
            spread += (w[u] - w[v]) ** 2
    s_tot = profile.total
    rhs = params.lam0 * sum(x * x for x in w) + s_tot * (s_tot - 1.0) + spread
    err = abs(lhs - rhs)
    t = 1e-9 * (1.0 + abs(lhs))
    return Verdict(
        "rayleigh-identity",
        err <= t,
        "identity",
        residuals={"identity_error": err},
        tolerance=t,
    )


def _neighborhood_margin(g: Graph, v: int, r: int) -> float:
    """lambda(G[N(v)]) - lambda(T_{r-1}(d(v))), with the degenerate small-degree
    convention capping the comparison graph at a complete graph."""
    h = induced_neighborhood(g, v)
    lam_h = spectral_radius(h) if h.n else 0.0
    return lam_h - turan_radius(g.degree(v), r - 1)


def _component_argmax_vertices(g: Graph, lam: float) -> list[int]:
    """Max-entry vertices of the Perron vector of every component whose
    spectral radius attains lambda(g)."""
    out = []
    for comp in connected_components(g):
        sub, labels = induced_subgraph(g, iter_bits(comp))
        if sub.n == 1:
            lam_c, vec = 0.0, np.ones(1)
        else:
            vals, basis = np.linalg.eigh(sub.adjacency_matrix())
            lam_c = float(vals[-1])
            vec = basis[:, -1]
            if vec.sum() < 0:
                vec = -vec
        if lam_c < lam - 1e-9 * (1.0 + abs(lam)):
            continue
        top = float(vec.max())
        out.extend(labels[i] for i in range(sub.n) if vec[i] >= top * (1.0 - 1e-9))
    return sorted(set(out))


def verify_guiduli(g: Graph, r: int, tol: float | None = None) -> Verdict:
    """Dense-neighborhood strengthening: a graph at or above the extremal
    radius is either the extremal graph itself or has a vertex whose
    neighborhood beats the one-order-lower extremal radius; strictly above,
    every max-weight Perron vertex of every extremal component qualifies."""
    if r < 2:
        raise ValueError("r must be at least 2")
    if g.n < r:
        raise ValueError(f"need n >= r (n={g.n}, r={r})")
    claim = "guiduli"
    params = turan_params(g.n, r)
    lam = spectral_radius(g)
    t = _eqtol(params.lam0, tol)
    if lam < params.lam0 - t:
        return Verdict(claim, True, "vacuous", residuals={"lambda0_minus_lambda": params.lam0 - lam})
    witness = None
    witness_margin = -math.inf
    for v in sorted(range(g.n), key=g.degree, reverse=True):
        margin = _neighborhood_margin(g, v, r)
        if margin > TOL_STRICT:
            witness, witness_margin = v, margin
            break
    residuals = {"lambda_minus_lambda0": lam - params.lam0}
    if lam > params.lam0 + t:
        argmax = _component_argmax_vertices(g, lam)
        margins = {v: _neighborhood_margin(g, v, r) for v in argmax}
        worst = min(margins.values())
        residuals["min_argmax_margin"] = worst
        holds = witness is not None and worst > TOL_STRICT
        return Verdict(
            claim,
            holds,
            "dense-neighborhood-witness",
            witnesses={"vertex": witness, "argmax_vertices": tuple(argmax)},
            residuals=residuals,
            tolerance=t,
        )
    if witness is not None:
        residuals["witness_margin"] = witness_margin
        return Verdict(
            claim,
            True,
            "dense-neighborhood-witness",
            witnesses={"vertex": witness},
            residuals=residuals,
            tolerance=t,
        )
    iso = is_isomorphic(g, turan_graph(g.n, r))
    branch = "isomorphic-to-extremal" if iso else "equality-no-witness"
    return Verdict(claim, iso, branch, residuals=residuals, tolerance=t)


def verify_join_preservation(g: Graph, r: int, s: int, tol: float | None = None) -> Verdict:
    """Joining s apex vertices preserves the extremal comparison, in all
    three directions, and the coronal root agrees with the join eigensolve."""
    if r < 1 or s < 1:
        raise ValueError("need r >= 1 and s >= 1")
    if g.n < max(r, 1):
        raise ValueError(f"need n >= r (n={g.n}, r={r})")
    claim = "join-preservation"
    params = turan_params(g.n, r)
    lam = params.lam0
    mu = turan_join_radius(g.n, r, s)
    eta = spectral_radius(g)
    rho = spectral_radius(join(empty_graph(s), g))
    root = join_radius_root(g, s)
    ctx = JoinContext(s=s, lam=lam, mu=mu, eta=eta, rho=rho)
    t_mu = _eqtol(mu, tol)
    t_lam = _eqtol(lam, tol)
    root_gap = abs(root - rho)
    residuals = {
        "root_vs_eigensolve": root_gap,
        "rho_minus_mu": rho - mu,
        "eta_minus_lambda": eta - lam,
    }
    holds = root_gap <= 1e-8
    witnesses = {"context": ctx}
    applicable = []
    member = None
    member_checked = False

    def membership() -> bool:
        nonlocal member, member_checked
        if not member_checked:
            member = family_membership(g, r)
            member_checked = True
            if member is not None:
                witnesses["family"] = member
        return member is not None

    if rho >= mu - t_mu:
        applicable.append("1")
        if eta < lam - t_lam:
            holds = False
        elif abs(eta - lam) <= t_lam:
            if not (membership() and abs(rho - mu) <= t_mu):
                holds = False
    if rho > mu + t_mu:
        applicable.append("2")
        if not eta > lam + t_lam:
            holds = False
    if abs(rho - mu) <= t_mu and abs(eta - lam) <= t_lam:
        applicable.append("3")
        if not membership():
            holds = False
    if not holds and applicable:
        # confirm through the independent route before reporting a violation
        eta2 = _radius_reconfirmed(g)
        rho2 = _radius_reconfirmed(join(empty_graph(s), g))
        if abs(eta2 - eta) > 1e-7 or abs(rho2 - rho) > 1e-7:
            raise SpectraError("eigensolver routes disagree in join preservation")
    branch = "parts:" + ",".join(applicable) if applicable else "vacuous"
    if not applicable and not holds:
        branch = "join-root-disagrees"
    return Verdict(claim, holds, branch, witnesses=witnesses, residuals=residuals, tolerance=t_mu)


def verify_family_join_equality(g: Graph, r: int, s: int, tol: float | None = None) -> Verdict:
    """Every family member joined with s apexes matches the extremal join
    radius, certified through the equitable three-part quotient."""
    if r < 2 or s < 1:
        raise ValueError("need r >= 2 and s >= 1")
    witness = family_membership(g, r)
    if witness is None:
        raise ValueError("graph is not in the extremal family")
    claim = "family-join-equality"
    params = turan_params(g.n, r)
    a, b = params.a, params.b
    joined = join(empty_graph(s), g)
    rho_g = spectral_radius(joined)
    rho_t = turan_join_radius(g.n, r, s)
    t = _eqtol(rho_t, tol)
    holds = abs(rho_g - rho_t) <= t
    apexes = tuple(range(s))
    if b == 0:
        parts = (tuple(v + s for v in witness.y_vertices), apexes)
        expected = np.array([[(r - 1) * a, s], [g.n, 0]], dtype=float)
    else:
        parts = (
            tuple(v + s for v in witness.x_vertices),
            tuple(v + s for v in witness.y_vertices),
            apexes,
        )
        expected = np.array(
            [
                [(b - 1) * (a + 1), (r - b) * a, s],
                [b * (a + 1), (r - b - 1) * a, s],
                [b * (a + 1), (r - b) * a, 0],
            ],
            dtype=float,
        )
    q = quotient_matrix(joined, parts)
    quotient_ok = q.equitable and np.array_equal(q.cells, expected)
    holds = holds and quotient_ok
    return Verdict(
        claim,
        holds,
        "quotient-certified" if quotient_ok else "quotient-mismatch",
        witnesses={"family": witness, "quotient": q.cells},
        residuals={"join_radius_gap": abs(rho_g - rho_t)},
        tolerance=t,
    )


def verify_family_local(g: Graph, r: int) -> Verdict:
    """A non-extremal family member has a vertex whose neighborhood has more
    edges than the one-order-lower extremal count (exact integers); on the
    regular branch the surplus equals half the complement cut e_H(A_u, B_u)."""
    if r < 2:
        raise ValueError("r must be at least 2")
    witness = family_membership(g, r)
    if witness is None:
        raise ValueError("graph is not in the extremal family")
    if is_isomorphic(g, turan_graph(g.n, r)):
        raise ValueError("graph is the extremal graph; the local lemma does not apply")
    claim = "family-local"
    params = turan_params(g.n, r)
    h = complement(g)
    best_vertex = None
    best_surplus = 0
    surplus_formula_ok = True
    for u in range(g.n):
        d = g.degree(u)
        e_nbhd = induced_neighborhood(g, u).edge_count
        surplus = e_nbhd - turan_edges(d, r - 1)
        if surplus > best_surplus:
            best_vertex, best_surplus = u, surplus
        if params.b == 0:
            a_u = (1 << u) | h.adj[u]
            b_u = g.adj[u]
            cut = sum((h.adj[w] & b_u).bit_count() for w in iter_bits(a_u))
            if 2 * surplus != cut:
                surplus_formula_ok = False
    holds = best_vertex is not None and surplus_formula_ok
    return Verdict(
        claim,
        holds,
        "witness" if best_vertex is not None else "no-witness",
        witnesses={"vertex": best_vertex},
        residuals={"edge_surplus": float(best_surplus)},
        tolerance=0.0,
    )


def verify_coronal_bound(g: Graph, x: float, tol: float | None = None) -> Verdict:
    """Coronal upper bound chi(x) <= n (x + d) / (x^2 - lambda^2)."""
    if g.n == 0:
        raise ValueError("empty graph")
    lam = spectral_radius(g)
    if x <= lam + 1e-6:
        raise ValueError(f"x = {x} is too close to the spectral radius {lam}")
    chi = coronal(g, x)
    bound = g.n * (x + g.average_degree) / (x * x - lam * lam)
    t = _eqtol(bound, tol)
    return Verdict(
        "coronal-bound",
        chi <= bound + t,
        "bound",
        residuals={"bound_minus_chi": bound - chi},
        tolerance=t,
    )


def verify_turan_quotient(n: int, r: int, s: int, tol: float | None = None) -> Verdict:
    """Strict inequality n (mu + d0) / (mu^2 - lambda^2) < mu / s for the
    extremal graph joined with s apexes, where d0 = 2 (e0 - 1) / n."""
    if r < 1 or s < 1:
        raise ValueError("need r >= 1 and s >= 1")
    params = turan_params(n, r)
    lam = params.lam0
    mu = turan_join_radius(n, r, s)
    lhs = n * (mu + params.d0) / (mu * mu - lam * lam)
    margin = mu / s - lhs
    return Verdict(
        "turan-quotient",
        margin > 1e-10,
        "strict",
        residuals={"margin": margin},
        tolerance=1e-10,
    )


def verify_clique_bound(g: Graph, tol: float | None = None) -> Verdict:
    """Least-eigenvalue clique bound, its n/(n-d) consequence, and the
    edge-threshold implication e > (1 - 1/r) n^2 / 2 => omega >= r + 1."""
    if g.n == 0:
        raise ValueError("empty graph")
    claim = "clique-bound"
    n = g.n
    m = g.edge_count
    omega = clique_number(g)
    if m == 0:
        return Verdict(claim, omega >= 1, "degenerate", witnesses={"clique_number": omega})
    d = g.average_degree
    lam_min = least_eigenvalue(g)
    bound = 1.0 + 2.0 * m / ((n - d) * (d - lam_min))
    ratio = n / (n - d)
    t = _eqtol(bound, tol)
    implication_ok = True
    for r in range(1, n):
        if 2 * r * m > (r - 1) * n * n and omega < r + 1:
            implication_ok = False
            break
    holds = omega >= bound - t and omega >= ratio - t and implication_ok
    return Verdict(
        claim,
        holds,
        "bound",
        witnesses={"clique_number": omega},
        residuals={"omega_minus_bound": omega - bound, "omega_minus_ratio": omega - ratio},
        tolerance=t,
    )


def verify_kfold_join(g: Graph, k: int, tol: float | None = None) -> Verdict:
    """k-fold join checks: the Kronecker form of its adjacency matrix
    (exact), the Weyl floor on its least eigenvalue, and the k-divided
    clique bound read off the join."""
    if k < 2:
        raise ValueError("k must be at least 2")
    if g.n < 1:
        raise ValueError("empty graph")
    if k * g.n > 200:
        raise ValueError(f"join on {k * g.n} vertices exceeds the 200-vertex check limit")
    claim = "kfold-join"
    n = g.n
    hk = k_fold_join(g, k)
    a = g.adjacency_matrix()
    expected = np.kron(np.eye(k), a) + np.kron(np.ones((k, k)) - np.eye(k), np.ones((n, n)))
    kron_exact = np.array_equal(hk.adjacency_matrix(), expected)
    lam_min_h = least_eigenvalue(hk)
    lam_min_floor = float(np.linalg.eigvalsh(a - np.ones((n, n)))[0])
    weyl_ok = lam_min_h >= lam_min_floor - 1e-8
    residuals = {
        "weyl_slack": lam_min_h - lam_min_floor,
    }
    holds = kron_exact and weyl_ok
    if g.edge_count == math.comb(n, 2):
        return Verdict(
            claim,
            holds,
            "degenerate" if holds else "kronecker-or-weyl-failed",
            residuals=residuals,
            tolerance=1e-8,
        )
    d = g.average_degree
    s = n - d
    omega = clique_number(g)
    bound = 1.0 / k + n * (k * n - s) / (s * (k * n - s - lam_min_h))
    t = _eqtol(bound, tol)
    residuals["omega_minus_bound"] = omega - bound
    holds = holds and omega >= bound - t
    return Verdict(
        claim,
        holds,
        "full",
        witnesses={"clique_number": omega},
        residuals=residuals,
        tolerance=t,
    )


def verify_regular_join_monotonicity(g: Graph, h: Graph, s: int, tol: float | None = None) -> Verdict:
    """If g is regular and lambda(g) >= lambda(h) on the same vertex count,
    joining s apexes preserves the comparison."""
    if g.n != h.n:
        raise ValueError(f"vertex counts differ ({g.n} vs {h.n})")
    if g.n == 0:
        raise ValueError("empty graphs")
    if s < 1:
        raise ValueError("s must be at least 1")
    if regular_degree(g) is None:
        raise ValueError("first graph must be regular")
    claim = "regular-join-monotonicity"
    lam_g = spectral_radius(g)
    lam_h = spectral_radius(h)
    t = _eqtol(max(lam_g, lam_h), tol)
    if lam_g < lam_h - t:
        return Verdict(claim, True, "vacuous", residuals={"lambda_gap": lam_g - lam_h})
    rho_g = spectral_radius(join(empty_graph(s), g))
    rho_h = spectral_radius(join(empty_graph(s), h))
    t_join = _eqtol(max(rho_g, rho_h), tol)
    return Verdict(
        claim,
        rho_g >= rho_h - t_join,
        "compared",
        residuals={"join_gap": rho_g - rho_h},
        tolerance=t_join,
    )
