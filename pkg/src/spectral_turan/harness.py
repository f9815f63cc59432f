"""Verification campaign driver, deterministic random models, and search.

run_suite applies selected checkers to exhaustive, random, or file-fed
instance streams and aggregates structured counts.  Randomness everywhere
comes from a fixed 64-bit mix generator so campaigns replay identically
across platforms and worker counts; parallel runs merge partial results in
instance order.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field, asdict
from functools import lru_cache

import numpy as np

from . import __version__
from .families import enumerate_regular, family_membership, turan_graph
from .graph6 import graph6_decode, graph6_encode
from .graphs import (
    Graph,
    empty_graph,
    from_edge_mask,
    has_clique,
    induced_subgraph,
    is_isomorphic,
    iter_bits,
    upper_pairs,
)
from .spectra import spectral_radius
from .verifiers import (
    Verdict,
    verify_clique_bound,
    verify_coronal_bound,
    verify_edge_to_spectral,
    verify_family_join_equality,
    verify_family_local,
    verify_guiduli,
    verify_join_preservation,
    verify_kfold_join,
    verify_rayleigh_identity,
    verify_regular_join_monotonicity,
    verify_spectral_turan,
    verify_turan_quotient,
)

MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15

THEOREM_IDS = (
    "spectral-turan",
    "edge-to-spectral",
    "rayleigh-identity",
    "guiduli",
    "join-preservation",
    "family-join-equality",
    "family-local",
    "coronal-bound",
    "turan-quotient",
    "clique-bound",
    "kfold-join",
    "regular-join-monotonicity",
)


class SplitMix64:
    """Deterministic 64-bit mix generator; identical output on every platform."""

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + _GOLDEN) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def uniform(self) -> float:
        return (self.next_u64() >> 11) / float(1 << 53)

    def below(self, n: int) -> int:
        return self.next_u64() % n

    def shuffle(self, seq: list) -> None:
        for i in range(len(seq) - 1, 0, -1):
            j = self.below(i + 1)
            seq[i], seq[j] = seq[j], seq[i]


def derive_seed(seed: int, index: int) -> int:
    return SplitMix64((seed + index * _GOLDEN) & MASK64).next_u64()


def parse_model(model) -> tuple[str, float | int]:
    """Accept 'gnp:P' / 'reg:D' strings or ('gnp', p) / ('regular', d) pairs."""
    if isinstance(model, tuple):
        kind, arg = model
        kind = {"reg": "regular"}.get(kind, kind)
    else:
        try:
            kind, _, arg = model.partition(":")
        except AttributeError:
            raise ValueError(f"unparseable model {model!r}") from None
        kind = {"reg": "regular"}.get(kind, kind)
        arg = float(arg) if kind == "gnp" else int(arg)
    if kind == "gnp":
        p = float(arg)
        if not 0.0 <= p <= 1.0:
            raise ValueError(f"gnp probability {p} outside [0, 1]")
        return ("gnp", p)
    if kind == "regular":
        return ("regular", int(arg))
    raise ValueError(f"unknown random model {model!r}")


def random_graph(model, n: int, seed: int) -> Graph:
    """Deterministic random graph for a fixed (model, n, seed).

    gnp visits pairs in the shared column-major order with one 64-bit draw
    each; the regular model pairs degree stubs from a full shuffle and
    restarts from scratch whenever a loop or duplicate edge appears.
    """
    kind, arg = parse_model(model)
    rng = SplitMix64(seed)
    if kind == "gnp":
        p = float(arg)
        threshold = min(int(p * (1 << 64)), 1 << 64)
        mask = 0
        for k in range(len(upper_pairs(n))):
            if rng.next_u64() < threshold:
                mask |= 1 << k
        return from_edge_mask(n, mask)
    d = int(arg)
    if not 0 <= d < max(n, 1) or (n * d) % 2:
        raise ValueError(f"no {d}-regular graph on {n} vertices")
    # pairing the sparser of degree d and its complement degree keeps the
    # rejection rate workable for dense regular graphs; n(n-1-d) inherits
    # even parity from nd
    if d > (n - 1) // 2:
        from .graphs import complement

        return complement(_pairing_regular(rng, n, n - 1 - d))
    return _pairing_regular(rng, n, d)


def _pairing_regular(rng: SplitMix64, n: int, d: int) -> Graph:
    if d == 0:
        return empty_graph(n)
    stubs = [v for v in range(n) for _ in range(d)]
    for _ in range(100000):
        order = stubs[:]
        rng.shuffle(order)
        rows = [0] * n
        ok = True
        for i in range(0, len(order), 2):
            u, v = order[i], order[i + 1]
            if u == v or rows[u] >> v & 1:
                ok = False
                break
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        if ok:
            return Graph(n, tuple(rows))
    raise RuntimeError(f"pairing model failed to produce a {d}-regular graph on {n} vertices")


def enumerate_labeled_graphs(n: int, offset: int = 0):
    """All 2^C(n,2) labeled graphs on n vertices in edge-mask order."""
    if not 0 <= n <= 8:
        raise ValueError(f"exhaustive enumeration is limited to n <= 8, got {n}")
    total = 1 << len(upper_pairs(n))
    for mask in range(offset, total):
        yield from_edge_mask(n, mask)


# ---------------------------------------------------------------------------
# suite configuration and report


class SuiteConfigError(ValueError):
    pass


@dataclass(frozen=True)
class SuiteConfig:
    """What to verify and on which instance stream."""

    theorems: tuple[str, ...] = ("all",)
    mode: str = "exhaustive"  # exhaustive | random | file
    n: int | None = None
    count: int | None = None
    model: str | None = None
    seed: int = 0
    path: str | None = None
    r_values: tuple[int, ...] = (2,)
    s_values: tuple[int, ...] = (1,)
    k_values: tuple[int, ...] = (2,)
    coronal_offsets: tuple[float, ...] = (0.5, 2.0)
    tolerance: float | None = None
    workers: int = 1

    def theorem_list(self) -> tuple[str, ...]:
        if "all" in self.theorems:
            return THEOREM_IDS
        return tuple(t for t in THEOREM_IDS if t in self.theorems)


def validate_config(config: SuiteConfig) -> None:
    unknown = [t for t in config.theorems if t != "all" and t not in THEOREM_IDS]
    if unknown:
        raise SuiteConfigError(f"unknown theorem ids: {unknown}")
    if not config.theorem_list():
        raise SuiteConfigError("no theorems selected")
    if config.mode == "exhaustive":
        if config.n is None or not 0 <= config.n <= 8:
            raise SuiteConfigError("exhaustive mode needs 0 <= n <= 8")
    elif config.mode == "random":
        if config.count is None or config.count < 1:
            raise SuiteConfigError("random mode needs count >= 1")
        if config.n is None or config.n < 1:
            raise SuiteConfigError("random mode needs n >= 1")
        if config.model is None:
            raise SuiteConfigError("random mode needs a model")
        parse_model(config.model)
        if not 0 <= config.seed <= MASK64:
            raise SuiteConfigError("seed must fit in 64 bits")
    elif config.mode == "file":
        if not config.path:
            raise SuiteConfigError("file mode needs a path")
    else:
        raise SuiteConfigError(f"unknown mode {config.mode!r}")
    if config.workers < 1:
        raise SuiteConfigError("workers must be at least 1")
    if any(r < 1 for r in config.r_values):
        raise SuiteConfigError("r values must be at least 1")
    if any(s < 1 for s in config.s_values):
        raise SuiteConfigError("s values must be at least 1")
    if any(k < 2 for k in config.k_values):
        raise SuiteConfigError("k values must be at least 2")


@dataclass
class TheoremResult:
    theorem: str
    instances: int = 0
    holds: int = 0
    vacuous: int = 0
    degenerate: int = 0
    violations: list = field(default_factory=list)
    min_residuals: dict = field(default_factory=dict)


@dataclass
class Report:
    config: dict
    results: list
    elapsed_seconds: float
    version: str

    @property
    def violation_count(self) -> int:
        return sum(len(res.violations) for res in self.results)


# ---------------------------------------------------------------------------
# per-instance adapters


@lru_cache(maxsize=None)
def _canonical_regular(n: int, d: int) -> Graph | None:
    return next(enumerate_regular(n, d), None)


def _instance_verdicts(theorem: str, g: Graph, cfg: SuiteConfig) -> list[Verdict]:
    tol = cfg.tolerance
    out = []
    n = g.n
    if theorem == "spectral-turan":
        for r in cfg.r_values:
            if r >= 2:
                out.append(verify_spectral_turan(g, r, tol))
    elif theorem == "edge-to-spectral":
        for r in cfg.r_values:
            if r >= 2 and n >= r:
                out.append(verify_edge_to_spectral(g, r, tol))
    elif theorem == "rayleigh-identity":
        for r in cfg.r_values:
            if r >= 2 and n >= r:
                out.append(verify_rayleigh_identity(g, r, tol))
    elif theorem == "guiduli":
        for r in cfg.r_values:
            if r >= 2 and n >= r:
                out.append(verify_guiduli(g, r, tol))
    elif theorem == "join-preservation":
        for r in cfg.r_values:
            if n >= r >= 1:
                for s in cfg.s_values:
                    out.append(verify_join_preservation(g, r, s, tol))
    elif theorem == "family-join-equality":
        for r in cfg.r_values:
            if r >= 2 and n >= r:
                if family_membership(g, r) is None:
                    out.append(Verdict(theorem, True, "not-applicable"))
                    continue
                for s in cfg.s_values:
                    out.append(verify_family_join_equality(g, r, s, tol))
    elif theorem == "family-local":
        for r in cfg.r_values:
            if r >= 2 and n >= r:
                if family_membership(g, r) is None or is_isomorphic(g, turan_graph(n, r)):
                    out.append(Verdict(theorem, True, "not-applicable"))
                else:
                    out.append(verify_family_local(g, r))
    elif theorem == "coronal-bound":
        if n >= 1:
            lam = spectral_radius(g)
            for off in cfg.coronal_offsets:
                out.append(verify_coronal_bound(g, lam + off, tol))
    elif theorem == "turan-quotient":
        if n >= 1:
            for r in cfg.r_values:
                if n >= r >= 1:
                    for s in cfg.s_values:
                        out.append(verify_turan_quotient(n, r, s, tol))
    elif theorem == "clique-bound":
        if n >= 1:
            out.append(verify_clique_bound(g, tol))
    elif theorem == "kfold-join":
        if n >= 1:
            for k in cfg.k_values:
                if k >= 2 and k * n <= 200:
                    out.append(verify_kfold_join(g, k, tol))
    elif theorem == "regular-join-monotonicity":
        if n >= 1:
            lam_h = spectral_radius(g)
            for d in range(n - 1, -1, -1):
                if (n * d) % 2:
                    continue
                if d < lam_h - 1e-8:
                    break
                comparator = _canonical_regular(n, d)
                if comparator is None:
                    continue
                for s in cfg.s_values:
                    out.append(verify_regular_join_monotonicity(comparator, g, s, tol))
    else:  # pragma: no cover
        raise SuiteConfigError(f"unknown theorem id {theorem!r}")
    return out


# ---------------------------------------------------------------------------
# instance streams


def _file_graphs(path: str) -> list[Graph]:
    graphs = []
    with open(path, "r", encoding="ascii") as fh:
        for line in fh:
            line = line.strip()
            if line:
                graphs.append(graph6_decode(line))
    return graphs


def _instance_count(cfg: SuiteConfig) -> int:
    if cfg.mode == "exhaustive":
        return 1 << len(upper_pairs(cfg.n))
    if cfg.mode == "random":
        return cfg.count
    return len(_file_graphs(cfg.path))


def _instance(cfg: SuiteConfig, index: int, file_cache: list | None) -> Graph:
    if cfg.mode == "exhaustive":
        return from_edge_mask(cfg.n, index)
    if cfg.mode == "random":
        return random_graph(cfg.model, cfg.n, derive_seed(cfg.seed, index))
    return file_cache[index]


def _run_range(cfg: SuiteConfig, start: int, stop: int, sink=None) -> dict:
    partial = {
        t: {"instances": 0, "holds": 0, "vacuous": 0, "degenerate": 0, "violations": [], "min_residuals": {}}
        for t in cfg.theorem_list()
    }
    file_cache = _file_graphs(cfg.path) if cfg.mode == "file" else None
    for index in range(start, stop):
        g = _instance(cfg, index, file_cache)
        for theorem in cfg.theorem_list():
            slot = partial[theorem]
            for verdict in _instance_verdicts(theorem, g, cfg):
                slot["instances"] += 1
                category = verdict.category
                if category == "violation":
                    record = {"g6": graph6_encode(g), "residuals": dict(verdict.residuals)}
                    slot["violations"].append((index, record))
                    if sink is not None:
                        sink(theorem, record)
                else:
                    slot[category] += 1
                mins = slot["min_residuals"]
                for name, value in verdict.residuals.items():
                    if name not in mins or value < mins[name]:
                        mins[name] = value
    return partial


def _run_range_star(args):
    return _run_range(*args)


def run_suite(config: SuiteConfig, violation_sink=None) -> Report:
    """Apply every selected checker to every instance and aggregate counts.

    Reports are deterministic for a fixed config (aside from timing):
    instance i of the random mode draws its own seed from (seed, i), so
    worker count only changes scheduling, never results.  Violations are
    pushed to violation_sink as soon as their chunk completes.
    """
    validate_config(config)
    start_time = time.perf_counter()
    total = _instance_count(config)
    if config.workers == 1 or total < 256:
        partials = [_run_range(config, 0, total, violation_sink)]
    else:
        import multiprocessing as mp

        chunk = max(1, math.ceil(total / (config.workers * 8)))
        ranges = [(config, lo, min(lo + chunk, total)) for lo in range(0, total, chunk)]
        ctx = mp.get_context("fork")
        with ctx.Pool(config.workers) as pool:
            partials = pool.map(_run_range_star, ranges)
        if violation_sink is not None:
            for partial in partials:
                for theorem, slot in partial.items():
                    for _, record in slot["violations"]:
                        violation_sink(theorem, record)
    results = []
    for theorem in config.theorem_list():
        merged = TheoremResult(theorem=theorem)
        indexed_violations = []
        for partial in partials:
            slot = partial[theorem]
            merged.instances += slot["instances"]
            merged.holds += slot["holds"]
            merged.vacuous += slot["vacuous"]
            merged.degenerate += slot["degenerate"]
            indexed_violations.extend(slot["violations"])
            for name, value in slot["min_residuals"].items():
                if name not in merged.min_residuals or value < merged.min_residuals[name]:
                    merged.min_residuals[name] = value
        indexed_violations.sort(key=lambda iv: iv[0])
        merged.violations = [record for _, record in indexed_violations]
        results.append(merged)
    elapsed = time.perf_counter() - start_time
    return Report(
        config=asdict(config),
        results=results,
        elapsed_seconds=elapsed,
        version=__version__,
    )


# ---------------------------------------------------------------------------
# extremal hill climb


def _feasible_addition(rows, u: int, v: int, r: int) -> bool:
    """Adding uv keeps the clique number at most r iff the common
    neighborhood carries no (r-1)-clique."""
    common = rows[u] & rows[v]
    if common.bit_count() < r - 1:
        return True
    sub, _ = induced_subgraph(Graph(len(rows), tuple(rows)), iter_bits(common))
    return not has_clique(sub, r - 1)


def extremal_search(n: int, r: int, seed: int, steps: int = 10000) -> Graph:
    """Randomized greedy ascent over single-edge additions maximizing the
    spectral radius subject to a clique-number cap, with random restarts.

    Each restart builds a sparse random feasible graph and climbs; among
    near-best candidate additions one is chosen at random, which keeps the
    climb from locking onto unbalanced multipartite local maxima.  The
    budget counts candidate spectral-radius evaluations; the best graph
    over all restarts is returned.
    """
    if not 1 <= n <= 30:
        raise ValueError("search is intended for 1 <= n <= 30")
    if r < 1:
        raise ValueError("r must be at least 1")
    rng = SplitMix64(seed)
    pairs = upper_pairs(n)
    best_graph = empty_graph(n)
    best_lam = 0.0
    evals = 0
    while evals < steps:
        # sparse random feasible start
        density = 0.1 + 0.3 * rng.uniform()
        threshold = int(density * (1 << 64))
        rows = [0] * n
        order = list(pairs)
        rng.shuffle(order)
        for u, v in order:
            if rng.next_u64() < threshold and _feasible_addition(rows, u, v, r):
                rows[u] |= 1 << v
                rows[v] |= 1 << u
        a = np.zeros((n, n))
        for u in range(n):
            for v in iter_bits(rows[u]):
                a[u, v] = 1.0
        lam = float(np.linalg.eigvalsh(a)[-1])
        while evals < steps:
            candidates = []
            top = lam
            for u, v in pairs:
                if rows[u] >> v & 1:
                    continue
                if not _feasible_addition(rows, u, v, r):
                    continue
                a[u, v] = a[v, u] = 1.0
                cand_lam = float(np.linalg.eigvalsh(a)[-1])
                a[u, v] = a[v, u] = 0.0
                evals += 1
                if cand_lam > lam + 1e-12:
                    candidates.append((cand_lam, u, v))
                    if cand_lam > top:
                        top = cand_lam
                if evals >= steps:
                    break
            if not candidates:
                break
            band = [c for c in candidates if c[0] >= top - 0.3 * (top - lam)]
            cand_lam, u, v = band[rng.below(len(band))]
            rows[u] |= 1 << v
            rows[v] |= 1 << u
            a[u, v] = a[v, u] = 1.0
            lam = cand_lam
        if lam > best_lam:
            best_lam = lam
            best_graph = Graph(n, tuple(rows))
    return best_graph
