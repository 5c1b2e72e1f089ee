"""The beta = 1 pipeline: expander supply, walk-product amplification, embedding
into an (alpha, 1)-PLG, and the layered independent-set estimator.

All logarithms in this module are natural; reports record that explicitly
because the quantities involved (k windows, alpha = log n_d) are sensitive to
the base.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ._assembly import AssembledPart, assemble, assign_pair_slots, double_with_pairs, top_interval_slots
from .errors import InputError, InternalError, ResourceLimitError
from .graph import MultiGraph, is_independent
from .model import PowerLawParams, guarded_ceil, guarded_floor, interval_size_exact
from .realizer import interval_degree_sequence
from .report import EmbeddingReport, degree_conformance
from .solver import exact_mis, greedy_maximal_is

_MAX_BUMPS = 64
WALK_VERTEX_CAP = 200_000


# -- expander supply ----------------------------------------------------------


@dataclass
class ExpanderCertificate:
    """A d-regular simple graph with its walk-matrix spectral certificate.

    ``lam`` is max(lambda_1, |lambda_min|) of A/d, where lambda_1 is the second
    largest and lambda_min the smallest eigenvalue; ``passes`` says whether it
    clears 2*sqrt(d-1)/d plus a 0.05 allowance (near-Ramanujan tolerance).
    """

    graph: MultiGraph
    d: int
    lam: float
    lambda_1: float
    lambda_min: float
    bound: float
    passes: bool
    seed: int
    attempts: int

    def to_dict(self) -> dict:
        return {
            "n": self.graph.vertex_count,
            "d": self.d,
            "lambda": self.lam,
            "lambda_1": self.lambda_1,
            "lambda_min": self.lambda_min,
            "bound": self.bound,
            "tolerance": 0.05,
            "passes": self.passes,
            "seed": self.seed,
            "attempts": self.attempts,
        }


def _transition_spectrum(g: MultiGraph, d: int) -> tuple[float, float]:
    """(lambda_1, lambda_min) of the walk transition matrix A/d."""
    n = g.vertex_count
    a = np.zeros((n, n))
    for (u, v), m in g.edge_dict().items():
        a[u, v] += m
        a[v, u] += m
    ev = np.linalg.eigvalsh(a / d)
    return float(ev[-2]), float(ev[0])


def _pairing_model(n: int, d: int, rng: np.random.Generator) -> MultiGraph | None:
    """One pairing-model draw with stub repair: loops and repeats go back into
    the pool and are re-shuffled until none remain.  None when the leftover
    stubs cannot be joined by any new edge (the draw failed)."""
    edges: set[tuple[int, int]] = set()
    stubs = list(np.repeat(np.arange(n), d))
    while stubs:
        retry: dict[int, int] = {}
        arr = np.array(stubs)
        rng.shuffle(arr)
        for u, v in zip(arr[0::2], arr[1::2]):
            u, v = int(u), int(v)
            if u > v:
                u, v = v, u
            if u != v and (u, v) not in edges:
                edges.add((u, v))
            else:
                retry[u] = retry.get(u, 0) + 1
                retry[v] = retry.get(v, 0) + 1
        if retry:
            nodes = sorted(retry)
            joinable = any(
                (min(a, b), max(a, b)) not in edges
                for i, a in enumerate(nodes)
                for b in nodes[i + 1 :]
            )
            if not joinable:
                return None
        stubs = [node for node in sorted(retry) for _ in range(retry[node])]
    return MultiGraph(n, {e: 1 for e in edges})


def random_regular_expander(n: int, d: int, seed: int) -> ExpanderCertificate:
    """A random d-regular simple graph with an explicit spectral certificate.

    K_{d+1} is returned deterministically when n = d+1 (its walk matrix has
    lambda = 1/d, always passing).  Otherwise up to 32 seeded pairing-model
    candidates are tried and the first passing one is returned; if none
    passes, the best-lambda candidate is returned with passes=False.
    """
    if d < 3:
        raise InputError("expander degree must be >= 3")
    if d >= n:
        raise InputError("need d < n")
    if (n * d) % 2:
        raise InputError("n*d must be even")
    bound = 2 * math.sqrt(d - 1) / d
    if n == d + 1:
        edges = {(u, v): 1 for u in range(n) for v in range(u + 1, n)}
        g = MultiGraph(n, edges)
        l1 = lmin = -1.0 / d
        return ExpanderCertificate(
            g, d, 1.0 / d, l1, lmin, bound, 1.0 / d <= bound + 0.05, seed, 0
        )
    best: ExpanderCertificate | None = None
    for attempt in range(32):
        rng = np.random.default_rng([seed, attempt])
        g = None
        for _ in range(200):
            g = _pairing_model(n, d, rng)
            if g is not None:
                break
        if g is None:
            continue
        l1, lmin = _transition_spectrum(g, d)
        lam = max(l1, abs(lmin))
        cert = ExpanderCertificate(
            g, d, lam, l1, lmin, bound, lam <= bound + 0.05, seed, attempt + 1
        )
        if cert.passes:
            return cert
        if best is None or cert.lam < best.lam:
            best = cert
    if best is None:
        raise InternalError("pairing model produced no simple graph in 32 attempts")
    return best


# -- walk products ------------------------------------------------------------


@dataclass
class WalkProduct:
    """Graph on length-k walks of the expander; walks are adjacent iff the
    union of their vertex sets is not independent in the base graph.  A walk
    whose own vertex set is not independent carries a self-loop."""

    base: MultiGraph
    expander: ExpanderCertificate
    k: int
    walks: list[tuple[int, ...]]
    product: MultiGraph

    @property
    def n_d(self) -> int:
        return self.product.vertex_count


def walk_product(
    g: MultiGraph, h: ExpanderCertificate, k: int, cap: int = WALK_VERTEX_CAP
) -> WalkProduct:
    """Build the k-walk product of g over the expander h.

    Edge work is quadratic in the walk count n*d^(k-1); the cap guards the
    vertex count only.
    """
    if not g.is_simple():
        raise InputError("walk products are defined for simple base graphs")
    if g.vertex_count != h.graph.vertex_count:
        raise InputError("base graph and expander must share a vertex set")
    if k < 1:
        raise InputError("k must be >= 1")
    n = g.vertex_count
    count = n * h.d ** (k - 1)
    if count > cap:
        raise ResourceLimitError(
            f"walk product would have {count} vertices (cap {cap})"
        )
    nbrs = [sorted(s) for s in h.graph.adjacency_sets()]
    walks: list[tuple[int, ...]] = []
    stack: list[tuple[int, ...]] = [(v,) for v in range(n - 1, -1, -1)]
    while stack:
        w = stack.pop()
        if len(w) == k:
            walks.append(w)
            continue
        for u in reversed(nbrs[w[-1]]):
            stack.append(w + (u,))
    if len(walks) != count:
        raise InternalError("walk enumeration does not match n*d^(k-1)")

    gadj = [0] * n
    for (u, v), _m in g.edge_dict().items():
        if u != v:
            gadj[u] |= 1 << v
            gadj[v] |= 1 << u

    def dependent(mask: int) -> bool:
        m = mask
        while m:
            lsb = m & -m
            v = lsb.bit_length() - 1
            if gadj[v] & mask:
                return True
            m ^= lsb
        return False

    masks = []
    for w in walks:
        mask = 0
        for v in w:
            mask |= 1 << v
        masks.append(mask)

    edges: dict[tuple[int, int], int] = {}
    for i in range(count):
        if dependent(masks[i]):
            edges[(i, i)] = 1
        for j in range(i + 1, count):
            if dependent(masks[i] | masks[j]):
                edges[(i, j)] = 1
    return WalkProduct(g, h, k, walks, MultiGraph(count, edges))


def count_walks_within(h: ExpanderCertificate, members: list[int], k: int) -> int:
    """Exact number of length-k walks of the expander confined to ``members``,
    by dynamic programming over the restricted adjacency matrix."""
    if not members:
        return 0
    idx = {v: i for i, v in enumerate(members)}
    m = len(members)
    a = np.zeros((m, m), dtype=np.int64)
    for (u, v), _ in h.graph.edge_dict().items():
        if u in idx and v in idx and u != v:
            a[idx[u], idx[v]] += 1
            a[idx[v], idx[u]] += 1
    vec = np.ones(m, dtype=np.int64)
    for _ in range(k - 1):
        vec = a @ vec
    return int(vec.sum())


# -- parameter selection ------------------------------------------------------


@dataclass(frozen=True)
class KWindow:
    """Walk length window [lnln n/(3 ln d), lnln n/ln d] and the pick in it."""

    k_l: float
    k_u: float
    k: int
    delta_k: float  # d^(k-1) * 3k^2 at the picked k
    window_empty: bool

    def to_dict(self) -> dict:
        return {
            "k_l": self.k_l,
            "k_u": self.k_u,
            "k": self.k,
            "delta_k": self.delta_k,
            "window_empty": self.window_empty,
        }


def walk_degree_bound(d: int, k: int) -> float:
    """Design bound d^(k-1) * 3k^2 for the walk product's maximum degree."""
    return d ** (k - 1) * 3.0 * k * k


def choose_k(n: int, d: int) -> KWindow:
    """Pick k in the window whose design degree bound best matches ln(n).

    Natural logarithms throughout.  Requires n >= 16 so lnln(n) > 0.
    """
    if n < 16:
        raise InputError("choose_k needs n >= 16")
    if d < 3:
        raise InputError("need d >= 3")
    lnln = math.log(math.log(n))
    k_l = lnln / (3 * math.log(d))
    k_u = lnln / math.log(d)
    lo = max(1, math.ceil(k_l))
    hi = max(1, math.floor(k_u))
    if lo > hi:
        k = max(1, math.floor(k_u))
        return KWindow(k_l, k_u, k, walk_degree_bound(d, k), True)
    target = math.log(math.log(n))
    k = min(
        range(lo, hi + 1),
        key=lambda kk: (abs(math.log(walk_degree_bound(d, kk)) - target), kk),
    )
    return KWindow(k_l, k_u, k, walk_degree_bound(d, k), False)


@dataclass(frozen=True)
class Beta1Params:
    """Embedding parameters for beta = 1: alpha = ln(n_d), x = ln(n_d)/e^alpha."""

    n_d: float
    alpha: float
    x: float
    delta: int
    a_x: int
    h: float  # sqrt(e^alpha / alpha)
    L: int  # round(alpha), at least 1
    bumps: int

    def to_dict(self) -> dict:
        return {
            "n_d": self.n_d,
            "alpha": self.alpha,
            "x": self.x,
            "delta": self.delta,
            "a_x": self.a_x,
            "h": self.h,
            "L": self.L,
            "bumps": self.bumps,
        }


def _beta1_at_alpha(n_d: float, alpha: float, bumps: int) -> Beta1Params:
    delta = guarded_floor(math.exp(alpha))
    x = math.log(n_d) / math.exp(alpha)
    a_x = max(1, guarded_ceil(x * delta))
    return Beta1Params(
        n_d=n_d,
        alpha=alpha,
        x=x,
        delta=delta,
        a_x=a_x,
        h=math.sqrt(math.exp(alpha) / alpha),
        L=max(1, round(alpha)),
        bumps=bumps,
    )


def _beta1_conditions(params: Beta1Params) -> bool:
    p = PowerLawParams(params.alpha, 1.0)
    ln_nd = math.log(params.n_d)
    cond_i = interval_size_exact(p, params.a_x, params.delta) >= params.n_d
    # Condition (II): the first usable slot must reach log(n_d).  The real
    # product x*delta equals log(n_d) only when e^alpha is an integer, so the
    # integer slot floor carries the condition.
    cond_ii = params.a_x + 1e-9 >= ln_nd
    return cond_i and cond_ii


def choose_params_beta1(n_d: int | float) -> Beta1Params:
    """alpha = ln(n_d), bumped by ln(1+1/n_d) steps until the interval
    conditions hold against exact summation."""
    if n_d < 3:
        raise InputError("need n_d >= 3")
    alpha = math.log(n_d)
    for bumps in range(_MAX_BUMPS + 1):
        params = _beta1_at_alpha(n_d, alpha, bumps)
        if _beta1_conditions(params):
            return params
        alpha += math.log1p(1.0 / n_d)
    raise InternalError("beta=1 parameter conditions did not stabilize in 64 steps")


# -- estimators ---------------------------------------------------------------


@dataclass(frozen=True)
class LayeredBound:
    """Layered cover estimate for IS([x*delta, delta]) in an (alpha,1)-PLG."""

    exact: int
    asymptotic: float
    naive: int
    layers: tuple[tuple[int, int, int], ...]  # (lo, hi, term) per layer

    def to_dict(self) -> dict:
        return {
            "exact": self.exact,
            "asymptotic": self.asymptotic,
            "naive": self.naive,
            "layers": [list(t) for t in self.layers],
        }


def layered_is_bound(params: Beta1Params) -> LayeredBound:
    """Sum over L layers [x*delta*h^j, x*delta*h^(j+1)) of
    ceil(layer population / layer floor), with exact populations.

    Layer boundaries are ceil(x*delta*h^j) clipped to delta, the last forced
    to delta; with h = sqrt(e^alpha/alpha) only the first two layers are
    non-empty (x*delta*h^2 = delta).  The asymptotic comparison value is
    (e^a/L)*(1 - a/e^a)/(1 - (a/e^a)^(1/L)).
    """
    p = PowerLawParams(params.alpha, 1.0)
    d = params.delta
    xd = params.x * d
    bounds = [guarded_ceil(xd * params.h**j) for j in range(params.L)]
    bounds.append(d + 1)  # forced final boundary: last layer ends at delta
    layers = []
    total = 0
    for j in range(params.L):
        lo = max(params.a_x, bounds[j])
        hi = min(d, bounds[j + 1] - 1) if j < params.L - 1 else d
        if lo > hi:
            layers.append((lo, hi, 0))
            continue
        pop = interval_size_exact(p, lo, hi)
        term = -(-pop // max(1, bounds[j]))
        layers.append((lo, hi, term))
        total += term
    naive_pop = interval_size_exact(p, params.a_x, d)
    naive = -(-naive_pop // params.a_x)
    a = params.alpha
    ratio = a / math.exp(a)
    asym = math.exp(a) / params.L * (1 - ratio) / (1 - ratio ** (1.0 / params.L))
    return LayeredBound(total, asym, naive, tuple(layers))


def alon_interval(
    is_g: int, n: int, d: int, lambda_1: float, lambda_min: float, k: int
) -> tuple[float, float]:
    """Spectral bracket for the independence number of the k-walk product.

    [is*d^(k-1)*(r + lambda_min*(1-r))^(k-1), is*d^(k-1)*(r + lambda_1*(1-r))^(k-1)]
    with r = is/n.  The lower endpoint is clamped at 0 when a negative inner
    base raised to an odd power would make it negative.
    """
    if not (0 <= is_g <= n):
        raise InputError("need 0 <= is_g <= n")
    if not (-1 <= lambda_min <= lambda_1 <= 1):
        raise InputError("eigenvalues must satisfy -1 <= lambda_min <= lambda_1 <= 1")
    r = is_g / n
    scale = is_g * d ** (k - 1)
    lo = scale * (r + lambda_min * (1 - r)) ** (k - 1)
    hi = scale * (r + lambda_1 * (1 - r)) ** (k - 1)
    if lo < 0:
        lo = 0.0
    return lo, hi


@dataclass(frozen=True)
class GapRatio:
    """Amplified approximation-gap ratio between the two instance classes."""

    ratio: float
    min_expander_degree: float  # the d > 16/(b-a)^2 requirement

    def to_dict(self) -> dict:
        return {"ratio": self.ratio, "min_expander_degree": self.min_expander_degree}


def gap_ratio(a: float, b: float, eps2: float, k: int) -> GapRatio:
    """(b/a) * ((b-eps2)/(a+eps2))^(k-1), with the minimal expander degree
    16/(b-a)^2 that makes eps2 achievable."""
    if not (0 < a < b < 1):
        raise InputError("need 0 < a < b < 1")
    if eps2 < 0 or b - eps2 <= 0 or a + eps2 <= 0:
        raise InputError("need eps2 >= 0 with b-eps2 > 0 and a+eps2 > 0")
    ratio = (b / a) * ((b - eps2) / (a + eps2)) ** (k - 1)
    return GapRatio(ratio, 16.0 / (b - a) ** 2)


def amplification_feasibility(
    b: float, eps2: float, n: int, d: int, k: int, eps: float
) -> dict:
    """Both sides of the feasibility inequalities, evaluated (not asserted):
    (b+eps2)^(k-1) > (log(n*d^(k-1)))^(-1/eps) and its log-n restatement."""
    if eps <= 0:
        raise InputError("eps must be positive")
    lhs = (b + eps2) ** (k - 1)
    rhs = math.log(n * d ** (k - 1)) ** (-1.0 / eps)
    b_prime = 1.0 / (b + eps2)
    alt_lhs = math.log(n) ** (1.0 / eps) * (
        1 + (k - 1) * math.log(d) / math.log(n)
    ) ** (1.0 / eps)
    alt_rhs = b_prime ** (k - 1)
    return {
        "lhs": lhs,
        "rhs": rhs,
        "holds": lhs > rhs,
        "log_form_lhs": alt_lhs,
        "log_form_rhs": alt_rhs,
        "eps": eps,
    }


def degree_one_heuristic(g: MultiGraph) -> list[int]:
    """Independent set of loop-free degree-1 vertices, one per matched pair.

    Greedy in id order; returns at least half the degree-1 vertices, which on
    an (alpha,1)-PLG is a ln(n)-factor approximation.
    """
    deg = g.degrees()
    adj = g.adjacency_sets()
    chosen: list[int] = []
    in_set: set[int] = set()
    for v in range(g.vertex_count):
        if deg[v] != 1 or g.has_loop(v):
            continue
        (u,) = adj[v] or {v}
        if u in in_set:
            continue
        chosen.append(v)
        in_set.add(v)
    return chosen


# -- the embedding ------------------------------------------------------------


def embed_beta1(
    g: MultiGraph,
    d: int,
    seed: int,
    k_override: int | None = None,
    cap: int = WALK_VERTEX_CAP,
    solver_budget: int = 2_000_000,
) -> tuple[MultiGraph, EmbeddingReport]:
    """Embed the walk product of g into a full (alpha, 1)-PLG.

    Pipeline: expander on g's vertex set, k-walk product D, pair doubling of D
    (walk self-loops become matching multi-edges so embedded vertices stay
    loop-free), slot assignment in [x*delta, delta], leftover slots realized
    as G1, the low interval [1, x*delta) realized as G2.

    k defaults to 2 at desk scale; the asymptotic window is reported
    alongside whenever the input is large enough to define it.
    """
    if not g.is_simple():
        raise InputError("embedding requires a simple input graph")
    n = g.vertex_count
    h = random_regular_expander(n, d, seed)
    k = 2 if k_override is None else k_override
    if k < 1:
        raise InputError("k must be >= 1")
    window = choose_k(n, d) if n >= 16 else None

    wp = walk_product(g, h, k, cap)
    dgraph = wp.product
    n_d = dgraph.vertex_count
    doubled = double_with_pairs(dgraph, loops="to_matching")
    ddeg = doubled.degrees()
    pair_deg = [int(ddeg[2 * i]) for i in range(n_d)]
    order = sorted(range(n_d), key=lambda i: (pair_deg[i], i))

    # The doubling needs 2*n_d slots at degrees covering the doubled walk
    # degrees (up to ~4*n_d on dense products), twice what condition (I) asks
    # for.  Bump steps scale as 1/n_d while the needed growth of e^alpha does
    # not, so the number of steps is found by exponential + binary search
    # rather than walking one step at a time.
    ordered_deg = [pair_deg[i] for i in order]
    base = choose_params_beta1(n_d)
    step = math.log1p(1.0 / n_d)

    def trial(t: int):
        params = _beta1_at_alpha(float(n_d), base.alpha + t * step, base.bumps + t)
        if not _beta1_conditions(params):
            return None
        slots = top_interval_slots(PowerLawParams(params.alpha, 1.0), params.a_x)
        assigned = assign_pair_slots(slots, ordered_deg)
        if assigned is None:
            return None
        return params, assigned

    got = trial(0)
    if got is None:
        t_lo, t_hi = 0, 1
        while trial(t_hi) is None:
            t_lo, t_hi = t_hi, t_hi * 2
            if t_hi > 1 << 30:
                raise InternalError("slot assignment for the walk product did not stabilize")
        while t_hi - t_lo > 1:
            mid = (t_lo + t_hi) // 2
            if trial(mid) is None:
                t_lo = mid
            else:
                t_hi = mid
        got = trial(t_hi)
    params, assigned = got
    p = PowerLawParams(params.alpha, 1.0)
    sorted_targets, leftover = assigned
    pair_targets: list[tuple[int, int]] = [(0, 0)] * n_d
    for j, i in enumerate(order):
        pair_targets[i] = sorted_targets[j]

    g2_targets = (
        interval_degree_sequence(p, 1, params.a_x - 1)
        if params.a_x > 1
        else np.zeros(0, dtype=np.int64)
    )
    parts = [
        AssembledPart("G1", "residual-G1", leftover),
        AssembledPart("G2", "residual-G2", g2_targets),
    ]
    surplus_part = "G1" if len(leftover) else "G2"
    graph, certs, deficits = assemble(p, doubled, pair_targets, parts, surplus_part)

    # Witness: walks confined to a maximal independent set of g are pairwise
    # non-adjacent in D; their first pair members stay independent in the PLG.
    witness_source = greedy_maximal_is(g)
    smask = 0
    for v in witness_source:
        smask |= 1 << v
    confined = [
        i
        for i, w in enumerate(wp.walks)
        if all(smask >> v & 1 for v in w)
    ]
    dp_count = count_walks_within(h, witness_source, k)
    if dp_count != len(confined):
        raise InternalError("walk DP count disagrees with enumeration")
    witness = sorted(2 * i for i in confined)
    if not is_independent(graph, witness):
        raise InternalError("mapped witness is not independent in the output")

    solve = exact_mis(g, budget=solver_budget)
    lo, hi = alon_interval(solve.size, n, d, h.lambda_1, h.lambda_min, k)
    layered = layered_is_bound(params)
    bracket_ratio = hi / lo if lo > 0 else None
    gap_record = {
        "bracket_lo": lo,
        "bracket_hi": hi,
        "bracket_ratio": bracket_ratio,
        "eps2_surrogate": h.lam,
        "k": k,
    }
    # Feasibility inequality sides are reported, never asserted: they encode
    # asymptotic viability and only bite at large n.  The instance's own
    # independence ratio stands in for the class constant b; eps = 0.5.
    feasibility = amplification_feasibility(
        b=solve.size / n, eps2=h.lam, n=n, d=d, k=k, eps=0.5
    )

    conformance = degree_conformance(graph, p, deficits)
    part_ranges = {"D": (0, 2 * n_d)}
    part_sizes = {"D": 2 * n_d}
    for part in parts:
        part_ranges[part.name] = (part.offset, part.offset + len(part.targets))
        part_sizes[part.name] = len(part.targets)
    is_upper = {
        "D": float(n_d),  # pair cliques
        "G1": float(certs["G1"].size) if "G1" in certs else 0.0,
        "G2": float(certs["G2"].size) if "G2" in certs else 0.0,
    }
    report = EmbeddingReport(
        kind="beta1",
        params=params.to_dict(),
        part_ranges=part_ranges,
        part_sizes=part_sizes,
        is_upper_bounds=is_upper,
        bounds_closed={
            "layered_exact": float(layered.exact),
            "layered_asymptotic": layered.asymptotic,
            "layered_naive": float(layered.naive),
            "alon_lo": lo,
            "alon_hi": hi,
        },
        is_lower_witness=witness,
        conformance=conformance,
        parity_deficits=deficits,
        certificates=certs,
        extras={
            "log_base": "natural",
            "lambda": h.lam,
            "lambda_1": h.lambda_1,
            "lambda_min": h.lambda_min,
            "lambda_bound": h.bound,
            "expander_passes": h.passes,
            "seed": seed,
            "d": d,
            "k": k,
            "n_base": n,
            "k_window": window.to_dict() if window else None,
            "n_d": n_d,
            "delta_k_design": walk_degree_bound(d, k),
            "product_max_degree": int(dgraph.degrees().max()) if n_d else 0,
            "is_g": solve.size,
            "is_g_optimal": solve.optimal,
            "gap_ratio": gap_record,
            "feasibility": feasibility,
            "witness_source_vertices": sorted(witness_source),
            "witness_walk_count": dp_count,
            "layered": layered.to_dict(),
        },
    )
    return graph, report
