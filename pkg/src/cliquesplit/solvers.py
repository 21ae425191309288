"""Subproblem solvers behind one interface.

Backends:

- ``exact``: branch-and-bound with a greedy-coloring upper bound — the
  reference oracle, deterministic.
- ``sa-clique``: simulated annealing over fixed-size vertex subsets
  (energy = missing edges inside the subset), wrapped in a binary search
  over the target size.
- ``sa-qubo``: single-bit-flip Metropolis annealing on the clique QUBO.
- ``descent``: greedy best-improvement bit flips to a 1-flip local
  minimum, restarted from random assignments.
- ``sampler``: a pluggable annealer stand-in; each sample is polished by
  the descent before the best is kept.

Every stochastic backend is bit-reproducible given its seed and budget.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, replace
from typing import Callable, Protocol, Sequence

import numpy as np

from .graphs import CliqueResult, CliqueStats, Graph, clique_result, is_clique
from .qubo import Qubo, evaluate, mc_to_qubo

SA_CLIQUE_DEFAULT_BUDGET = 30_000
SA_QUBO_DEFAULT_BUDGET = 20_000
MOCK_SAMPLER_BUDGET = 200


class SolverError(Exception):
    """Base class for solver failures."""


class BudgetExceededError(SolverError):
    """Search budget exhausted; carries the best result found so far."""

    def __init__(self, message: str, best: CliqueResult | None = None):
        super().__init__(message)
        self.best = best


class SubproblemSolveError(SolverError):
    """A subproblem solve failed; carries the subproblem for replay."""

    def __init__(self, message: str, subgraph: Graph, anchor: frozenset[int]):
        super().__init__(message)
        self.subgraph = subgraph
        self.anchor = anchor


@dataclass(frozen=True)
class SolverConfig:
    """Shared knobs for the stochastic backends.

    ``budget`` counts moves (annealers) or branch nodes (exact); None
    means the backend default. ``alpha`` is the geometric cooling factor
    T_{n+1} = alpha * T_n. ``initial_temperature`` None means calibrate so
    that roughly half of the uphill probe moves would be accepted.
    ``num_reads`` is the sample count for the sampler pipeline and the
    restart count for descent; ``restarts`` is the attempts-per-size limit
    of the sa-clique binary search predicate.
    """

    seed: int = 0
    budget: int | None = None
    alpha: float = 0.9996
    initial_temperature: float | None = None
    num_reads: int = 500
    restarts: int = 3

    def __post_init__(self):
        if not 0.0 < self.alpha < 1.0:
            raise ValueError("alpha must lie strictly between 0 and 1")
        if self.budget is not None and self.budget < 1:
            raise ValueError("budget must be positive")
        if self.restarts < 1:
            raise ValueError("restarts must be >= 1")


@dataclass(frozen=True)
class SampleSet:
    """Assignments with energies, ascending by energy."""

    samples: tuple[tuple[tuple[int, ...], float], ...]

    @classmethod
    def from_assignments(cls, q: Qubo, assignments: Sequence[Sequence[int]]) -> "SampleSet":
        scored = [(tuple(x), evaluate(q, x)) for x in assignments]
        scored.sort(key=lambda pair: pair[1])
        return cls(tuple(scored))

    def __len__(self) -> int:
        return len(self.samples)


class SamplerProtocol(Protocol):
    def __call__(self, q: Qubo, num_reads: int, seed: int) -> SampleSet: ...


def greedy_clique(g: Graph) -> list[int]:
    """Grow a clique by repeatedly adding the highest-degree compatible vertex."""
    candidates = set(range(g.num_vertices))
    clique: list[int] = []
    while candidates:
        v = min(candidates, key=lambda u: (-g.degree(u), u))
        clique.append(v)
        candidates &= g.neighbors(v)
    return clique


def _color_sort(cand: int, adj: list[int]) -> tuple[list[int], list[int]]:
    """Greedy coloring of the candidate bitset; vertices come back grouped
    by color class with bounds[i] = color number, an upper bound on any
    clique extending through order[i:]."""
    order: list[int] = []
    bounds: list[int] = []
    uncolored = cand
    color = 0
    while uncolored:
        color += 1
        q = uncolored
        while q:
            b = q & -q
            v = b.bit_length() - 1
            q &= ~(adj[v] | b)
            uncolored ^= b
            order.append(v)
            bounds.append(color)
    return order, bounds


def exact_max_clique(g: Graph, budget: int | None = None) -> CliqueResult:
    """Exact maximum clique by branch-and-bound over vertex bitsets.

    Vertices are relabelled in descending-degree order so the greedy
    coloring packs tight bounds; a greedy clique seeds the incumbent.
    ``budget`` caps the number of branch nodes; exceeding it raises
    BudgetExceededError carrying the best clique found so far.
    """
    n = g.num_vertices
    if n == 0:
        return CliqueResult(frozenset(), 0, "exact")
    by_degree = sorted(range(n), key=lambda v: (-g.degree(v), v))
    position = {v: i for i, v in enumerate(by_degree)}
    adj = [0] * n
    for v in range(n):
        mask = 0
        for u in g.neighbors(v):
            mask |= 1 << position[u]
        adj[position[v]] = mask

    seed_clique = [position[v] for v in greedy_clique(g)]
    best_size = len(seed_clique)
    best = list(seed_clique)
    stack: list[int] = []
    nodes = 0

    def result_so_far() -> CliqueResult:
        return clique_result(g, (by_degree[i] for i in best), "exact")

    def expand(rsize: int, cand: int) -> None:
        nonlocal best_size, best, nodes
        order, bounds = _color_sort(cand, adj)
        for i in range(len(order) - 1, -1, -1):
            if rsize + bounds[i] <= best_size:
                return
            nodes += 1
            if budget is not None and nodes > budget:
                raise BudgetExceededError(f"exceeded {budget} branch nodes", result_so_far())
            v = order[i]
            stack.append(v)
            newcand = cand & adj[v]
            if newcand:
                expand(rsize + 1, newcand)
            elif rsize + 1 > best_size:
                best_size = rsize + 1
                best = list(stack)
            stack.pop()
            cand ^= 1 << v

    expand(0, (1 << n) - 1)
    return result_so_far()


def _adjacency_matrix(g: Graph) -> np.ndarray:
    n = g.num_vertices
    mat = np.zeros((n, n), dtype=bool)
    for v in range(n):
        nbrs = sorted(g.neighbors(v))
        if nbrs:
            mat[v, nbrs] = True
    return mat


def _calibrate_temperature(deltas: Sequence[float]) -> float:
    """Pick T so uphill probe moves are accepted about half the time."""
    uphill = [d for d in deltas if d > 0]
    if not uphill:
        return 1.0
    return float(np.mean(uphill)) / math.log(2.0)


def sa_clique(g: Graph, m: int, cfg: SolverConfig = SolverConfig()) -> set[int] | None:
    """Hunt for a clique of exactly ``m`` vertices by annealing a size-m subset.

    The state is an m-vertex subset, its energy the number of non-adjacent
    pairs inside it; a move swaps one member for one outsider and is
    accepted by the Metropolis rule under geometric cooling. Returns the
    subset (a verified clique) when the energy reaches zero, or None at
    budget end. Never returns a false positive.
    """
    n = g.num_vertices
    if not 1 <= m <= n:
        raise ValueError(f"target size {m} outside [1, {n}]")
    rng = np.random.default_rng(cfg.seed)
    nonadj = ~_adjacency_matrix(g)
    np.fill_diagonal(nonadj, False)
    nonadj_counts = nonadj.astype(np.int64)

    members = rng.choice(n, size=m, replace=False).astype(np.int64)
    in_set = np.zeros(n, dtype=bool)
    in_set[members] = True
    outside = np.flatnonzero(~in_set).astype(np.int64)
    cnt = nonadj_counts[:, members].sum(axis=1)
    energy = int(cnt[members].sum()) // 2

    def verified(subset: np.ndarray) -> set[int]:
        vs = set(int(v) for v in subset)
        if not is_clique(g, vs):
            raise RuntimeError("zero-energy subset failed clique verification")
        return vs

    if energy == 0:
        return verified(members)
    if len(outside) == 0:
        return None  # m == n and the graph is not complete

    budget = cfg.budget if cfg.budget is not None else SA_CLIQUE_DEFAULT_BUDGET
    if cfg.initial_temperature is not None:
        temperature = cfg.initial_temperature
    else:
        probes = []
        for _ in range(100):
            u = members[rng.integers(len(members))]
            w = outside[rng.integers(len(outside))]
            probes.append(float(cnt[w] - cnt[u] - int(nonadj[u, w])))
        temperature = _calibrate_temperature(probes)

    alpha = cfg.alpha
    batch = 4096
    step = 0
    while step < budget:
        k = min(batch, budget - step)
        member_idx = rng.integers(0, len(members), size=k)
        outside_idx = rng.integers(0, len(outside), size=k)
        uniforms = rng.random(k)
        for t in range(k):
            i = member_idx[t]
            o = outside_idx[t]
            u = members[i]
            w = outside[o]
            delta = int(cnt[w]) - int(cnt[u]) - int(nonadj[u, w])
            if delta <= 0 or uniforms[t] < math.exp(-delta / max(temperature, 1e-12)):
                members[i] = w
                outside[o] = u
                cnt += nonadj_counts[w]
                cnt -= nonadj_counts[u]
                energy += delta
                if energy == 0:
                    return verified(members)
            temperature *= alpha
        step += k
    return None


def _flip_neighbors(q: Qubo) -> list[list[tuple[int, float]]]:
    nbrs: list[list[tuple[int, float]]] = [[] for _ in range(q.num_variables)]
    for (i, j), a in q.quadratic.items():
        nbrs[i].append((j, a))
        nbrs[j].append((i, a))
    return nbrs


def _gains(q: Qubo, x: Sequence[int]) -> list[float]:
    """gain[i] = energy change of setting x_i from 0 to 1, given the rest."""
    gains = [0.0] * q.num_variables
    for i, a in q.linear.items():
        gains[i] += a
    for (i, j), a in q.quadratic.items():
        if x[j]:
            gains[i] += a
        if x[i]:
            gains[j] += a
    return gains


def sa_qubo(q: Qubo, cfg: SolverConfig = SolverConfig()) -> tuple[list[int], float]:
    """Single-bit-flip Metropolis annealing from a uniform random start.

    Returns the best assignment seen and its energy (consistent with
    ``evaluate``).
    """
    n = q.num_variables
    if n == 0:
        return [], 0.0
    rng = np.random.default_rng(cfg.seed)
    x = [int(b) for b in rng.integers(0, 2, size=n)]
    nbrs = _flip_neighbors(q)
    gains = _gains(q, x)
    energy = evaluate(q, x)
    best_energy = energy
    best_x = list(x)

    budget = cfg.budget if cfg.budget is not None else SA_QUBO_DEFAULT_BUDGET
    if cfg.initial_temperature is not None:
        temperature = cfg.initial_temperature
    else:
        probe_idx = rng.integers(0, n, size=min(100, budget))
        probes = [gains[i] if x[i] == 0 else -gains[i] for i in probe_idx]
        temperature = _calibrate_temperature(probes)

    alpha = cfg.alpha
    batch = 4096
    step = 0
    while step < budget:
        k = min(batch, budget - step)
        flip_idx = rng.integers(0, n, size=k)
        uniforms = rng.random(k)
        for t in range(k):
            i = int(flip_idx[t])
            delta = gains[i] if x[i] == 0 else -gains[i]
            if delta <= 0 or uniforms[t] < math.exp(-delta / max(temperature, 1e-12)):
                sign = 1 if x[i] == 0 else -1
                x[i] ^= 1
                for j, a in nbrs[i]:
                    gains[j] += sign * a
                energy += delta
                if energy < best_energy:
                    best_energy = energy
                    best_x = list(x)
            temperature *= alpha
        step += k
    return best_x, best_energy


def local_search_descent(q: Qubo, start: Sequence[int]) -> tuple[list[int], float]:
    """Greedy best-improvement bit flips until no flip lowers the energy.

    The output is a certified 1-flip local minimum with energy at most the
    start's. Ties pick the lowest variable index, so descent is
    deterministic.
    """
    x = [int(b) for b in start]
    energy = evaluate(q, x)  # validates length and bit values
    gains = _gains(q, x)
    nbrs = _flip_neighbors(q)
    n = q.num_variables
    while True:
        best_i = -1
        best_delta = 0.0
        for i in range(n):
            delta = gains[i] if x[i] == 0 else -gains[i]
            if delta < best_delta:
                best_delta = delta
                best_i = i
        if best_i < 0:
            return x, energy
        sign = 1 if x[best_i] == 0 else -1
        x[best_i] ^= 1
        for j, a in nbrs[best_i]:
            gains[j] += sign * a
        energy += best_delta


def mock_sampler(q: Qubo, num_reads: int, seed: int) -> SampleSet:
    """Annealer stand-in: each read is a short, independently seeded
    ``sa_qubo`` run."""
    assignments = []
    for read in range(num_reads):
        x, _ = sa_qubo(q, SolverConfig(seed=seed * 1_000_003 + read, budget=MOCK_SAMPLER_BUDGET, alpha=0.98))
        assignments.append(x)
    return SampleSet.from_assignments(q, assignments)


def sampler_solve(
    q: Qubo, sampler: SamplerProtocol, cfg: SolverConfig = SolverConfig()
) -> tuple[list[int], float]:
    """Request ``num_reads`` samples and polish each with the descent,
    mirroring the anneal-then-postprocess pipeline; returns the best."""
    if cfg.num_reads < 1:
        raise ValueError("num_reads must be >= 1")
    samples = sampler(q, cfg.num_reads, cfg.seed)
    if len(samples) == 0:
        raise SolverError("sampler returned no samples")
    best: tuple[list[int], float] | None = None
    for x, _ in samples.samples:
        polished, energy = local_search_descent(q, x)
        if best is None or energy < best[1]:
            best = (polished, energy)
    assert best is not None
    return best


def _repair_to_clique(g: Graph, selected: set[int]) -> set[int]:
    """Shrink a vertex set to a clique by dropping, for each violated
    pair, the lower-degree endpoint. Never adds vertices."""
    chosen = set(selected)
    while True:
        ordered = sorted(chosen)
        violation = None
        for idx, u in enumerate(ordered):
            nbrs = g.neighbors(u)
            for v in ordered[idx + 1 :]:
                if v not in nbrs:
                    violation = (u, v)
                    break
            if violation:
                break
        if violation is None:
            return chosen
        u, v = violation
        chosen.discard(min((u, v), key=lambda w: (g.degree(w), w)))


SOLVER_NAMES = ("exact", "sa-clique", "sa-qubo", "descent", "sampler")


def solve_mc(g: Graph, solver_name: str, cfg: SolverConfig = SolverConfig()) -> CliqueResult:
    """Uniform facade: run any backend and return a verified CliqueResult.

    QUBO-based backends decode the best assignment and repair any
    violated pairs by dropping endpoints (lowest degree first).
    """
    if solver_name not in SOLVER_NAMES:
        raise ValueError(f"unknown solver {solver_name!r}; expected one of {SOLVER_NAMES}")
    if g.num_vertices == 0:
        return CliqueResult(frozenset(), 0, solver_name)
    stats = CliqueStats(subproblems_solved=1, reductions=0)

    if solver_name == "exact":
        res = exact_max_clique(g, budget=cfg.budget)
        return CliqueResult(res.vertices, res.size, "exact", stats)

    if solver_name == "sa-clique":
        from .splitting import binary_search_max_clique

        witnesses: dict[int, set[int]] = {}

        def has_clique_of_size(m: int) -> bool:
            for attempt in range(cfg.restarts):
                sub_seed = (cfg.seed * 1_000_003 + m) * 97 + attempt
                found = sa_clique(g, m, replace(cfg, seed=sub_seed))
                if found is not None:
                    witnesses[m] = found
                    return True
            return False

        size = binary_search_max_clique(g, has_clique_of_size)
        witness = witnesses.get(size, {min(range(g.num_vertices))})
        return clique_result(g, witness, "sa-clique", stats)

    q = mc_to_qubo(g)
    if solver_name == "sa-qubo":
        x, _ = sa_qubo(q, cfg)
    elif solver_name == "descent":
        rng = np.random.default_rng(cfg.seed)
        reads = max(1, cfg.num_reads)
        best: tuple[list[int], float] | None = None
        for _ in range(reads):
            start = [int(b) for b in rng.integers(0, 2, size=g.num_vertices)]
            cand, energy = local_search_descent(q, start)
            if best is None or energy < best[1]:
                best = (cand, energy)
        x = best[0]
    else:  # sampler
        x, _ = sampler_solve(q, mock_sampler, cfg)
    selected = _repair_to_clique(g, {i for i, b in enumerate(x) if b})
    if not selected:
        selected = {min(range(g.num_vertices))}
    return clique_result(g, selected, solver_name, stats)


SubSolver = Callable[[Graph, int], CliqueResult]


def get_subsolver(name: str, cfg: SolverConfig | None = None) -> SubSolver:
    """A (graph, seed) -> CliqueResult callable for the split driver."""
    if name not in SOLVER_NAMES:
        raise ValueError(f"unknown solver {name!r}; expected one of {SOLVER_NAMES}")
    base = cfg if cfg is not None else SolverConfig()

    def run(g: Graph, seed: int) -> CliqueResult:
        return solve_mc(g, name, replace(base, seed=seed))

    return run
