"""Clique-preserving graph shrinking: k-core extraction and edge pruning.

Both reductions are licensed by a known lower bound on the clique size:
they may destroy cliques of at most ``lower_bound`` vertices (one of that
size is already in hand) but keep every clique of size lower_bound + 1 or
more. ``k_core`` peels low-degree vertices; ``reduce_graph`` additionally
strips edges around a vertex whose endpoints share too few neighbors to
sit inside a bigger clique, then peels again.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable

from .graphs import Graph, graph_from_adjacency


@dataclass(frozen=True)
class ReductionOutcome:
    graph: Graph
    removed_vertices: int
    removed_edges: int


def peel_to_core(adj: dict[int, set[int]], k: int, candidates: Iterable[int] | None = None) -> int:
    """In-place k-core peeling; returns the number of removed vertices.

    When ``candidates`` is given only those vertices (and the cascade they
    trigger) are examined — correct whenever every other vertex already
    had degree >= k, which makes incremental re-peeling after local edits
    linear in the affected region.
    """
    if candidates is None:
        stack = [v for v in adj if len(adj[v]) < k]
    else:
        stack = [v for v in candidates if v in adj and len(adj[v]) < k]
    removed = 0
    while stack:
        v = stack.pop()
        if v not in adj:
            continue
        for u in adj[v]:
            s = adj[u]
            s.discard(v)
            if len(s) < k:
                stack.append(u)
        del adj[v]
        removed += 1
    return removed


def prune_low_overlap_edges(adj: dict[int, set[int]], v: int, lower_bound: int) -> list[int]:
    """Drop edges (v, n) whose endpoints share fewer than lower_bound - 2 neighbors.

    Inside a clique of size c every edge has at least c - 2 common
    neighbors, so these edges cannot lie in any clique beating the bound.
    The scan finishes before any edge is removed (two-phase), so every
    test sees the input neighbor sets. Returns the dropped neighbors.
    """
    threshold = lower_bound - 2
    nv = adj[v]
    doomed = [n for n in nv if len(nv & adj[n]) < threshold]
    for n in doomed:
        nv.discard(n)
        adj[n].discard(v)
    return doomed


def reduce_adjacency(
    adj: dict[int, set[int]],
    lower_bound: int,
    rng: random.Random,
    prune_all_vertices: bool = False,
) -> tuple[int, int]:
    """In-place reduction pass; returns (vertices removed, edges pruned).

    Extracts the lower_bound-core, prunes low-overlap edges around one
    uniformly random surviving vertex (or around every vertex with the
    variant flag), then re-peels the vertices the pruning touched.
    """
    removed_v = peel_to_core(adj, lower_bound)
    pruned = 0
    if adj:
        if prune_all_vertices:
            # Two-phase across the whole scan: collect against input sets, then apply.
            threshold = lower_bound - 2
            doomed: set[tuple[int, int]] = set()
            for v in sorted(adj):
                nv = adj[v]
                for n in nv:
                    if len(nv & adj[n]) < threshold:
                        doomed.add((min(v, n), max(v, n)))
            for u, n in doomed:
                adj[u].discard(n)
                adj[n].discard(u)
            pruned = len(doomed)
            affected = sorted({x for pair in doomed for x in pair})
        else:
            keys = sorted(adj)
            v = keys[rng.randrange(len(keys))]
            dropped = prune_low_overlap_edges(adj, v, lower_bound)
            pruned = len(dropped)
            affected = [v, *dropped]
        if pruned:
            removed_v += peel_to_core(adj, lower_bound, candidates=affected)
    return removed_v, pruned


def core_survivors(g: Graph, k: int) -> list[int]:
    """Vertices of the k-core, by cascading degree-array peeling.

    Reads ``g`` without copying its adjacency, so the whole computation
    is one O(|V| + |E|) pass regardless of how much survives.
    """
    degrees = g.degrees()
    dead = [False] * g.num_vertices
    stack = [v for v, d in enumerate(degrees) if d < k]
    while stack:
        v = stack.pop()
        if dead[v]:
            continue
        dead[v] = True
        for u in g.neighbors(v):
            if not dead[u]:
                degrees[u] -= 1
                if degrees[u] == k - 1:
                    stack.append(u)
    return [v for v in range(g.num_vertices) if not dead[v]]


def k_core(g: Graph, k: int) -> Graph:
    """The maximal subgraph of ``g`` with all degrees >= k (possibly empty)."""
    if k < 0:
        raise ValueError("k must be non-negative")
    survivors = core_survivors(g, k)
    if len(survivors) == g.num_vertices:
        return g
    # Translate ids through a list (peeled vertices map to the -1
    # sentinel, removed in one discard) to keep the rebuild at C speed.
    index = [-1] * g.num_vertices
    for new, old in enumerate(survivors):
        index[old] = new
    translate = index.__getitem__
    adj = []
    for old in survivors:
        nbrs = set(map(translate, g.neighbors(old)))
        nbrs.discard(-1)
        adj.append(nbrs)
    return Graph._from_adj(adj, tuple(g.label(old) for old in survivors))


def reduce_graph(
    g: Graph,
    lower_bound: int,
    seed: int = 0,
    prune_all_vertices: bool = False,
) -> ReductionOutcome:
    """Core-then-prune-then-core reduction keyed to a clique lower bound.

    Every clique of size >= lower_bound + 1 in ``g`` survives. Removed
    counts are input minus output sizes (edges lost to vertex deletion
    included).
    """
    if lower_bound < 0:
        raise ValueError("lower_bound must be non-negative")
    rng = random.Random(seed)
    adj = {v: set(g.neighbors(v)) for v in range(g.num_vertices)}
    reduce_adjacency(adj, lower_bound, rng, prune_all_vertices=prune_all_vertices)
    out = graph_from_adjacency(adj, labels=(g.label(v) for v in sorted(adj)))
    return ReductionOutcome(
        graph=out,
        removed_vertices=g.num_vertices - out.num_vertices,
        removed_edges=g.num_edges - out.num_edges,
    )
