"""Exact minimum vertex cover by branch and bound.

Instances here are small (the solvers are exponential in the cover size
anyway), so the classic scheme suffices: resolve degree-1 vertices greedily
(taking the neighbor is always at least as good), branch on a maximum-degree
vertex v into "v in the cover" vs "N(v) in the cover", and prune with a
greedy-matching lower bound. Ties everywhere go to the lowest vertex id, so
the result is deterministic.
"""

from __future__ import annotations


def is_vertex_cover(g, vertices):
    vs = set(vertices)
    return all(u in vs or v in vs for u, v in g.edges)


def _remove(adj, v):
    for u in adj[v]:
        adj[u].discard(v)
    adj[v] = set()


def _greedy_cover(adj):
    n = len(adj)
    cover = []
    while True:
        v = max(range(n), key=lambda x: (len(adj[x]), -x))
        if not adj[v]:
            return cover
        cover.append(v)
        _remove(adj, v)


def _matching_bound(adj):
    """Size of a greedy maximal matching: a lower bound on any cover."""
    matched = set()
    count = 0
    for v in range(len(adj)):
        if v in matched or not adj[v]:
            continue
        u = min((w for w in adj[v] if w not in matched), default=None)
        if u is not None:
            matched.add(v)
            matched.add(u)
            count += 1
    return count


def minimum_vertex_cover(g):
    """A minimum vertex cover of g as a set of vertices (deterministic)."""
    n = g.n
    if n == 0 or not g.edges:
        return set()
    best = _greedy_cover([set(g.adj[v]) for v in range(n)])

    def search(adj, picked, take):
        nonlocal best
        adj = [set(s) for s in adj]
        picked = picked + sorted(take)
        for u in take:
            _remove(adj, u)
        while True:  # forced moves: a degree-1 vertex gives up its neighbor
            v1 = min((v for v in range(n) if len(adj[v]) == 1), default=None)
            if v1 is None:
                break
            u = min(adj[v1])
            picked.append(u)
            _remove(adj, u)
        if len(picked) >= len(best):
            return
        live = [v for v in range(n) if adj[v]]
        if not live:
            best = picked
            return
        if len(picked) + _matching_bound(adj) >= len(best):
            return
        v = max(live, key=lambda x: (len(adj[x]), -x))
        search(adj, picked, (v,))
        search(adj, picked, sorted(adj[v]))

    search([set(g.adj[v]) for v in range(n)], [], ())
    return set(best)
