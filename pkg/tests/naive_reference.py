"""Independent naive reference pipeline for cross-validation.

Deliberately shares nothing with the package internals: graphs are
frozensets of 2-element frozenset edges, independence numbers come from
plain subset enumeration, orbits from a dictionary-free BFS over edge
sets, and graph6 codes from networkx.  Used to cross-check phase
classifications record-for-record.
"""

from collections import deque
from dataclasses import dataclass
from itertools import combinations

import networkx as nx


def to_edge_set(graph):
    """Package Graph -> naive representation (n, frozenset of edges)."""
    return graph.n, frozenset(frozenset(e) for e in graph.edges())


def encode_nx(n, edges):
    g = nx.Graph()
    g.add_nodes_from(range(n))
    g.add_edges_from(tuple(e) for e in edges)
    return nx.to_graph6_bytes(g, header=False).decode().strip()


def naive_local_complement(n, edges, v):
    nbrs = sorted(u for e in edges if v in e for u in e if u != v)
    toggled = {frozenset(p) for p in combinations(nbrs, 2)}
    return frozenset(edges ^ toggled)


def naive_alpha_capped(n, edges, cap):
    """Largest t <= cap admitting an independent t-subset, by enumeration."""
    best = 0
    for t in range(1, min(cap, n) + 1):
        found = False
        for sub in combinations(range(n), t):
            if all(frozenset(p) not in edges for p in combinations(sub, 2)):
                found = True
                break
        if not found:
            break
        best = t
    return best


def naive_orbit(n, edges):
    """Full labeled orbit in BFS order (FIFO, vertices ascending)."""
    visited = {edges}
    order = [edges]
    queue = deque([edges])
    while queue:
        cur = queue.popleft()
        for v in range(n):
            nxt = naive_local_complement(n, cur, v)
            if nxt not in visited:
                visited.add(nxt)
                order.append(nxt)
                queue.append(nxt)
    return order


@dataclass(frozen=True)
class NaiveRecord:
    code: str
    phase: str
    explored: int
    max_alpha: int


def naive_classify(n, edges, k, budget=None):
    """Mirror of the documented three-phase semantics, from scratch."""
    code = encode_nx(n, edges)
    alpha = naive_alpha_capped(n, edges, k)
    if alpha >= k:
        return NaiveRecord(code=code, phase="P1", explored=0, max_alpha=alpha)
    visited = {edges}
    queue = deque([edges])
    explored = 0
    max_alpha = 0
    while queue:
        if budget is not None and explored >= budget:
            return NaiveRecord(code=code, phase="P3_BUDGETED", explored=explored, max_alpha=max_alpha)
        cur = queue.popleft()
        explored += 1
        max_alpha = max(max_alpha, naive_alpha_capped(n, cur, k))
        if max_alpha >= k:
            return NaiveRecord(code=code, phase="P2", explored=explored, max_alpha=max_alpha)
        for v in range(n):
            nxt = naive_local_complement(n, cur, v)
            if nxt not in visited:
                visited.add(nxt)
                queue.append(nxt)
    return NaiveRecord(code=code, phase="P3", explored=explored, max_alpha=max_alpha)
