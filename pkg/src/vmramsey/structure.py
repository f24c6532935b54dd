"""Extremal-graph analysis: LC-class grouping, induced-pattern search over
orbits, and identification against a small catalog of named graphs.

The obstruction patterns follow the hub-plus-cycle wheel convention: W5 is
a hub joined to C5 (6 vertices), W7 a hub joined to C7 (8 vertices), and
BW3 is a C6 with a hub adjacent to three pairwise-nonadjacent alternating
rim vertices.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import graph6
from .graphs import (
    Graph,
    are_isomorphic,
    canonical_form,
    complement,
    complete_graph,
    cycle_graph,
    empty_graph,
    graph_from_edges,
    join,
    petersen_graph,
)
from .orbits import enumerate_orbit


@dataclass(frozen=True)
class ObstructionPattern:
    name: str
    graph: Graph


def wheel(rim: int) -> Graph:
    """Hub vertex 0 joined to a rim cycle on vertices 1..rim."""
    return join(empty_graph(1), cycle_graph(rim))


def bipartite_wheel_3() -> Graph:
    # C6 on 0..5 plus hub 6 adjacent to the alternating rim {0, 2, 4}.
    edges = [(v, (v + 1) % 6) for v in range(6)] + [(6, 0), (6, 2), (6, 4)]
    return graph_from_edges(7, edges)


def circle_graph_obstructions() -> list[ObstructionPattern]:
    return [
        ObstructionPattern("W5", wheel(5)),
        ObstructionPattern("BW3", bipartite_wheel_3()),
        ObstructionPattern("W7", wheel(7)),
    ]


def _find_induced(host: Graph, pattern: Graph) -> int | None:
    """First induced embedding of pattern in host, as a host vertex mask.

    Backtracking over pattern vertices in descending-degree order with
    degree-compatibility pruning; adjacency must match exactly (induced).
    """
    pn = pattern.n
    hn = host.n
    if pn > hn:
        return None
    prows = pattern.rows
    hrows = host.rows
    pdeg = [r.bit_count() for r in prows]
    hdeg = [r.bit_count() for r in hrows]
    order = sorted(range(pn), key=lambda v: -pdeg[v])
    image = [-1] * pn

    def go(i: int, used: int) -> int | None:
        if i == pn:
            return used
        p = order[i]
        for h in range(hn):
            if used >> h & 1 or hdeg[h] < pdeg[p]:
                continue
            ok = True
            for j in range(i):
                q = order[j]
                if (prows[p] >> q & 1) != (hrows[h] >> image[q] & 1):
                    ok = False
                    break
            if not ok:
                continue
            image[p] = h
            found = go(i + 1, used | 1 << h)
            if found is not None:
                return found
            image[p] = -1
        return None

    return go(0, 0)


def find_induced_pattern_in_orbit(
    g: Graph, pattern: ObstructionPattern
) -> tuple[Graph, int] | None:
    """First orbit member (BFS order) containing the pattern induced."""
    if pattern.graph.n > g.n:
        return None
    for member in enumerate_orbit(g):
        mask = _find_induced(member, pattern.graph)
        if mask is not None:
            return member, mask
    return None


def lc_class_partition(codes: list[str]) -> list[list[str]]:
    """Group codes that are LC-equivalent up to isomorphism.

    Two codes share a class iff some member of one's orbit is isomorphic
    to the other root; classes are reported by first appearance in the
    input, covering the input disjointly.
    """
    graphs = [graph6.decode(code) for code in codes]
    root_keys = [canonical_form(g) for g in graphs]
    orbit_keys = [
        {canonical_form(member) for member in enumerate_orbit(g)} for g in graphs
    ]

    parent = list(range(len(codes)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(len(codes)):
        for j in range(i + 1, len(codes)):
            if root_keys[j] in orbit_keys[i] or root_keys[i] in orbit_keys[j]:
                parent[find(j)] = find(i)

    classes: dict[int, list[str]] = {}
    first_index: dict[int, int] = {}
    for i, code in enumerate(codes):
        root = find(i)
        classes.setdefault(root, []).append(code)
        first_index.setdefault(root, i)
    return [classes[root] for root in sorted(classes, key=first_index.__getitem__)]


def _catalog(n: int) -> list[tuple[str, Graph]]:
    entries = [("K_n", complete_graph(n)), ("E_n", empty_graph(n))]
    if n >= 3:
        entries.append(("C_n", cycle_graph(n)))
    if n == 6:
        entries.append(("complement(C6)", complement(cycle_graph(6))))
    if n == 10:
        pet = petersen_graph()
        entries.append(("Petersen", pet))
        entries.append(("complement(Petersen)", complement(pet)))
        entries.append(("join(C5,C5)", join(cycle_graph(5), cycle_graph(5))))
    return entries


def identify_named(g: Graph) -> list[str]:
    """Catalog names isomorphic to g (possibly several, usually none)."""
    return [name for name, h in _catalog(g.n) if are_isomorphic(g, h)]
