"""Labeled simple graphs as tuples of adjacency bitmasks.

A graph on n vertices is stored as ``rows``, a tuple of n integers where
bit u of ``rows[v]`` is set iff uv is an edge.  This gives O(1) equality
and hashing of labeled graphs and makes local complementation a handful
of word operations.  Vertex sets are plain integer bitmasks.

All operations are pure: they return new Graph values and never mutate.
"""

from __future__ import annotations

from typing import Iterable, Iterator

# Single-word adjacency rows; also the graph6 short-form bound.
MAX_VERTICES = 62


class Graph:
    """Immutable labeled simple graph."""

    __slots__ = ("n", "rows")

    n: int
    rows: tuple[int, ...]

    def __init__(self, n: int, rows: Iterable[int]):
        rows = tuple(rows)
        if not 1 <= n <= MAX_VERTICES:
            raise ValueError(f"vertex count {n} outside supported range 1..{MAX_VERTICES}")
        if len(rows) != n:
            raise ValueError(f"expected {n} adjacency rows, got {len(rows)}")
        full = (1 << n) - 1
        for v, row in enumerate(rows):
            if row & ~full:
                raise ValueError(f"row {v} has bits set at positions >= n")
            if row >> v & 1:
                raise ValueError(f"loop at vertex {v}")
        for v in range(n):
            m = rows[v] >> (v + 1)
            while m:
                lsb = m & -m
                u = v + 1 + lsb.bit_length() - 1
                if not rows[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {u}")
                m ^= lsb
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __eq__(self, other):
        if isinstance(other, Graph):
            return self.n == other.n and self.rows == other.rows
        return NotImplemented

    def __hash__(self):
        return hash((self.n, self.rows))

    def __repr__(self):
        return f"Graph({self.n}, edges={sorted(self.edges())})"

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self.rows[v] >> u & 1)

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self.rows[v].bit_count()

    def neighbors(self, v: int) -> int:
        """Neighborhood of v as a bitmask."""
        self._check_vertex(v)
        return self.rows[v]

    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        for v in range(self.n):
            m = self.rows[v] >> (v + 1)
            while m:
                lsb = m & -m
                yield (v, v + 1 + lsb.bit_length() - 1)
                m ^= lsb

    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise ValueError(f"vertex {v} out of range for n={self.n}")


def mask_of(vertices: Iterable[int]) -> int:
    """Bitmask of a vertex collection."""
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def mask_vertices(mask: int) -> list[int]:
    """Ascending vertex list of a bitmask."""
    out = []
    while mask:
        lsb = mask & -mask
        out.append(lsb.bit_length() - 1)
        mask ^= lsb
    return out


def graph_from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    rows = [0] * n
    for u, v in edges:
        if u == v:
            raise ValueError(f"loop at vertex {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, rows)


def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << v) for v in range(n)))


def path_graph(n: int) -> Graph:
    return graph_from_edges(n, ((v, v + 1) for v in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycles need at least 3 vertices")
    return graph_from_edges(n, [(v, (v + 1) % n) for v in range(n)])


def petersen_graph() -> Graph:
    # Kneser graph K(5,2): vertices are 2-subsets of {0..4}, edges between
    # disjoint pairs.
    pairs = [(a, b) for a in range(5) for b in range(a + 1, 5)]
    edges = []
    for i, (a, b) in enumerate(pairs):
        for j in range(i + 1, len(pairs)):
            c, d = pairs[j]
            if len({a, b, c, d}) == 4:
                edges.append((i, j))
    return graph_from_edges(10, edges)


# ---------------------------------------------------------------------------
# Core operations.  The _rows_* helpers work on raw row tuples so that hot
# loops (orbit search, generation) can skip Graph construction.
# ---------------------------------------------------------------------------


def _rows_local_complement(rows: tuple[int, ...], v: int) -> tuple[int, ...]:
    m = rows[v]
    out = list(rows)
    mm = m
    while mm:
        lsb = mm & -mm
        out[lsb.bit_length() - 1] ^= m ^ lsb  # m with this vertex's bit cleared
        mm ^= lsb
    return tuple(out)


# Packed representation for hot loops: the whole graph in one integer,
# row v in the n-bit lane starting at bit n*v.  Local complementation at a
# vertex with neighborhood mask m toggles lane u by m ^ (1 << u) for every
# u in m; the lanes are disjoint and the update depends on m alone, so the
# whole operation is one XOR with a precomputed per-mask delta.

_LC_TABLE_LIMIT = 13


def _pack_rows(n: int, rows: tuple[int, ...]) -> int:
    packed = 0
    for v in range(n - 1, -1, -1):
        packed = packed << n | rows[v]
    return packed


def _unpack_rows(n: int, packed: int) -> tuple[int, ...]:
    full = (1 << n) - 1
    return tuple(packed >> (n * v) & full for v in range(n))


def _lc_delta_table(n: int) -> list[int]:
    table = _LC_TABLE_CACHE.get(n)
    if table is None:
        size = 1 << n
        spread = [0] * size  # bit n*u set for each u in m
        diag = [0] * size  # bit n*u + u set for each u in m
        for m in range(1, size):
            lsb = m & -m
            u = lsb.bit_length() - 1
            rest = m ^ lsb
            spread[m] = spread[rest] | 1 << (n * u)
            diag[m] = diag[rest] | 1 << (n * u + u)
        table = [m * spread[m] ^ diag[m] for m in range(size)]
        _LC_TABLE_CACHE[n] = table
    return table


_LC_TABLE_CACHE: dict[int, list[int]] = {}


def local_complement(g: Graph, v: int) -> Graph:
    """Toggle every edge inside the neighborhood of v; all else unchanged."""
    g._check_vertex(v)
    return Graph(g.n, _rows_local_complement(g.rows, v))


def pivot(g: Graph, v: int, w: int) -> Graph:
    """Local complementation chain v, w, v at an edge vw."""
    if not g.has_edge(v, w):
        raise ValueError(f"pivot requires an edge, but {v}{w} is not one")
    rows = _rows_local_complement(g.rows, v)
    rows = _rows_local_complement(rows, w)
    rows = _rows_local_complement(rows, v)
    return Graph(g.n, rows)


def complement(g: Graph) -> Graph:
    full = g.full_mask()
    return Graph(g.n, tuple(full ^ r ^ (1 << v) for v, r in enumerate(g.rows)))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    n = g.n + h.n
    if n > MAX_VERTICES:
        raise ValueError(f"union on {n} vertices exceeds capacity {MAX_VERTICES}")
    rows = list(g.rows) + [r << g.n for r in h.rows]
    return Graph(n, rows)


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union plus all edges between the two vertex sets."""
    u = disjoint_union(g, h)
    gmask = (1 << g.n) - 1
    hmask = u.full_mask() ^ gmask
    rows = [r | (hmask if v < g.n else gmask) for v, r in enumerate(u.rows)]
    return Graph(u.n, rows)


def induced_subgraph(g: Graph, vertex_mask: int) -> Graph:
    """Subgraph on the masked vertices, relabeled 0.. in ascending order."""
    if vertex_mask == 0:
        raise ValueError("induced subgraph of an empty vertex set")
    if vertex_mask & ~g.full_mask():
        raise ValueError("vertex mask has bits outside the graph")
    verts = mask_vertices(vertex_mask)
    index = {v: i for i, v in enumerate(verts)}
    rows = [0] * len(verts)
    for v in verts:
        m = g.rows[v] & vertex_mask
        while m:
            lsb = m & -m
            rows[index[v]] |= 1 << index[lsb.bit_length() - 1]
            m ^= lsb
    return Graph(len(verts), rows)


def permute(g: Graph, perm: list[int]) -> Graph:
    """Relabel: vertex v of g becomes perm[v] of the result."""
    if sorted(perm) != list(range(g.n)):
        raise ValueError("not a permutation of 0..n-1")
    rows = [0] * g.n
    for v in range(g.n):
        m = g.rows[v]
        r = 0
        while m:
            lsb = m & -m
            r |= 1 << perm[lsb.bit_length() - 1]
            m ^= lsb
        rows[perm[v]] = r
    return Graph(g.n, rows)


# ---------------------------------------------------------------------------
# Canonical form: ordered-partition refinement plus backtracking over the
# surviving labelings, keeping the lexicographically least row tuple.
# ---------------------------------------------------------------------------


def _refine(rows: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    # Split every cell by the vector of neighbor counts into all current
    # cells, until stable.  Subcells are ordered by ascending count vector,
    # which is isomorphism-invariant.
    while True:
        masks = []
        for cell in cells:
            m = 0
            for v in cell:
                m |= 1 << v
            masks.append(m)
        new_cells: list[list[int]] = []
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            buckets: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                rv = rows[v]
                sig = tuple((rv & m).bit_count() for m in masks)
                buckets.setdefault(sig, []).append(v)
            if len(buckets) == 1:
                new_cells.append(cell)
            else:
                for sig in sorted(buckets):
                    new_cells.append(buckets[sig])
        if len(new_cells) == len(cells):
            return new_cells
        cells = new_cells


def _interchangeable(rows: tuple[int, ...], cell: list[int]) -> bool:
    # True if every transposition inside the cell is an automorphism
    # (mutual twins); then one branch represents the whole cell.
    for i, u in enumerate(cell):
        bu = 1 << u
        ru = rows[u]
        for w in cell[i + 1 :]:
            bw = 1 << w
            if ru & ~(bu | bw) != rows[w] & ~(bu | bw):
                return False
    return True


def _canonical_rows(n: int, rows: tuple[int, ...]) -> tuple[int, ...]:
    if n == 1:
        return (0,)
    by_degree: dict[int, list[int]] = {}
    for v in range(n):
        by_degree.setdefault(rows[v].bit_count(), []).append(v)
    cells = [by_degree[d] for d in sorted(by_degree)]
    cells = _refine(rows, cells)

    best: list[int] | None = None

    def leaf(order: list[int]) -> None:
        nonlocal best
        inv = [0] * n
        for i, v in enumerate(order):
            inv[v] = i
        out = []
        improved = False
        for i in range(n):
            m = rows[order[i]]
            r = 0
            while m:
                lsb = m & -m
                r |= 1 << inv[lsb.bit_length() - 1]
                m ^= lsb
            if best is not None and not improved:
                if r > best[i]:
                    return
                if r < best[i]:
                    improved = True
            out.append(r)
        if best is None or improved:
            best = out

    def search(cells: list[list[int]]) -> None:
        for ci, cell in enumerate(cells):
            if len(cell) > 1:
                break
        else:
            leaf([c[0] for c in cells])
            return
        candidates = cell[:1] if _interchangeable(rows, cell) else cell
        for v in candidates:
            rest = [u for u in cell if u != v]
            split = cells[:ci] + [[v], rest] + cells[ci + 1 :]
            search(_refine(rows, split))

    search(cells)
    assert best is not None
    return tuple(best)


def _rows_canonical_key(n: int, rows: tuple[int, ...]) -> bytes:
    width = (n + 7) // 8
    return bytes([n]) + b"".join(r.to_bytes(width, "big") for r in _canonical_rows(n, rows))


def canonical_form(g: Graph) -> bytes:
    """Total-order key: equal keys iff the graphs are isomorphic.

    The key is the vertex count followed by the lexicographically least
    adjacency-row tuple over all admissible relabelings, each row packed
    big-endian in ceil(n/8) bytes.
    """
    return _rows_canonical_key(g.n, g.rows)


def graph_from_canonical_form(key: bytes) -> Graph:
    """Rebuild the canonical representative graph from its key."""
    n = key[0]
    width = (n + 7) // 8
    if len(key) != 1 + n * width:
        raise ValueError("malformed canonical form key")
    rows = [int.from_bytes(key[1 + i * width : 1 + (i + 1) * width], "big") for i in range(n)]
    return Graph(n, rows)


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n:
        return False
    if sorted(r.bit_count() for r in g.rows) != sorted(r.bit_count() for r in h.rows):
        return False
    return canonical_form(g) == canonical_form(h)
