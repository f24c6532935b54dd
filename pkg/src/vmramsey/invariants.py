"""Exact invariants for small graphs: independence, clique, coloring,
distances, and the integer characteristic polynomial.

Everything here is exact; there are no floating-point spectra.  Unreachable
distances (diameter of a disconnected graph, girth of a forest) are the
sentinel ``math.inf``, rendered as "inf" in text output.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .graphs import Graph, complement


@dataclass(frozen=True)
class InvariantRecord:
    edge_count: int
    alpha: int
    omega: int
    chi: int
    diameter: int | float
    degree_sequence: tuple[int, ...]
    girth: int | float
    connected: bool


def _alpha_up_to(rows, cand: int, cap: int) -> int:
    """Maximum independent set size within candidate mask, clamped at cap.

    Branches on the lowest-index available vertex; candidates shrink by
    bitwise AND with non-neighborhoods.  Returns as soon as cap is reached.
    A greedy pass seeds the bound, so the frequent alpha >= cap cases exit
    without branching.
    """
    best = 0
    m = cand
    while m:
        lsb = m & -m
        m &= ~(rows[lsb.bit_length() - 1] | lsb)
        best += 1
    if best >= cap:
        return cap

    def go(cand: int, size: int) -> None:
        nonlocal best
        while cand:
            if best >= cap or size + cand.bit_count() <= best:
                return
            lsb = cand & -cand
            cand ^= lsb
            go(cand & ~rows[lsb.bit_length() - 1], size + 1)
        if size > best:
            best = size

    go(cand, 0)
    return min(best, cap)


def _nonadj_above(rows, full: int) -> list[int]:
    # na[v]: vertices > v and non-adjacent to v; shared by all levels of the
    # nested existence tests below.
    return [full & ~rows[v] & ~((2 << v) - 1) for v in range(len(rows))]


def _exists_indep_small(na: list[int], t: int) -> bool:
    """Is there an independent set of size t, for t <= 5?

    Explicit nested loops over the non-adjacent-above masks; these are the
    census-critical targets, so each level is spelled out.
    """
    n = len(na)
    if t > n:
        return False
    if t <= 1:
        return t >= 0
    if t == 2:
        return any(na[a] for a in range(n - 1))
    if t == 3:
        for a in range(n - 2):
            am = na[a]
            m = am
            while m:
                lsb = m & -m
                m ^= lsb
                if am & na[lsb.bit_length() - 1]:
                    return True
        return False
    if t == 4:
        for a in range(n - 3):
            am = na[a]
            if am.bit_count() < 3:
                continue
            ma = am
            while ma:
                lsb = ma & -ma
                ma ^= lsb
                bm = am & na[lsb.bit_length() - 1]
                if bm.bit_count() < 2:
                    continue
                mb = bm
                while mb:
                    l2 = mb & -mb
                    mb ^= l2
                    if bm & na[l2.bit_length() - 1]:
                        return True
        return False
    if t == 5:
        for a in range(n - 4):
            am = na[a]
            if am.bit_count() < 4:
                continue
            ma = am
            while ma:
                lsb = ma & -ma
                ma ^= lsb
                bm = am & na[lsb.bit_length() - 1]
                if bm.bit_count() < 3:
                    continue
                mb = bm
                while mb:
                    l2 = mb & -mb
                    mb ^= l2
                    cm = bm & na[l2.bit_length() - 1]
                    if cm.bit_count() < 2:
                        continue
                    mc = cm
                    while mc:
                        l3 = mc & -mc
                        mc ^= l3
                        if cm & na[l3.bit_length() - 1]:
                            return True
        return False
    raise AssertionError("t <= 5 only")


def _exists_indep_pooled(na: list[int], pool: int, t: int) -> bool:
    """Like _exists_indep_small, with every chosen vertex restricted to
    the pool mask; na entries must already be intersected with pool."""
    if t <= 1:
        return t < 1 or pool != 0
    if t == 2:
        mp = pool
        while mp:
            lsb = mp & -mp
            mp ^= lsb
            if na[lsb.bit_length() - 1]:
                return True
        return False
    if t == 3:
        mp = pool
        while mp:
            lsb = mp & -mp
            mp ^= lsb
            am = na[lsb.bit_length() - 1]
            ma = am
            while ma:
                l1 = ma & -ma
                ma ^= l1
                if am & na[l1.bit_length() - 1]:
                    return True
        return False
    if t == 4:
        mp = pool
        while mp:
            lsb = mp & -mp
            mp ^= lsb
            am = na[lsb.bit_length() - 1]
            if am.bit_count() < 3:
                continue
            ma = am
            while ma:
                l1 = ma & -ma
                ma ^= l1
                bm = am & na[l1.bit_length() - 1]
                if bm.bit_count() < 2:
                    continue
                mb = bm
                while mb:
                    l2 = mb & -mb
                    mb ^= l2
                    if bm & na[l2.bit_length() - 1]:
                        return True
        return False
    if t == 5:
        mp = pool
        while mp:
            lsb = mp & -mp
            mp ^= lsb
            am = na[lsb.bit_length() - 1]
            if am.bit_count() < 4:
                continue
            ma = am
            while ma:
                l1 = ma & -ma
                ma ^= l1
                bm = am & na[l1.bit_length() - 1]
                if bm.bit_count() < 3:
                    continue
                mb = bm
                while mb:
                    l2 = mb & -mb
                    mb ^= l2
                    cm = bm & na[l2.bit_length() - 1]
                    if cm.bit_count() < 2:
                        continue
                    mc = cm
                    while mc:
                        l3 = mc & -mc
                        mc ^= l3
                        if cm & na[l3.bit_length() - 1]:
                            return True
        return False
    raise AssertionError("t <= 5 only")


def _exists_indep(rows, na: list[int], full: int, t: int) -> bool:
    if t <= 5:
        return _exists_indep_small(na, t)
    return _alpha_up_to(rows, full, t) >= t


def _alpha_capped(rows, full: int, cap: int) -> int:
    """min(alpha, cap) via incremental existence tests from below."""
    na = _nonadj_above(rows, full)
    alpha = 0
    while alpha < cap and _exists_indep(rows, na, full, alpha + 1):
        alpha += 1
    return alpha


def independence_number(g: Graph) -> int:
    return _alpha_capped(g.rows, g.full_mask(), g.n)


def has_independent_set(g: Graph, k: int) -> bool:
    if k < 1:
        raise ValueError("independent set size must be >= 1")
    if k > g.n:
        return False
    full = g.full_mask()
    return _exists_indep(g.rows, _nonadj_above(g.rows, full), full, k)


def clique_number(g: Graph) -> int:
    return independence_number(complement(g))


def degree_sequence(g: Graph) -> tuple[int, ...]:
    return tuple(sorted((r.bit_count() for r in g.rows), reverse=True))


def _greedy_clique(rows: tuple[int, ...], n: int) -> int:
    best = 0
    for start in range(n):
        size = 1
        cand = rows[start]
        while cand:
            pick = -1
            pick_deg = -1
            m = cand
            while m:
                lsb = m & -m
                v = lsb.bit_length() - 1
                d = (rows[v] & cand).bit_count()
                if d > pick_deg:
                    pick_deg = d
                    pick = v
                m ^= lsb
            size += 1
            cand &= rows[pick]
        if size > best:
            best = size
    return best


def _is_colorable(rows: tuple[int, ...], order: list[int], k: int) -> bool:
    n = len(order)
    colors = [-1] * len(rows)

    def go(i: int, used: int) -> bool:
        if i == n:
            return True
        v = order[i]
        forbidden = 0
        m = rows[v]
        while m:
            lsb = m & -m
            c = colors[lsb.bit_length() - 1]
            if c >= 0:
                forbidden |= 1 << c
            m ^= lsb
        limit = min(used + 1, k)  # at most one brand-new color per vertex
        for c in range(limit):
            if not forbidden >> c & 1:
                colors[v] = c
                if go(i + 1, max(used, c + 1)):
                    return True
        colors[v] = -1
        return False

    return go(0, 0)


def chromatic_number(g: Graph) -> int:
    if g.n > 16:
        raise ValueError("exact chromatic number supported for n <= 16")
    if g.edge_count() == 0:
        return 1
    order = sorted(range(g.n), key=lambda v: -g.rows[v].bit_count())
    k = _greedy_clique(g.rows, g.n)
    while not _is_colorable(g.rows, order, k):
        k += 1
    return k


def _reach(rows: tuple[int, ...], start_mask: int) -> int:
    seen = start_mask
    frontier = start_mask
    while frontier:
        nxt = 0
        m = frontier
        while m:
            lsb = m & -m
            nxt |= rows[lsb.bit_length() - 1]
            m ^= lsb
        frontier = nxt & ~seen
        seen |= frontier
    return seen


def components(g: Graph) -> list[int]:
    """Connected components as vertex masks, by ascending lowest vertex."""
    out = []
    remaining = g.full_mask()
    while remaining:
        comp = _reach(g.rows, remaining & -remaining)
        out.append(comp)
        remaining &= ~comp
    return out


def is_connected(g: Graph) -> bool:
    return _reach(g.rows, 1) == g.full_mask()


def _eccentricity(rows: tuple[int, ...], full: int, v: int) -> int | float:
    seen = 1 << v
    frontier = seen
    dist = 0
    while True:
        nxt = 0
        m = frontier
        while m:
            lsb = m & -m
            nxt |= rows[lsb.bit_length() - 1]
            m ^= lsb
        nxt &= ~seen
        if not nxt:
            break
        dist += 1
        seen |= nxt
        frontier = nxt
    if seen != full:
        return math.inf
    return dist


def diameter(g: Graph) -> int | float:
    full = g.full_mask()
    worst = 0
    for v in range(g.n):
        ecc = _eccentricity(g.rows, full, v)
        if ecc == math.inf:
            return math.inf
        if ecc > worst:
            worst = ecc
    return worst


def _distance(rows: list[int], u: int, w: int) -> int | float:
    seen = 1 << u
    frontier = seen
    target = 1 << w
    dist = 0
    while frontier:
        if seen & target:
            return dist
        nxt = 0
        m = frontier
        while m:
            lsb = m & -m
            nxt |= rows[lsb.bit_length() - 1]
            m ^= lsb
        frontier = nxt & ~seen
        seen |= frontier
        dist += 1
    return math.inf


def girth(g: Graph) -> int | float:
    """Length of a shortest cycle: min over edges uv of dist(u,v) in G-uv."""
    best: int | float = math.inf
    for u, w in g.edges():
        rows = list(g.rows)
        rows[u] &= ~(1 << w)
        rows[w] &= ~(1 << u)
        d = _distance(rows, u, w)
        if d + 1 < best:
            best = d + 1
            if best == 3:
                return 3
    return best


def char_poly(g: Graph) -> tuple[int, ...]:
    """Exact characteristic polynomial det(xI - A), ascending coefficients.

    Faddeev-LeVerrier over Python integers; every division is checked
    exact, so there is no overflow or tolerance concern.
    """
    if g.n > 12:
        raise ValueError("exact characteristic polynomial supported for n <= 12")
    n = g.n
    a = [[g.rows[i] >> j & 1 for j in range(n)] for i in range(n)]
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    work = [[1 if i == j else 0 for j in range(n)] for i in range(n)]  # N_1 = I
    for k in range(1, n + 1):
        m = [[sum(a[i][t] * work[t][j] for t in range(n)) for j in range(n)] for i in range(n)]
        trace = sum(m[i][i] for i in range(n))
        q, r = divmod(-trace, k)
        assert r == 0, "Faddeev-LeVerrier trace division must be exact"
        coeffs[n - k] = q
        work = [[m[i][j] + (q if i == j else 0) for j in range(n)] for i in range(n)]
    return tuple(coeffs)


def invariant_record(g: Graph) -> InvariantRecord:
    return InvariantRecord(
        edge_count=g.edge_count(),
        alpha=independence_number(g),
        omega=clique_number(g),
        chi=chromatic_number(g),
        diameter=diameter(g),
        degree_sequence=degree_sequence(g),
        girth=girth(g),
        connected=is_connected(g),
    )
