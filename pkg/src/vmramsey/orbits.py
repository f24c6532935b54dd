"""BFS enumeration of local-complementation orbits of labeled graphs.

The orbit of a labeled graph is explored breadth-first: FIFO queue,
successors generated by ascending vertex index, visited set keyed on the
labeled adjacency rows (packed into one integer).  Searches test the
independence target on dequeue (root included) and can stop early on a
witness or on an explicit budget of dequeued graphs.  A fully exhausted
orbit with no witness is a negative certificate, reproducible from the
root's graph6 code alone.
"""

from __future__ import annotations

import hashlib
import os
from collections import deque
from dataclasses import dataclass

import numpy as np

from . import _scan, graph6
from .graphs import (
    _LC_TABLE_LIMIT,
    Graph,
    _lc_delta_table,
    _pack_rows,
    _unpack_rows,
    induced_subgraph,
)
from .invariants import _alpha_up_to, _exists_indep_pooled, components

_USE_KERNEL = _scan.AVAILABLE and not os.environ.get("VMRAMSEY_NO_NUMBA")
_BATCH = 2048

FOUND = "FOUND"
EXHAUSTED = "EXHAUSTED"
BUDGET = "BUDGET"

CERTIFICATE_FIELDS = ("code", "k", "orbit_size", "max_alpha", "digest")


@dataclass(frozen=True)
class OrbitSummary:
    outcome: str
    explored: int
    max_alpha_seen: int
    witness: Graph | None


@dataclass(frozen=True)
class Certificate:
    code: str
    k: int
    orbit_size: int
    max_alpha: int
    digest: str


def _bfs(
    n: int,
    root: tuple[int, ...],
    alpha_cap: int | None,
    budget: int | None,
    collect: bool,
):
    """Shared engine.  Returns (outcome, explored, max_alpha, witness, members).

    alpha_cap=None skips independence tests entirely; otherwise each
    dequeued graph is tested with the cap (early exit at cap, exact below).
    States are packed single integers internally; witness and members come
    back as row tuples.  When the compiled kernel is available the
    independence tests run over batches of dequeued members; the reported
    outcome, explored count, running maximum, and witness are identical to
    the sequential engine's.
    """
    if alpha_cap is not None and _USE_KERNEL and n <= _LC_TABLE_LIMIT:
        return _bfs_batched(n, root, alpha_cap, budget, collect)
    return _bfs_sequential(n, root, alpha_cap, budget, collect)


def _bfs_batched(
    n: int,
    root: tuple[int, ...],
    alpha_cap: int,
    budget: int | None,
    collect: bool,
):
    full = (1 << n) - 1
    shifts = [n * v for v in range(n)]
    delta = _lc_delta_table(n)
    start = _pack_rows(n, root)
    visited = {start}
    seen = visited.add
    queue = deque((start,))
    pop = queue.popleft
    push = queue.append
    packed_members: list[int] | None = [] if collect else None
    finalized = 0
    max_alpha = 0
    pending: list[int] = []
    lanes: list[int] = []
    lanes_append = lanes.append
    pending_append = pending.append
    # small first batches keep quick-witness searches from over-enumerating
    batch_size = 64
    while True:
        room = batch_size
        batch_size = min(batch_size * 4, _BATCH)
        if budget is not None:
            room = min(room, budget - finalized)
        while queue and room > 0:
            room -= 1
            cur = pop()
            pending_append(cur)
            for s in shifts:
                m = cur >> s & full
                lanes_append(m)
                if m & (m - 1):
                    nxt = cur ^ delta[m]
                    if nxt not in visited:
                        seen(nxt)
                        push(nxt)
        if not pending:
            outcome = BUDGET if queue else EXHAUSTED
            members = None
            if collect:
                members = [_unpack_rows(n, p) for p in packed_members]
            return outcome, finalized, max_alpha, None, members
        count = len(pending)
        idx = 0
        while idx < count:
            t = max_alpha + 1
            if t > n:
                break
            flags = _scan.batch_exists(lanes[idx * n :], count - idx, n, t)
            hits = np.flatnonzero(flags)
            if hits.size == 0:
                break
            pos = idx + int(hits[0])
            # settle this member exactly, then rescan the rest at the new t
            max_alpha = t
            member_lanes = lanes[pos * n : (pos + 1) * n]
            while max_alpha < alpha_cap and max_alpha < n:
                if not _scan.batch_exists(member_lanes, 1, n, max_alpha + 1)[0]:
                    break
                max_alpha += 1
            if max_alpha >= alpha_cap:
                if collect:
                    packed_members.extend(pending[: pos + 1])
                witness = _unpack_rows(n, pending[pos])
                members = None
                if collect:
                    members = [_unpack_rows(n, p) for p in packed_members]
                return FOUND, finalized + pos + 1, max_alpha, witness, members
            idx = pos + 1
        finalized += count
        if collect:
            packed_members.extend(pending)
        pending.clear()
        lanes.clear()


def _bfs_sequential(
    n: int,
    root: tuple[int, ...],
    alpha_cap: int | None,
    budget: int | None,
    collect: bool,
):
    full = (1 << n) - 1
    shifts = [n * v for v in range(n)]
    # above[v] & ~(packed >> n*v) is the mask of non-neighbors of v beyond v
    above = [(full & ~((2 << v) - 1), n * v) for v in range(n)]
    start = _pack_rows(n, root)
    visited = {start}
    seen = visited.add
    queue = deque((start,))
    pop = queue.popleft
    push = queue.append
    packed_members: list[int] | None = [] if collect else None
    explored = 0
    max_alpha = 0
    outcome = EXHAUSTED
    witness: tuple[int, ...] | None = None
    use_table = n <= _LC_TABLE_LIMIT
    if use_table:
        delta = _lc_delta_table(n)
    while queue:
        if budget is not None and explored >= budget:
            outcome = BUDGET
            break
        cur = pop()
        explored += 1
        if collect:
            packed_members.append(cur)
        if alpha_cap is not None:
            # Most members do not beat the running orbit maximum, so they
            # cost one filtered negative existence test.
            while max_alpha < alpha_cap:
                t = max_alpha + 1
                # every vertex of an independent t-set has degree <= n-t,
                # so t such vertices bound the total degree sum from below
                bound = n - t
                if cur.bit_count() > t * bound + (n - t) * (n - 1):
                    break
                pool = 0
                bit = 1
                for s in shifts:
                    if (cur >> s & full).bit_count() <= bound:
                        pool |= bit
                    bit <<= 1
                if pool.bit_count() < t:
                    break
                na = [pool & a & ~(cur >> s) for a, s in above]
                if t <= 5:
                    hit = _exists_indep_pooled(na, pool, t)
                else:
                    rows = [cur >> s & full for s in shifts]
                    hit = _alpha_up_to(rows, pool, t) >= t
                if not hit:
                    break
                max_alpha = t
            if max_alpha >= alpha_cap:
                outcome = FOUND
                witness = _unpack_rows(n, cur)
                break
        if use_table:
            for s in shifts:
                m = cur >> s & full
                if m & (m - 1):  # fewer than two neighbors: G*v = G
                    nxt = cur ^ delta[m]
                    if nxt not in visited:
                        seen(nxt)
                        push(nxt)
        else:
            for s in shifts:
                m = cur >> s & full
                if m & (m - 1):
                    d = 0
                    mm = m
                    while mm:
                        lsb = mm & -mm
                        u = lsb.bit_length() - 1
                        d |= (m ^ lsb) << (n * u)
                        mm ^= lsb
                    nxt = cur ^ d
                    if nxt not in visited:
                        seen(nxt)
                        push(nxt)
    members = None
    if collect:
        members = [_unpack_rows(n, p) for p in packed_members]
    return outcome, explored, max_alpha, witness, members


def enumerate_orbit(g: Graph, budget: int | None = None) -> list[Graph]:
    """All labeled graphs reachable by local complementations, BFS order."""
    _, _, _, _, members = _bfs(g.n, g.rows, None, budget, True)
    assert members is not None
    return [Graph(g.n, rows) for rows in members]


def orbit_search(g: Graph, k: int, budget: int | None = None) -> OrbitSummary:
    """BFS until some orbit member has an independent set of size k.

    Outcome FOUND/EXHAUSTED is a function of (g, k) alone; the explored
    count under FOUND depends on the (fixed, documented) BFS order.
    """
    if k < 1:
        raise ValueError("target independent set size must be >= 1")
    outcome, explored, max_alpha, witness, _ = _bfs(g.n, g.rows, k, budget, False)
    return OrbitSummary(
        outcome=outcome,
        explored=explored,
        max_alpha_seen=max_alpha,
        witness=None if witness is None else Graph(g.n, witness),
    )


def beta(g: Graph) -> int:
    """Maximum independence number over the full labeled orbit."""
    _, _, max_alpha, _, _ = _bfs(g.n, g.rows, g.n + 1, None, False)
    return max_alpha


def beta_disconnected(g: Graph) -> int:
    """Orbit-max independence via per-component sums.

    Local complementation acts within connected components, so the orbit
    maximum is additive over them; for a connected graph this equals
    beta(g) directly.
    """
    comps = components(g)
    if len(comps) == 1:
        return beta(g)
    return sum(beta(induced_subgraph(g, comp)) for comp in comps)


def orbit_digest(members: list[tuple[int, ...]]) -> str:
    """SHA-256 over the orbit content, independent of traversal order.

    Member row tuples are sorted lexicographically and each row is fed to
    the hash as 8 bytes big-endian.
    """
    h = hashlib.sha256()
    for rows in sorted(members):
        for r in rows:
            h.update(r.to_bytes(8, "big"))
    return h.hexdigest()


def make_certificate(code: str, k: int) -> Certificate:
    """Full-orbit negative certificate for the graph behind a graph6 code.

    Raises ValueError if any orbit member reaches the target (the graph is
    not a counterexample, so no negative certificate exists).
    """
    g = graph6.decode(code)
    outcome, explored, max_alpha, _, members = _bfs(g.n, g.rows, k, None, True)
    if outcome == FOUND:
        raise ValueError(f"witness exists: an orbit member of {code!r} has alpha >= {k}")
    assert members is not None
    return Certificate(
        code=code,
        k=k,
        orbit_size=explored,
        max_alpha=max_alpha,
        digest=orbit_digest(members),
    )


def certificate_mismatch(cert: Certificate) -> str | None:
    """Re-run the enumeration; name the first differing field, or None."""
    g = graph6.decode(cert.code)
    outcome, explored, max_alpha, _, members = _bfs(g.n, g.rows, cert.k, None, True)
    if outcome == FOUND:
        return "max_alpha"
    if explored != cert.orbit_size:
        return "orbit_size"
    if max_alpha != cert.max_alpha:
        return "max_alpha"
    assert members is not None
    if orbit_digest(members) != cert.digest:
        return "digest"
    return None


def verify_certificate(cert: Certificate) -> bool:
    return certificate_mismatch(cert) is None


def write_certificate(cert: Certificate, path: str) -> None:
    with open(path, "w", encoding="ascii") as fobj:
        fobj.write(format_certificate(cert))


def format_certificate(cert: Certificate) -> str:
    return (
        f"code={cert.code}\n"
        f"k={cert.k}\n"
        f"orbit_size={cert.orbit_size}\n"
        f"max_alpha={cert.max_alpha}\n"
        f"digest={cert.digest}\n"
    )


def parse_certificate(text: str) -> Certificate:
    values: dict[str, str] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise ValueError(f"certificate line {lineno}: expected key=value")
        if key in values:
            raise ValueError(f"certificate line {lineno}: duplicate key {key!r}")
        values[key] = value
    missing = [k for k in CERTIFICATE_FIELDS if k not in values]
    if missing:
        raise ValueError(f"certificate missing fields: {', '.join(missing)}")
    extra = [k for k in values if k not in CERTIFICATE_FIELDS]
    if extra:
        raise ValueError(f"certificate has unknown fields: {', '.join(extra)}")
    return Certificate(
        code=values["code"],
        k=int(values["k"]),
        orbit_size=int(values["orbit_size"]),
        max_alpha=int(values["max_alpha"]),
        digest=values["digest"],
    )


def read_certificate(path: str) -> Certificate:
    with open(path, "r", encoding="ascii") as fobj:
        return parse_certificate(fobj.read())
