"""Three-phase census pipeline for the edgeless-vertex-minor predicate.

Every graph is placed in exactly one phase for a target size k:

  P1           the graph itself has an independent set of size k;
  P2           the orbit search finds a member with one;
  P3           the full orbit was exhausted with no member reaching k
               (the graph is a counterexample at its order);
  P3_BUDGETED  the search hit its budget first, so P3 is provisional.

Counts aggregate deterministically regardless of worker count, and
phase-3 records are reported in input order.
"""

from __future__ import annotations

import multiprocessing
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator

from . import graph6
from .generate import generate_all
from .graphs import Graph, induced_subgraph
from .invariants import _alpha_capped, components
from .orbits import BUDGET, EXHAUSTED, FOUND, _bfs

P1 = "P1"
P2 = "P2"
P3 = "P3"
P3_BUDGETED = "P3_BUDGETED"

COUNTEREXAMPLE_PHASES = (P3, P3_BUDGETED)


class InputFormatError(ValueError):
    """Malformed graph6 input line; carries the 1-based line number."""

    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


@dataclass(frozen=True)
class PhaseRecord:
    """Classification outcome for one graph.

    max_alpha is the largest independence value the pipeline established;
    tests cap at the target k, so a value of k means "at least k".  P1
    records have explored=0 (no orbit work).
    """

    code: str
    phase: str
    explored: int
    max_alpha: int


@dataclass
class PhaseCounts:
    n: int
    k: int
    budget: int | None
    total: int = 0
    p1: int = 0
    p2: int = 0
    p3: int = 0
    p3_budgeted: int = 0

    @property
    def p3_total(self) -> int:
        return self.p3 + self.p3_budgeted

    def add(self, other: "PhaseCounts") -> None:
        assert (self.n, self.k, self.budget) == (other.n, other.k, other.budget)
        self.total += other.total
        self.p1 += other.p1
        self.p2 += other.p2
        self.p3 += other.p3
        self.p3_budgeted += other.p3_budgeted


def classify_one(
    g: Graph,
    k: int,
    budget: int | None = None,
    fast_path_disconnected: bool = False,
) -> PhaseRecord:
    """Phase of a single graph; pure function of (g, k, budget).

    The disconnected fast path replaces the product-orbit search by
    per-component orbit maxima (which are additive over components).  It
    yields the identical phase and, for P3, the identical max_alpha and
    orbit size; explored under P2 then counts component explorations
    instead, and any budget is ignored.  It is off by default so that
    default results come from the uniform pipeline.
    """
    code = graph6.encode(g)
    alpha_root = _alpha_capped(g.rows, g.full_mask(), k)
    if alpha_root >= k:
        return PhaseRecord(code=code, phase=P1, explored=0, max_alpha=alpha_root)

    if fast_path_disconnected:
        comps = components(g)
        if len(comps) > 1:
            return _classify_by_components(g, code, k, comps)

    outcome, explored, max_alpha, _, _ = _bfs(g.n, g.rows, k, budget, False)
    phase = {FOUND: P2, EXHAUSTED: P3, BUDGET: P3_BUDGETED}[outcome]
    return PhaseRecord(code=code, phase=phase, explored=explored, max_alpha=max_alpha)


def _classify_by_components(g: Graph, code: str, k: int, comps: list[int]) -> PhaseRecord:
    betas = []
    sizes = []
    explored = 0
    for comp in comps:
        sub = induced_subgraph(g, comp)
        outcome, size, max_alpha, _, _ = _bfs(sub.n, sub.rows, sub.n + 1, None, False)
        assert outcome == EXHAUSTED
        betas.append(max_alpha)
        sizes.append(size)
        explored += size
    total_beta = sum(betas)
    if total_beta >= k:
        return PhaseRecord(code=code, phase=P2, explored=explored, max_alpha=k)
    orbit_size = 1
    for size in sizes:
        orbit_size *= size  # the product orbit factors over components
    return PhaseRecord(code=code, phase=P3, explored=orbit_size, max_alpha=total_beta)


def classify_graphs(
    graphs: Iterable[Graph],
    k: int,
    budget: int | None = None,
    fast_path_disconnected: bool = False,
) -> tuple[list[PhaseCounts], list[PhaseRecord]]:
    """Classify a stream; returns per-order counts and the phase-3 records.

    Counts are keyed by order n (census inputs are uniform, so the usual
    result is a single row); rows come back sorted by n.
    """
    by_n: dict[int, PhaseCounts] = {}
    phase3: list[PhaseRecord] = []
    for g in graphs:
        rec = classify_one(g, k, budget, fast_path_disconnected)
        counts = by_n.get(g.n)
        if counts is None:
            counts = by_n[g.n] = PhaseCounts(n=g.n, k=k, budget=budget)
        counts.total += 1
        if rec.phase == P1:
            counts.p1 += 1
        elif rec.phase == P2:
            counts.p2 += 1
        elif rec.phase == P3:
            counts.p3 += 1
            phase3.append(rec)
        else:
            counts.p3_budgeted += 1
            phase3.append(rec)
    return [by_n[n] for n in sorted(by_n)], phase3


def _decode_lines(lines: Iterable[str]) -> Iterator[Graph]:
    first = True
    for lineno, line in enumerate(lines, start=1):
        stripped = line.rstrip("\n").rstrip("\r")
        if first:
            first = False
            if stripped.startswith(graph6.HEADER):
                stripped = stripped[len(graph6.HEADER) :]
        if not stripped:
            continue
        try:
            yield graph6.decode(stripped)
        except graph6.Graph6Error as exc:
            raise InputFormatError(lineno, str(exc)) from exc


def _classify_chunk(args):
    start, codes, k, budget, fast_path = args
    by_n: dict[int, PhaseCounts] = {}
    indexed = []  # records tagged with global input position for a stable merge
    for offset, code in enumerate(codes):
        g = graph6.decode(code)
        rec = classify_one(g, k, budget, fast_path)
        counts = by_n.get(g.n)
        if counts is None:
            counts = by_n[g.n] = PhaseCounts(n=g.n, k=k, budget=budget)
        counts.total += 1
        if rec.phase == P1:
            counts.p1 += 1
        elif rec.phase == P2:
            counts.p2 += 1
        elif rec.phase == P3:
            counts.p3 += 1
            indexed.append((start + offset, rec))
        else:
            counts.p3_budgeted += 1
            indexed.append((start + offset, rec))
    return [by_n[n] for n in sorted(by_n)], indexed


def classify_codes(
    codes: list[str],
    k: int,
    budget: int | None = None,
    workers: int = 1,
    fast_path_disconnected: bool = False,
    chunk_size: int = 4096,
) -> tuple[list[PhaseCounts], list[PhaseRecord]]:
    """Parallel classification of graph6 codes with a deterministic merge.

    The input is split into chunks classified independently; counts merge
    associatively and phase-3 records are re-sorted to input order, so the
    result is identical for any worker count.
    """
    if workers <= 1 or len(codes) <= chunk_size:
        counts, phase3 = classify_graphs(
            (graph6.decode(c) for c in codes), k, budget, fast_path_disconnected
        )
        return counts, phase3

    tasks = [
        (start, codes[start : start + chunk_size], k, budget, fast_path_disconnected)
        for start in range(0, len(codes), chunk_size)
    ]
    by_n: dict[int, PhaseCounts] = {}
    indexed: list[tuple[int, PhaseRecord]] = []
    ctx = multiprocessing.get_context("fork")
    with ctx.Pool(processes=workers) as pool:
        for counts_list, chunk_p3 in pool.imap_unordered(_classify_chunk, tasks):
            for counts in counts_list:
                if counts.n in by_n:
                    by_n[counts.n].add(counts)
                else:
                    by_n[counts.n] = counts
            indexed.extend(chunk_p3)
    indexed.sort(key=lambda item: item[0])
    return [by_n[n] for n in sorted(by_n)], [rec for _, rec in indexed]


def classify_lines(
    lines: Iterable[str],
    k: int,
    budget: int | None = None,
    workers: int = 1,
    fast_path_disconnected: bool = False,
) -> tuple[list[PhaseCounts], list[PhaseRecord]]:
    """Classify newline-separated graph6 input (file or stdin contents)."""
    if workers <= 1:
        return classify_graphs(_decode_lines(lines), k, budget, fast_path_disconnected)
    codes = []
    first = True
    for lineno, line in enumerate(lines, start=1):
        stripped = line.rstrip("\n").rstrip("\r")
        if first:
            first = False
            if stripped.startswith(graph6.HEADER):
                stripped = stripped[len(graph6.HEADER) :]
        if not stripped:
            continue
        try:
            graph6.decode(stripped)
        except graph6.Graph6Error as exc:
            raise InputFormatError(lineno, str(exc)) from exc
        codes.append(stripped)
    return classify_codes(codes, k, budget, workers, fast_path_disconnected)


def ramsey_value_search(
    k: int,
    n_start: int = 1,
    graph_source: Callable[[int], Iterable[Graph]] | None = None,
    n_max: int = 12,
) -> int:
    """Smallest n >= n_start at which no graph is a phase-3 counterexample.

    graph_source(n) must yield a complete census of non-isomorphic graphs
    on n vertices; the default is the internal generator.  Searches run
    without budget, so every verdict is exact.
    """
    source = graph_source if graph_source is not None else generate_all
    for n in range(n_start, n_max + 1):
        clean = True
        for g in source(n):
            rec = classify_one(g, k)
            if rec.phase in COUNTEREXAMPLE_PHASES:
                clean = False
                break
        if clean:
            return n
    raise RuntimeError(f"no counterexample-free order found up to n_max={n_max}")
