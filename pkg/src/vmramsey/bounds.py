"""Lower bounds on the edgeless vertex-minor threshold from building
blocks, and the comparison table against 2^k - 1 and the quadratic
leading term k^2 / (2 log2 3).

A building block is a graph whose orbit-max independence number (beta) is
known; disjoint blocks add their beta values, so blocks with total beta
at most k-1 witness that every graph on their combined order still avoids
the k-vertex edgeless graph as a vertex-minor.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .graphs import Graph
from .orbits import beta_disconnected

LOG2_3 = math.log2(3)  # the only place this constant is spelled

# Orders realizing beta = 1 and beta = 2 with the largest possible block:
# a single edge, and the complement of the 6-cycle.
_REMAINDER_ORDER = {0: 0, 1: 2, 2: 6}

KNOWN_VALUES = {2: 3, 3: 7, 4: 11}


@dataclass(frozen=True)
class BlockSpec:
    graph: Graph
    beta: int


def make_block(graph: Graph) -> BlockSpec:
    """Block with its beta recomputed from the orbit, never trusted."""
    return BlockSpec(graph=graph, beta=beta_disconnected(graph))


def building_block_bound(blocks: list[BlockSpec], k: int) -> int | None:
    """Lower bound sum(|H_i|) + 1 when the blocks' betas total at most k-1."""
    if sum(b.beta for b in blocks) > k - 1:
        return None
    return sum(b.graph.n for b in blocks) + 1


def corollary_bound(k: int) -> int:
    """Closed-form lower bound 10q + v(r) + 1 where k - 1 = 3q + r."""
    if k < 2:
        raise ValueError("closed-form bound defined for k >= 2")
    q, r = divmod(k - 1, 3)
    return 10 * q + _REMAINDER_ORDER[r] + 1


def asymptotic_leading(k: int) -> int:
    """floor(k^2 / (2 log2 3)), with a floating-point stability guard."""
    value = k * k / (2 * LOG2_3)
    lo = math.floor(k * k / (2 * LOG2_3 * (1 + 1e-12)))
    hi = math.floor(k * k / (2 * LOG2_3 * (1 - 1e-12)))
    result = math.floor(value)
    if not lo == hi == result:
        raise ArithmeticError(f"floor of leading term unstable at k={k}")
    return result


@dataclass(frozen=True)
class BoundRow:
    k: int
    explicit_lower: int
    upper_2k: int
    asymptotic_leading: int
    known_value: int | None


def bound_table(k_max: int) -> list[BoundRow]:
    if k_max < 2:
        raise ValueError("table starts at k=2")
    return [
        BoundRow(
            k=k,
            explicit_lower=corollary_bound(k),
            upper_2k=2**k - 1,
            asymptotic_leading=asymptotic_leading(k),
            known_value=KNOWN_VALUES.get(k),
        )
        for k in range(2, k_max + 1)
    ]
