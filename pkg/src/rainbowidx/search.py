"""Exhaustive search for t(n, k, l) over isomorphism classes of connected graphs."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb, inf
from typing import Iterator, Optional

import numpy as np

from .coloring import EdgeColoring
from .graph import (
    Graph,
    GraphError,
    graph_from_code,
    is_connected,
    pair_weights,
)
from .verify import DEFAULT_NODE_BUDGET, rx_at_most, steiner_k_diameter, verify_k_rainbow

log = logging.getLogger(__name__)

ENUMERATION_MAX_N = 7


class ChainViolation(AssertionError):
    pass


@dataclass
class SearchResult:
    n: int
    k: int
    ell: int
    value: Optional[int]
    witness: Optional[tuple[Graph, EdgeColoring]]
    graphs_examined: int
    exhaustive: bool
    class_counts: dict[int, int] = field(default_factory=dict)

    def to_json(self) -> dict:
        witness = None
        if self.witness is not None:
            g, col = self.witness
            witness = {"graph": g.to_json(), "colors": list(col.colors), "palette": col.palette_size}
        return {
            "n": self.n,
            "k": self.k,
            "l": self.ell,
            "value": self.value,
            "witness": witness,
            "examined": self.graphs_examined,
            "exhaustive": self.exhaustive,
            "class_counts": {str(m): c for m, c in sorted(self.class_counts.items())},
        }


@lru_cache(maxsize=None)
def _class_codes(n: int) -> tuple[tuple[int, ...], ...]:
    """Canonical codes (as integers) of all graphs on n vertices, per edge count.

    Level m+1 is every class of level m with one more edge, deduplicated by
    canonical code; every graph with m+1 edges arises this way.
    """
    width = n * (n - 1) // 2
    table = pair_weights(n)
    levels: list[tuple[int, ...]] = [(0,)]
    for m in range(width):
        found: set[int] = set()
        for code in levels[m]:
            present = [p for p in range(width) if code >> (width - 1 - p) & 1]
            absent = [p for p in range(width) if not code >> (width - 1 - p) & 1]
            base = table[:, present].sum(axis=1) if present else np.zeros(len(table), np.int64)
            grown = base[:, None] + table[:, absent]
            found.update(int(x) for x in grown.min(axis=0))
        levels.append(tuple(sorted(found)))
    return tuple(levels)


def _code_string(n: int, code: int) -> str:
    width = n * (n - 1) // 2
    return format(code, f"0{width}b") if width else ""


def enumerate_graphs(n: int, m: int) -> Iterator[Graph]:
    """One canonical representative per class of n-vertex graphs with m edges."""
    if not 1 <= n <= ENUMERATION_MAX_N:
        raise GraphError(f"enumeration limited to 1 <= n <= {ENUMERATION_MAX_N}, got {n}")
    if not 0 <= m <= comb(n, 2):
        raise GraphError(f"edge count {m} outside 0..{comb(n, 2)}")
    for code in _class_codes(n)[m]:
        yield graph_from_code(n, _code_string(n, code))


def enumerate_connected(n: int, m: int) -> Iterator[Graph]:
    """Connected classes with n vertices and m edges, in increasing code order."""
    if not 1 <= n <= ENUMERATION_MAX_N:
        raise GraphError(f"enumeration limited to 1 <= n <= {ENUMERATION_MAX_N}, got {n}")
    if not n - 1 <= m <= comb(n, 2):
        raise GraphError(f"connected graphs on {n} vertices have {n - 1}..{comb(n, 2)} edges, got {m}")
    for g in enumerate_graphs(n, m):
        if is_connected(g):
            yield g


def t_min(n: int, k: int, ell: int, *, node_budget: int = DEFAULT_NODE_BUDGET) -> SearchResult:
    """Smallest m admitting a connected n-vertex graph with rx_k <= ell.

    Levels are finished in order of m; the first witness found is
    re-verified from scratch before it is reported.
    """
    if not 2 <= n <= ENUMERATION_MAX_N:
        raise GraphError(f"t_min limited to 2 <= n <= {ENUMERATION_MAX_N}, got {n}")
    if not 2 <= k <= n:
        raise GraphError(f"k={k} outside 2..{n}")
    if not 1 <= ell <= max(1, n - 1):
        raise GraphError(f"l={ell} outside 1..{n - 1}")
    examined = 0
    counts: dict[int, int] = {}
    for m in range(n - 1, comb(n, 2) + 1):
        reps = list(enumerate_connected(n, m))
        counts[m] = len(reps)
        for g in reps:
            examined += 1
            if steiner_k_diameter(g, k) > ell:
                continue
            coloring = rx_at_most(g, k, ell, node_budget=node_budget)
            if coloring is None:
                continue
            report = verify_k_rainbow(g, coloring, k)
            if not report.ok or coloring.used > ell:
                raise AssertionError(f"search produced a coloring that fails re-verification on {g.edges}")
            log.debug("t(%d,%d,%d) = %d after %d graphs", n, k, ell, m, examined)
            return SearchResult(n, k, ell, m, (g, coloring), examined, False, counts)
    return SearchResult(n, k, ell, None, None, examined, True, counts)


def check_monotone_chain(n: int, k: int, *, node_budget: int = DEFAULT_NODE_BUDGET) -> list[tuple[int, Optional[int]]]:
    """t_min for l = 2..n-1; raises ChainViolation unless non-increasing.

    Nonexistence (None) ranks above every finite value.
    """
    if n > 6:
        raise GraphError(f"monotone chain limited to n <= 6, got {n}")
    chain = [(ell, t_min(n, k, ell, node_budget=node_budget).value) for ell in range(2, n)]
    ranked = [inf if v is None else v for _, v in chain]
    for (l1, a), (l2, b) in zip(zip(range(2, n), ranked), zip(range(3, n), ranked[1:])):
        if b > a:
            raise ChainViolation(f"t({n},{k},{l2}) = {b} exceeds t({n},{k},{l1}) = {a}")
    return chain


def all_connected(n: int) -> Iterator[Graph]:
    for m in range(n - 1, comb(n, 2) + 1):
        yield from enumerate_connected(n, m)


def class_counts(n: int) -> dict[int, int]:
    """Number of connected classes per edge count."""
    return {m: sum(1 for _ in enumerate_connected(n, m)) for m in range(n - 1, comb(n, 2) + 1)}
