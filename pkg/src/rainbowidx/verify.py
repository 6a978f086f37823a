"""Rainbow S-tree search, k-rainbow verification and exact k-rainbow indices.

The tree search grows a subtree from the smallest vertex of S, branching on
the lowest-indexed usable boundary edge (take it or forbid it), so every
rainbow subtree through that vertex is visited at most once.  The rx solver
enumerates edge partitions as restricted growth strings and keeps one witness
tree per k-subset under an optimistic completion of the partial coloring.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterable, Optional, Sequence

from .coloring import EdgeColoring, from_blocks
from .graph import (
    EdgeSubset,
    Graph,
    GraphError,
    VertexSet,
    bits,
    distance_matrix,
    is_connected,
    is_tree,
    k_subsets,
    steiner_tree_min_size,
    vertex_mask,
)

DEFAULT_NODE_BUDGET = 5_000_000


class SearchBudgetExceeded(RuntimeError):
    """The exact solver hit its node cap; no answer is implied."""


@dataclass(frozen=True)
class VerificationReport:
    ok: bool
    checked_subsets: int
    first_failure: Optional[VertexSet] = None
    witness_trees: Optional[dict[VertexSet, EdgeSubset]] = None

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "checked": self.checked_subsets,
            "first_failure": list(self.first_failure) if self.first_failure is not None else None,
        }


@dataclass(frozen=True)
class RxResult:
    value: int
    witness_coloring: EdgeColoring
    lower_bound_used: int

    def to_json(self) -> dict:
        return {
            "value": self.value,
            "colors": list(self.witness_coloring.colors),
            "lower_bound": self.lower_bound_used,
        }


def _incidence(g: Graph) -> list[list[tuple[int, int]]]:
    inc: list[list[tuple[int, int]]] = [[] for _ in range(g.n)]
    for e, (u, v) in enumerate(g.edges):
        inc[u].append((e, v))
        inc[v].append((e, u))
    return inc


def _find_tree(
    inc: Sequence[Sequence[tuple[int, int]]],
    color: Sequence[int],
    target: int,
    max_edges: int,
    allowed: int,
) -> Optional[int]:
    """Edge mask of a rainbow tree covering ``target``, or None.

    ``color`` holds one integer per edge (any non-negative ids); at most
    ``max_edges`` edges are used and only vertices in ``allowed`` are entered.
    """
    root_bit = target & -target

    def rec(tree: int, used: int, excluded: int, chosen: int, depth: int) -> Optional[int]:
        if tree & target == target:
            return chosen
        if (target & ~tree).bit_count() > max_edges - depth:
            return None
        # boundary edge with the smallest index, and reachability of target
        best = -1
        best_w = 0
        reach = tree
        frontier = tree
        first = True
        while frontier:
            nxt = 0
            while frontier:
                low = frontier & -frontier
                frontier ^= low
                for e, w in inc[low.bit_length() - 1]:
                    if excluded >> e & 1 or used >> color[e] & 1:
                        continue
                    wb = 1 << w
                    if reach & wb or not allowed & wb:
                        continue
                    nxt |= wb
                    if first and (best < 0 or e < best):
                        best, best_w = e, wb
            first = False
            reach |= nxt
            frontier = nxt
        if target & ~reach:
            return None
        if best < 0:
            return None
        c = color[best]
        found = rec(tree | best_w, used | (1 << c), excluded, chosen | (1 << best), depth + 1)
        if found is not None:
            return found
        return rec(tree, used, excluded | (1 << best), chosen, depth)

    return rec(root_bit, 0, 0, 0, 0)


def _edge_set(mask: int) -> EdgeSubset:
    return frozenset(bits(mask))


def is_rainbow_tree(g: Graph, coloring: EdgeColoring, sub: Iterable[int], s: Iterable[int]) -> bool:
    sub = frozenset(sub)
    if not is_tree(g, sub):
        return False
    touched = {x for i in sub for x in g.edges[i]}
    if not set(s) <= touched:
        return False
    cols = [coloring[i] for i in sub]
    return len(cols) == len(set(cols))


def _check_inputs(g: Graph, coloring: EdgeColoring) -> None:
    if len(coloring) != g.m:
        raise GraphError(f"coloring has {len(coloring)} entries but graph has {g.m} edges")


def exists_rainbow_s_tree(g: Graph, coloring: EdgeColoring, s: Iterable[int]) -> Optional[EdgeSubset]:
    """A rainbow tree of ``g`` containing every vertex of ``s``, if one exists."""
    _check_inputs(g, coloring)
    target = vertex_mask(s)
    if target.bit_count() < 2:
        raise GraphError("S must contain at least two vertices")
    limit = min(g.n - 1, coloring.palette_size)
    found = _find_tree(_incidence(g), coloring.colors, target, limit, (1 << g.n) - 1)
    if found is None:
        return None
    witness = _edge_set(found)
    assert is_rainbow_tree(g, coloring, witness, s), "tree search returned an invalid witness"
    return witness


def _first_failure(args: tuple) -> tuple[Optional[VertexSet], int, dict]:
    g, coloring, subsets, want_witnesses = args
    inc = _incidence(g)
    limit = min(g.n - 1, coloring.palette_size)
    everything = (1 << g.n) - 1
    trees: dict[VertexSet, EdgeSubset] = {}
    checked = 0
    for s in subsets:
        checked += 1
        found = _find_tree(inc, coloring.colors, vertex_mask(s), limit, everything)
        if found is None:
            return s, checked, trees
        if want_witnesses:
            trees[s] = _edge_set(found)
    return None, checked, trees


def thread_count() -> int:
    """Worker cap from RAINBOW_THREADS (0 means one per CPU; unset means 1)."""
    raw = os.environ.get("RAINBOW_THREADS", "1").strip() or "1"
    value = int(raw)
    if value <= 0:
        return os.cpu_count() or 1
    return value


def verify_k_rainbow(
    g: Graph,
    coloring: EdgeColoring,
    k: int,
    *,
    witnesses: bool = False,
    workers: Optional[int] = None,
) -> VerificationReport:
    """Check every k-subset for a rainbow S-tree, in lexicographic order.

    ``checked_subsets`` counts subsets examined up to and including the first
    failure (all C(n, k) when the coloring passes).
    """
    _check_inputs(g, coloring)
    if not is_connected(g):
        raise GraphError("k-rainbow verification needs a connected graph")
    subsets = list(k_subsets(g.n, k))
    workers = thread_count() if workers is None else workers
    if workers <= 1 or len(subsets) < 64:
        failure, checked, trees = _first_failure((g, coloring, subsets, witnesses))
    else:
        size = -(-len(subsets) // (workers * 4))
        chunks = [subsets[i : i + size] for i in range(0, len(subsets), size)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_first_failure, [(g, coloring, c, witnesses) for c in chunks]))
        failure, checked, trees = None, 0, {}
        # chunks are in lexicographic order, so the first failing chunk holds the minimum
        for chunk, (fail, count, chunk_trees) in zip(chunks, results):
            trees.update(chunk_trees)
            if fail is not None:
                failure = fail
                checked += count
                break
            checked += len(chunk)
    if failure is not None:
        return VerificationReport(False, checked, failure, trees if witnesses else None)
    return VerificationReport(True, len(subsets), None, trees if witnesses else None)


def steiner_k_diameter(g: Graph, k: int) -> int:
    if not is_connected(g):
        raise GraphError("steiner diameter needs a connected graph")
    if k == g.n:
        return g.n - 1
    dist = distance_matrix(g)
    return max(steiner_tree_min_size(g, s, dist=dist) for s in k_subsets(g.n, k))


def _spanning_tree_coloring(g: Graph) -> EdgeColoring:
    """Distinct colors 1..n-1 on a BFS spanning tree, color 1 elsewhere."""
    colors = [1] * g.m
    seen = 1
    frontier = [0]
    nxt_color = 1
    while frontier:
        layer = []
        for v in frontier:
            for w in bits(g.adjacency[v] & ~seen):
                seen |= 1 << w
                colors[g.edge_index(v, w)] = nxt_color
                nxt_color += 1
                layer.append(w)
        frontier = layer
    return EdgeColoring(tuple(colors), max(1, nxt_color - 1))


class _PartitionSearch:
    """Backtracking over restricted growth strings with exactly ``blocks`` blocks.

    Unassigned edges carry unique colors, which refines every completion;
    a subset without a rainbow tree under that optimistic coloring cannot
    gain one later, so the branch is cut.
    """

    def __init__(self, g: Graph, k: int, ell: int, node_budget: int):
        self.g = g
        self.m = g.m
        self.blocks = min(ell, g.m)
        self.max_edges = ell
        self.inc = _incidence(g)
        self.targets = [vertex_mask(s) for s in combinations(range(g.n), k)]
        self.allowed = [t if ell == k - 1 else (1 << g.n) - 1 for t in self.targets]
        self.color = [self.blocks + e for e in range(self.m)]
        self.class_mask = [0] * self.blocks
        self.assign = [0] * self.m
        self.order = list(range(len(self.targets)))
        self.node_budget = node_budget
        self.nodes = 0

    def _tree(self, j: int) -> Optional[int]:
        return _find_tree(self.inc, self.color, self.targets[j], self.max_edges, self.allowed[j])

    def run(self) -> Optional[list[int]]:
        witness = []
        for j in range(len(self.targets)):
            w = self._tree(j)
            if w is None:
                return None
            witness.append(w)
        self.witness = witness
        if self.m == 0:
            return []
        return self._rec(0, -1)

    def _rec(self, i: int, top: int) -> Optional[list[int]]:
        if i == self.m:
            return list(self.assign)
        self.nodes += 1
        if self.nodes > self.node_budget:
            raise SearchBudgetExceeded(f"partition search exceeded {self.node_budget} nodes")
        remaining = self.m - i
        missing = self.blocks - (top + 1)
        if missing >= remaining:
            choices = [top + 1] if missing == remaining else []
        else:
            choices = list(range(min(top + 1, self.blocks - 1), -1, -1))
        bit = 1 << i
        witness = self.witness
        order = self.order
        for c in choices:
            self.color[i] = c
            self.assign[i] = c
            clash = self.class_mask[c]
            self.class_mask[c] = clash | bit
            changed: list[tuple[int, int]] = []
            ok = True
            for pos, j in enumerate(order):
                w = witness[j]
                if w & bit and w & clash:
                    fresh = self._tree(j)
                    if fresh is None:
                        ok = False
                        if pos:
                            order.insert(0, order.pop(pos))
                        break
                    changed.append((j, w))
                    witness[j] = fresh
            if ok:
                found = self._rec(i + 1, max(top, c))
                if found is not None:
                    return found
            for j, w in changed:
                witness[j] = w
            self.class_mask[c] = clash
            self.color[i] = self.blocks + i
        return None


def rx_at_most(
    g: Graph, k: int, ell: int, *, node_budget: int = DEFAULT_NODE_BUDGET
) -> Optional[EdgeColoring]:
    """A k-rainbow coloring of ``g`` with at most ``ell`` colors, or None.

    Only partitions into exactly min(ell, |E|) classes are tried: splitting a
    color class never destroys a rainbow tree.
    """
    if not is_connected(g):
        raise GraphError("rx needs a connected graph")
    if not 2 <= k <= g.n:
        raise GraphError(f"k={k} outside 2..{g.n}")
    if ell < 1:
        raise GraphError("ell must be positive")
    if ell >= g.n - 1:
        return _spanning_tree_coloring(g)
    if ell < k - 1:
        return None
    search = _PartitionSearch(g, k, ell, node_budget)
    blocks = search.run()
    if blocks is None:
        return None
    return from_blocks(blocks)


def rx_exact(g: Graph, k: int, *, node_budget: int = DEFAULT_NODE_BUDGET) -> RxResult:
    """Exact k-rainbow index, scanning upward from the Steiner k-diameter."""
    if not is_connected(g):
        raise GraphError("rx needs a connected graph")
    lower = steiner_k_diameter(g, k)
    for ell in range(lower, max(lower, g.n - 1) + 1):
        coloring = rx_at_most(g, k, ell, node_budget=node_budget)
        if coloring is not None:
            return RxResult(coloring.palette_size, coloring, lower)
    raise AssertionError("a rainbow spanning tree always gives rx_k <= n - 1")


def expected_subset_count(n: int, k: int) -> int:
    return comb(n, k)
