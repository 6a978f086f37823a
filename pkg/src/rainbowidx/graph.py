"""Immutable simple graphs on vertices 0..n-1 plus small-graph utilities.

Adjacency is kept as one integer bitset per vertex; the edge list is sorted
lexicographically and its order is the indexing used by every coloring.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, permutations
from typing import Iterable, Iterator, Sequence

import numpy as np

VertexSet = tuple[int, ...]
EdgeSubset = frozenset[int]

INF = math.inf
CANONICAL_MAX_N = 8
STEINER_MAX_N = 20
STEINER_MAX_TERMINALS = 10


class GraphError(ValueError):
    """Raised for malformed graphs or violated graph preconditions."""


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[tuple[int, int], ...]
    adjacency: tuple[int, ...] = field(repr=False, compare=False)

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> list[int]:
        return bits(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adjacency[u] >> v & 1)

    def edge_index(self, u: int, v: int) -> int:
        key = (u, v) if u < v else (v, u)
        return self._index[key]

    @property
    def _index(self) -> dict[tuple[int, int], int]:
        cache = self.__dict__.get("_index_cache")
        if cache is None:
            cache = {e: i for i, e in enumerate(self.edges)}
            object.__setattr__(self, "_index_cache", cache)
        return cache

    def degree(self, v: int) -> int:
        return self.adjacency[v].bit_count()

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.edges]}


def bits(mask: int) -> list[int]:
    """Indices of the set bits of ``mask`` in increasing order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def vertex_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def make_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Build a graph, rejecting loops, duplicates and out-of-range vertices.

    Pairs may be given in either orientation; they are stored as (u, v) with
    u < v and sorted lexicographically.
    """
    if n < 1:
        raise GraphError(f"vertex count must be >= 1, got {n}")
    seen: set[tuple[int, int]] = set()
    for pair in edges:
        if len(pair) != 2:
            raise GraphError(f"edge {pair!r} is not a pair")
        u, v = int(pair[0]), int(pair[1])
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has a vertex outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"loop edge at vertex {u}")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise GraphError(f"duplicate edge {key}")
        seen.add(key)
    ordered = tuple(sorted(seen))
    adj = [0] * n
    for u, v in ordered:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, ordered, tuple(adj))


def graph_from_json(obj: dict) -> Graph:
    try:
        n = obj["n"]
        edges = obj["edges"]
    except (KeyError, TypeError) as exc:
        raise GraphError(f"graph object is missing field {exc}") from None
    if not isinstance(n, int):
        raise GraphError("field 'n' must be an integer")
    if not isinstance(edges, list):
        raise GraphError("field 'edges' must be a list of pairs")
    return make_graph(n, edges)


def is_connected(g: Graph) -> bool:
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= g.adjacency[v]
        frontier = nxt & ~seen
        seen |= nxt
    return seen == (1 << g.n) - 1


def is_tree(g: Graph, sub: Iterable[int]) -> bool:
    """True iff the chosen edges form a tree on the vertices they touch."""
    idx = set(sub)
    if not idx:
        return False
    parent: dict[int, int] = {}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i in idx:
        u, v = g.edges[i]
        parent.setdefault(u, u)
        parent.setdefault(v, v)
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[ru] = rv
    # acyclic with |E| = |V| - 1 means connected
    return len(idx) == len(parent) - 1


def bfs_distances(g: Graph, source: int) -> list[float]:
    dist: list[float] = [INF] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for w in bits(g.adjacency[v]):
            if dist[w] == INF:
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist


def girth(g: Graph) -> float:
    """Length of a shortest cycle, or ``math.inf`` for a forest."""
    best = INF
    for s in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in bits(g.adjacency[v]):
                if dist[w] < 0:
                    dist[w] = dist[v] + 1
                    parent[w] = v
                    queue.append(w)
                elif parent[v] != w:
                    best = min(best, dist[v] + dist[w] + 1)
    return best


def complement(g: Graph) -> Graph:
    return make_graph(g.n, [(u, v) for u, v in combinations(range(g.n), 2) if not g.has_edge(u, v)])


def apex_join(g: Graph) -> Graph:
    """Add one new vertex (index n) adjacent to every existing vertex."""
    return make_graph(g.n + 1, list(g.edges) + [(v, g.n) for v in range(g.n)])


def disjoint_union(g: Graph, h: Graph) -> Graph:
    return make_graph(g.n + h.n, list(g.edges) + [(u + g.n, v + g.n) for u, v in h.edges])


def k_subsets(n: int, k: int) -> Iterator[VertexSet]:
    """All k-subsets of range(n) in lexicographic order."""
    if not 2 <= k <= n:
        raise GraphError(f"subset size k={k} outside 2..{n}")
    return combinations(range(n), k)


def distance_matrix(g: Graph) -> list[list[float]]:
    return [bfs_distances(g, v) for v in range(g.n)]


def steiner_tree_min_size(g: Graph, s: Iterable[int], *, dist: list[list[float]] | None = None) -> int:
    """Minimum edge count of a subtree of ``g`` containing every vertex of ``s``.

    Exact Dreyfus-Wagner dynamic program over subsets of the terminals, using
    BFS distances (unit weights). Ceiling: n <= 20 and |s| <= 10.  Callers
    scanning many terminal sets may pass a precomputed ``dist`` matrix, in
    which case connectivity is the caller's responsibility.
    """
    terms = sorted(set(s))
    if len(terms) < 2:
        raise GraphError("terminal set needs at least two vertices")
    if dist is None:
        if not is_connected(g):
            raise GraphError("steiner tree requested on a disconnected graph")
        dist = distance_matrix(g)
    if len(terms) == g.n:
        return g.n - 1
    if len(terms) == 2:
        return int(dist[terms[0]][terms[1]])
    if len(terms) == 3:
        a, b, c = terms
        return int(min(dist[v][a] + dist[v][b] + dist[v][c] for v in range(g.n)))
    if g.n > STEINER_MAX_N or len(terms) > STEINER_MAX_TERMINALS:
        raise GraphError(
            f"steiner ceiling exceeded (n={g.n}, |s|={len(terms)}; "
            f"limits {STEINER_MAX_N}, {STEINER_MAX_TERMINALS})"
        )

    # dp[mask][v]: min tree spanning terminals in mask plus vertex v
    root, rest = terms[-1], terms[:-1]
    full = (1 << len(rest)) - 1
    dp: list[list[float]] = [[INF] * g.n for _ in range(full + 1)]
    for i, term in enumerate(rest):
        dp[1 << i] = list(dist[term])
    for mask in range(1, full + 1):
        if mask & (mask - 1) == 0:
            continue
        row = dp[mask]
        sub = (mask - 1) & mask
        while sub:
            if sub < (mask ^ sub):
                part, other = dp[sub], dp[mask ^ sub]
                for v in range(g.n):
                    val = part[v] + other[v]
                    if val < row[v]:
                        row[v] = val
            sub = (sub - 1) & mask
        dp[mask] = [min(row[u] + dist[u][v] for u in range(g.n)) for v in range(g.n)]
    return int(dp[full][root])


# -- canonical labelling -------------------------------------------------------


@lru_cache(maxsize=None)
def pair_weights(n: int) -> np.ndarray:
    """(n!, C(n,2)) table: code contribution of pair e after permutation p.

    Pair positions run row by row over the upper triangle and the first
    position is the most significant bit, so a smaller integer is a
    lexicographically smaller bit string.
    """
    if n > CANONICAL_MAX_N:
        raise GraphError(f"canonical code limited to n <= {CANONICAL_MAX_N}, got {n}")
    pairs = list(combinations(range(n), 2))
    width = len(pairs)
    position = {pq: i for i, pq in enumerate(pairs)}
    perms = np.array(list(permutations(range(n))), dtype=np.intp).reshape(-1, n)
    table = np.zeros((len(perms), width), dtype=np.int64)
    for e, (a, b) in enumerate(pairs):
        pa, pb = perms[:, a], perms[:, b]
        lo, hi = np.minimum(pa, pb), np.maximum(pa, pb)
        pos = np.array([position[(int(x), int(y))] for x, y in zip(lo, hi)], dtype=np.int64)
        table[:, e] = np.int64(1) << (width - 1 - pos)
    return table


def pair_index(n: int, u: int, v: int) -> int:
    """Row-major position of pair (u, v), u < v, in the upper triangle."""
    return u * (2 * n - u - 1) // 2 + (v - u - 1)


def canonical_int(g: Graph) -> int:
    table = pair_weights(g.n)
    if not g.edges:
        return 0
    cols = [pair_index(g.n, u, v) for u, v in g.edges]
    return int(table[:, cols].sum(axis=1).min())


def canonical_code(g: Graph) -> str:
    """Lexicographically least upper-triangle bit string over all relabelings.

    Pairs are read row by row: (0,1), (0,2), ..., (1,2), ...; two graphs have
    equal codes iff they are isomorphic. Costs n! work, so n <= 8.
    """
    width = g.n * (g.n - 1) // 2
    value = canonical_int(g)
    return format(value, f"0{width}b") if width else ""


def graph_from_code(n: int, code: str) -> Graph:
    pairs = list(combinations(range(n), 2))
    return make_graph(n, [p for p, bit in zip(pairs, code) if bit == "1"])
