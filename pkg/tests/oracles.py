"""Brute-force reference implementations, deliberately independent of the package internals."""

from __future__ import annotations

from itertools import combinations, permutations


def _components(n, edge_list):
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    acyclic = True
    for u, v in edge_list:
        ru, rv = find(u), find(v)
        if ru == rv:
            acyclic = False
        else:
            parent[ru] = rv
    return find, acyclic


def is_tree_edges(n, edge_list):
    if not edge_list:
        return False
    verts = {x for e in edge_list for x in e}
    find, acyclic = _components(n, edge_list)
    return acyclic and len({find(v) for v in verts}) == 1


def naive_rainbow_tree(n, edges, colors, s, palette=None):
    """Scan every edge subset of size <= min(n-1, palette) for a rainbow S-tree."""
    s = set(s)
    limit = n - 1 if palette is None else min(n - 1, palette)
    for size in range(1, limit + 1):
        for idx in combinations(range(len(edges)), size):
            cols = [colors[i] for i in idx]
            if len(set(cols)) != size:
                continue
            chosen = [edges[i] for i in idx]
            if not s <= {x for e in chosen for x in e}:
                continue
            if is_tree_edges(n, chosen):
                return idx
    return None


def naive_steiner(n, edges, s):
    s = set(s)
    for size in range(len(s) - 1, n):
        for idx in combinations(range(len(edges)), size):
            chosen = [edges[i] for i in idx]
            if s <= {x for e in chosen for x in e} and is_tree_edges(n, chosen):
                return size
    return None


def naive_rainbow_paths(n, edges, colors):
    """True iff every vertex pair is joined by a path with distinct colors (DFS over simple paths)."""
    adj = {v: [] for v in range(n)}
    for i, (u, v) in enumerate(edges):
        adj[u].append((v, colors[i]))
        adj[v].append((u, colors[i]))

    def reach(src, dst):
        stack = [(src, {src}, frozenset())]
        while stack:
            v, seen, used = stack.pop()
            if v == dst:
                return True
            for w, c in adj[v]:
                if w not in seen and c not in used:
                    stack.append((w, seen | {w}, used | {c}))
        return False

    return all(reach(a, b) for a, b in combinations(range(n), 2))


def brute_code(n, edges):
    """Smallest upper-triangle string over all relabelings, built directly."""
    eset = {frozenset(e) for e in edges}
    pairs = list(combinations(range(n), 2))
    best = None
    for p in permutations(range(n)):
        code = "".join("1" if frozenset((p[a], p[b])) in eset else "0" for a, b in pairs)
        if best is None or code < best:
            best = code
    return best


def connected_classes_by_masks(n):
    """Per-m counts of connected isomorphism classes from all 2^C(n,2) edge masks."""
    pairs = list(combinations(range(n), 2))
    seen = {}
    for mask in range(1 << len(pairs)):
        chosen = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
        if n > 1:
            find, _ = _components(n, chosen)
            if len({find(v) for v in range(n)}) != 1:
                continue
        seen.setdefault(len(chosen), set()).add(brute_code(n, chosen))
    return {m: len(codes) for m, codes in sorted(seen.items())}
