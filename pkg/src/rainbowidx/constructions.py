"""Graph families with their explicit colorings and claimed k-rainbow bounds.

Vertex numbering is internal and 0-based; every colored family also returns
``vertex_labels`` mapping each index to its textbook name (u_1, w_0, v_{2,3}).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations
from math import comb
import random

from .coloring import EdgeColoring, coloring_for
from .graph import Graph, GraphError, is_connected, make_graph
from .verify import verify_k_rainbow


class Family(str, Enum):
    PATH = "path"
    CYCLE = "cycle"
    STAR = "star"
    COMPLETE = "complete"
    COMPLETE_BIPARTITE = "complete-bipartite"
    BALANCED_BIPARTITE_COLORED = "balanced-bipartite"
    APEX_BIPARTITE = "apex-bipartite"
    COCYCLE_APEX = "cocycle-apex"
    WHEEL = "wheel"
    WHEEL_PENDANT = "wheel-pendant"
    LAYERED_BUNDLE = "layered-bundle"
    ROSE = "rose"
    ROSE_TAIL = "rose-tail"
    K2_BIPARTITE = "k2-bipartite"


BASIC_FAMILIES = {
    Family.PATH,
    Family.CYCLE,
    Family.STAR,
    Family.COMPLETE,
    Family.COMPLETE_BIPARTITE,
    Family.WHEEL,
    Family.ROSE,
}


@dataclass(frozen=True)
class ConstructionSpec:
    family: Family
    params: dict[str, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        object.__setattr__(self, "family", Family(self.family))

    def get(self, key: str) -> int:
        try:
            return self.params[key]
        except KeyError:
            raise GraphError(f"family {self.family.value} needs parameter '{key}'") from None

    def to_json(self) -> dict:
        return {"family": self.family.value, "params": dict(sorted(self.params.items()))}


@dataclass(frozen=True)
class ColoredConstruction:
    spec: ConstructionSpec
    graph: Graph
    coloring: EdgeColoring
    claimed_k: int
    claimed_colors: int
    vertex_labels: dict[int, str]

    def label_of(self, v: int) -> str:
        return self.vertex_labels.get(v, str(v))

    def to_json(self) -> dict:
        return {
            "spec": self.spec.to_json(),
            "graph": self.graph.to_json(),
            "colors": list(self.coloring.colors),
            "palette": self.claimed_colors,
            "claimed_k": self.claimed_k,
            "labels": {str(v): name for v, name in sorted(self.vertex_labels.items())},
        }


class _Builder:
    """Collects labelled vertices and colored edges, then freezes them."""

    def __init__(self) -> None:
        self.labels: list[str] = []
        self.index: dict[str, int] = {}
        self.colored: dict[tuple[int, int], int] = {}

    def vertex(self, label: str) -> int:
        self.index[label] = len(self.labels)
        self.labels.append(label)
        return self.index[label]

    def edge(self, a: str, b: str, color: int = 1) -> None:
        u, v = self.index[a], self.index[b]
        key = (min(u, v), max(u, v))
        if key in self.colored:
            raise GraphError(f"edge {a}{b} added twice")
        self.colored[key] = color

    def finish(self, spec: ConstructionSpec, k: int, palette: int) -> ColoredConstruction:
        g = make_graph(len(self.labels), list(self.colored))
        coloring = coloring_for(g, [self.colored[e] for e in g.edges], palette)
        if not is_connected(g):
            raise GraphError(f"{spec.family.value} construction came out disconnected")
        return ColoredConstruction(spec, g, coloring, k, palette, dict(enumerate(self.labels)))


# -- uncolored families ---------------------------------------------------------


def path_graph(n: int) -> Graph:
    return make_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"cycle needs n >= 3, got {n}")
    return make_graph(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(n: int) -> Graph:
    """Center 0 joined to leaves 1..n-1."""
    return make_graph(n, [(0, i) for i in range(1, n)])


def complete_graph(n: int) -> Graph:
    return make_graph(n, list(combinations(range(n), 2)))


def complete_bipartite_graph(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise GraphError("both sides of a complete bipartite graph must be nonempty")
    return make_graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def wheel_graph(spokes: int) -> Graph:
    """Rim 0..spokes-1 in cyclic order, hub at index ``spokes``."""
    if spokes < 3:
        raise GraphError(f"wheel needs at least 3 spokes, got {spokes}")
    rim = [(i, (i + 1) % spokes) for i in range(spokes)]
    return make_graph(spokes + 1, rim + [(i, spokes) for i in range(spokes)])


def rose_graph(p: int, q: int) -> Graph:
    """``p`` cycles of length ``q`` sharing only the center 0."""
    if p < 1 or q < 3:
        raise GraphError(f"rose needs p >= 1 and q >= 3, got p={p}, q={q}")
    edges = []
    nxt = 1
    for _ in range(p):
        petal = [0] + list(range(nxt, nxt + q - 1)) + [0]
        edges += list(zip(petal, petal[1:]))
        nxt += q - 1
    return make_graph(nxt, edges)


def random_tree(n: int, rng: random.Random) -> Graph:
    """Uniform labelled tree decoded from a random Prufer sequence."""
    if n <= 2:
        return path_graph(n)
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    for x in seq:
        leaf = min(v for v in range(n) if degree[v] == 1)
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, v = [v for v in range(n) if degree[v] == 1]
    edges.append((u, v))
    return make_graph(n, edges)


def build_basic(spec: ConstructionSpec) -> Graph:
    fam = spec.family
    if fam not in BASIC_FAMILIES:
        raise GraphError(f"{fam.value} is not an uncolored family")
    if fam is Family.PATH:
        return path_graph(_at_least(spec, "n", 1))
    if fam is Family.CYCLE:
        return cycle_graph(_at_least(spec, "n", 3))
    if fam is Family.STAR:
        return star_graph(_at_least(spec, "n", 1))
    if fam is Family.COMPLETE:
        return complete_graph(_at_least(spec, "n", 1))
    if fam is Family.COMPLETE_BIPARTITE:
        return complete_bipartite_graph(_at_least(spec, "r", 1), _at_least(spec, "s_bipartite", 1))
    if fam is Family.WHEEL:
        return wheel_graph(_at_least(spec, "n", 3))
    return rose_graph(_at_least(spec, "p", 1), _at_least(spec, "q", 3))


def _at_least(spec: ConstructionSpec, key: str, low: int) -> int:
    value = spec.get(key)
    if value < low:
        raise GraphError(f"{spec.family.value}: parameter {key}={value} must be >= {low}")
    return value


# -- colored families -----------------------------------------------------------


def colored_balanced_bipartite(r: int) -> ColoredConstruction:
    """K_{r,r} with color 1 on u_i w_i, 2 when i < j, 3 when i > j."""
    if r < 3:
        raise GraphError(f"balanced bipartite coloring needs r >= 3, got {r}")
    b = _Builder()
    for i in range(1, r + 1):
        b.vertex(f"u_{i}")
    for j in range(1, r + 1):
        b.vertex(f"w_{j}")
    for i in range(1, r + 1):
        for j in range(1, r + 1):
            b.edge(f"u_{i}", f"w_{j}", _diagonal_color(i, j))
    return b.finish(ConstructionSpec(Family.BALANCED_BIPARTITE_COLORED, {"r": r}), 3, 3)


def _diagonal_color(i: int, j: int) -> int:
    if i == j:
        return 1
    return 2 if i < j else 3


def colored_apex_bipartite(n: int) -> ColoredConstruction:
    """K_{h,h} joined to an apex v (h = (n-1)/2); apex edges get 2 toward U, 3 toward W."""
    if n < 7 or n % 2 == 0:
        raise GraphError(f"apex bipartite needs odd n >= 7, got {n}")
    h = (n - 1) // 2
    b = _Builder()
    for i in range(1, h + 1):
        b.vertex(f"u_{i}")
    b.vertex("v")
    for j in range(1, h + 1):
        b.vertex(f"w_{j}")
    for i in range(1, h + 1):
        for j in range(1, h + 1):
            b.edge(f"u_{i}", f"w_{j}", _diagonal_color(i, j))
    for i in range(1, h + 1):
        b.edge("v", f"u_{i}", 2)
    for j in range(1, h + 1):
        b.edge("v", f"w_{j}", 3)
    return b.finish(ConstructionSpec(Family.APEX_BIPARTITE, {"n": n}), 3, 3)


def colored_cocycle_apex(n: int) -> ColoredConstruction:
    """Complement of C_{n-1} + K_1, 4-colored by residue classes of v_i mod 3.

    w is the isolated vertex of the complement; the removed cycle is
    v_1 v_2 ... v_{n-1} v_1.  X_1, X_2, X_3 hold indices = 1, 2, 0 (mod 3).
    """
    if n < 7:
        raise GraphError(f"cocycle apex needs n >= 7, got {n}")
    cyc = n - 1
    b = _Builder()
    b.vertex("w")
    for i in range(1, cyc + 1):
        b.vertex(f"v_{i}")

    def cls(i: int) -> int:
        return (i - 1) % 3 + 1

    apex_color = {1: 1, 2: 2, 3: 3}
    inner_color = {3: 1, 1: 2, 2: 3}
    for i in range(1, cyc + 1):
        b.edge("w", f"v_{i}", apex_color[cls(i)])
    for i, j in combinations(range(1, cyc + 1), 2):
        if j - i == 1 or (i == 1 and j == cyc):
            continue
        color = inner_color[cls(i)] if cls(i) == cls(j) else 4
        b.edge(f"v_{i}", f"v_{j}", color)
    return b.finish(ConstructionSpec(Family.COCYCLE_APEX, {"n": n}), 3, 4)


def colored_wheel_pendant(n: int, wheel_coloring: EdgeColoring) -> ColoredConstruction:
    """W_{n-2} plus a pendant vertex u on the hub, u's edge in a fresh color.

    ``wheel_coloring`` must 3-rainbow color ``wheel_graph(n - 2)``; it is
    checked here.
    """
    if n < 5:
        raise GraphError(f"wheel pendant needs n >= 5, got {n}")
    spokes = n - 2
    wheel = wheel_graph(spokes)
    if len(wheel_coloring) != wheel.m:
        raise GraphError(f"wheel coloring has {len(wheel_coloring)} entries, W_{spokes} has {wheel.m} edges")
    report = verify_k_rainbow(wheel, wheel_coloring, 3)
    if not report.ok:
        raise GraphError(f"supplied wheel coloring is not 3-rainbow; fails on {report.first_failure}")
    fresh = wheel_coloring.palette_size + 1
    b = _Builder()
    for i in range(1, spokes + 1):
        b.vertex(f"x_{i}")
    b.vertex("v")
    b.vertex("u")
    for idx, (p, q) in enumerate(wheel.edges):
        b.edge(b.labels[p], b.labels[q], wheel_coloring[idx])
    b.edge("u", "v", fresh)
    spec = ConstructionSpec(Family.WHEEL_PENDANT, {"n": n})
    return b.finish(spec, 3, fresh)


def bundle_shape(n: int, ell: int) -> tuple[int, int, bool]:
    """(t, s, ragged) for the layered bundle; s is the last path's inner length."""
    width = ell - 3
    t = -(-(n - 2) // width)
    floor = (n - 2) // width
    if t == floor:
        return t, width, False
    return t, n - floor * width - 2, True


def colored_layered_bundle(n: int, ell: int, *, check_range: bool = True) -> ColoredConstruction:
    """t parallel u-w paths with level cliques, colored with ``ell`` colors.

    Paths 1..t-1 have inner vertices v_{i,1..ell-3}; the last path has s of
    them.  Level j is a clique over every path that reaches depth j.
    Colors: u-edges 1, the edge entering level j gets j, edges into w get
    ell-2, uw gets ell-1, clique edges get ell.  ``check_range=False`` admits
    any 4 <= l <= n - 1 (used to audit sizes just outside the stated range).
    """
    if not check_range:
        if not 4 <= ell <= n - 1:
            raise GraphError(f"layered bundle needs 4 <= l <= n-1, got n={n}, l={ell}")
    elif not 7 <= ell <= (n - 1) / 2:
        raise GraphError(f"layered bundle needs 7 <= l <= (n-1)/2, got n={n}, l={ell}")
    t, s, ragged = bundle_shape(n, ell)
    depth = {i: ell - 3 for i in range(1, t + 1)}
    depth[t] = s
    b = _Builder()
    b.vertex("u")
    for i in range(1, t + 1):
        for j in range(1, depth[i] + 1):
            b.vertex(f"v_{{{i},{j}}}")
    b.vertex("w")
    for i in range(1, t + 1):
        b.edge("u", f"v_{{{i},1}}", 1)
        for j in range(2, depth[i] + 1):
            b.edge(f"v_{{{i},{j - 1}}}", f"v_{{{i},{j}}}", j)
        b.edge(f"v_{{{i},{depth[i]}}}", "w", ell - 2)
    b.edge("u", "w", ell - 1)
    for j in range(1, ell - 2):
        level = [i for i in range(1, t + 1) if depth[i] >= j]
        for i1, i2 in combinations(level, 2):
            b.edge(f"v_{{{i1},{j}}}", f"v_{{{i2},{j}}}", ell)
    spec = ConstructionSpec(Family.LAYERED_BUNDLE, {"n": n, "l": ell})
    return b.finish(spec, 3, ell)


def colored_rose_tail(n: int, ell: int) -> ColoredConstruction:
    """R_{n-l,3} with a path of order 2l-n hanging from the center w_0.

    Petal C_i = w_0 v_i u_i w_0 gets color i on both center edges and l on
    u_i v_i; tail edge w_{i-1} w_i gets n - l + i.
    """
    if not (n + 2) // 2 <= ell <= n - 3:
        raise GraphError(f"rose tail needs ceil((n+1)/2) <= l <= n-3, got n={n}, l={ell}")
    petals = n - ell
    tail = 2 * ell - n
    b = _Builder()
    b.vertex("w_0")
    for i in range(1, petals + 1):
        b.vertex(f"v_{i}")
        b.vertex(f"u_{i}")
    for i in range(1, tail):
        b.vertex(f"w_{i}")
    for i in range(1, petals + 1):
        b.edge("w_0", f"u_{i}", i)
        b.edge("w_0", f"v_{i}", i)
        b.edge(f"u_{i}", f"v_{i}", ell)
    for i in range(1, tail):
        b.edge(f"w_{i - 1}", f"w_{i}", petals + i)
    spec = ConstructionSpec(Family.ROSE_TAIL, {"n": n, "l": ell})
    return b.finish(spec, 3, ell)


def colored_k2_bipartite(n: int) -> ColoredConstruction:
    """K_{2,n-2} with c(u v_i) = i and c(w v_i) = n - 1 - i; claims rx_{n-1} <= n-2."""
    if n < 4:
        raise GraphError(f"K_2,n-2 construction needs n >= 4, got {n}")
    b = _Builder()
    b.vertex("u")
    b.vertex("w")
    for i in range(1, n - 1):
        b.vertex(f"v_{i}")
    for i in range(1, n - 1):
        b.edge("u", f"v_{i}", i)
        b.edge("w", f"v_{i}", n - 1 - i)
    spec = ConstructionSpec(Family.K2_BIPARTITE, {"n": n})
    return b.finish(spec, n - 1, n - 2)


def build_colored(spec: ConstructionSpec, wheel_coloring: EdgeColoring | None = None) -> ColoredConstruction:
    fam = spec.family
    if fam is Family.BALANCED_BIPARTITE_COLORED:
        return colored_balanced_bipartite(spec.get("r"))
    if fam is Family.APEX_BIPARTITE:
        return colored_apex_bipartite(spec.get("n"))
    if fam is Family.COCYCLE_APEX:
        return colored_cocycle_apex(spec.get("n"))
    if fam is Family.LAYERED_BUNDLE:
        return colored_layered_bundle(spec.get("n"), spec.get("l"))
    if fam is Family.ROSE_TAIL:
        return colored_rose_tail(spec.get("n"), spec.get("l"))
    if fam is Family.K2_BIPARTITE:
        return colored_k2_bipartite(spec.get("n"))
    if fam is Family.WHEEL_PENDANT:
        if wheel_coloring is None:
            raise GraphError("wheel-pendant needs a 3-rainbow coloring of the wheel")
        return colored_wheel_pendant(spec.get("n"), wheel_coloring)
    raise GraphError(f"{fam.value} has no colored construction")


def paper_size_formula(spec: ConstructionSpec) -> int:
    """Edge count printed alongside each upper bound, evaluated as written.

    For the layered bundle this is the published closed form,
    which exceeds the edge count of the generated graph.
    """
    fam = spec.family
    if fam is Family.BALANCED_BIPARTITE_COLORED:
        n = 2 * spec.get("r")
        return n * n // 4
    if fam is Family.APEX_BIPARTITE:
        n = spec.get("n")
        return (n + 3) * (n - 1) // 4
    if fam is Family.COCYCLE_APEX:
        n = spec.get("n")
        return comb(n, 2) - n + 1
    if fam is Family.WHEEL:
        # order of W_m is m + 1, bound 2(m + 1) - 2
        n = spec.get("n") + 1
        return 2 * n - 2
    if fam is Family.WHEEL_PENDANT:
        return 2 * spec.get("n") - 3
    if fam is Family.LAYERED_BUNDLE:
        n, ell = spec.get("n"), spec.get("l")
        width = ell - 3
        ceil = -(-(n - 2) // width)
        fl = (n - 2) // width
        t = ceil
        return (
            n
            + t
            + comb(t, 2) * (n - 2 - fl * width)
            + comb(t + fl - ceil, 2) * (ell + 1 - n + fl * width)
        )
    if fam is Family.ROSE_TAIL:
        n, ell = spec.get("n"), spec.get("l")
        return 2 * n - ell - 1
    if fam is Family.K2_BIPARTITE:
        return 2 * spec.get("n") - 4
    raise GraphError(f"no stated size formula for {fam.value}")
