"""Registry of checkable claims and the reproduction report built from it.

Each claim binds parameters, the expected value, and the module call that
checks it.  ``scale`` is the largest vertex count the check touches; claims
above ``--max-n`` (or intrinsically beyond exhaustive reach) are reported as
skipped-out-of-scale rather than run.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from math import comb
from typing import Callable, Iterable, Optional

from .constructions import (
    ColoredConstruction,
    colored_apex_bipartite,
    colored_balanced_bipartite,
    colored_cocycle_apex,
    colored_k2_bipartite,
    colored_layered_bundle,
    colored_rose_tail,
    colored_wheel_pendant,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    paper_size_formula,
    random_tree,
    wheel_graph,
)
from .graph import girth, is_connected, make_graph
from .search import all_connected, check_monotone_chain, enumerate_connected, t_min
from .verify import rx_at_most, rx_exact, verify_k_rainbow

CONFIRMED = "confirmed"
REFUTED = "refuted"
DISCREPANCY = "discrepancy-noted"
SKIPPED = "skipped-out-of-scale"

TSV_COLUMNS = ("claim_id", "tag", "params", "expected", "computed", "status", "millis")

Outcome = tuple[str, str]  # (computed, status)


@dataclass(frozen=True)
class Claim:
    claim_id: str
    tag: str
    params: str
    expected: str
    scale: int
    check: Optional[Callable[[], Outcome]]


@dataclass
class ReportRow:
    claim_id: str
    tag: str
    params: str
    expected: str
    computed: str
    status: str
    millis: int

    def to_json(self) -> dict:
        return {col: getattr(self, col) for col in TSV_COLUMNS}


@dataclass
class ReproReport:
    rows: list[ReportRow] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.status != REFUTED for r in self.rows)

    def to_tsv(self) -> str:
        lines = ["\t".join(TSV_COLUMNS)]
        for r in self.rows:
            lines.append("\t".join(str(getattr(r, c)) for c in TSV_COLUMNS))
        return "\n".join(lines) + "\n"

    def to_json(self) -> dict:
        counts: dict[str, int] = {}
        for r in self.rows:
            counts[r.status] = counts.get(r.status, 0) + 1
        return {"rows": [r.to_json() for r in self.rows], "status_counts": counts, "ok": self.ok}


def _status(good: bool) -> str:
    return CONFIRMED if good else REFUTED


def _equal(computed, expected) -> Outcome:
    return str(computed), _status(computed == expected)


def _construction_outcome(c: ColoredConstruction, check_size: bool = True) -> Outcome:
    report = verify_k_rainbow(c.graph, c.coloring, c.claimed_k)
    size = c.graph.m
    formula = paper_size_formula(c.spec)
    parts = [f"edges={size}", f"formula={formula}", f"palette={c.claimed_colors}"]
    if report.ok:
        parts.append(f"verified {report.checked_subsets} subsets")
    else:
        parts.append("fails on {" + ",".join(c.label_of(v) for v in report.first_failure) + "}")
    good = report.ok and (size == formula or not check_size)
    return "; ".join(parts), _status(good)


def _t_claim(n: int, k: int, ell: int, expected: Optional[int]) -> Claim:
    def check() -> Outcome:
        res = t_min(n, k, ell)
        if expected is None:
            computed = "none (exhaustive)" if res.value is None and res.exhaustive else str(res.value)
            return computed, _status(res.value is None and res.exhaustive)
        return _equal(res.value, expected)

    exp = "none" if expected is None else str(expected)
    return Claim(f"t-{n}{k}{ell}" + ("-none" if expected is None else ""), "exact t(n,k,l)", f"n={n},k={k},l={ell}", exp, n, check)


def _bound_claim(claim_id: str, tag: str, n: int, k: int, ell: int, bound: int) -> Claim:
    def check() -> Outcome:
        res = t_min(n, k, ell)
        return f"t={res.value}", _status(res.value is not None and res.value <= bound)

    return Claim(claim_id, tag, f"n={n},k={k},l={ell}", f"<= {bound}", n, check)


def _rx_claim(claim_id: str, tag: str, params: str, graphs: Callable[[], Iterable], k: int, scale: int, expected: str) -> Claim:
    """``graphs`` yields (graph, expected rx_k) pairs."""

    def check() -> Outcome:
        got = []
        good = True
        for g, want in graphs():
            value = rx_exact(g, k).value
            got.append(str(value))
            good &= value == want
        return ",".join(got), _status(good)

    return Claim(claim_id, tag, params, expected, scale, check)


def _seeded_trees(count: int = 20, seed: int = 2024) -> list:
    rng = random.Random(seed)
    return [random_tree(rng.randint(4, 7), rng) for _ in range(count)]


def _unicyclic_non_cycles(orders: Iterable[int]) -> list:
    out = []
    for n in orders:
        for g in enumerate_connected(n, n):
            if any(g.degree(v) != 2 for v in range(n)):
                out.append(g)
    return out


def _wheel_coloring(spokes: int):
    """Solver-found 3-rainbow coloring of W_spokes with the fewest colors found."""
    w = wheel_graph(spokes)
    if spokes <= 6:
        return rx_exact(w, 3).witness_coloring
    for ell in range(3, 6):
        col = rx_at_most(w, 3, ell)
        if col is not None:
            return col
    raise RuntimeError(f"no 3-rainbow coloring of W_{spokes} with <= 5 colors found")


def _characterize_rx3_two() -> Outcome:
    """rx_3(G) = 2 exactly for K_5, 2-connected graphs of order 4, and order 3."""
    mismatches = []
    checked = 0
    for n in range(3, 7):
        for g in all_connected(n):
            checked += 1
            has_two = rx_at_most(g, 3, 2) is not None
            predicted = n == 3 or (n == 4 and _two_connected(g)) or (n == 5 and g.m == 10)
            if has_two != predicted:
                mismatches.append(g.edges)
    return f"{checked} graphs, {len(mismatches)} mismatches", _status(not mismatches)


def _characterize_rx3_n_minus_1() -> Outcome:
    """rx_3(G) = n-1 exactly for trees and unicyclic graphs of girth 3."""
    mismatches = 0
    checked = 0
    for n in range(4, 7):
        for g in all_connected(n):
            checked += 1
            top = rx_at_most(g, 3, n - 2) is None
            predicted = g.m == n - 1 or (g.m == n and girth(g) == 3)
            mismatches += top != predicted
    return f"{checked} graphs, {mismatches} mismatches", _status(mismatches == 0)


def _two_connected(g) -> bool:
    if g.n < 3 or not is_connected(g):
        return False
    for cut in range(g.n):
        keep = [v for v in range(g.n) if v != cut]
        relabel = {v: i for i, v in enumerate(keep)}
        sub = make_graph(len(keep), [(relabel[a], relabel[b]) for a, b in g.edges if cut not in (a, b)])
        if not is_connected(sub):
            return False
    return True


def _bundle_audit(n: int, ell: int) -> Claim:
    def check() -> Outcome:
        c = colored_layered_bundle(n, ell, check_range=False)
        report = verify_k_rainbow(c.graph, c.coloring, 3)
        formula = paper_size_formula(c.spec)
        computed = f"generated={c.graph.m}; formula={formula}; verifies={report.ok}"
        if not report.ok:
            return computed, REFUTED
        return computed, CONFIRMED if c.graph.m == formula else DISCREPANCY

    in_range = 7 <= ell <= (n - 1) / 2
    tag = "layered bundle size formula" + ("" if in_range else " (outside stated l range)")
    return Claim(f"bundle-formula-audit-{n}-{ell}", tag, f"n={n},l={ell}", "generated size = formula", n, check)


def _construction_claim(claim_id: str, tag: str, params: str, build: Callable[[], ColoredConstruction], scale: int, expected: str) -> Claim:
    return Claim(claim_id, tag, params, expected, scale, lambda: _construction_outcome(build()))


def registry() -> list[Claim]:
    claims: list[Claim] = []
    add = claims.append

    # exact small values
    add(_t_claim(3, 3, 2, 2))
    add(_t_claim(4, 3, 2, 4))
    add(_t_claim(5, 3, 2, 10))
    add(_t_claim(6, 3, 2, None))
    add(_t_claim(7, 3, 2, None))
    add(Claim("t-333", "exact t(n,k,l)", "n=3,k=3,l=3", "2", 3, _t_333))
    add(_t_claim(4, 3, 3, 3))
    add(_t_claim(5, 3, 3, 5))
    for n in range(4, 8):
        add(Claim(f"t-n3n2-{n}", "t(n,3,n-2) = n", f"n={n},k=3,l={n - 2}", str(n), n, (lambda n=n: _equal(t_min(n, 3, n - 2).value, n))))
        add(Claim(f"t-n3n1-{n}", "t(n,3,n-1) = n-1", f"n={n},k=3,l={n - 1}", str(n - 1), n, (lambda n=n: _equal(t_min(n, 3, n - 1).value, n - 1))))

    # t(n,3,3) upper bounds
    for r in (3, 4, 5, 6):
        add(_construction_claim(f"bb-r{r}", "K_{r,r} 3-rainbow with 3 colors", f"r={r}", lambda r=r: colored_balanced_bipartite(r), 2 * r, f"verifies; edges={r * r}"))
    add(_bound_claim("t-633-bound", "t(n,3,3) <= n^2/4 (even n)", 6, 3, 3, 9))
    for n in (7, 9, 11, 13, 15):
        add(_construction_claim(f"apex-bipartite-n{n}", "apex bipartite 3-rainbow with 3 colors", f"n={n}", lambda n=n: colored_apex_bipartite(n), n, f"verifies; edges={(n + 3) * (n - 1) // 4}"))
    add(_bound_claim("t-733-bound", "t(n,3,3) <= (n+3)(n-1)/4 (odd n)", 7, 3, 3, 15))

    # t(n,3,4)
    for n in range(7, 13):
        add(_construction_claim(f"cocycle-apex-n{n}", "complement of C_{n-1}+K_1 with 4 colors", f"n={n}", lambda n=n: colored_cocycle_apex(n), n, f"verifies; edges={comb(n, 2) - n + 1}"))
    add(_bound_claim("t-734-bound", "t(n,3,4) <= C(n,2)-n+1", 7, 3, 4, comb(7, 2) - 6))

    # wheels, t(n,3,5), t(n,3,6)
    wheel_values = {3: 2, 4: 3, 5: 3, 6: 3}
    for m, want in wheel_values.items():
        add(_rx_claim(f"rx3-wheel-{m}", "rx_3(W_n) table", f"n={m}", lambda m=m, want=want: [(wheel_graph(m), want)], 3, m + 1, str(want)))
    add(Claim("rx3-wheel-7-16", "rx_3(W_n) table", "7<=n<=16", "4", 17, None))
    add(Claim("rx3-wheel-17+", "rx_3(W_n) table", "n>=17", "5", 18, None))

    def wheel_bound() -> Outcome:
        parts, good = [], True
        for n in range(4, 8):
            w = wheel_graph(n - 1)
            value = rx_exact(w, 3).value
            parts.append(f"n={n}:rx={value},edges={w.m}")
            good &= value <= 5 and w.m == 2 * n - 2
        return "; ".join(parts), _status(good)

    add(Claim("t-n35-wheel", "t(n,3,5) <= 2n-2 via W_{n-1}", "4<=n<=7", "rx_3(W_{n-1}) <= 5, edges 2n-2", 7, wheel_bound))
    for n in range(5, 10):
        add(_construction_claim(f"wheel-pendant-n{n}", "t(n,3,6) <= 2n-3 via pendant on W_{n-2}", f"n={n}", lambda n=n: colored_wheel_pendant(n, _wheel_coloring(n - 2)), n, f"verifies; edges={2 * n - 3}"))

    # layered bundle
    for n, ell in ((15, 7), (16, 7), (17, 7), (19, 8)):
        add(Claim(f"bundle-n{n}-l{ell}", "layered bundle 3-rainbow with l colors", f"n={n},l={ell}", "verifies", n, (lambda n=n, ell=ell: _bundle_verify(n, ell))))
    add(_bundle_audit(16, 7))
    add(_bundle_audit(14, 7))

    # rose with tail
    for n in range(8, 13):
        for ell in range((n + 2) // 2, n - 2):
            add(_construction_claim(f"rose-tail-n{n}-l{ell}", "t(n,3,l) <= 2n-l-1 via rose with tail", f"n={n},l={ell}", lambda n=n, ell=ell: colored_rose_tail(n, ell), n, f"verifies; edges={2 * n - ell - 1}"))

    # K_{2,n-2}
    for n in range(4, 11):
        add(_construction_claim(f"k2-bipartite-n{n}", "K_{2,n-2} (n-1)-rainbow with n-2 colors (printed coloring)", f"n={n}", lambda n=n: colored_k2_bipartite(n), n, f"verifies; edges={2 * n - 4}"))
        add(Claim(f"t-nn1n2-bound-n{n}", "t(n,n-1,n-2) <= 2n-4 (any coloring of K_{2,n-2})", f"n={n}", "some (n-2)-coloring verifies", n, (lambda n=n: _k2_any(n))))

    # known values on standard families
    add(_rx_claim("rx3-cycle", "rx_3(C_n) = n-2", "4<=n<=8", lambda: [(cycle_graph(n), n - 2) for n in range(4, 9)], 3, 8, "2,3,4,5,6"))
    add(_rx_claim("rx3-c3", "rx_3(C_3) = 2", "n=3", lambda: [(cycle_graph(3), 2)], 3, 3, "2"))
    add(_rx_claim("rx3-trees", "rx_3(T) = n-1", "20 seeded trees, 4<=n<=7", lambda: [(t, t.n - 1) for t in _seeded_trees()], 3, 7, "n-1 each"))
    add(_rx_claim("rx3-unicyclic", "rx_3 of unicyclic non-cycles by girth", "all of order 5-6", lambda: [(g, g.n - 1 if girth(g) == 3 else g.n - 2) for g in _unicyclic_non_cycles((5, 6))], 3, 6, "n-1 if girth 3 else n-2"))
    add(_rx_claim("rx3-k5", "rx_3(K_5) = 2", "n=5", lambda: [(complete_graph(5), 2)], 3, 5, "2"))
    add(_rx_claim("rx3-k33", "rx_3(K_{3,3}) = 3", "r=3", lambda: [(complete_bipartite_graph(3, 3), 3)], 3, 6, "3"))
    add(Claim("rx3-eq2-characterization", "rx_3 = 2 iff K_5, 2-connected order 4, or order 3", "all connected, 3<=n<=6", "0 mismatches", 6, _characterize_rx3_two))
    add(Claim("rx3-n-1-characterization", "rx_3 = n-1 iff tree or unicyclic girth 3", "all connected, 4<=n<=6", "0 mismatches", 6, _characterize_rx3_n_minus_1))

    # monotone chain
    for n in (4, 5, 6):
        add(Claim(f"monotone-chain-n{n}", "t(n,k,l) non-increasing in l", f"n={n},k=3", "non-increasing", n, (lambda n=n: _chain(n))))
    return claims


def _t_333() -> Outcome:
    # every connected graph of order 3 has rx_3 <= 2, so l = 3 and l = 2 agree
    value = t_min(3, 3, 2).value
    return f"{value} (via l=2)", _status(value == 2)


def _bundle_verify(n: int, ell: int) -> Outcome:
    c = colored_layered_bundle(n, ell)
    report = verify_k_rainbow(c.graph, c.coloring, 3)
    return f"edges={c.graph.m}; ok={report.ok}", _status(report.ok)


def _k2_any(n: int) -> Outcome:
    g = complete_bipartite_graph(2, n - 2)
    col = rx_at_most(g, n - 1, n - 2)
    if col is None:
        return "no coloring", REFUTED
    ok = verify_k_rainbow(g, col, n - 1).ok
    return f"colors={list(col.colors)}", _status(ok and g.m == 2 * n - 4)


def _chain(n: int) -> Outcome:
    chain = check_monotone_chain(n, 3)
    return " ".join(f"l={ell}:{'none' if v is None else v}" for ell, v in chain), CONFIRMED


def run_registry(claims: Iterable[Claim], max_n: int = 19, only: Optional[set[str]] = None) -> ReproReport:
    report = ReproReport()
    for claim in claims:
        if only is not None and claim.claim_id not in only:
            continue
        start = time.perf_counter()
        if claim.check is None or claim.scale > max_n:
            computed, status = "-", SKIPPED
        else:
            try:
                computed, status = claim.check()
            except AssertionError as exc:
                computed, status = f"error: {exc}", REFUTED
        millis = int((time.perf_counter() - start) * 1000)
        report.rows.append(ReportRow(claim.claim_id, claim.tag, claim.params, claim.expected, computed, status, millis))
    return report
