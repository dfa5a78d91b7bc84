"""Claim-level checkers: each turns solver output into pass/fail records.

A :class:`ClaimResult` pairs an expected value with an observed one and
passes only on exact match.  The named suite groups the claims the
verification harness runs: exact path/cycle/ladder/product values, the
small-value and diameter characterizations, the Staller-start and
skip/pass sandwiches over a graph corpus, predomination behavior, and
the solver-vs-oracle agreement sweep.  ``predomination_scan`` is the
search tool for the open questions about vertices whose predomination
shifts the game value; it reports findings and never claims
(non-)existence.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from importlib import resources
from typing import Any, Callable, Iterable

from . import families
from .engine import GameConfig, Variant
from .graph import (Graph, bits, diameter, has_universal_vertex, is_complete,
                    is_join_some_noncomplete, is_join_two_noncomplete,
                    lexicographic_product, read_graph6_file)
from .solver import (NEVER, BudgetExceeded, GameValue, game_value, is_never,
                     solve, solve_naive)

PASS, FAIL, BUDGET = "pass", "fail", "budget-exceeded"


@dataclass
class ClaimResult:
    claim: str
    instance: str
    expected: Any
    observed: Any
    verdict: str
    elapsed: float = 0.0

    def to_record(self) -> dict:
        return {
            "claim": self.claim,
            "instance": self.instance,
            "expected": _jsonable(self.expected),
            "observed": _jsonable(self.observed),
            "verdict": self.verdict,
            "elapsed": round(self.elapsed, 6),
        }


def _jsonable(value):
    if isinstance(value, float) and is_never(value):
        return "never"
    if isinstance(value, tuple):
        return [_jsonable(v) for v in value]
    if isinstance(value, list):
        return [_jsonable(v) for v in value]
    return value


def _claim(claim: str, instance: str, expected, observed, elapsed: float = 0.0) -> ClaimResult:
    verdict = PASS if expected == observed else FAIL
    return ClaimResult(claim, instance, expected, observed, verdict, elapsed)


def _timed_claim(claim: str, instance: str, expected,
                 compute: Callable[[], Any], time_budget: float | None) -> ClaimResult:
    start = time.monotonic()
    try:
        observed = compute()
    except BudgetExceeded:
        return ClaimResult(claim, instance, expected, "budget exceeded", BUDGET,
                           time.monotonic() - start)
    return _claim(claim, instance, expected, observed, time.monotonic() - start)


def load_corpus(path=None) -> list[Graph]:
    """Graphs from a graph6 corpus file; the bundled corpus by default."""
    if path is None:
        ref = resources.files("cdgame").joinpath("data/graphs7.g6")
        with resources.as_file(ref) as real:
            return read_graph6_file(real)
    return read_graph6_file(path)


# ---------------------------------------------------------------------------
# individual checkers

def check_small_values(g: Graph, instance: str) -> list[ClaimResult]:
    """The four exact characterizations of game values 1 and 2."""
    d = game_value(g)
    s = game_value(g, Variant.STALLER_START)
    return [
        _claim("small-value/d-one", instance, has_universal_vertex(g), d == 1),
        _claim("small-value/s-one", instance, is_complete(g), s == 1),
        _claim("small-value/d-two", instance, is_join_two_noncomplete(g), d == 2),
        _claim("small-value/s-two", instance, is_join_some_noncomplete(g), s == 2),
    ]


def check_diameter_bounds(g: Graph, instance: str) -> list[ClaimResult]:
    """diam(G) <= d-game value + 1 and diam(G) <= s-game value."""
    dia = diameter(g)
    d = game_value(g)
    s = game_value(g, Variant.STALLER_START)
    return [
        _claim("diameter/d-bound", instance, True, dia <= d + 1),
        _claim("diameter/s-bound", instance, True, dia <= s),
    ]


def check_gadget_family(n: int) -> list[ClaimResult]:
    """Doubling gadget: d-game n, s-game 2n, the extreme s/d ratio."""
    g = families.doubling_gadget(n)
    instance = f"gn:{n}"
    d = game_value(g)
    s = game_value(g, Variant.STALLER_START)
    return [
        _claim("gadget/d", instance, n, d),
        _claim("gadget/s", instance, 2 * n, s),
        _claim("gadget/ratio", instance, True, s == 2 * d),
    ]


def check_lexicographic(g: Graph, h: Graph, g_name: str, h_name: str) -> list[ClaimResult]:
    """Exact composition values of g[h] for both starting players, plus the
    two-sided range bound for the Dominator-start game when it applies."""
    if g.n * h.n > 20:
        raise ValueError("direct product solving is limited to 20 vertices")
    instance = f"lex:{g_name},{h_name}"
    gd = game_value(g)
    hd = game_value(h)
    g_skip = game_value(g, Variant.STALLER_SKIPS_FIRST)
    gs = game_value(g, Variant.STALLER_START)
    hs = game_value(h, Variant.STALLER_START)

    if g.n == 1:
        expect_d = hd
    elif hd == 1:
        expect_d = gd
    else:
        expect_d = g_skip + 1

    if g.n == 1:
        expect_s = hs
    elif gs >= 2:
        expect_s = gs
    elif hs >= 2:
        expect_s = 2
    else:
        expect_s = hs

    product = lexicographic_product(g, h)
    obs_d = game_value(product)
    obs_s = game_value(product, Variant.STALLER_START)
    claims = [
        _claim("lex/d-case", instance, expect_d, obs_d),
        _claim("lex/s-case", instance, expect_s, obs_s),
    ]
    if hd >= 2 and g.n >= 2:
        claims.append(_claim("lex/d-range", instance, True, gd <= obs_d <= gd + 2))
    return claims


def check_ladders(n: int) -> list[ClaimResult]:
    """Circular and Mobius ladder values, plain and with every single
    vertex predominated (vertex-transitivity is checked, not assumed)."""
    claims = []
    for tag, g in (("circular", families.circular_ladder(n)),
                   ("mobius", families.mobius_ladder(n))):
        instance = f"{'cl' if tag == 'circular' else 'ml'}:{n}"
        claims.append(_claim(f"ladder/{tag}", instance, 2 * (n - 2), game_value(g)))
        per_vertex = [game_value(g, predominated=1 << v) for v in range(g.n)]
        claims.append(_claim(f"ladder/{tag}-predominated", instance,
                             [2 * (n - 2) - 1] * g.n, per_vertex))
    return claims


def cut_vertices(g: Graph) -> int:
    """Mask of articulation vertices, by the usual DFS low-link walk."""
    disc = [-1] * g.n
    low = [0] * g.n
    result = 0
    timer = 0

    def walk(u: int, parent: int):
        nonlocal timer, result
        disc[u] = low[u] = timer
        timer += 1
        children = 0
        for w in bits(g.adj[u]):
            if disc[w] == -1:
                children += 1
                walk(w, u)
                low[u] = min(low[u], low[w])
                if parent != -1 and low[w] >= disc[u]:
                    result |= 1 << u
            elif w != parent:
                low[u] = min(low[u], disc[w])
        if parent == -1 and children > 1:
            result |= 1 << u

    for v in range(g.n):
        if disc[v] == -1:
            walk(v, -1)
    return result


def check_cut_vertex(g: Graph, instance: str) -> list[ClaimResult]:
    """Predominating a cut vertex never shortens the game, and some vertex
    (an optimal opening move) predominates without lengthening it."""
    base = game_value(g)
    claims = []
    for u in bits(cut_vertices(g)):
        val = game_value(g, predominated=1 << u)
        claims.append(_claim("predomination/cut-vertex", f"{instance}|{g.label(u)}",
                             True, val >= base))
    d1 = solve(g, GameConfig(Variant.DOMINATOR_START)).principal_line[0][1]
    val = game_value(g, predominated=1 << d1)
    claims.append(_claim("predomination/opening-not-worse",
                         f"{instance}|{g.label(d1)}", True, val <= base))
    return claims


def check_skip_and_pass(g: Graph, instance: str) -> list[ClaimResult]:
    """Skip variants stay within one move of the plain games; pass budgets
    help Staller by at most one move each and never hurt her."""
    d = game_value(g)
    s = game_value(g, Variant.STALLER_START)
    d_skip = game_value(g, Variant.STALLER_SKIPS_FIRST)
    s_skip = game_value(g, Variant.DOMINATOR_SKIPS_FIRST)
    p1 = game_value(g, pass_budget=1)
    p2 = game_value(g, pass_budget=2)
    return [
        _claim("skip/d-sandwich", instance, True, d - 1 <= d_skip <= d + 1),
        _claim("skip/s-sandwich", instance, True, s - 1 <= s_skip <= s + 1),
        _claim("pass/bound-k1", instance, True, d <= p1 <= d + 1),
        _claim("pass/bound-k2", instance, True, d <= p2 <= d + 2),
        _claim("pass/monotone", instance, True, p1 <= p2),
    ]


@dataclass
class ScanResult:
    """Per-vertex predomination survey of one graph."""
    instance: str
    value: GameValue
    per_vertex: list[GameValue] = field(default_factory=list)
    never_vertices: list[int] = field(default_factory=list)
    max_increase: int | None = None
    max_decrease: int | None = None
    all_vertices_shift: bool = False
    candidate: bool = False

    def to_record(self) -> dict:
        return {
            "instance": self.instance,
            "value": _jsonable(self.value),
            "per_vertex": [_jsonable(v) for v in self.per_vertex],
            "never_vertices": self.never_vertices,
            "max_increase": self.max_increase,
            "max_decrease": self.max_decrease,
            "all_vertices_shift": self.all_vertices_shift,
            "candidate": self.candidate,
        }


def predomination_scan(g: Graph, instance: str = "",
                       time_budget: float | None = None) -> ScanResult:
    """Survey the game value with each single vertex predominated.

    ``candidate`` flags graphs where every vertex shifts the value and at
    least one vertex strictly increases it; such graphs answer an open
    question, so they are reported, never asserted to (not) exist.  Stuck
    outcomes are listed separately and excluded from the shift extremes.
    """
    base = game_value(g, time_budget=time_budget)
    per_vertex = [game_value(g, predominated=1 << v, time_budget=time_budget)
                  for v in range(g.n)]
    nevers = [v for v, val in enumerate(per_vertex) if is_never(val)]
    finite = [val for val in per_vertex if not is_never(val)]
    max_inc = max((int(val - base) for val in finite), default=None)
    max_dec = max((int(base - val) for val in finite), default=None)
    all_shift = not is_never(base) and all(val != base for val in per_vertex)
    candidate = all_shift and max_inc is not None and max_inc > 0
    return ScanResult(instance=instance, value=base, per_vertex=per_vertex,
                      never_vertices=nevers, max_increase=max_inc,
                      max_decrease=max_dec, all_vertices_shift=all_shift,
                      candidate=candidate)


# ---------------------------------------------------------------------------
# the named suite

def _aggregate(claim: str, instances: Iterable[tuple[str, bool]],
               elapsed: float) -> ClaimResult:
    bad = [name for name, ok in instances if not ok]
    observed = "0 violations" if not bad else f"{len(bad)} violations: " + ", ".join(bad[:5])
    return _claim(claim, "corpus", "0 violations", observed, elapsed)


def _group_paths_cycles(corpus, time_budget) -> list[ClaimResult]:
    claims = []
    for n in range(3, 11):
        g = families.path(n)
        claims.append(_claim("path/d", f"path:{n}", n - 2, game_value(g)))
        claims.append(_claim("path/s", f"path:{n}", n - 1,
                             game_value(g, Variant.STALLER_START)))
    for n in range(4, 9):
        g = families.cycle(n)
        claims.append(_claim("cycle/d", f"cycle:{n}", n - 2, game_value(g)))
        per_vertex = [game_value(g, predominated=1 << v) for v in range(n)]
        claims.append(_claim("cycle/predominated", f"cycle:{n}",
                             [n - 3] * n, per_vertex))
    return claims


def _group_small_values(corpus, time_budget) -> list[ClaimResult]:
    start = time.monotonic()
    rows: dict[str, list[tuple[str, bool]]] = {}
    for i, g in enumerate(corpus):
        for c in check_small_values(g, f"corpus[{i}]"):
            rows.setdefault(c.claim, []).append((c.instance, c.verdict == PASS))
    elapsed = time.monotonic() - start
    return [_aggregate(claim, pairs, elapsed) for claim, pairs in sorted(rows.items())]


def _group_diameter(corpus, time_budget) -> list[ClaimResult]:
    start = time.monotonic()
    rows: dict[str, list[tuple[str, bool]]] = {}
    for i, g in enumerate(corpus):
        for c in check_diameter_bounds(g, f"corpus[{i}]"):
            rows.setdefault(c.claim, []).append((c.instance, c.verdict == PASS))
    elapsed = time.monotonic() - start
    claims = [_aggregate(claim, pairs, elapsed) for claim, pairs in sorted(rows.items())]
    p8 = families.path(8)
    claims.append(_claim("diameter/tight-d", "path:8", diameter(p8) - 1, game_value(p8)))
    claims.append(_claim("diameter/tight-s", "path:8", diameter(p8),
                         game_value(p8, Variant.STALLER_START)))
    return claims


def _group_hamming(corpus, time_budget) -> list[ClaimResult]:
    claims = []
    for dims in ((2, 4), (2, 5)):
        g = families.hamming(*dims)
        instance = "hamming:" + ",".join(map(str, dims))
        claims.append(_claim("hamming/d", instance, 3, game_value(g)))
        claims.append(_claim("hamming/s", instance, 2,
                             game_value(g, Variant.STALLER_START)))
    return claims


def _group_staller_start(corpus, time_budget) -> list[ClaimResult]:
    start = time.monotonic()
    pairs = []
    for i, g in enumerate(corpus):
        d = game_value(g)
        s = game_value(g, Variant.STALLER_START)
        pairs.append((f"corpus[{i}]", d - 1 <= s <= 2 * d))
    claims = [_aggregate("staller-start/sandwich", pairs, time.monotonic() - start)]
    for n in (2, 3, 4):
        claims.extend(check_gadget_family(n))
    return claims


def _group_skip(corpus, time_budget) -> list[ClaimResult]:
    start = time.monotonic()
    d_rows, s_rows = [], []
    for i, g in enumerate(corpus):
        d = game_value(g)
        s = game_value(g, Variant.STALLER_START)
        d_skip = game_value(g, Variant.STALLER_SKIPS_FIRST)
        s_skip = game_value(g, Variant.DOMINATOR_SKIPS_FIRST)
        d_rows.append((f"corpus[{i}]", d - 1 <= d_skip <= d + 1))
        s_rows.append((f"corpus[{i}]", s - 1 <= s_skip <= s + 1))
    elapsed = time.monotonic() - start
    claims = [_aggregate("skip/d-sandwich", d_rows, elapsed),
              _aggregate("skip/s-sandwich", s_rows, elapsed)]
    for n in range(3, 9):
        claims.append(_claim("skip/path", f"path:{n}", n - 2,
                             game_value(families.path(n), Variant.STALLER_SKIPS_FIRST)))
    f2 = families.fan_chain(2, 8)
    claims.append(_claim("fan/d", "fan:2,8", 3, game_value(f2)))
    claims.append(_claim("skip/fan", "fan:2,8", 4,
                         game_value(f2, Variant.STALLER_SKIPS_FIRST)))
    h1 = families.hat_chain(1)
    claims.append(_timed_claim("hat/d", "hat:1", 6,
                               lambda: game_value(h1, time_budget=time_budget),
                               time_budget))
    claims.append(_timed_claim("skip/hat", "hat:1", 5,
                               lambda: game_value(h1, Variant.STALLER_SKIPS_FIRST,
                                                  time_budget=time_budget),
                               time_budget))
    return claims


def _group_pass(corpus, time_budget) -> list[ClaimResult]:
    start = time.monotonic()
    k1_rows, k2_rows, mono_rows = [], [], []
    for i, g in enumerate(corpus):
        d = game_value(g)
        p1 = game_value(g, pass_budget=1)
        p2 = game_value(g, pass_budget=2)
        name = f"corpus[{i}]"
        k1_rows.append((name, d <= p1 <= d + 1))
        k2_rows.append((name, d <= p2 <= d + 2))
        mono_rows.append((name, p1 <= p2))
    elapsed = time.monotonic() - start
    return [_aggregate("pass/bound-k1", k1_rows, elapsed),
            _aggregate("pass/bound-k2", k2_rows, elapsed),
            _aggregate("pass/monotone", mono_rows, elapsed)]


_LEX_LEFT = [("path:2", 2), ("path:3", 3), ("path:4", 4), ("cycle:4", 4),
             ("cycle:5", 5), ("complete:2", 2), ("complete:3", 3)]
_LEX_RIGHT = [("complete:1", 1), ("complete:2", 2), ("complete:3", 3),
              ("path:3", 3), ("path:4", 4), ("cycle:4", 4)]


def _group_lexicographic(corpus, time_budget) -> list[ClaimResult]:
    claims = []
    for g_name, gn in _LEX_LEFT:
        for h_name, hn in _LEX_RIGHT:
            if gn * hn > 20:
                continue
            g = families.graph_from_spec(g_name)
            h = families.graph_from_spec(h_name)
            claims.extend(check_lexicographic(g, h, g_name, h_name))
    return claims


def _group_predomination(corpus, time_budget) -> list[ClaimResult]:
    fig = families.predomination_penalty_graph()
    c = 1 << fig.vertex_by_label("c")
    claims = [
        _claim("predomination/penalty-base", "fig3", 7, game_value(fig)),
        _claim("predomination/penalty-shifted", "fig3|c", 8,
               game_value(fig, predominated=c)),
    ]
    p5 = families.path(5)
    mid = 1 << 2
    interior = 0b01110
    claims.append(_claim("predomination/path-stuck-s", "path:5|2", NEVER,
                         game_value(p5, Variant.STALLER_START, predominated=mid)))
    claims.append(_claim("predomination/path-stuck-d", "path:5|1,2,3", NEVER,
                         game_value(p5, predominated=interior)))
    start = time.monotonic()
    cut_rows, exist_rows = [], []
    for i, g in enumerate(corpus):
        name = f"corpus[{i}]"
        base = game_value(g)
        per_vertex = [game_value(g, predominated=1 << v) for v in range(g.n)]
        for u in bits(cut_vertices(g)):
            cut_rows.append((f"{name}|{u}", per_vertex[u] >= base))
        exist_rows.append((name, any(val <= base for val in per_vertex)))
    elapsed = time.monotonic() - start
    claims.append(_aggregate("predomination/cut-vertex", cut_rows, elapsed))
    claims.append(_aggregate("predomination/opening-not-worse", exist_rows, elapsed))
    return claims


def _group_ladders(corpus, time_budget) -> list[ClaimResult]:
    claims = []
    for n in (4, 5, 6, 7):
        claims.extend(check_ladders(n))
    return claims


#: the (variant, pass budget) combinations the oracle sweep covers
ORACLE_CONFIGS = ((Variant.DOMINATOR_START, 0), (Variant.DOMINATOR_START, 1),
                  (Variant.DOMINATOR_START, 2), (Variant.STALLER_START, 0),
                  (Variant.STALLER_START, 1), (Variant.STALLER_START, 2),
                  (Variant.STALLER_SKIPS_FIRST, 0), (Variant.DOMINATOR_SKIPS_FIRST, 0))


def oracle_configs_for(g: Graph) -> list[GameConfig]:
    """Every oracle-sweep config for one graph: all variant/budget pairs,
    predominated ranging over the empty set and all singletons."""
    configs = []
    for variant, k in ORACLE_CONFIGS:
        for pre in [0] + [1 << v for v in range(g.n)]:
            configs.append(GameConfig(variant, k, pre))
    return configs


def _group_oracle(corpus, time_budget) -> list[ClaimResult]:
    start = time.monotonic()
    rows = []
    for i, g in enumerate(corpus):
        for cfg in oracle_configs_for(g):
            fast = solve(g, cfg).value
            slow = solve_naive(g, cfg)
            ok = fast == slow
            rows.append((f"corpus[{i}]/{cfg.variant.value}/k{cfg.pass_budget}"
                         f"/p{cfg.predominated}", ok))
    return [_aggregate("oracle/agreement", rows, time.monotonic() - start)]


GROUPS: dict[str, Callable] = {
    "paths-cycles": _group_paths_cycles,
    "small-values": _group_small_values,
    "diameter": _group_diameter,
    "hamming": _group_hamming,
    "staller-start": _group_staller_start,
    "skip": _group_skip,
    "pass": _group_pass,
    "lexicographic": _group_lexicographic,
    "predomination": _group_predomination,
    "ladders": _group_ladders,
    "oracle": _group_oracle,
}

#: groups that iterate over the graph corpus
CORPUS_GROUPS = frozenset(("small-values", "diameter", "staller-start", "skip",
                           "pass", "predomination", "oracle"))


def run_suite(names: Iterable[str] | None = None, corpus: list[Graph] | None = None,
              time_budget: float = 60.0) -> list[ClaimResult]:
    """Run named claim groups (all of them by default) and collect results."""
    selected = list(names) if names is not None else list(GROUPS)
    unknown = [n for n in selected if n not in GROUPS]
    if unknown:
        raise ValueError(f"unknown claim groups: {', '.join(unknown)}")
    if corpus is None and any(n in CORPUS_GROUPS for n in selected):
        corpus = load_corpus()
    results = []
    for name in selected:
        results.extend(GROUPS[name](corpus, time_budget))
    return results
