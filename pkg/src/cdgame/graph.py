"""Simple undirected graphs on at most 64 vertices, stored as bit vectors.

A vertex set is a plain Python int used as a bitmask (bit v set means
vertex v is in the set), so set algebra is machine-word arithmetic and a
solver state key is a pair of ints.  A ``Graph`` is immutable: vertex
count ``n``, per-vertex adjacency masks, and optional display labels.

Also provides the classical invariants the game analysis needs
(connectivity, diameter, domination numbers), the graph constructions
used to build test instances (complement, join, Cartesian and
lexicographic products), and graph6 text I/O for corpus files.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator

MAX_VERTICES = 64


def bits(mask: int) -> Iterator[int]:
    """Iterate set bit indices of a mask in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    """Bitmask with the given vertex indices set."""
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Graph:
    """Immutable simple graph with bitmask adjacency.

    ``adj[v]`` is the open neighborhood of v as a mask, ``closed[v]``
    additionally includes v itself.  Adjacency is validated to be
    symmetric and loop-free on construction.
    """

    __slots__ = ("n", "adj", "closed", "full_mask", "labels")

    def __init__(self, n: int, adj: Iterable[int], labels: Iterable[str] | None = None):
        if not 1 <= n <= MAX_VERTICES:
            raise ValueError(f"vertex count must be in 1..{MAX_VERTICES}, got {n}")
        adj = tuple(adj)
        if len(adj) != n:
            raise ValueError(f"expected {n} adjacency masks, got {len(adj)}")
        full = (1 << n) - 1
        for v, row in enumerate(adj):
            if row & ~full:
                raise ValueError(f"adjacency of vertex {v} has bits beyond index {n - 1}")
            if row & (1 << v):
                raise ValueError(f"self-loop at vertex {v}")
            for u in bits(row):
                if not adj[u] & (1 << v):
                    raise ValueError(f"adjacency not symmetric: {v}->{u} but not {u}->{v}")
        self.n = n
        self.adj = adj
        self.closed = tuple(row | (1 << v) for v, row in enumerate(adj))
        self.full_mask = full
        if labels is not None:
            labels = tuple(labels)
            if len(labels) != n:
                raise ValueError("labels must cover every vertex")
        self.labels = labels

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]],
                   labels: Iterable[str] | None = None) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, rows, labels)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u]) if u < v]

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def vertex_by_label(self, name: str) -> int:
        """Resolve a display label (or a plain integer index) to a vertex.

        Accepts an underscore before a numeric suffix, so ``u_3`` finds a
        vertex labeled ``u3``.
        """
        if self.labels is not None:
            if name in self.labels:
                return self.labels.index(name)
            squashed = name.replace("_", "")
            if squashed in self.labels:
                return self.labels.index(squashed)
        try:
            v = int(name)
        except ValueError:
            raise KeyError(f"no vertex labeled {name!r}") from None
        if not 0 <= v < self.n:
            raise KeyError(f"vertex index {v} out of range 0..{self.n - 1}")
        return v

    def format_set(self, mask: int) -> str:
        return "{" + ",".join(self.label(v) for v in bits(mask)) + "}"

    def __eq__(self, other: object) -> bool:
        # labels are display-only and intentionally excluded
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count()})"


# ---------------------------------------------------------------------------
# neighborhoods and basic invariants

def closed_neighborhood(g: Graph, v: int) -> int:
    """N[v] as a mask."""
    if not 0 <= v < g.n:
        raise IndexError(f"vertex {v} out of range 0..{g.n - 1}")
    return g.closed[v]


def closed_neighborhood_set(g: Graph, s: int) -> int:
    """N[S] = union of N[v] over v in S; N[empty] is empty."""
    out = 0
    for v in bits(s):
        out |= g.closed[v]
    return out


def is_connected_induced(g: Graph, s: int) -> bool:
    """Whether the subgraph induced by the nonempty set ``s`` is connected."""
    if s == 0:
        raise ValueError("connectivity of the empty set is undefined")
    start = s & -s
    seen = start
    frontier = start
    while frontier:
        grow = 0
        for v in bits(frontier):
            grow |= g.adj[v]
        frontier = grow & s & ~seen
        seen |= frontier
    return seen == s


def is_connected(g: Graph) -> bool:
    return is_connected_induced(g, g.full_mask)


def diameter(g: Graph) -> int:
    """Largest shortest-path distance; raises on a disconnected graph."""
    best = 0
    for v in range(g.n):
        seen = 1 << v
        frontier = seen
        dist = 0
        while seen != g.full_mask:
            grow = 0
            for u in bits(frontier):
                grow |= g.adj[u]
            frontier = grow & ~seen
            if frontier == 0:
                raise ValueError("diameter is undefined on a disconnected graph")
            seen |= frontier
            dist += 1
        best = max(best, dist)
    return best


def max_degree(g: Graph) -> int:
    return max(row.bit_count() for row in g.adj)


# ---------------------------------------------------------------------------
# constructions

def complement(g: Graph) -> Graph:
    full = g.full_mask
    return Graph(g.n, (full & ~g.adj[v] & ~(1 << v) for v in range(g.n)), g.labels)


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union of g and h plus every cross edge; g's vertices first."""
    n = g.n + h.n
    if n > MAX_VERTICES:
        raise ValueError(f"join would have {n} > {MAX_VERTICES} vertices")
    h_block = ((1 << h.n) - 1) << g.n
    g_block = (1 << g.n) - 1
    rows = [g.adj[v] | h_block for v in range(g.n)]
    rows += [(h.adj[v] << g.n) | g_block for v in range(h.n)]
    return Graph(n, rows)


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """Box product; vertex (a, b) gets index a * |V(h)| + b."""
    n = g.n * h.n
    if n > MAX_VERTICES:
        raise ValueError(f"product would have {n} > {MAX_VERTICES} vertices")
    edges = []
    for a in range(g.n):
        for b in range(h.n):
            i = a * h.n + b
            for b2 in bits(h.adj[b]):
                if b2 > b:
                    edges.append((i, a * h.n + b2))
            for a2 in bits(g.adj[a]):
                if a2 > a:
                    edges.append((i, a2 * h.n + b))
    return Graph.from_edges(n, edges)


def lexicographic_product(g: Graph, h: Graph) -> Graph:
    """g[h]: copies of h substituted for g's vertices; copy of a is the
    contiguous index block a * |V(h)| .. a * |V(h)| + |V(h)| - 1."""
    n = g.n * h.n
    if n > MAX_VERTICES:
        raise ValueError(f"product would have {n} > {MAX_VERTICES} vertices")
    edges = []
    for a in range(g.n):
        base = a * h.n
        for b in range(h.n):
            for b2 in bits(h.adj[b]):
                if b2 > b:
                    edges.append((base + b, base + b2))
        for a2 in bits(g.adj[a]):
            if a2 > a:
                base2 = a2 * h.n
                for b in range(h.n):
                    for b2 in range(h.n):
                        edges.append((base + b, base2 + b2))
    return Graph.from_edges(n, edges)


# ---------------------------------------------------------------------------
# domination numbers (exact, by size-increasing subset search)

def _is_dominating(g: Graph, s: int) -> bool:
    return closed_neighborhood_set(g, s) == g.full_mask


def minimum_dominating_set(g: Graph) -> int:
    """Lexicographically first dominating set of minimum size, as a mask."""
    for size in range(1, g.n + 1):
        for combo in combinations(range(g.n), size):
            s = mask_of(combo)
            if _is_dominating(g, s):
                return s
    raise AssertionError("unreachable: V(G) dominates G")


def minimum_connected_dominating_set(g: Graph) -> int:
    """Smallest connected dominating set (first in order); g must be connected."""
    if not is_connected(g):
        raise ValueError("connected domination requires a connected graph")
    for size in range(1, g.n + 1):
        for combo in combinations(range(g.n), size):
            s = mask_of(combo)
            if _is_dominating(g, s) and is_connected_induced(g, s):
                return s
    raise AssertionError("unreachable: V(G) is a connected dominating set")


def domination_number(g: Graph) -> int:
    """Smallest size of a dominating set."""
    return minimum_dominating_set(g).bit_count()


def connected_domination_number(g: Graph) -> int:
    """Smallest size of a connected dominating set; requires g connected."""
    return minimum_connected_dominating_set(g).bit_count()


# ---------------------------------------------------------------------------
# structure predicates

def is_complete(g: Graph) -> bool:
    return all(row.bit_count() == g.n - 1 for row in g.adj)


def has_universal_vertex(g: Graph) -> bool:
    return max_degree(g) == g.n - 1


def _complement_components(g: Graph) -> list[int]:
    comp_adj = [g.full_mask & ~g.adj[v] & ~(1 << v) for v in range(g.n)]
    comps = []
    left = g.full_mask
    while left:
        start = left & -left
        seen = start
        frontier = start
        while frontier:
            grow = 0
            for v in bits(frontier):
                grow |= comp_adj[v]
            frontier = grow & ~seen
            seen |= frontier
        comps.append(seen)
        left &= ~seen
    return comps


def _induces_complete(g: Graph, s: int) -> bool:
    return all(g.closed[v] & s == s for v in bits(s))


def _join_split_exists(g: Graph, want_both_noncomplete: bool) -> bool:
    # G = A v B iff A is a union of complement components; a side induces
    # a complete subgraph iff each of its components does (cross pairs of
    # distinct complement components are always adjacent in G).
    comps = _complement_components(g)
    c = len(comps)
    if c < 2:
        return False
    comp_complete = [_induces_complete(g, comp) for comp in comps]
    for pick in range(1, 1 << (c - 1)):
        side_a_complete = comp_complete[0]
        side_b_complete = True
        for i in range(1, c):
            if pick & (1 << (i - 1)):
                side_b_complete = side_b_complete and comp_complete[i]
            else:
                side_a_complete = side_a_complete and comp_complete[i]
        if want_both_noncomplete:
            if not side_a_complete and not side_b_complete:
                return True
        elif not side_a_complete or not side_b_complete:
            return True
    return False


def is_join_two_noncomplete(g: Graph) -> bool:
    """Whether g splits as a join of two non-complete graphs."""
    return _join_split_exists(g, want_both_noncomplete=True)


def is_join_some_noncomplete(g: Graph) -> bool:
    """Whether g splits as a join with at least one non-complete side."""
    return _join_split_exists(g, want_both_noncomplete=False)


# ---------------------------------------------------------------------------
# graph6 I/O (standard format, single-byte size field: n <= 62)

def parse_graph6(line: str) -> Graph:
    """Decode one graph6 line into a Graph."""
    s = line.strip()
    if not s:
        raise ValueError("empty graph6 line")
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    data = [ord(ch) - 63 for ch in s]
    if any(b < 0 or b > 63 for b in data):
        raise ValueError("graph6 characters must be in the range 63..126")
    n = data[0]
    if n > 62:
        raise ValueError("only single-byte sizes (n <= 62) are supported")
    if n < 1:
        raise ValueError("graph must have at least one vertex")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = data[1:]
    if len(body) != need:
        raise ValueError(f"graph6 body has {len(body)} groups, expected {need}")
    bitstream = 0
    for b in body:
        bitstream = (bitstream << 6) | b
    total = need * 6
    pad = total - nbits
    if pad and bitstream & ((1 << pad) - 1):
        raise ValueError("nonzero padding bits in graph6 body")
    rows = [0] * n
    idx = 0
    for col in range(1, n):
        for row in range(col):
            if bitstream >> (total - 1 - idx) & 1:
                rows[row] |= 1 << col
                rows[col] |= 1 << row
            idx += 1
    return Graph(n, rows)


def emit_graph6(g: Graph) -> str:
    """Encode a Graph as one graph6 line (inverse of parse_graph6)."""
    if g.n > 62:
        raise ValueError("only single-byte sizes (n <= 62) are supported")
    nbits = g.n * (g.n - 1) // 2
    need = (nbits + 5) // 6
    bitstream = 0
    for col in range(1, g.n):
        for row in range(col):
            bitstream = (bitstream << 1) | (g.adj[row] >> col & 1)
    bitstream <<= need * 6 - nbits
    out = [chr(g.n + 63)]
    for i in range(need - 1, -1, -1):
        out.append(chr((bitstream >> (6 * i) & 63) + 63))
    return "".join(out)


def read_graph6_file(path) -> list[Graph]:
    """Parse every nonempty line of a graph6 corpus file."""
    graphs = []
    with open(path, "r", encoding="ascii") as fh:
        for lineno, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            try:
                graphs.append(parse_graph6(line))
            except ValueError as exc:
                raise ValueError(f"{path}:{lineno}: {exc}") from None
    return graphs
