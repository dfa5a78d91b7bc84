"""Deterministic generators for the named graph families used in the
verification suite, each with the labeling the analysis refers to.

Every generator returns an immutable :class:`~cdgame.graph.Graph`; labels
are attached where the suite addresses vertices by name (gadget spines,
ladders, the predomination example).  ``graph_from_spec`` parses the CLI
family syntax, e.g. ``path:7``, ``fan:2,8``, ``lex:cycle:5,complete:2``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .graph import Graph, cartesian_product, join, lexicographic_product


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs n >= 1")
    return Graph.from_edges(n, [(v, v + 1) for v in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph.from_edges(n, [(v, (v + 1) % n) for v in range(n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs n >= 1")
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def star(leaves: int) -> Graph:
    """Hub at index 0 with the given number of leaves."""
    if leaves < 1:
        raise ValueError("star needs at least one leaf")
    return Graph.from_edges(leaves + 1, [(0, v) for v in range(1, leaves + 1)])


def doubling_gadget(n: int) -> Graph:
    """Spine u0..un with a pendant cell x_i-y_i-z_i on each interior rung.

    Cell i hangs between u_i and u_{i+1}: u_i-x_i, the cell path
    x_i-y_i-z_i, and u_{i+1} adjacent to all of x_i, y_i, z_i.  The
    Staller-start game on this family takes exactly twice as many moves
    as the Dominator-start game, which is the extreme ratio.
    """
    if n < 2:
        raise ValueError("doubling gadget needs n >= 2")
    labels = [f"u{i}" for i in range(n + 1)]
    labels += [f"x{i}" for i in range(1, n)]
    labels += [f"y{i}" for i in range(1, n)]
    labels += [f"z{i}" for i in range(1, n)]
    x0 = n + 1
    y0 = x0 + (n - 1)
    z0 = y0 + (n - 1)
    edges = [(i, i + 1) for i in range(n)]
    for i in range(1, n):
        x, y, z = x0 + i - 1, y0 + i - 1, z0 + i - 1
        edges += [(i, x), (x, y), (y, z), (i + 1, x), (i + 1, y), (i + 1, z)]
    return Graph.from_edges(4 * n - 2, edges, labels)


def _fan_chain_parts(blocks: int, n: int):
    # The rims of consecutive fans share an end vertex, so the whole rim
    # is one path; hub j spans local rim 1..n-1 of its block.
    per = n - 1
    rim_count = per + (per - 1) * (blocks - 1)
    rim_edges = [(m, m + 1) for m in range(rim_count - 1)]
    hub_edges = []
    for j in range(blocks):
        hub = rim_count + j
        lo = j * (per - 1)
        hub_edges += [(hub, lo + t) for t in range(per)]
    return rim_count, rim_edges + hub_edges


def fan_chain(i: int, n: int = 8) -> Graph:
    """Chain of i fans on n vertices each, consecutive fans sharing a rim
    end vertex.  Rim vertices are labeled r1.. left to right, hubs h1..hi."""
    if i < 1:
        raise ValueError("fan chain needs i >= 1")
    if n < 7:
        raise ValueError("fan chain needs fans on n >= 7 vertices")
    rim_count, edges = _fan_chain_parts(i, n)
    labels = [f"r{m + 1}" for m in range(rim_count)] + [f"h{j + 1}" for j in range(i)]
    return Graph.from_edges(rim_count + i, edges, labels)


def hat_chain(i: int) -> Graph:
    """Chain of i+1 hatted fans on 8 vertices: each block is a fan plus a
    degree-2 "hat" vertex over its 3rd and 4th rim vertices."""
    if i < 0:
        raise ValueError("hat chain needs i >= 0")
    blocks = i + 1
    rim_count, edges = _fan_chain_parts(blocks, 8)
    hat0 = rim_count + blocks
    for j in range(blocks):
        lo = j * 6
        edges += [(hat0 + j, lo + 2), (hat0 + j, lo + 3)]
    labels = [f"r{m + 1}" for m in range(rim_count)]
    labels += [f"h{j + 1}" for j in range(blocks)]
    labels += [f"w{j + 1}" for j in range(blocks)]
    return Graph.from_edges(hat0 + blocks, edges, labels)


def circular_ladder(n: int) -> Graph:
    """C_n box K_2 with vertices labeled (i,j), i in 1..n, j in 1..2."""
    if n < 3:
        raise ValueError("circular ladder needs n >= 3")
    edges = []
    for a in range(n):
        b = (a + 1) % n
        edges += [(2 * a, 2 * b), (2 * a + 1, 2 * b + 1), (2 * a, 2 * a + 1)]
    labels = [f"({a + 1},{j + 1})" for a in range(n) for j in range(2)]
    return Graph.from_edges(2 * n, edges, labels)


def mobius_ladder(n: int) -> Graph:
    """C_{2n} plus the n chords between opposite vertices."""
    if n < 3:
        raise ValueError("Mobius ladder needs n >= 3")
    edges = [(v, (v + 1) % (2 * n)) for v in range(2 * n)]
    edges += [(v, v + n) for v in range(n)]
    return Graph.from_edges(2 * n, edges)


def hamming(*dims: int) -> Graph:
    """Cartesian product of complete graphs, left associative."""
    if not dims:
        raise ValueError("hamming graph needs at least one dimension")
    if any(d < 2 for d in dims):
        raise ValueError("hamming dimensions must be >= 2")
    g = complete(dims[0])
    for d in dims[1:]:
        g = cartesian_product(g, complete(d))
    return g


def predomination_penalty_graph() -> Graph:
    """The 11-vertex graph on which predominating vertex c makes the
    Dominator-start game one move longer: path a'-a-b-c-d-e-f-g-g' with a
    square e-e'-f'-f hanging off the middle."""
    labels = ["a'", "a", "b", "c", "d", "e", "e'", "f", "f'", "g", "g'"]
    ix = {name: i for i, name in enumerate(labels)}
    chain = ["a'", "a", "b", "c", "d", "e", "f", "g", "g'"]
    edges = [(ix[u], ix[v]) for u, v in zip(chain, chain[1:])]
    edges += [(ix["e"], ix["e'"]), (ix["e'"], ix["f'"]), (ix["f'"], ix["f"])]
    return Graph.from_edges(11, edges, labels)


def random_tree(n: int, seed: int) -> Graph:
    """Uniform labeled tree from a seeded Pruefer-sequence draw."""
    if n < 1:
        raise ValueError("tree needs n >= 1")
    if n == 1:
        return Graph(1, [0])
    if n == 2:
        return Graph.from_edges(2, [(0, 1)])
    rng = random.Random(seed)
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for s in seq:
        degree[s] += 1
    edges = []
    for s in seq:
        leaf = min(v for v in range(n) if degree[v] == 1)
        edges.append((leaf, s))
        degree[leaf] -= 1
        degree[s] -= 1
    u, v = (v for v in range(n) if degree[v] == 1)
    edges.append((u, v))
    return Graph.from_edges(n, edges)


# ---------------------------------------------------------------------------
# CLI family-spec syntax

class FamilySpecError(ValueError):
    """Malformed family spec; ``position`` is the offending index."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


@dataclass(frozen=True)
class FamilySpec:
    """Parsed family tag with integer parameters or nested specs."""
    tag: str
    params: tuple = ()


_SIMPLE_ARITY = {
    "path": 1, "cycle": 1, "complete": 1, "star": 1, "gn": 1,
    "fan": 2, "hat": 1, "cl": 1, "ml": 1, "tree": 2, "fig3": 0,
}
_COMBINATORS = ("lex", "cart", "join")


class _SpecParser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def fail(self, message: str, position: int | None = None):
        raise FamilySpecError(message, self.pos if position is None else position)

    def read_tag(self) -> str:
        # parameters always follow a ':' so digits inside tags (fig3) are safe
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isalnum():
            self.pos += 1
        if self.pos == start:
            self.fail("expected a family tag", start)
        return self.text[start:self.pos]

    def read_int(self) -> int:
        start = self.pos
        if self.pos < len(self.text) and self.text[self.pos] == "-":
            self.pos += 1
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start or self.text[start:self.pos] == "-":
            self.fail("expected an integer parameter", start)
        return int(self.text[start:self.pos])

    def expect(self, ch: str):
        if self.pos >= len(self.text) or self.text[self.pos] != ch:
            self.fail(f"expected {ch!r}")
        self.pos += 1

    def at_int(self) -> bool:
        p = self.pos
        if p < len(self.text) and self.text[p] == "-":
            p += 1
        return p < len(self.text) and self.text[p].isdigit()

    def parse_spec(self) -> FamilySpec:
        start = self.pos
        tag = self.read_tag()
        if tag in _COMBINATORS:
            self.expect(":")
            left = self.parse_spec()
            self.expect(",")
            right = self.parse_spec()
            return FamilySpec(tag, (left, right))
        if tag == "hamming":
            self.expect(":")
            dims = [self.read_int()]
            while (self.pos < len(self.text) and self.text[self.pos] == ","
                   and self._int_follows()):
                self.pos += 1
                dims.append(self.read_int())
            return FamilySpec(tag, tuple(dims))
        if tag not in _SIMPLE_ARITY:
            self.fail(f"unknown family tag {tag!r}", start)
        arity = _SIMPLE_ARITY[tag]
        params = []
        for k in range(arity):
            self.expect(":" if k == 0 else ",")
            params.append(self.read_int())
        return FamilySpec(tag, tuple(params))

    def _int_follows(self) -> bool:
        save = self.pos
        self.pos += 1
        ok = self.at_int()
        self.pos = save
        return ok


def parse_family(text: str) -> FamilySpec:
    parser = _SpecParser(text.strip())
    spec = parser.parse_spec()
    if parser.pos != len(parser.text):
        parser.fail("trailing characters after family spec")
    return spec


def build_family(spec: FamilySpec) -> Graph:
    tag, p = spec.tag, spec.params
    if tag == "path":
        return path(*p)
    if tag == "cycle":
        return cycle(*p)
    if tag == "complete":
        return complete(*p)
    if tag == "star":
        return star(*p)
    if tag == "gn":
        return doubling_gadget(*p)
    if tag == "fan":
        return fan_chain(*p)
    if tag == "hat":
        return hat_chain(*p)
    if tag == "cl":
        return circular_ladder(*p)
    if tag == "ml":
        return mobius_ladder(*p)
    if tag == "hamming":
        return hamming(*p)
    if tag == "fig3":
        return predomination_penalty_graph()
    if tag == "tree":
        return random_tree(*p)
    if tag == "lex":
        return lexicographic_product(build_family(p[0]), build_family(p[1]))
    if tag == "cart":
        return cartesian_product(build_family(p[0]), build_family(p[1]))
    if tag == "join":
        return join(build_family(p[0]), build_family(p[1]))
    raise AssertionError(f"unhandled tag {tag}")


def graph_from_spec(text: str) -> Graph:
    """Parse and build a family spec like ``cl:5`` or ``lex:path:3,path:4``."""
    return build_family(parse_family(text))
