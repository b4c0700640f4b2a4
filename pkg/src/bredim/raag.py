"""Right-angled Artin groups through their defining graphs.

A finite simple graph determines a group generated by the vertices, with
commuting relations along the edges.  Its geometry is carried by a cube
complex with one k-cube per k-clique of the graph; opposite faces of each
cube are identified with cancelling orientations, exactly as for the torus,
so every boundary map in the cellular chain complex vanishes.  That makes
the cohomology of the complex visible in the clique table, which is the
cross-check the test suite leans on.

Dimension formulas implemented here:

* the cohomological dimension of the group is the clique number of the
  graph (the top cube is essential);
* the complex contains an embedded torus of dimension equal to the clique
  number, so the group contains a free abelian subgroup of that rank;
* for 0 <= k < cd, the dimension for the rank-at-most-k family is cd + k,
  and the geometric and Bredon-cohomological versions agree.

Requests with k >= cd are refused rather than extrapolated: in that range
the formula is not established, and the degenerate answer would be a
different statement.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

from .errors import InputError, OutOfRangeError, ParseError
from .homology import ChainComplex
from .matrix import IntMatrix

__all__ = [
    "SimpleGraph",
    "CliqueTable",
    "parse_graph",
    "parse_dimacs",
    "read_graph",
    "write_graph",
    "cliques",
    "clique_number",
    "salvetti_complex",
    "cd_raag",
    "gd_fk_raag",
    "embedded_torus_rank",
    "complete_graph",
    "path_graph",
    "RAAG_GD_EQUALS_CD_NOTE",
]

RAAG_GD_EQUALS_CD_NOTE = (
    "the geometric and Bredon-cohomological dimensions agree for this family "
    "and group class; the value reported is both"
)


@dataclass(frozen=True)
class SimpleGraph:
    """A finite simple graph: no loops, no multiple edges.

    Edges are stored as ordered pairs ``(u, v)`` with ``u < v``.
    """

    vertex_count: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        if self.vertex_count < 0:
            raise InputError("vertex count must be nonnegative")
        for u, v in self.edges:
            if not (0 <= u < v < self.vertex_count):
                raise InputError(f"edge ({u}, {v}) is not a sorted pair of distinct vertices")

    @classmethod
    def from_edges(cls, vertex_count: int, edges: Iterable[tuple[int, int]]) -> "SimpleGraph":
        normalized = frozenset((min(u, v), max(u, v)) for u, v in edges)
        return cls(vertex_count, normalized)

    def adjacency(self) -> list[set[int]]:
        adj: list[set[int]] = [set() for _ in range(self.vertex_count)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges


def complete_graph(n: int) -> SimpleGraph:
    return SimpleGraph.from_edges(n, combinations(range(n), 2))


def path_graph(n: int) -> SimpleGraph:
    return SimpleGraph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


# ---------------------------------------------------------------------------
# Parsing.  Edge-list format: first line "V E", then E lines "u v" with
# 0-based vertices.  DIMACS .col: "c" comments, one "p edge V E" line, then
# "e u v" lines with 1-based vertices (duplicate lines tolerated there, since
# files in the wild list both directions).
# ---------------------------------------------------------------------------


def parse_graph(text: str) -> SimpleGraph:
    lines = [
        (no, raw.strip())
        for no, raw in enumerate(text.splitlines(), start=1)
        if raw.strip()
    ]
    if not lines:
        raise ParseError(1, "empty input")
    head_no, head = lines[0]
    fields = head.split()
    if len(fields) != 2:
        raise ParseError(head_no, "expected header 'V E'")
    try:
        n_vertices, n_edges = int(fields[0]), int(fields[1])
    except ValueError:
        raise ParseError(head_no, "header must hold two integers") from None
    if n_vertices < 0 or n_edges < 0:
        raise ParseError(head_no, "counts must be nonnegative")
    body = lines[1:]
    if len(body) != n_edges:
        where = body[-1][0] if body else head_no
        raise ParseError(where, f"expected {n_edges} edge lines, got {len(body)}")
    seen: set[tuple[int, int]] = set()
    for no, line in body:
        fields = line.split()
        if len(fields) != 2:
            raise ParseError(no, "expected an edge 'u v'")
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise ParseError(no, "vertices must be integers") from None
        if u == v:
            raise ParseError(no, f"loop at vertex {u}")
        if not (0 <= u < n_vertices and 0 <= v < n_vertices):
            raise ParseError(no, f"vertex out of range 0..{n_vertices - 1}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(no, f"duplicate edge {key}")
        seen.add(key)
    return SimpleGraph(n_vertices, frozenset(seen))


def parse_dimacs(text: str) -> SimpleGraph:
    n_vertices: int | None = None
    edges: set[tuple[int, int]] = set()
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        fields = line.split()
        if fields[0] == "p":
            if n_vertices is not None:
                raise ParseError(no, "duplicate problem line")
            if len(fields) != 4 or fields[1] not in ("edge", "col"):
                raise ParseError(no, "expected 'p edge V E'")
            try:
                n_vertices = int(fields[2])
            except ValueError:
                raise ParseError(no, "vertex count must be an integer") from None
        elif fields[0] == "e":
            if n_vertices is None:
                raise ParseError(no, "edge before problem line")
            if len(fields) != 3:
                raise ParseError(no, "expected 'e u v'")
            try:
                u, v = int(fields[1]) - 1, int(fields[2]) - 1
            except ValueError:
                raise ParseError(no, "vertices must be integers") from None
            if u == v:
                raise ParseError(no, f"loop at vertex {u + 1}")
            if not (0 <= u < n_vertices and 0 <= v < n_vertices):
                raise ParseError(no, f"vertex out of range 1..{n_vertices}")
            edges.add((min(u, v), max(u, v)))
        else:
            raise ParseError(no, f"unknown directive {fields[0]!r}")
    if n_vertices is None:
        raise ParseError(1, "missing problem line")
    return SimpleGraph(n_vertices, frozenset(edges))


def read_graph(text: str) -> SimpleGraph:
    """Read either format, deciding by the first payload token."""
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        if line.split()[0] in ("c", "p", "e"):
            return parse_dimacs(text)
        return parse_graph(text)
    raise ParseError(1, "empty input")


def write_graph(graph: SimpleGraph) -> str:
    lines = [f"{graph.vertex_count} {len(graph.edges)}"]
    lines.extend(f"{u} {v}" for u, v in sorted(graph.edges))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Clique enumeration.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CliqueTable:
    """All cliques of a graph, grouped by size, lexicographically sorted.

    ``by_size[k]`` lists the k-vertex cliques as sorted vertex tuples;
    ``by_size[0]`` is the single empty clique.
    """

    by_size: tuple[tuple[tuple[int, ...], ...], ...]

    def __post_init__(self) -> None:
        if not self.by_size or self.by_size[0] != ((),):
            raise InputError("size-0 entry must be the single empty clique")
        for k, group in enumerate(self.by_size):
            for c in group:
                if len(c) != k or list(c) != sorted(set(c)):
                    raise InputError(f"malformed clique {c} at size {k}")
            if list(group) != sorted(set(group)):
                raise InputError(f"size-{k} cliques are not sorted and duplicate-free")

    @property
    def counts(self) -> tuple[int, ...]:
        return tuple(len(g) for g in self.by_size)

    @property
    def clique_number(self) -> int:
        return len(self.by_size) - 1


def _degeneracy_order(adj: list[set[int]]) -> list[int]:
    # Repeatedly remove a vertex of minimum remaining degree (smallest id on
    # ties) to get a deterministic degeneracy ordering.
    n = len(adj)
    remaining = {v: set(adj[v]) for v in range(n)}
    order = []
    while remaining:
        v = min(remaining, key=lambda w: (len(remaining[w]), w))
        order.append(v)
        for w in remaining[v]:
            remaining[w].discard(v)
        del remaining[v]
    return order


def _maximal_cliques(adj: list[set[int]]) -> Iterator[frozenset[int]]:
    """Pivoting clique search over a degeneracy ordering of the vertices."""

    def expand(r: set[int], p: set[int], x: set[int]) -> Iterator[frozenset[int]]:
        if not p and not x:
            yield frozenset(r)
            return
        pivot = max(p | x, key=lambda w: (len(p & adj[w]), -w))
        for v in sorted(p - adj[pivot]):
            yield from expand(r | {v}, p & adj[v], x & adj[v])
            p.remove(v)
            x.add(v)

    n = len(adj)
    if n == 0:
        yield frozenset()
        return
    order = _degeneracy_order(adj)
    position = {v: i for i, v in enumerate(order)}
    for v in order:
        later = {w for w in adj[v] if position[w] > position[v]}
        earlier = {w for w in adj[v] if position[w] < position[v]}
        yield from expand({v}, later, earlier)


def cliques(graph: SimpleGraph) -> CliqueTable:
    """Complete clique enumeration, all sizes including the empty clique."""
    adj = graph.adjacency()
    found: set[tuple[int, ...]] = {()}
    for maximal in _maximal_cliques(adj):
        members = sorted(maximal)
        for size in range(1, len(members) + 1):
            for sub in combinations(members, size):
                found.add(sub)
    top = max(len(c) for c in found)
    by_size = tuple(
        tuple(sorted(c for c in found if len(c) == k)) for k in range(top + 1)
    )
    return CliqueTable(by_size)


def clique_number(graph: SimpleGraph) -> int:
    """Size of the largest clique; 0 for the empty graph."""
    adj = graph.adjacency()
    return max(len(c) for c in _maximal_cliques(adj))


def salvetti_complex(graph: SimpleGraph) -> ChainComplex:
    """The cube complex of the graph as a chain complex.

    One k-cell per k-clique; every boundary map is identically zero because
    opposite faces of each cube are identified with cancelling orientations.
    The cohomology cross-check against the clique counts is enforced by the
    test suite rather than assumed here.
    """
    counts = cliques(graph).counts
    boundaries = tuple(
        IntMatrix.zero(counts[k - 1], counts[k]) for k in range(1, len(counts))
    )
    return ChainComplex(counts, boundaries)


def cd_raag(graph: SimpleGraph) -> int:
    """Cohomological dimension of the group: the clique number.

    The empty graph presents the trivial group; every dimension is 0.
    """
    return clique_number(graph)


def gd_fk_raag(graph: SimpleGraph, k: int) -> int:
    """Dimension for the rank-at-most-k family: cd + k, for 0 <= k < cd."""
    cd = cd_raag(graph)
    if k < 0 or k >= cd:
        raise OutOfRangeError(
            f"the formula covers 0 <= k < {cd} for this graph; got k={k}"
        )
    return cd + k


def embedded_torus_rank(graph: SimpleGraph) -> int:
    """Rank of the free abelian subgroup witnessed by the largest embedded torus."""
    return clique_number(graph)
