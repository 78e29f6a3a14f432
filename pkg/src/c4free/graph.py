"""Immutable bitset graphs and the exact desk-scale oracles built on them.

Vertices are integers 0..n-1. Adjacency is one Python int per vertex
(bit v of ``adj[u]`` is set iff u~v), so neighborhood intersections,
domination checks, and clique search all reduce to integer bit
operations. Every operation here is a pure function of its inputs and
breaks ties lexicographically, so equal inputs always give identical
outputs.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple, Optional, Union

VertexSet = tuple[int, ...]

ORACLE_LIMIT_DEFAULT = 48


class GraphInputError(ValueError):
    """An operation was called with inputs that violate its contract."""


class OracleLimitError(GraphInputError):
    """An exact oracle was asked about a graph above the configured limit."""


class InvariantViolation(RuntimeError):
    """A guarantee that must hold for valid inputs failed.

    Signals either an input that lied about its preconditions or an
    implementation bug; never a normal outcome, never silently ignored.
    """


def _bit_indices(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _to_vertexset(mask: int) -> VertexSet:
    return tuple(_bit_indices(mask))


def _mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def _above(v: int) -> int:
    # All bits strictly above position v (negative int: infinite ones).
    return -1 << (v + 1)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph, immutable after construction."""

    n: int
    adj: tuple[int, ...]
    edge_count: int

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return (self.adj[u] >> v) & 1 == 1

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def min_degree(self) -> int:
        return min(self.degrees()) if self.n else 0

    def neighbors(self, v: int) -> VertexSet:
        return _to_vertexset(self.adj[v])

    def edges(self) -> list[tuple[int, int]]:
        """All edges (u, v) with u < v in ascending lexicographic order."""
        out = []
        for u in range(self.n):
            for v in _bit_indices(self.adj[u] & _above(u)):
                out.append((u, v))
        return out


class FoundC4(NamedTuple):
    """Witness quadruple (a, b, c, d): edges ab, bc, cd, da; non-edges ac, bd."""

    a: int
    b: int
    c: int
    d: int

    @property
    def vertices(self) -> VertexSet:
        return (self.a, self.b, self.c, self.d)


class SetClass(NamedTuple):
    kind: str  # "clique" | "independent" | "neither"
    also_independent: bool


class OddCycle(NamedTuple):
    """Chordless odd cycle in cyclic vertex order."""

    vertices: VertexSet


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a simple graph; duplicate edges collapse, self-loops refuse."""
    if n < 0:
        raise GraphInputError(f"vertex count must be non-negative, got {n}")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphInputError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise GraphInputError(f"self-loop at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    edge_count = sum(row.bit_count() for row in adj) // 2
    return Graph(n=n, adj=tuple(adj), edge_count=edge_count)


def _check_vertex(g: Graph, v: int) -> None:
    if not (0 <= v < g.n):
        raise GraphInputError(f"vertex {v} out of range for n={g.n}")


def common_neighbors(g: Graph, u: int, v: int) -> VertexSet:
    """N(u) ∩ N(v), excluding u and v themselves."""
    if u == v:
        raise GraphInputError(f"common_neighbors needs distinct vertices, got {u} twice")
    _check_vertex(g, u)
    _check_vertex(g, v)
    mask = g.adj[u] & g.adj[v] & ~(1 << u) & ~(1 << v)
    return _to_vertexset(mask)


def classify_set(g: Graph, members: Iterable[int]) -> SetClass:
    """Classify a vertex set as clique, independent, or neither.

    Sets of size <= 1 are both; they report kind "clique" with the
    also_independent flag raised.
    """
    verts = sorted(set(members))
    for v in verts:
        _check_vertex(g, v)
    if len(verts) <= 1:
        return SetClass("clique", True)
    mask = _mask_of(verts)
    all_adjacent = True
    none_adjacent = True
    for v in verts:
        inside = g.adj[v] & mask
        if inside != mask & ~(1 << v):
            all_adjacent = False
        if inside:
            none_adjacent = False
    if all_adjacent:
        return SetClass("clique", False)
    if none_adjacent:
        return SetClass("independent", False)
    return SetClass("neither", False)


def is_clique(g: Graph, members: Iterable[int]) -> bool:
    return classify_set(g, members).kind == "clique"


def is_independent_set(g: Graph, members: Iterable[int]) -> bool:
    cls = classify_set(g, members)
    return cls.kind == "independent" or cls.also_independent


def _scan_induced_c4(adj: list[int] | tuple[int, ...], n: int) -> Optional[FoundC4]:
    # For each non-adjacent pair (u, v) in lexicographic order, look for a
    # non-adjacent pair (p, q) inside N(u) ∩ N(v); first hit wins.
    for u in range(n):
        nonadj = ~adj[u] & _above(u) & ((1 << n) - 1) & ~(1 << u)
        for v in _bit_indices(nonadj):
            common = adj[u] & adj[v]
            if common.bit_count() < 2:
                continue
            for p in _bit_indices(common):
                cand = common & ~adj[p] & _above(p)
                if cand:
                    q = (cand & -cand).bit_length() - 1
                    return FoundC4(u, p, v, q)
    return None


def find_induced_c4(g: Graph) -> Optional[FoundC4]:
    """First induced 4-cycle in deterministic pair-scan order, or None."""
    return _scan_induced_c4(g.adj, g.n)


def has_induced_c4_naive(g: Graph) -> bool:
    """Independent detector: enumerate all 4-subsets directly.

    A quadruple induces C4 iff it spans exactly 4 edges and the two
    missing pairs are disjoint. Used to cross-check the pair scan.
    """
    for quad in itertools.combinations(range(g.n), 4):
        non_edges = [
            (x, y)
            for x, y in itertools.combinations(quad, 2)
            if not g.has_edge(x, y)
        ]
        if len(non_edges) == 2 and len({*non_edges[0], *non_edges[1]}) == 4:
            return True
    return False


def is_c4_free(g: Graph) -> bool:
    return find_induced_c4(g) is None


def require_c4free(g: Graph) -> None:
    witness = find_induced_c4(g)
    if witness is not None:
        raise GraphInputError(
            f"graph contains an induced 4-cycle on vertices {witness.vertices}"
        )


def complement(g: Graph) -> Graph:
    full = g.full_mask
    adj = tuple(full & ~g.adj[v] & ~(1 << v) for v in range(g.n))
    edge_count = g.n * (g.n - 1) // 2 - g.edge_count
    return Graph(n=g.n, adj=adj, edge_count=edge_count)


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """Subgraph induced by the given vertices, relabeled 0..k-1 ascending."""
    verts = sorted(set(vertices))
    for v in verts:
        _check_vertex(g, v)
    index = {v: i for i, v in enumerate(verts)}
    edges = [
        (index[u], index[v])
        for u, v in itertools.combinations(verts, 2)
        if g.has_edge(u, v)
    ]
    return build_graph(len(verts), edges)


# ---------------------------------------------------------------------------
# Maximal / exact independent sets and cliques
# ---------------------------------------------------------------------------


def _maximal_extend(g: Graph, seed_mask: int) -> int:
    # Ascending-index greedy completion to a maximal independent set.
    mask = seed_mask
    for v in range(g.n):
        if mask & (1 << v):
            continue
        if not (g.adj[v] & mask):
            mask |= 1 << v
    return mask


def greedy_maximal_independent_set(g: Graph) -> VertexSet:
    """Ascending-index greedy scan; result is independent and maximal."""
    return _to_vertexset(_maximal_extend(g, 0))


def _color_order(adj: tuple[int, ...], mask: int) -> list[tuple[int, int]]:
    # Greedy coloring of the vertices in mask; returns (vertex, bound) with
    # vertices grouped by color class, bound = class index + 1.
    classes: list[int] = []
    for v in _bit_indices(mask):
        for i in range(len(classes)):
            if not (adj[v] & classes[i]):
                classes[i] |= 1 << v
                break
        else:
            classes.append(1 << v)
    order = []
    for i, cls in enumerate(classes):
        for v in _bit_indices(cls):
            order.append((v, i + 1))
    return order


def _clique_number(adj: tuple[int, ...], start_mask: int) -> int:
    best = 0

    def expand(size: int, cand: int) -> None:
        nonlocal best
        if not cand:
            if size > best:
                best = size
            return
        order = _color_order(adj, cand)
        for v, bound in reversed(order):
            if size + bound <= best:
                return
            expand(size + 1, cand & adj[v])
            cand &= ~(1 << v)

    expand(0, start_mask)
    return best


def _has_clique(adj: tuple[int, ...], cand: int, need: int) -> bool:
    if need <= 0:
        return True
    if cand.bit_count() < need:
        return False
    found = False

    def expand(size: int, mask: int) -> None:
        nonlocal found
        if found:
            return
        if size >= need:
            found = True
            return
        order = _color_order(adj, mask)
        for v, bound in reversed(order):
            if found or size + bound < need:
                return
            expand(size + 1, mask & adj[v])
            mask &= ~(1 << v)

    expand(0, cand)
    return found


def _lex_first_clique(adj: tuple[int, ...], cand: int, k: int) -> Optional[int]:
    # Lexicographically least k-clique inside cand, as a mask, or None.
    # Greedy prefix extension: each chosen vertex is the smallest whose
    # upward neighborhood still completes to the required size.
    if k <= 0:
        return 0
    if not _has_clique(adj, cand, k):
        return None
    chosen = 0
    remaining = cand
    for depth in range(k):
        need_rest = k - depth - 1
        for v in _bit_indices(remaining):
            nxt = remaining & adj[v] & _above(v)
            if _has_clique(adj, nxt, need_rest):
                chosen |= 1 << v
                remaining = nxt
                break
        else:  # pragma: no cover - _has_clique said a completion exists
            raise InvariantViolation("lexicographic clique extension lost its target")
    return chosen


def max_clique_exact(g: Graph, limit: int = ORACLE_LIMIT_DEFAULT) -> VertexSet:
    """Maximum clique by branch and bound; lexicographically least on ties."""
    if g.n > limit:
        raise OracleLimitError(f"oracle limit: n={g.n} exceeds limit {limit}")
    omega = _clique_number(g.adj, g.full_mask)
    mask = _lex_first_clique(g.adj, g.full_mask, omega)
    assert mask is not None
    return _to_vertexset(mask)


def _complement_adj(g: Graph) -> tuple[int, ...]:
    full = g.full_mask
    return tuple(full & ~g.adj[v] & ~(1 << v) for v in range(g.n))


def max_independent_set_exact(g: Graph, limit: int = ORACLE_LIMIT_DEFAULT) -> VertexSet:
    """Maximum independent set: the clique oracle on the complement."""
    return max_clique_exact(complement(g), limit=limit)


def find_independent_set_of_size(g: Graph, t: int) -> Optional[VertexSet]:
    """Lexicographically least independent set of size exactly t, or None."""
    if t < 1:
        raise GraphInputError(f"size must be at least 1, got {t}")
    mask = _lex_first_clique(_complement_adj(g), g.full_mask, t)
    return None if mask is None else _to_vertexset(mask)


# ---------------------------------------------------------------------------
# Bipartiteness with a chordless odd cycle witness
# ---------------------------------------------------------------------------


def _bfs(g: Graph, source: int) -> tuple[list[int], list[int]]:
    dist = [-1] * g.n
    parent = [-1] * g.n
    dist[source] = 0
    queue = [source]
    head = 0
    while head < len(queue):
        u = queue[head]
        head += 1
        for v in _bit_indices(g.adj[u]):
            if dist[v] < 0:
                dist[v] = dist[u] + 1
                parent[v] = u
                queue.append(v)
    return dist, parent


def _shortest_odd_cycle(g: Graph) -> VertexSet:
    # Minimum over sources s and edges (u, v) with dist_s(u) = dist_s(v) of
    # the closed walk length 2*dist+1; the minimum odd closed walk is a
    # simple chordless cycle. First achiever in (s, u, v) scan order wins.
    best_len: Optional[int] = None
    best: Optional[tuple[int, int, int, list[int]]] = None
    for s in range(g.n):
        dist, parent = _bfs(g, s)
        for u in range(g.n):
            if dist[u] < 0:
                continue
            for v in _bit_indices(g.adj[u] & _above(u)):
                if dist[v] != dist[u]:
                    continue
                length = 2 * dist[u] + 1
                if best_len is None or length < best_len:
                    best_len = length
                    best = (s, u, v, parent)
        if best_len == 3:
            break
    if best is None:
        raise InvariantViolation("odd cycle requested in a bipartite graph")
    s, u, v, parent = best
    path_u = [u]
    while path_u[-1] != s:
        path_u.append(parent[path_u[-1]])
    path_u.reverse()  # s .. u
    path_v = [v]
    while path_v[-1] != s:
        path_v.append(parent[path_v[-1]])
    # s .. u then v .. (s excluded): cyclic order s -> u -> v -> s.
    cycle = path_u + path_v[:-1]
    if len(set(cycle)) != len(cycle):  # pragma: no cover - minimality argument
        raise InvariantViolation("shortest odd closed walk was not simple")
    return _canonical_cycle(cycle)


def _canonical_cycle(cycle: list[int]) -> VertexSet:
    # Rotate so the minimum vertex leads, then orient toward its smaller
    # cycle neighbor.
    k = len(cycle)
    start = cycle.index(min(cycle))
    rotated = cycle[start:] + cycle[:start]
    if rotated[1] > rotated[-1]:
        rotated = [rotated[0]] + rotated[1:][::-1]
    return tuple(rotated)


def bipartition(g: Graph) -> Union[tuple[VertexSet, VertexSet], OddCycle]:
    """2-color by BFS per component, or return a chordless odd cycle.

    On success part one holds the lowest-indexed vertex of every
    component; the witness on failure is the shortest odd cycle, which
    is always induced.
    """
    color = [-1] * g.n
    odd = False
    for s in range(g.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        queue = [s]
        head = 0
        while head < len(queue) and not odd:
            u = queue[head]
            head += 1
            for v in _bit_indices(g.adj[u]):
                if color[v] < 0:
                    color[v] = 1 - color[u]
                    queue.append(v)
                elif color[v] == color[u]:
                    odd = True
                    break
        if odd:
            break
    if odd:
        return OddCycle(_shortest_odd_cycle(g))
    part0 = tuple(v for v in range(g.n) if color[v] == 0)
    part1 = tuple(v for v in range(g.n) if color[v] == 1)
    return (part0, part1)
