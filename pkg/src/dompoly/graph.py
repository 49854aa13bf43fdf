"""Immutable simple graphs on small integer vertex ids, stored as adjacency bitmasks.

Every operation returns a new Graph. Surviving vertices keep their ids; new or
merged vertices take the smallest id that is free.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Mapping, Sequence

MAX_VERTICES = 63

Edge = tuple[int, int]


class GraphError(ValueError):
    """Invalid vertex, edge or graph construction."""


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """A simple undirected graph.

    ``vertices`` is the ascending tuple of vertex ids (each in ``0..62``) and
    ``adj[v]`` is the bitmask of neighbours of ``v``. The empty graph with no
    vertices is allowed.
    """

    __slots__ = ("_vmask", "_adj", "_hash")

    def __init__(self, vertices: Iterable[int] = (), edges: Iterable[Sequence[int]] = ()):
        vmask = 0
        for v in vertices:
            if not isinstance(v, int) or v < 0:
                raise GraphError(f"vertex ids must be non-negative ints, got {v!r}")
            if v >= MAX_VERTICES:
                raise GraphError(
                    f"vertex id {v} out of range; at most {MAX_VERTICES} vertices "
                    f"with ids 0..{MAX_VERTICES - 1} are supported"
                )
            vmask |= 1 << v
        adj: dict[int, int] = {v: 0 for v in _bits(vmask)}
        for e in edges:
            a, b = e
            if a == b:
                raise GraphError(f"self-loop at {a}")
            if a not in adj or b not in adj:
                raise GraphError(f"edge {a}-{b} uses an unknown vertex")
            adj[a] |= 1 << b
            adj[b] |= 1 << a
        self._vmask = vmask
        self._adj = adj
        self._hash = None

    @classmethod
    def _from_masks(cls, vmask: int, adj: dict[int, int]) -> "Graph":
        g = object.__new__(cls)
        g._vmask = vmask
        g._adj = adj
        g._hash = None
        return g

    # -- factories ---------------------------------------------------------

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]] = ()) -> "Graph":
        """Graph on vertices ``0..n-1``."""
        if n > MAX_VERTICES:
            raise GraphError(f"{n} vertices exceeds the limit of {MAX_VERTICES}")
        return cls(range(n), edges)

    @classmethod
    def empty(cls, n: int = 0) -> "Graph":
        return cls.from_edges(n)

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls.from_edges(n, combinations(range(n), 2))

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls.from_edges(n, ((i, i + 1) for i in range(n - 1)))

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        if n < 3:
            raise GraphError("a cycle needs at least 3 vertices")
        return cls.from_edges(n, [(i, i + 1) for i in range(n - 1)] + [(n - 1, 0)])

    @classmethod
    def star(cls, leaves: int) -> "Graph":
        return cls.from_edges(leaves + 1, ((0, i) for i in range(1, leaves + 1)))

    # -- queries -----------------------------------------------------------

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(self._adj)

    @property
    def vertex_mask(self) -> int:
        return self._vmask

    @property
    def n(self) -> int:
        return len(self._adj)

    def __len__(self) -> int:
        return len(self._adj)

    def __contains__(self, v: int) -> bool:
        return v in self._adj

    @property
    def m(self) -> int:
        return sum(a.bit_count() for a in self._adj.values()) // 2

    def edges(self) -> list[Edge]:
        """Edges ``(a, b)`` with ``a < b`` in lexicographic order."""
        out = []
        for a, mask in self._adj.items():
            for b in _bits(mask >> (a + 1)):
                out.append((a, a + 1 + b))
        return out

    def adjacency_mask(self, v: int) -> int:
        self._check(v)
        return self._adj[v]

    def closed_mask(self, v: int) -> int:
        self._check(v)
        return self._adj[v] | (1 << v)

    def neighbors(self, v: int) -> tuple[int, ...]:
        self._check(v)
        return tuple(_bits(self._adj[v]))

    def closed_neighborhood(self, v: int) -> tuple[int, ...]:
        return tuple(_bits(self.closed_mask(v)))

    def degree(self, v: int) -> int:
        self._check(v)
        return self._adj[v].bit_count()

    def has_edge(self, a: int, b: int) -> bool:
        return a in self._adj and bool(self._adj[a] >> b & 1)

    def is_edgeless(self) -> bool:
        return not any(self._adj.values())

    def masks(self) -> Mapping[int, int]:
        return self._adj

    def _check(self, v: int) -> None:
        if v not in self._adj:
            raise GraphError(f"unknown vertex {v}")

    def _check_edge(self, e: Sequence[int]) -> tuple[int, int]:
        a, b = e
        if not self.has_edge(a, b):
            raise GraphError(f"unknown edge {a}-{b}")
        return (a, b) if a < b else (b, a)

    def smallest_free_id(self) -> int:
        free = ~self._vmask & ((1 << MAX_VERTICES) - 1)
        if not free:
            raise GraphError(f"no free vertex id below {MAX_VERTICES}")
        return (free & -free).bit_length() - 1

    # -- value semantics ---------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self._vmask == other._vmask and self._adj == other._adj

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._vmask, tuple(self._adj.values())))
        return self._hash

    def __repr__(self):
        return f"Graph(vertices={list(self.vertices)}, edges={self.edges()})"


# -- vertex operations -----------------------------------------------------


def _remove_mask(g: Graph, rm: int) -> Graph:
    keep = g._vmask & ~rm
    adj = {v: a & keep for v, a in g._adj.items() if not rm >> v & 1}
    return Graph._from_masks(keep, adj)


def delete_vertex(g: Graph, v: int) -> Graph:
    """G - v."""
    g._check(v)
    return _remove_mask(g, 1 << v)


def delete_vertices(g: Graph, vs: Iterable[int]) -> Graph:
    rm = 0
    for v in vs:
        g._check(v)
        rm |= 1 << v
    return _remove_mask(g, rm)


def contract_vertex(g: Graph, v: int) -> Graph:
    """G / v: remove v and make its neighbourhood a clique."""
    g._check(v)
    nb = g._adj[v]
    h = _remove_mask(g, 1 << v)
    adj = h._adj
    for w in _bits(nb):
        adj[w] |= nb & ~(1 << w)
    return h


def extract_closed_neighborhood(g: Graph, v: int) -> Graph:
    """G - N[v]."""
    return _remove_mask(g, g.closed_mask(v))


def append_pendant(g: Graph, v: int) -> Graph:
    """G + {v, .}: a fresh leaf attached to v, with the smallest free id."""
    g._check(v)
    w = g.smallest_free_id()
    adj = dict(g._adj)
    adj[v] |= 1 << w
    adj[w] = 1 << v
    adj = dict(sorted(adj.items()))
    return Graph._from_masks(g._vmask | (1 << w), adj)


def neighborhood_contract(g: Graph, v: int) -> Graph:
    """G / N(v): delete N(v) and join v to every vertex at distance two."""
    g._check(v)
    nb = g._adj[v]
    second = 0
    for w in _bits(nb):
        second |= g._adj[w]
    second &= ~(nb | (1 << v))
    h = _remove_mask(g, nb)
    h._adj[v] |= second
    for w in _bits(second):
        h._adj[w] |= 1 << v
    return h


def clear_neighborhood_edges(g: Graph, u: int) -> Graph:
    """Remove every edge with both endpoints in N(u)."""
    g._check(u)
    nb = g._adj[u]
    adj = dict(g._adj)
    for w in _bits(nb):
        adj[w] &= ~nb
    return Graph._from_masks(g._vmask, adj)


# -- edge operations -------------------------------------------------------


def delete_edge(g: Graph, e: Sequence[int]) -> Graph:
    """G - e."""
    a, b = g._check_edge(e)
    adj = dict(g._adj)
    adj[a] &= ~(1 << b)
    adj[b] &= ~(1 << a)
    return Graph._from_masks(g._vmask, adj)


def contract_edge(g: Graph, e: Sequence[int]) -> Graph:
    """G / e: merge the endpoints into the smaller id."""
    a, b = g._check_edge(e)
    merged = (g._adj[a] | g._adj[b]) & ~((1 << a) | (1 << b))
    h = _remove_mask(g, 1 << b)
    h._adj[a] = merged
    for w in _bits(merged):
        h._adj[w] |= 1 << a
    return h


def extract_edge(g: Graph, e: Sequence[int]) -> Graph:
    """G with both endpoints of e removed."""
    a, b = g._check_edge(e)
    return _remove_mask(g, (1 << a) | (1 << b))


# -- combining graphs ------------------------------------------------------


def induced_subgraph(g: Graph, vs: Iterable[int]) -> Graph:
    keep = 0
    for v in vs:
        g._check(v)
        keep |= 1 << v
    return _remove_mask(g, g._vmask & ~keep)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """Union of two graphs on disjoint vertex ids."""
    if g._vmask & h._vmask:
        raise GraphError("graphs share vertex ids")
    adj = dict(sorted({**g._adj, **h._adj}.items()))
    return Graph._from_masks(g._vmask | h._vmask, adj)


def union_on_shared(g: Graph, h: Graph) -> Graph:
    """Union of vertex sets and edge sets; shared ids are identified."""
    adj = dict(g._adj)
    for v, a in h._adj.items():
        adj[v] = adj.get(v, 0) | a
    return Graph._from_masks(g._vmask | h._vmask, dict(sorted(adj.items())))


def relabel_dense(g: Graph) -> tuple[Graph, dict[int, int]]:
    """Relabel to ``0..n-1`` preserving order; returns the graph and old->new map."""
    mapping = {v: i for i, v in enumerate(g.vertices)}
    if all(k == v for k, v in mapping.items()):
        return g, mapping
    adj = {}
    for v, a in g._adj.items():
        m = 0
        for w in _bits(a):
            m |= 1 << mapping[w]
        adj[mapping[v]] = m
    return Graph._from_masks((1 << g.n) - 1, adj), mapping


def relabel(g: Graph, mapping: Mapping[int, int]) -> Graph:
    """Rename vertices by an injective map defined on every vertex."""
    if len(set(mapping[v] for v in g.vertices)) != g.n:
        raise GraphError("relabelling is not injective")
    edges = [(mapping[a], mapping[b]) for a, b in g.edges()]
    return Graph([mapping[v] for v in g.vertices], edges)


def corona(g: Graph, h: Graph) -> Graph:
    """G o H: one copy of H per vertex of G, each joined to its vertex.

    G keeps its ids. Copies are laid out in order of the G vertex they hang
    from, using ids above max(V(G)).
    """
    if g.n == 0:
        raise GraphError("corona needs a non-empty first graph")
    total = g.n * (1 + h.n)
    if total > MAX_VERTICES:
        raise GraphError(f"corona would have {total} vertices")
    hd, _ = relabel_dense(h)
    base = max(g.vertices) + 1
    if base + g.n * h.n > MAX_VERTICES:
        dense, mapping = relabel_dense(g)
        return corona(dense, h)
    vertices = list(g.vertices)
    edges = list(g.edges())
    for i, v in enumerate(g.vertices):
        off = base + i * h.n
        vertices.extend(range(off, off + h.n))
        edges.extend((a + off, b + off) for a, b in hd.edges())
        edges.extend((v, off + j) for j in range(h.n))
    return Graph(vertices, edges)


# -- structure -------------------------------------------------------------


def component_masks(g: Graph) -> list[int]:
    """Vertex masks of connected components, ordered by smallest id."""
    left = g._vmask
    out = []
    while left:
        seed = left & -left
        comp, frontier = seed, seed
        while frontier:
            nxt = 0
            for w in _bits(frontier):
                nxt |= g._adj[w]
            frontier = nxt & ~comp
            comp |= frontier
        out.append(comp)
        left &= ~comp
    return out


def components(g: Graph) -> list[Graph]:
    return [_remove_mask(g, g._vmask & ~c) for c in component_masks(g)]


def is_connected(g: Graph) -> bool:
    return len(component_masks(g)) <= 1


def find_articulations(g: Graph) -> list[int]:
    """Cut vertices in ascending order (iterative Hopcroft-Tarjan)."""
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    cut: set[int] = set()
    timer = 0
    for root in g.vertices:
        if root in disc:
            continue
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        stack = [(root, -1, iter(g.neighbors(root)))]
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if w not in disc:
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, v, iter(g.neighbors(w))))
                    advanced = True
                    break
                if w != parent:
                    low[v] = min(low[v], disc[w])
            if advanced:
                continue
            stack.pop()
            if parent >= 0:
                low[parent] = min(low[parent], low[v])
                if parent == root:
                    root_children += 1
                elif low[v] >= disc[parent]:
                    cut.add(parent)
        if root_children >= 2:
            cut.add(root)
    return sorted(cut)


def mask_of(vs: Iterable[int]) -> int:
    m = 0
    for v in vs:
        m |= 1 << v
    return m


def vertices_of(mask: int) -> tuple[int, ...]:
    return tuple(_bits(mask))


# -- splittings ------------------------------------------------------------


@dataclass(frozen=True)
class Splitting:
    """Two edge-disjoint subgraphs sharing exactly the vertex set ``x_set``."""

    g1: Graph
    g2: Graph
    x_set: tuple[int, ...]

    @property
    def graph(self) -> Graph:
        return union_on_shared(self.g1, self.g2)

    def validate(self) -> None:
        shared = self.g1.vertex_mask & self.g2.vertex_mask
        if shared != mask_of(self.x_set):
            raise GraphError("sides must intersect exactly in X")
        if set(self.g1.edges()) & set(self.g2.edges()):
            raise GraphError("sides share an edge")


def make_splitting(
    g: Graph,
    x_set: Iterable[int],
    side1: Iterable[int] | None = None,
    side_assignment: Mapping[Edge, int] | None = None,
) -> Splitting:
    """Split g at X.

    ``side1`` names the private vertices of the first side; it must be a union
    of components of G - X and may be empty. By default the first component
    of G - X (by smallest id) forms side 1 and the remaining components side 2.
    Edges inside X go to side 1 unless ``side_assignment`` maps them to 2.
    """
    xs = tuple(sorted(set(x_set)))
    for v in xs:
        g._check(v)
    xmask = mask_of(xs)
    if not xs:
        raise GraphError("separator X must be non-empty")
    if xmask == g.vertex_mask:
        raise GraphError("separator X must not be the whole vertex set")
    rest = _remove_mask(g, xmask)
    comps = component_masks(rest)
    if side1 is None:
        if len(comps) < 2:
            raise GraphError("X does not separate the graph; pass side1 explicitly")
        p1 = comps[0]
    else:
        p1 = mask_of(side1)
        if p1 & xmask or p1 & ~g.vertex_mask:
            raise GraphError("side1 must consist of vertices outside X")
        for c in comps:
            if c & p1 and c & ~p1:
                raise GraphError("a component of G - X straddles both sides")
    p2 = rest.vertex_mask & ~p1
    assign = {}
    for (a, b), side in (side_assignment or {}).items():
        key = (a, b) if a < b else (b, a)
        if not (xmask >> key[0] & 1 and xmask >> key[1] & 1 and g.has_edge(*key)):
            raise GraphError(f"{key} is not an edge inside X")
        if side not in (1, 2):
            raise GraphError("edge side must be 1 or 2")
        assign[key] = side
    inner = [e for e in g.edges() if xmask >> e[0] & 1 and xmask >> e[1] & 1]
    to2 = [e for e in inner if assign.get(e, 1) == 2]
    to1 = [e for e in inner if assign.get(e, 1) == 1]
    s1 = induced_subgraph(g, vertices_of(p1 | xmask))
    s2 = induced_subgraph(g, vertices_of(p2 | xmask))
    for e in to2:
        s1 = delete_edge(s1, e)
    for e in to1:
        s2 = delete_edge(s2, e)
    return Splitting(s1, s2, xs)
