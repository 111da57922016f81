"""Weighted directed graphs in formal and weight-matrix form.

A ``Graph`` holds a vertex set and a list of ``(src, dst, weight)`` triples.
A ``GraphMatrix`` is the n x n weight matrix with rows and columns in sorted
label order; an entry of 0 means "no edge", so zero-weight edges cannot be
represented. Matrix vertices are addressed by 0-based index.

Most operations accept either representation and, when they return a graph,
return the same representation they were given.
"""

import heapq
from enum import Enum

from .sets import Set

HAMILTON_LIMIT = 10


def _check_weight(w):
    if isinstance(w, bool) or not isinstance(w, (int, float)):
        raise TypeError(f"edge weight must be a number, got {w!r}")
    if w == 0:
        raise ValueError("zero-weight edges cannot be represented (0 means no edge)")
    return w


class Vertices:
    __slots__ = ("labels",)

    def __init__(self, labels=()):
        self.labels = labels if isinstance(labels, Set) else Set(labels)

    def __iter__(self):
        return iter(self.labels)

    def __len__(self):
        return len(self.labels)

    def __eq__(self, other):
        return isinstance(other, Vertices) and self.labels == other.labels

    def __hash__(self):
        return hash(("Vertices", self.labels))

    def __repr__(self):
        return f"Vertices({list(self.labels)!r})"


class Edges:
    __slots__ = ("triples",)

    def __init__(self, triples=()):
        out = []
        for t in triples:
            if not (isinstance(t, tuple) and len(t) == 3):
                raise TypeError(f"an edge is a (src, dst, weight) triple, got {t!r}")
            out.append((t[0], t[1], _check_weight(t[2])))
        seen = {}
        for s, d, w in out:
            if (s, d) in seen and seen[(s, d)] != w:
                raise ValueError(f"conflicting weights for edge {s}->{d}")
            seen[(s, d)] = w
        self.triples = tuple(sorted((s, d, w) for (s, d), w in seen.items()))

    def __iter__(self):
        return iter(self.triples)

    def __len__(self):
        return len(self.triples)

    def __eq__(self, other):
        return isinstance(other, Edges) and self.triples == other.triples

    def __hash__(self):
        return hash(("Edges", self.triples))

    def __repr__(self):
        return f"Edges({list(self.triples)!r})"


class Graph:
    __slots__ = ("vertices", "edges")

    def __init__(self, vertices, edges=()):
        self.vertices = vertices if isinstance(vertices, Vertices) else Vertices(vertices)
        self.edges = edges if isinstance(edges, Edges) else Edges(edges)
        for s, d, _ in self.edges:
            for v in (s, d):
                if v not in self.vertices.labels:
                    raise ValueError(f"edge endpoint {v!r} is not a vertex of the graph")

    @property
    def labels(self):
        return self.vertices.labels.elements

    def __eq__(self, other):
        return (
            isinstance(other, Graph)
            and self.vertices == other.vertices
            and self.edges == other.edges
        )

    def __hash__(self):
        return hash(("Graph", self.vertices, self.edges))

    def __repr__(self):
        return f"Graph({list(self.vertices)!r}, {list(self.edges)!r})"


class GraphMatrix:
    __slots__ = ("rows",)

    def __init__(self, rows):
        rows = tuple(tuple(r) for r in rows)
        n = len(rows)
        for r in rows:
            if len(r) != n:
                raise ValueError("graph matrix must be square")
            for w in r:
                if isinstance(w, bool) or not isinstance(w, (int, float)):
                    raise TypeError(f"graph matrix entries must be numbers, got {w!r}")
        self.rows = rows

    def __len__(self):
        return len(self.rows)

    def __eq__(self, other):
        return isinstance(other, GraphMatrix) and self.rows == other.rows

    def __hash__(self):
        return hash(("GraphMatrix", self.rows))

    def __repr__(self):
        return f"GraphMatrix({[list(r) for r in self.rows]!r})"


# -- conversion --------------------------------------------------------------

def convert(g: Graph) -> GraphMatrix:
    index = {v: i for i, v in enumerate(g.labels)}
    n = len(index)
    rows = [[0] * n for _ in range(n)]
    for s, d, w in g.edges:
        rows[index[s]][index[d]] = w
    return GraphMatrix(rows)


def convert_back(gm: GraphMatrix, labels=None) -> Graph:
    n = len(gm)
    if labels is None:
        labels = list(range(n))
    labels = list(labels.labels if isinstance(labels, Vertices) else Set(labels))
    if len(labels) != n:
        raise ValueError(f"{len(labels)} labels for a {n}x{n} graph matrix")
    edges = [
        (labels[i], labels[j], w)
        for i, row in enumerate(gm.rows)
        for j, w in enumerate(row)
        if w != 0
    ]
    return Graph(labels, edges)


def _as_graph(g) -> Graph:
    if isinstance(g, Graph):
        return g
    if isinstance(g, GraphMatrix):
        return convert_back(g)
    raise TypeError(f"expected a Graph or GraphMatrix, got {type(g).__name__}")


def _like(template, g: Graph):
    return convert(g) if isinstance(template, GraphMatrix) else g


def vertices_of(g) -> Vertices:
    return _as_graph(g).vertices


def edges_of(g) -> Edges:
    return _as_graph(g).edges


def num_vertices(g) -> int:
    return len(_as_graph(g).vertices)


def num_edges(g) -> int:
    return len(_as_graph(g).edges)


def transpose(g):
    if isinstance(g, GraphMatrix):
        return GraphMatrix(zip(*g.rows)) if g.rows else g
    return Graph(g.vertices, [(d, s, w) for s, d, w in g.edges])


# -- predicates --------------------------------------------------------------

class Direction(Enum):
    UNDIRECTED = "undirected"
    DIRECTED = "directed"


def is_undirected(g) -> bool:
    gm = g if isinstance(g, GraphMatrix) else convert(g)
    return gm == transpose(gm)


def is_directed(g) -> bool:
    return not is_undirected(g)


def direction_predicate(kind: Direction, g) -> bool:
    return is_undirected(g) if kind is Direction.UNDIRECTED else is_directed(g)


def is_subgraph(g1, g2) -> bool:
    a, b = _as_graph(g1), _as_graph(g2)
    verts = set(b.labels)
    edges = set(b.edges)
    return all(v in verts for v in a.labels) and all(e in edges for e in a.edges)


# -- degrees -----------------------------------------------------------------

def _check_vertex(g: Graph, v):
    if v not in g.vertices.labels:
        raise ValueError(f"unknown vertex {v!r}")


def in_degree(g, v) -> int:
    g = _as_graph(g)
    _check_vertex(g, v)
    return sum(1 for _, d, _ in g.edges if d == v)


def out_degree(g, v) -> int:
    g = _as_graph(g)
    _check_vertex(g, v)
    return sum(1 for s, _, _ in g.edges if s == v)


def degree(g, v) -> int:
    # a self-loop contributes once to each of in- and out-degree
    return in_degree(g, v) + out_degree(g, v)


def adjacent_nodes(g, v) -> Set:
    g = _as_graph(g)
    _check_vertex(g, v)
    return Set([d for s, d, _ in g.edges if s == v] + [s for s, d, _ in g.edges if d == v])


def _degrees(g: Graph) -> dict:
    deg = {v: 0 for v in g.labels}
    for s, d, _ in g.edges:
        deg[s] += 1
        deg[d] += 1
    return deg


def count_odd_degree(g) -> int:
    return sum(1 for d in _degrees(_as_graph(g)).values() if d % 2)


def count_even_degree(g) -> int:
    return sum(1 for d in _degrees(_as_graph(g)).values() if d % 2 == 0)


# -- Euler and Hamilton --------------------------------------------------------

class Tour(Enum):
    EULER_CIRCUIT = "euler circuit"
    EULER_PATH = "euler path"
    EULER_PATH_NOT_CIRCUIT = "euler path, not circuit"
    HAMILTONIAN_CIRCUIT = "hamiltonian circuit"
    HAMILTONIAN_PATH = "hamiltonian path"


def has_euler_circuit(g) -> bool:
    """Every vertex has even degree. Connectivity is not checked."""
    return count_odd_degree(g) == 0


def has_euler_path(g) -> bool:
    return count_odd_degree(g) in (0, 2)


def has_euler_path_not_circuit(g) -> bool:
    return count_odd_degree(g) == 2


def _hamilton(g, closed: bool, limit: int) -> bool:
    g = _as_graph(g)
    labels = g.labels
    n = len(labels)
    if n > limit:
        raise ValueError(f"Hamiltonian search refuses {n} vertices (limit {limit})")
    if n == 0:
        return False
    succ = {v: set() for v in labels}
    for s, d, _ in g.edges:
        succ[s].add(d)

    def extend(path, visited):
        if len(path) == n:
            return not closed or path[0] in succ[path[-1]]
        for nxt in labels:
            if nxt not in visited and nxt in succ[path[-1]]:
                visited.add(nxt)
                path.append(nxt)
                if extend(path, visited):
                    return True
                path.pop()
                visited.discard(nxt)
        return False

    # a circuit can be rotated to start anywhere
    starts = labels[:1] if closed else labels
    return any(extend([s], {s}) for s in starts)


def has_hamiltonian_circuit(g, limit: int = HAMILTON_LIMIT) -> bool:
    return _hamilton(g, True, limit)


def has_hamiltonian_path(g, limit: int = HAMILTON_LIMIT) -> bool:
    return _hamilton(g, False, limit)


def euler_hamilton(kind: Tour, g) -> bool:
    return {
        Tour.EULER_CIRCUIT: has_euler_circuit,
        Tour.EULER_PATH: has_euler_path,
        Tour.EULER_PATH_NOT_CIRCUIT: has_euler_path_not_circuit,
        Tour.HAMILTONIAN_CIRCUIT: has_hamiltonian_circuit,
        Tour.HAMILTONIAN_PATH: has_hamiltonian_path,
    }[kind](g)


# -- building ----------------------------------------------------------------

def vertices_in_edges(edges) -> Vertices:
    edges = edges if isinstance(edges, Edges) else Edges(edges)
    return Vertices([s for s, _, _ in edges] + [d for _, d, _ in edges])


def union(g1, g2):
    a, b = _as_graph(g1), _as_graph(g2)
    merged = Graph(
        list(a.labels) + list(b.labels),
        list(a.edges) + list(b.edges),
    )
    return _like(g1, merged)


def add_vertices(g, vs):
    a = _as_graph(g)
    vs = vs.labels if isinstance(vs, Vertices) else vs
    return _like(g, Graph(list(a.labels) + list(vs), a.edges))


def add_edges(g, edges):
    a = _as_graph(g)
    edges = edges.triples if isinstance(edges, Edges) else edges
    return _like(g, Graph(a.vertices, list(a.edges) + list(edges)))


# -- walks -------------------------------------------------------------------

def _adjacency(g):
    gm = g if isinstance(g, GraphMatrix) else convert(g)
    return [[1 if w != 0 else 0 for w in row] for row in gm.rows]


def _matmul(a, b):
    cols = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in cols] for row in a]


def _check_index(n, *idx):
    for i in idx:
        if isinstance(i, bool) or not isinstance(i, int) or not 0 <= i < n:
            raise IndexError(f"vertex index {i!r} out of range for {n} vertices")


def num_paths_between(g, u: int, v: int, length: int) -> int:
    """Number of walks of exactly ``length`` edges from index u to index v."""
    adj = _adjacency(g)
    _check_index(len(adj), u, v)
    if isinstance(length, bool) or not isinstance(length, int) or length < 1:
        raise ValueError("walk length must be a positive integer")
    acc = adj
    for _ in range(length - 1):
        acc = _matmul(acc, adj)
    return acc[u][v]


def are_connected(g, u: int, v: int) -> bool:
    """True when some walk of 1..n edges leads from index u to index v."""
    adj = _adjacency(g)
    n = len(adj)
    _check_index(n, u, v)
    frontier = adj[u][:]
    reached = frontier[:]
    for _ in range(n - 1):
        frontier = [int(any(frontier[k] and adj[k][j] for k in range(n))) for j in range(n)]
        reached = [r or f for r, f in zip(reached, frontier)]
    return bool(reached[v])


# -- algorithms --------------------------------------------------------------

def _successors(g: Graph):
    succ = {v: [] for v in g.labels}
    for s, d, w in g.edges:
        succ[s].append((d, w))
    for v in succ:
        succ[v].sort(key=lambda t: t[0])
    return succ


def dijkstra(g, src) -> dict:
    g = _as_graph(g)
    _check_vertex(g, src)
    if any(w < 0 for _, _, w in g.edges):
        raise ValueError("Dijkstra requires nonnegative edge weights")
    succ = _successors(g)
    dist = {v: float("inf") for v in g.labels}
    dist[src] = 0
    heap = [(0, 0, src)]
    order = {v: i for i, v in enumerate(g.labels)}
    done = set()
    while heap:
        d, _, u = heapq.heappop(heap)
        if u in done:
            continue
        done.add(u)
        for v, w in succ[u]:
            if d + w < dist[v]:
                dist[v] = d + w
                heapq.heappush(heap, (dist[v], order[v], v))
    return dist


def _check_mst_input(g: Graph):
    if not is_undirected(g):
        raise ValueError("minimum spanning tree requires an undirected graph")
    labels = g.labels
    if labels and len(bfs(g, labels[0])) != len(labels):
        raise ValueError("minimum spanning tree requires a connected graph")


def prim(g) -> list:
    g = _as_graph(g)
    _check_mst_input(g)
    labels = g.labels
    if not labels:
        return []
    succ = _successors(g)
    order = {v: i for i, v in enumerate(labels)}
    start = labels[0]
    in_tree = {start}
    heap = [(w, order[start], order[d], start, d) for d, w in succ[start]]
    heapq.heapify(heap)
    tree = []
    while heap and len(in_tree) < len(labels):
        w, _, _, u, v = heapq.heappop(heap)
        if v in in_tree:
            continue
        in_tree.add(v)
        tree.append((u, v, w))
        for d, w2 in succ[v]:
            if d not in in_tree:
                heapq.heappush(heap, (w2, order[v], order[d], v, d))
    return tree


def kruskal(g) -> list:
    g = _as_graph(g)
    _check_mst_input(g)
    parent = {v: v for v in g.labels}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    order = {v: i for i, v in enumerate(g.labels)}
    candidates = sorted(
        ((w, order[s], order[d], s, d) for s, d, w in g.edges if order[s] < order[d]),
    )
    tree = []
    for w, _, _, s, d in candidates:
        rs, rd = find(s), find(d)
        if rs != rd:
            parent[rs] = rd
            tree.append((s, d, w))
    return tree


def bfs(g, src) -> list:
    g = _as_graph(g)
    _check_vertex(g, src)
    succ = _successors(g)
    seen = {src}
    order = [src]
    i = 0
    while i < len(order):
        for v, _ in succ[order[i]]:
            if v not in seen:
                seen.add(v)
                order.append(v)
        i += 1
    return order


def dfs(g, src) -> list:
    g = _as_graph(g)
    _check_vertex(g, src)
    succ = _successors(g)
    seen = set()
    order = []
    stack = [src]
    while stack:
        u = stack.pop()
        if u in seen:
            continue
        seen.add(u)
        order.append(u)
        # reversed so the smallest label is explored first
        stack.extend(v for v, _ in reversed(succ[u]) if v not in seen)
    return order


def total_weight(edges) -> float:
    return sum(w for _, _, w in edges)
