import logging
from collections import namedtuple

import numpy as np
import networkx as nx

__all__ = ["Graph", "Edge", "Graph6Error", "edge_set",
           "parse_graph6", "write_graph6", "read_graph_file",
           "read_adjacency_list", "write_adjacency_list",
           "complete_graph", "cycle_graph", "path_graph", "star_graph",
           "empty_graph", "complete_bipartite_graph", "cartesian_product",
           "is_connected", "is_triangle_free", "common_neighbors", "components"]

logger = logging.getLogger(__name__)

# Largest order encodable with the one-byte graph6 header.
GRAPH6_SHORT_LIMIT = 62
GRAPH6_HEADER = ">>graph6<<"


class Graph6Error(ValueError):
    pass


class Edge(namedtuple("Edge", ["u", "v"])):
    """
    An undirected edge stored with its endpoints ordered, ``u < v``.
    Use :meth:`Edge.of` to build one from an unordered pair.
    """
    __slots__ = ()

    @classmethod
    def of(cls, u, v):
        if u == v:
            raise ValueError("Self-loop %d-%d is not an edge of a simple graph." % (u, v))
        return cls(u, v) if u < v else cls(v, u)


class Graph(object):
    """
    Simple undirected graph on the vertices ``0..n-1``.

    Adjacency is kept as one integer bitset per vertex: bit ``u`` of
    ``adjacency[v]`` is set iff ``u`` and ``v`` are adjacent. Instances are
    immutable; every structural operation returns a new graph.

    :param n: Number of vertices
    :type n: int
    :param adjacency: Per-vertex neighbour bitsets, must be symmetric and irreflexive
    :type adjacency: sequence of int
    """
    __slots__ = ("n", "adjacency", "m", "_edges")

    def __init__(self, n, adjacency):
        adjacency = tuple(int(a) for a in adjacency)
        if n < 0:
            raise ValueError("Vertex count must be nonnegative, got %d." % n)
        if len(adjacency) != n:
            raise ValueError("Expected %d adjacency rows, got %d." % (n, len(adjacency)))
        full = (1 << n) - 1
        for v, row in enumerate(adjacency):
            if row & ~full:
                raise ValueError("Vertex %d has a neighbour outside 0..%d." % (v, n - 1))
            if row >> v & 1:
                raise ValueError("Vertex %d has a self-loop." % v)
            for u in _bits(row):
                if not adjacency[u] >> v & 1:
                    raise ValueError("Adjacency is not symmetric at %d-%d." % (v, u))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adjacency", adjacency)
        object.__setattr__(self, "m", sum(bin(a).count("1") for a in adjacency) // 2)
        object.__setattr__(self, "_edges", None)

    def __setattr__(self, key, value):
        raise AttributeError("Graph is immutable.")

    @classmethod
    def from_edges(cls, n, edges):
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError("Edge %d-%d has an endpoint outside 0..%d." % (u, v, n - 1))
            if u == v:
                raise ValueError("Self-loop at vertex %d." % u)
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, rows)

    @classmethod
    def from_networkx(cls, G):
        """
        Relabel the nodes of a networkx graph to ``0..n-1`` in sorted node order.
        """
        nodes = sorted(G.nodes())
        index = dict((node, i) for i, node in enumerate(nodes))
        return cls.from_edges(len(nodes), [(index[a], index[b]) for a, b in G.edges() if a != b])

    def to_networkx(self):
        G = nx.Graph()
        G.add_nodes_from(range(self.n))
        G.add_edges_from(self.edges())
        return G

    def to_numpy(self):
        """Dense 0/1 adjacency matrix."""
        A = np.zeros((self.n, self.n), dtype=np.uint8)
        for u, v in self.edges():
            A[u, v] = A[v, u] = 1
        return A

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.adjacency == other.adjacency

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.n, self.adjacency))

    def __repr__(self):
        return "Graph(n=%d, m=%d)" % (self.n, self.m)

    def vertices(self):
        return range(self.n)

    def edges(self):
        """All edges as sorted :class:`Edge` tuples."""
        if self._edges is None:
            edges = tuple(Edge(u, v) for u in range(self.n) for v in _bits(self.adjacency[u]) if u < v)
            object.__setattr__(self, "_edges", edges)
        return self._edges

    def has_edge(self, u, v):
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self.adjacency[u] >> v & 1)

    def neighbors(self, v):
        self._check_vertex(v)
        return list(_bits(self.adjacency[v]))

    def closed_neighborhood(self, v):
        """Bitset of ``N[v]``."""
        return self.adjacency[v] | (1 << v)

    def degree(self, v):
        self._check_vertex(v)
        return bin(self.adjacency[v]).count("1")

    def degrees(self):
        return [bin(a).count("1") for a in self.adjacency]

    def max_degree(self):
        return max(self.degrees()) if self.n else 0

    def min_degree(self):
        return min(self.degrees()) if self.n else 0

    def remove_edges(self, edges):
        """Spanning subgraph ``G - B``."""
        rows = list(self.adjacency)
        for u, v in edges:
            if not rows[u] >> v & 1:
                raise ValueError("Edge %d-%d is not in the graph." % (u, v))
            rows[u] &= ~(1 << v)
            rows[v] &= ~(1 << u)
        return Graph(self.n, rows)

    def induced_subgraph(self, vertices):
        vertices = sorted(vertices)
        index = dict((v, i) for i, v in enumerate(vertices))
        edges = [(index[u], index[v]) for u, v in self.edges() if u in index and v in index]
        return Graph.from_edges(len(vertices), edges)

    def _check_vertex(self, v):
        if not 0 <= v < self.n:
            raise IndexError("Vertex %r is not in 0..%d." % (v, self.n - 1))


def _bits(x):
    """Indices of the set bits of ``x`` in increasing order."""
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def edge_set(g, edges):
    """
    Validate a collection of vertex pairs against ``g`` and return it as a
    frozenset of :class:`Edge`.
    """
    result = set()
    for u, v in edges:
        e = Edge.of(u, v)
        if not g.has_edge(e.u, e.v):
            raise ValueError("Edge %d-%d is not in the host graph." % e)
        if e in result:
            raise ValueError("Duplicate edge %d-%d." % e)
        result.add(e)
    return frozenset(result)


# graph6 codec ---------------------------------------------------------------

def parse_graph6(text):
    """
    Decode one short-form graph6 string.

    :param text: graph6 encoded graph, surrounding whitespace and an optional ``>>graph6<<`` header are ignored
    :type text: str
    :return: The decoded graph
    :rtype: Graph
    """
    text = text.strip()
    if text.startswith(GRAPH6_HEADER):
        text = text[len(GRAPH6_HEADER):]
    if not text:
        raise Graph6Error("Empty graph6 string.")
    data = np.array([ord(c) for c in text], dtype=np.int64)
    if np.any((data < 63) | (data > 126)):
        raise Graph6Error("Character outside the printable range 63..126 in %r." % text)
    data = data - 63
    if data[0] == 63:
        raise Graph6Error("Long-form graph6 headers are not supported: %r." % text)
    n = int(data[0])
    if n == 0:
        raise Graph6Error("graph6 string %r encodes the empty graph." % text)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(data) - 1 != nbytes:
        raise Graph6Error("graph6 string %r should carry %d data bytes for n=%d, found %d."
                          % (text, nbytes, n, len(data) - 1))
    # Six bits per byte, most significant first.
    bits = ((data[1:, None] >> np.arange(5, -1, -1)) & 1).ravel()
    if np.any(bits[nbits:]):
        raise Graph6Error("Nonzero padding bits in %r." % text)
    rows = [0] * n
    k = 0
    # Upper triangle in column order: (0,1), (0,2), (1,2), (0,3), ...
    for v in range(1, n):
        for u in range(v):
            if bits[k]:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            k += 1
    return Graph(n, rows)


def write_graph6(g):
    """
    Encode ``g`` as a short-form graph6 string (no header, no newline).
    """
    if g.n > GRAPH6_SHORT_LIMIT:
        raise Graph6Error("Order %d exceeds the short-form graph6 limit %d." % (g.n, GRAPH6_SHORT_LIMIT))
    if g.n == 0:
        raise Graph6Error("The empty graph has no graph6 encoding here.")
    bits = np.array([g.adjacency[u] >> v & 1 for v in range(1, g.n) for u in range(v)], dtype=np.int64)
    pad = (-len(bits)) % 6
    bits = np.concatenate([bits, np.zeros(pad, dtype=np.int64)])
    groups = bits.reshape(-1, 6) @ (1 << np.arange(5, -1, -1))
    return chr(g.n + 63) + "".join(chr(int(c) + 63) for c in groups)


def read_graph_file(path):
    """
    Read a file of graph6 strings, one per line. Blank lines and the
    ``>>graph6<<`` header are skipped.

    :return: The graphs in file order
    :rtype: list of Graph
    """
    graphs = []
    with open(path, "r") as f:
        for lineno, line in enumerate(f, 1):
            token = line.split()[0] if line.split() else ""
            if token.startswith(GRAPH6_HEADER):
                token = token[len(GRAPH6_HEADER):]
            if not token:
                continue
            try:
                graphs.append(parse_graph6(token))
            except Graph6Error as e:
                raise Graph6Error("%s:%d: %s" % (path, lineno, e))
    logger.info("Read %d graphs from %s.", len(graphs), path)
    return graphs


def read_adjacency_list(text):
    """
    Parse the edge-list format: a first line ``n m`` followed by ``m`` lines ``u v``.
    """
    lines = [line.split() for line in text.splitlines() if line.strip() and not line.startswith("#")]
    if not lines or len(lines[0]) != 2:
        raise ValueError("Expected a first line 'n m'.")
    n, m = int(lines[0][0]), int(lines[0][1])
    if n <= 0:
        raise ValueError("Graph must have at least one vertex.")
    if len(lines) - 1 != m:
        raise ValueError("Header announces %d edges, found %d edge lines." % (m, len(lines) - 1))
    edges = [(int(a), int(b)) for a, b in lines[1:]]
    if len(set(Edge.of(u, v) for u, v in edges)) != m:
        raise ValueError("Parallel edges are not allowed.")
    return Graph.from_edges(n, edges)


def write_adjacency_list(g):
    return "\n".join(["%d %d" % (g.n, g.m)] + ["%d %d" % e for e in g.edges()]) + "\n"


# Generators -----------------------------------------------------------------

def complete_graph(n):
    if n < 1:
        raise ValueError("complete_graph needs n >= 1, got %d." % n)
    full = (1 << n) - 1
    return Graph(n, [full & ~(1 << v) for v in range(n)])


def cycle_graph(n):
    if n < 3:
        raise ValueError("cycle_graph needs n >= 3, got %d." % n)
    return Graph.from_edges(n, [(v, (v + 1) % n) for v in range(n)])


def path_graph(n):
    if n < 1:
        raise ValueError("path_graph needs n >= 1, got %d." % n)
    return Graph.from_edges(n, [(v, v + 1) for v in range(n - 1)])


def star_graph(n):
    """The star ``K_{1,n-1}`` with centre 0."""
    if n < 2:
        raise ValueError("star_graph needs n >= 2, got %d." % n)
    return Graph.from_edges(n, [(0, v) for v in range(1, n)])


def empty_graph(n):
    if n < 1:
        raise ValueError("empty_graph needs n >= 1, got %d." % n)
    return Graph(n, [0] * n)


def complete_bipartite_graph(p, q):
    if p < 1 or q < 1:
        raise ValueError("complete_bipartite_graph needs p, q >= 1.")
    return Graph.from_edges(p + q, [(a, p + b) for a in range(p) for b in range(q)])


def cartesian_product(g, h):
    """
    Cartesian product ``g x h``. Vertex ``(a, b)`` gets index ``a * h.n + b``.
    """
    if g.n < 1 or h.n < 1:
        raise ValueError("cartesian_product needs two nonempty graphs.")
    edges = []
    for a in range(g.n):
        for b1, b2 in h.edges():
            edges.append((a * h.n + b1, a * h.n + b2))
    for a1, a2 in g.edges():
        for b in range(h.n):
            edges.append((a1 * h.n + b, a2 * h.n + b))
    return Graph.from_edges(g.n * h.n, edges)


# Structural queries ---------------------------------------------------------

def components(g):
    """
    Connected components, ordered by their smallest vertex.

    :return: Pairs ``(component, vertices)`` where ``vertices[i]`` is the host index of component vertex ``i``
    :rtype: list of (Graph, list of int)
    """
    seen = 0
    result = []
    for start in range(g.n):
        if seen >> start & 1:
            continue
        comp = 1 << start
        frontier = comp
        while frontier:
            reach = 0
            for v in _bits(frontier):
                reach |= g.adjacency[v]
            frontier = reach & ~comp
            comp |= frontier
        seen |= comp
        vertices = list(_bits(comp))
        result.append((g.induced_subgraph(vertices), vertices))
    return result


def is_connected(g):
    if g.n == 0:
        raise ValueError("Connectivity of the empty graph is undefined.")
    reached = 1
    frontier = 1
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            nxt |= g.adjacency[v]
        frontier = nxt & ~reached
        reached |= frontier
    return reached == (1 << g.n) - 1


def is_triangle_free(g):
    for u, v in g.edges():
        if g.adjacency[u] & g.adjacency[v]:
            return False
    return True


def common_neighbors(g, u, v):
    """``d_uv = |N(u) & N(v)|``."""
    g._check_vertex(u)
    g._check_vertex(v)
    if u == v:
        raise ValueError("common_neighbors needs two distinct vertices.")
    return bin(g.adjacency[u] & g.adjacency[v]).count("1")
