"""
Graph corpora: exhaustive enumeration of small connected graphs, graph6
files, generator families and single graphs, all described by a
:class:`CorpusSpec`.
"""
import itertools
import logging

import networkx as nx
from tqdm import tqdm

from .graph import (Graph, Graph6Error, cartesian_product, complete_graph, cycle_graph, is_connected,
                    is_triangle_free, parse_graph6, path_graph, star_graph, write_graph6, GRAPH6_HEADER)

__all__ = ["CorpusSpec", "CorpusEntry", "enumerate_connected_graphs", "canonical_form",
           "parse_corpus_spec", "read_corpus_file", "family_graph",
           "CONNECTED_GRAPH_COUNTS", "MAX_ENUMERATION_ORDER", "FAMILIES"]

logger = logging.getLogger(__name__)

# Connected graphs up to isomorphism on 1..10 vertices.
CONNECTED_GRAPH_COUNTS = (1, 1, 2, 6, 21, 112, 853, 11117, 261080, 11716571)
MAX_ENUMERATION_ORDER = 10
# Exhaustive relabeling visits n! permutations.
CANONICAL_FORM_MAX_ORDER = 8

FAMILIES = {
    "complete": complete_graph,
    "cycle": cycle_graph,
    "path": path_graph,
    "star": star_graph,
    "rook": lambda n: cartesian_product(complete_graph(n), complete_graph(n)),
}

_levels = {}


def _extend(g, subset):
    """``g`` plus a new vertex ``g.n`` joined to the vertex bitset ``subset``."""
    rows = list(g.adjacency)
    for v in range(g.n):
        if subset >> v & 1:
            rows[v] |= 1 << g.n
    rows.append(subset)
    return Graph(g.n + 1, rows)


def _level(n, progress=False):
    if n in _levels:
        return _levels[n]
    if n == 1:
        _levels[1] = [Graph(1, [0])]
        return _levels[1]
    buckets = {}
    result = []
    for g in tqdm(_level(n - 1, progress), desc="order %d" % n, disable=not progress):
        for subset in range(1, 1 << g.n):
            h = _extend(g, subset)
            H = h.to_networkx()
            key = (h.m, tuple(sorted(h.degrees())), nx.weisfeiler_lehman_graph_hash(H))
            bucket = buckets.setdefault(key, [])
            if any(nx.is_isomorphic(H, other) for other in bucket):
                continue
            bucket.append(H)
            result.append(h)
    result.sort(key=lambda g: (g.m, write_graph6(g)))
    expected = CONNECTED_GRAPH_COUNTS[n - 1]
    if len(result) != expected:
        raise AssertionError("Enumerated %d connected graphs on %d vertices, expected %d." % (len(result), n, expected))
    logger.info("Enumerated %d connected graphs on %d vertices.", len(result), n)
    _levels[n] = result
    return result


def enumerate_connected_graphs(n, progress=False):
    """
    One representative of every isomorphism class of connected graphs on
    ``n`` vertices.

    Each graph of order ``n`` is grown from one of order ``n - 1`` by adding
    a vertex joined to a nonempty subset (every connected graph has a vertex
    whose removal keeps it connected). Candidates are bucketed by edge count,
    degree sequence and Weisfeiler-Lehman hash and deduplicated with an exact
    isomorphism test. The counts are checked against the known sequence.

    :param n: Order, ``1 <= n <= 10``
    :type n: int
    :param progress: Show a progress bar per order
    :rtype: list of Graph, ordered by edge count then graph6 string
    """
    if not 1 <= n <= MAX_ENUMERATION_ORDER:
        raise ValueError("Enumeration order must be in 1..%d, got %d." % (MAX_ENUMERATION_ORDER, n))
    return list(_level(n, progress))


def canonical_form(g):
    """
    Lexicographically least graph6 string over all relabelings.

    :raises ValueError: for more than 8 vertices
    """
    if g.n > CANONICAL_FORM_MAX_ORDER:
        raise ValueError("Canonical form by relabeling is capped at %d vertices." % CANONICAL_FORM_MAX_ORDER)
    edges = g.edges()
    best = None
    for perm in itertools.permutations(range(g.n)):
        code = write_graph6(Graph.from_edges(g.n, [(perm[u], perm[v]) for u, v in edges]))
        if best is None or code < best:
            best = code
    return best


def family_graph(name, n):
    if name not in FAMILIES:
        raise ValueError("Unknown family %r, choose from %s." % (name, ", ".join(sorted(FAMILIES))))
    return FAMILIES[name](n)


class CorpusEntry(object):
    """A corpus graph with the genera declared for it, if any."""
    __slots__ = ("graph", "h", "k")

    def __init__(self, graph, h=None, k=None):
        self.graph = graph
        self.h = h
        self.k = k

    def __repr__(self):
        return "CorpusEntry(%s, h=%r, k=%r)" % (write_graph6(self.graph), self.h, self.k)


def _parse_genus_tokens(tokens, where):
    declared = {}
    for token in tokens:
        key, sep, value = token.partition("=")
        if not sep or key not in ("h", "k"):
            raise Graph6Error("Unexpected token %r in %s." % (token, where))
        declared[key] = int(value)
    return declared.get("h"), declared.get("k")


def read_corpus_file(path):
    """
    Read a graph6 file whose lines may carry declared genera,
    e.g. ``D~{ h=1`` or ``Bw k=1``.

    :rtype: list of CorpusEntry
    """
    entries = []
    with open(path) as f:
        for lineno, line in enumerate(f, 1):
            tokens = line.split()
            if not tokens:
                continue
            code = tokens[0]
            if code.startswith(GRAPH6_HEADER):
                code = code[len(GRAPH6_HEADER):]
                if not code:
                    continue
            h, k = _parse_genus_tokens(tokens[1:], "%s:%d" % (path, lineno))
            entries.append(CorpusEntry(parse_graph6(code), h, k))
    logger.info("Read %d graphs from %s.", len(entries), path)
    return entries


class CorpusSpec(object):
    """
    Where the corpus comes from and how it is filtered.

    Keyword arguments::

        - source (str): ``"enumerate"``, ``"file"``, ``"family"`` or ``"graphs"`` (default ``"enumerate"``)
        - n_min (int): Smallest enumerated order (default 1)
        - n_max (int): Largest enumerated order, at most 10 (default 6)
        - path (str): graph6 file for ``source="file"``
        - family (str): Generator family for ``source="family"``, a key of ``FAMILIES``
        - family_n (int): Parameter of the family
        - graphs (list): Explicit ``CorpusEntry`` or ``Graph`` objects for ``source="graphs"``
        - connected_only (bool): Drop disconnected graphs (default True)
        - triangle_free_only (bool): Drop graphs with triangles (default False)
        - max_vertices (int): Drop graphs with more vertices (default None)
        - max_edges (int): Drop graphs with more edges (default None)
        - genus_mode (str): ``"search"``, ``"declared"`` or ``"skip"`` (default ``"search"``)
        - progress (bool): Show progress bars while enumerating (default False)
    """

    def __init__(self, **args):
        self.source = "enumerate"
        self.n_min = 1
        self.n_max = 6
        self.path = None
        self.family = None
        self.family_n = None
        self.graphs = None
        self.connected_only = True
        self.triangle_free_only = False
        self.max_vertices = None
        self.max_edges = None
        self.genus_mode = "search"
        self.progress = False
        for key, value in args.items():
            if not hasattr(self, key):
                raise ValueError("Invalid argument " + key + " to CorpusSpec!")
            logger.info("Using the value %s=%s.", key, value)
            setattr(self, key, value)
        self._check()

    def __enter__(self):
        return self

    def __exit__(self, t1, t2, t3):
        return False

    def __repr__(self):
        return "CorpusSpec(source=%r, genus_mode=%r)" % (self.source, self.genus_mode)

    def _check(self):
        if self.source not in ("enumerate", "file", "family", "graphs"):
            raise ValueError("Unknown corpus source %r." % self.source)
        if self.genus_mode not in ("search", "declared", "skip"):
            raise ValueError("Unknown genus mode %r." % self.genus_mode)
        if self.source == "enumerate" and not 1 <= self.n_min <= self.n_max <= MAX_ENUMERATION_ORDER:
            raise ValueError("Enumeration range %d..%d is not within 1..%d."
                             % (self.n_min, self.n_max, MAX_ENUMERATION_ORDER))
        if self.source == "file" and not self.path:
            raise ValueError("A file corpus needs a path.")
        if self.source == "family" and (self.family not in FAMILIES or self.family_n is None):
            raise ValueError("A family corpus needs one of %s and a size." % ", ".join(sorted(FAMILIES)))
        if self.source == "graphs" and self.graphs is None:
            raise ValueError("A graphs corpus needs the graphs.")

    def _raw(self):
        if self.source == "enumerate":
            for n in range(self.n_min, self.n_max + 1):
                for g in enumerate_connected_graphs(n, self.progress):
                    yield CorpusEntry(g)
        elif self.source == "file":
            for entry in read_corpus_file(self.path):
                yield entry
        elif self.source == "family":
            yield CorpusEntry(family_graph(self.family, self.family_n))
        else:
            for item in self.graphs:
                yield item if isinstance(item, CorpusEntry) else CorpusEntry(item)

    def _keep(self, g):
        if self.max_vertices is not None and g.n > self.max_vertices:
            return False
        if self.max_edges is not None and g.m > self.max_edges:
            return False
        if self.connected_only and not is_connected(g):
            return False
        if self.triangle_free_only and not is_triangle_free(g):
            return False
        return True

    def entries(self):
        """The filtered corpus, in source order."""
        return [entry for entry in self._raw() if self._keep(entry.graph)]


def parse_corpus_spec(text, **args):
    """
    Build a :class:`CorpusSpec` from its command-line form:

        - ``connected:N``: all connected graphs on 1..N vertices
        - ``connected:A-B``: all connected graphs on A..B vertices
        - ``file:PATH``: a graph6 file, lines optionally carrying ``h=H k=K``
        - ``family:NAME:N`` with NAME in complete, cycle, path, star, rook (``K_N x K_N``)
        - anything else: comma-separated graph6 strings

    Extra keyword arguments are passed on to :class:`CorpusSpec`.
    """
    kind, sep, rest = text.partition(":")
    if sep and kind == "connected":
        low, dash, high = rest.partition("-")
        n_min, n_max = (int(low), int(high)) if dash else (1, int(low))
        return CorpusSpec(source="enumerate", n_min=n_min, n_max=n_max, **args)
    if sep and kind == "file":
        return CorpusSpec(source="file", path=rest, **args)
    if sep and kind == "family":
        name, _, size = rest.partition(":")
        return CorpusSpec(source="family", family=name, family_n=int(size), **args)
    graphs = [CorpusEntry(parse_graph6(code)) for code in text.split(",") if code]
    return CorpusSpec(source="graphs", graphs=graphs, **args)
