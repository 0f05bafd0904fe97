"""
Exact domination numbers.

The solver is a branch-and-bound over closed neighbourhoods: pick the
uncovered vertex with the fewest dominators (lowest index on ties) and try
each of them. Partial solutions are cut with two lower bounds on the number
of vertices still needed, the coverage bound ``ceil(|U| / max |N[v] & U|)``
and a packing of uncovered vertices with pairwise disjoint closed
neighbourhoods.
"""
import itertools
import logging
from collections import namedtuple

from .graph import _bits, components

__all__ = ["DominationResult", "OracleCapExceeded", "is_dominating_set", "domination_number",
           "dominating_set_within", "domination_number_oracle", "ORACLE_MAX_VERTICES"]

logger = logging.getLogger(__name__)

# Subset enumeration of the oracle visits up to 2**n sets.
ORACLE_MAX_VERTICES = 20


class OracleCapExceeded(ValueError):
    pass


class DominationResult(namedtuple("DominationResult", ["gamma", "witness"])):
    """
    :ivar gamma: The domination number
    :ivar witness: A minimum dominating set as a sorted tuple of vertices
    """
    __slots__ = ()


def _mask(vertices):
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def _covered(g, mask):
    covered = 0
    for v in _bits(mask):
        covered |= g.closed_neighborhood(v)
    return covered


def is_dominating_set(g, d):
    """
    :param d: Vertex collection
    :raises IndexError: on a vertex outside the graph
    """
    for v in d:
        g._check_vertex(v)
    return _covered(g, _mask(d)) == (1 << g.n) - 1


def _popcount(x):
    return bin(x).count("1")


class _Solver(object):

    def __init__(self, g):
        self.g = g
        self.closed = [g.closed_neighborhood(v) for v in range(g.n)]
        self.full = (1 << g.n) - 1
        self.nodes = 0

    def greedy(self):
        """Max-coverage greedy dominating set as a bitmask."""
        uncovered = self.full
        chosen = 0
        while uncovered:
            v = max(range(self.g.n), key=lambda x: (_popcount(self.closed[x] & uncovered), -x))
            chosen |= 1 << v
            uncovered &= ~self.closed[v]
        return chosen

    def lower_bound(self, uncovered):
        if not uncovered:
            return 0
        coverage = max(_popcount(c & uncovered) for c in self.closed)
        bound = -(-_popcount(uncovered) // coverage)
        packed = 0
        used = 0
        for u in _bits(uncovered):
            if not self.closed[u] & used:
                used |= self.closed[u]
                packed += 1
        return max(bound, packed)

    def search(self, limit):
        """
        A dominating set of size at most ``limit``, as small as possible; None
        when there is none.
        """
        best = [None, limit + 1]

        def recurse(uncovered, chosen, size):
            self.nodes += 1
            if not uncovered:
                best[0], best[1] = chosen, size
                return
            if size + self.lower_bound(uncovered) >= best[1]:
                return
            pivot = min(_bits(uncovered), key=lambda u: (_popcount(self.closed[u]), u))
            candidates = sorted(_bits(self.closed[pivot]),
                                key=lambda v: (-_popcount(self.closed[v] & uncovered), v))
            for v in candidates:
                recurse(uncovered & ~self.closed[v], chosen | 1 << v, size + 1)
                if best[1] - size <= 1:
                    # Nothing below size + 1 is reachable from this node any more.
                    return

        recurse(self.full, 0, 0)
        return best[0]


def _sorted_witness(mask):
    return tuple(_bits(mask))


def dominating_set_within(g, k):
    """
    A dominating set of ``g`` with at most ``k`` vertices, or None.

    :rtype: tuple of int or None
    """
    if k < 0:
        return None
    if g.n == 0:
        return ()
    found = _Solver(g).search(k)
    return None if found is None else _sorted_witness(found)


def _connected_domination(g, hint):
    solver = _Solver(g)
    upper = solver.greedy()
    if hint is not None and is_dominating_set(g, hint) and len(hint) < _popcount(upper):
        upper = _mask(hint)
    size = _popcount(upper)
    better = solver.search(size - 1)
    best = upper if better is None else better
    logger.debug("Domination of %r: gamma=%d after %d nodes.", g, _popcount(best), solver.nodes)
    return DominationResult(_popcount(best), _sorted_witness(best))


def domination_number(g, hint=None):
    """
    Exact domination number with a witness.

    Disconnected graphs are solved per component and the results summed.

    :param g: A graph with at least one vertex
    :type g: Graph
    :param hint: A known dominating set used as the initial upper bound
    :type hint: iterable of int, optional
    :rtype: DominationResult
    """
    if g.n == 0:
        raise ValueError("Domination number of the empty graph is undefined.")
    parts = components(g)
    if len(parts) == 1:
        return _connected_domination(g, hint)
    hint_set = set(hint) if hint is not None else None
    gamma = 0
    witness = []
    for part, vertices in parts:
        local = None
        if hint_set is not None:
            index = dict((v, i) for i, v in enumerate(vertices))
            local = [index[v] for v in hint_set if v in index]
        result = _connected_domination(part, local)
        gamma += result.gamma
        witness.extend(vertices[v] for v in result.witness)
    return DominationResult(gamma, tuple(sorted(witness)))


def domination_number_oracle(g):
    """
    Domination number by enumerating vertex subsets in increasing size.

    :raises OracleCapExceeded: for graphs with more than ``ORACLE_MAX_VERTICES`` vertices
    """
    if g.n > ORACLE_MAX_VERTICES:
        raise OracleCapExceeded("Subset oracle is capped at %d vertices, graph has %d."
                                % (ORACLE_MAX_VERTICES, g.n))
    if g.n == 0:
        raise ValueError("Domination number of the empty graph is undefined.")
    full = (1 << g.n) - 1
    closed = [g.closed_neighborhood(v) for v in range(g.n)]
    for size in range(1, g.n + 1):
        for subset in itertools.combinations(range(g.n), size):
            covered = 0
            for v in subset:
                covered |= closed[v]
            if covered == full:
                return size
    raise AssertionError("The whole vertex set always dominates.")
