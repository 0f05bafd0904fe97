"""
Exact bondage numbers.

``b(G)`` is found by iterative deepening over edge subsets ``B`` of size
1, 2, ... up to the edge-local bound ``min d(u) + d(v) - 1 - d_uv``, which
caps the depth. Deleting edges never lowers the domination number, so ``B``
raises it iff ``G - B`` has no dominating set of size ``gamma(G)``. Every
minimum dominating set met on the way is pooled; a subset that misses all
edges some pooled set relies on is rejected without calling the solver.
Solver answers are memoized per removed edge set, and the subsets of one
level can be shared out to worker processes.
"""
import itertools
import logging
from collections import namedtuple
from concurrent.futures import ProcessPoolExecutor

from .domination import (OracleCapExceeded, _covered, _mask, domination_number,
                         domination_number_oracle, dominating_set_within)
from .graph import Edge, common_neighbors, components, parse_graph6, write_graph6

__all__ = ["BondageResult", "BondageSearch", "UndefinedBondage", "edge_local_bound", "edge_local_witness",
           "bondage_number", "bondage_number_oracle", "hartnell_rall_edge_floor",
           "ORACLE_MAX_EDGES"]

logger = logging.getLogger(__name__)

ORACLE_MAX_EDGES = 18


class UndefinedBondage(ValueError):
    """No edge removal can raise the domination number (the graph has no edges)."""
    pass


class BondageResult(namedtuple("BondageResult", ["b", "witness", "gamma"])):
    """
    :ivar b: The bondage number
    :ivar witness: A frozenset of ``b`` edges whose removal raises the domination number
    :ivar gamma: Domination number of the graph the witness was found in
    """
    __slots__ = ()


def edge_local_witness(g):
    """
    The edge ``uv`` minimizing ``d(u) + d(v) - 1 - d_uv`` (first in edge order)
    together with that value.
    """
    if g.m == 0:
        raise UndefinedBondage("The edge-local bound needs at least one edge.")
    return min(((g.degree(u) + g.degree(v) - 1 - common_neighbors(g, u, v), Edge(u, v))
                for u, v in g.edges()), key=lambda item: item[0])[::-1]


def edge_local_bound(g):
    """``min over edges uv of d(u) + d(v) - 1 - d_uv``."""
    return edge_local_witness(g)[1]


def _dominates(g, mask):
    return _covered(g, mask) == (1 << g.n) - 1


def _removal_check(g, gamma, subset):
    """Mask of a dominating set of ``g - subset`` with ``gamma`` vertices, or None."""
    found = dominating_set_within(g.remove_edges(subset), gamma)
    return None if found is None else _mask(found)


def _removal_task(task):
    code, gamma, subset = task
    return _removal_check(parse_graph6(code), gamma, subset)


_UNSEEN = object()


class BondageSearch(object):
    """
    Iterative deepening over the edge subsets of a connected graph.

    Keyword arguments::

        - workers (int): Processes sharing the subsets of a deepening level, 1 runs in-process (default 1)
        - batch (int): Subsets sent to the workers between two refreshes of the pooled sets (default 64)

    ``memo`` maps a removed edge set ``B`` to the mask of a dominating set of
    ``G - B`` with ``gamma(G)`` vertices, or to None when removing ``B``
    raises the domination number. It is kept between :meth:`run` calls.
    """

    def __init__(self, g, **args):
        self.g = g
        self.workers = 1
        self.batch = 64
        for key, value in args.items():
            if not hasattr(self, key):
                raise ValueError("Invalid argument " + key + " to BondageSearch!")
            logger.info("Using the value %s=%s.", key, value)
            setattr(self, key, value)
        self.memo = {}
        self.calls = 0

    def __enter__(self):
        return self

    def __exit__(self, t1, t2, t3):
        return False

    def _settle(self, gamma, subsets, pool, executor):
        """Solve ``subsets`` in order; the first one raising gamma, or None."""
        if not subsets:
            return None
        if executor is None:
            results = [_removal_check(self.g, gamma, s) for s in subsets]
        else:
            code = write_graph6(self.g)
            results = list(executor.map(_removal_task, [(code, gamma, s) for s in subsets]))
        self.calls += len(subsets)
        raising = None
        for subset, found in zip(subsets, results):
            self.memo[frozenset(subset)] = found
            if found is not None:
                pool.append(found)
            elif raising is None:
                raising = subset
        return raising

    def _level(self, size, gamma, pool, executor):
        """The first subset of ``size`` edges, in edge order, raising gamma."""
        g = self.g
        batch_size = self.batch if executor is not None else 1
        batch = []
        for subset in itertools.combinations(g.edges(), size):
            known = self.memo.get(frozenset(subset), _UNSEEN)
            if known is _UNSEEN:
                if any(_dominates(g.remove_edges(subset), d) for d in pool):
                    continue
                batch.append(subset)
                if len(batch) < batch_size:
                    continue
            elif known is not None:
                pool.append(known)
                continue
            raising = self._settle(gamma, batch, pool, executor)
            batch = []
            if raising is not None:
                return raising
            if known is None:
                return subset
        return self._settle(gamma, batch, pool, executor)

    def run(self):
        """
        :rtype: BondageResult
        """
        g = self.g
        base = domination_number(g)
        gamma = base.gamma
        pool = [_mask(base.witness)]
        cap = edge_local_bound(g)
        executor = ProcessPoolExecutor(max_workers=self.workers) if self.workers > 1 else None
        try:
            for size in range(1, cap + 1):
                raising = self._level(size, gamma, pool, executor)
                if raising is not None:
                    logger.debug("Bondage of %r: b=%d, %d solver calls, %d pooled sets.",
                                 g, size, self.calls, len(pool))
                    return BondageResult(size, frozenset(raising), gamma)
        finally:
            if executor is not None:
                executor.shutdown()
        raise AssertionError("No edge set within the edge-local bound %d raised gamma of %r." % (cap, g))


def _connected_bondage(g, workers):
    search = BondageSearch(g, workers=workers) if workers > 1 else BondageSearch(g)
    return search.run()


def bondage_number(g, workers=1):
    """
    Exact bondage number with a witness edge set.

    A disconnected graph takes the minimum over its components that have
    edges; the witness is mapped back to the host's vertex labels.

    :param workers: Worker processes per deepening level, 1 runs in-process
    :type workers: int
    :raises UndefinedBondage: when ``g`` has no edges
    :rtype: BondageResult
    """
    if g.n == 0:
        raise ValueError("Bondage number of the empty graph is undefined.")
    if g.m == 0:
        raise UndefinedBondage("Bondage number of an edgeless graph is undefined.")
    parts = components(g)
    if len(parts) == 1:
        return _connected_bondage(g, workers)
    best = None
    for part, vertices in parts:
        if part.m == 0:
            continue
        result = _connected_bondage(part, workers)
        if best is None or result.b < best[0].b:
            best = (result, vertices)
    result, vertices = best
    witness = frozenset(Edge.of(vertices[u], vertices[v]) for u, v in result.witness)
    return BondageResult(result.b, witness, domination_number(g).gamma)


def bondage_number_oracle(g):
    """
    Bondage number by testing every edge subset in increasing size with the
    subset domination oracle.

    :raises OracleCapExceeded: for graphs with more than ``ORACLE_MAX_EDGES`` edges
    """
    if g.m > ORACLE_MAX_EDGES:
        raise OracleCapExceeded("Edge-subset oracle is capped at %d edges, graph has %d."
                                % (ORACLE_MAX_EDGES, g.m))
    if g.m == 0:
        raise UndefinedBondage("Bondage number of an edgeless graph is undefined.")
    gamma = domination_number_oracle(g)
    edges = g.edges()
    for size in range(1, g.m + 1):
        for subset in itertools.combinations(edges, size):
            if domination_number_oracle(g.remove_edges(subset)) > gamma:
                return size
    raise AssertionError("Removing every edge always raises gamma of %r." % g)


def hartnell_rall_edge_floor(g, b):
    """
    ``4m >= n(b + 1)`` for the exact bondage number ``b`` of a connected graph.
    """
    holds = 4 * g.m >= g.n * (b + 1)
    if not holds:
        logger.warning("Edge floor 4m >= n(b+1) fails for %r with b=%d.", g, b)
    return holds
