"""
2-cell embeddings of graphs encoded as (signed) rotation systems.

A rotation system assigns to every vertex a cyclic order of its neighbours
and to every edge a signature in ``{+1, -1}``. Tracing the faces of a rotation
system always yields a 2-cell embedding, and Euler's formula
``n - m + f = chi`` then identifies the surface. The genus searches below
only enumerate orientable rotation systems (all signatures ``+1``).
"""
import itertools
import logging
import time
from collections import namedtuple
from concurrent.futures import FIRST_COMPLETED, ProcessPoolExecutor, wait

import networkx as nx
import numpy as np

from . import numeric
from .graph import Edge, Graph, is_connected, parse_graph6, write_graph6

__all__ = ["Surface", "RotationSystem", "Embedding", "CurvatureProfile", "GenusResult",
           "SearchBudget", "InvalidRotation", "GenusBudgetExhausted",
           "trace_faces", "is_orientable", "min_orientable_genus", "max_orientable_genus",
           "max_nonorientable_genus", "find_embedding", "planar_rotation", "edge_curvatures",
           "min_vertices_on_surface", "euler_genus_lower_bound", "max_orientable_genus_upper",
           "complete_graph_genus", "random_rotation_system", "write_embedding", "read_embedding"]

logger = logging.getLogger(__name__)


class InvalidRotation(ValueError):
    pass


class GenusBudgetExhausted(RuntimeError):
    """
    Raised when a genus search runs out of its node or time budget.

    :ivar lower_bound: Best proven bound on the searched genus (lower bound for
        the minimum genus, upper bound for the maximum genus)
    :ivar best: Best witness :class:`Embedding` found so far, or None
    """

    def __init__(self, message, lower_bound=None, best=None):
        RuntimeError.__init__(self, message)
        self.lower_bound = lower_bound
        self.best = best


class Surface(namedtuple("Surface", ["orientable", "genus"])):
    """
    The orientable surface ``S_h`` (``orientable=True``, ``genus=h >= 0``) or
    the non-orientable surface ``N_k`` (``orientable=False``, ``genus=k >= 1``).
    """
    __slots__ = ()

    def __new__(cls, orientable, genus):
        if genus < 0:
            raise ValueError("Surface genus must be nonnegative, got %d." % genus)
        if not orientable and genus < 1:
            raise ValueError("Non-orientable genus must be at least 1, got %d." % genus)
        return super(Surface, cls).__new__(cls, bool(orientable), int(genus))

    @classmethod
    def sphere_with_handles(cls, h):
        return cls(True, h)

    @classmethod
    def sphere_with_crosscaps(cls, k):
        return cls(False, k)

    @property
    def euler_characteristic(self):
        return 2 - 2 * self.genus if self.orientable else 2 - self.genus

    def __str__(self):
        return ("S_%d" if self.orientable else "N_%d") % self.genus


class RotationSystem(object):
    """
    Cyclic neighbour orders plus edge signatures.

    :param rotation: ``rotation[v]`` lists the neighbours of ``v`` in cyclic order
    :type rotation: sequence of sequence of int
    :param signature: Map from :class:`Edge` to ``+1``/``-1``; missing edges default to ``+1``
    :type signature: dict, optional
    """

    def __init__(self, rotation, signature=None):
        self.rotation = tuple(tuple(r) for r in rotation)
        self.signature = dict(signature or {})

    def __eq__(self, other):
        return (isinstance(other, RotationSystem) and self.rotation == other.rotation
                and self._negative() == other._negative())

    def __ne__(self, other):
        return not self == other

    def __repr__(self):
        return "RotationSystem(%r, negative=%r)" % (self.rotation, sorted(self._negative()))

    def _negative(self):
        return frozenset(e for e, s in self.signature.items() if s < 0)

    def sign(self, u, v):
        return self.signature.get(Edge.of(u, v), 1)

    def is_all_positive(self):
        return not self._negative()

    def validate(self, g):
        if len(self.rotation) != g.n:
            raise InvalidRotation("Rotation covers %d vertices, graph has %d." % (len(self.rotation), g.n))
        for v, order in enumerate(self.rotation):
            if len(set(order)) != len(order):
                raise InvalidRotation("Rotation at vertex %d repeats an edge-end: %r." % (v, order))
            if sorted(order) != g.neighbors(v):
                raise InvalidRotation("Rotation at vertex %d is %r, incident edge-ends are %r."
                                      % (v, list(order), g.neighbors(v)))
        edges = set(g.edges())
        for e, s in self.signature.items():
            if e not in edges:
                raise InvalidRotation("Signature given for non-edge %r." % (e,))
            if s not in (1, -1):
                raise InvalidRotation("Signature of %r must be +1 or -1, got %r." % (e, s))

    def with_signature(self, edge, sign):
        signature = dict(self.signature)
        signature[Edge.of(*edge)] = sign
        return RotationSystem(self.rotation, signature)


class Embedding(object):
    """
    The faces traced from a rotation system of a connected graph.

    Public attributes::

        - graph (Graph): The host graph
        - rotation (RotationSystem): The encoding that was traced
        - faces (list): Closed facial walks, each a list of vertices
        - f (int): Number of faces
        - face_lengths (dict): ``Edge -> (m', m'')``, the boundary lengths of the faces on both sides
        - euler_characteristic (int): ``n - m + f``
        - orientable (bool): Whether the signatures are switching-equivalent to all ``+1``
        - surface (Surface): The surface the embedding lives on
    """

    def __init__(self, graph, rotation, faces, face_lengths, orientable):
        self.graph = graph
        self.rotation = rotation
        self.faces = faces
        self.f = len(faces)
        self.face_lengths = face_lengths
        self.euler_characteristic = graph.n - graph.m + self.f
        self.orientable = orientable
        chi = self.euler_characteristic
        if orientable:
            if chi % 2:
                raise AssertionError("Orientable embedding with odd Euler characteristic %d." % chi)
            self.surface = Surface(True, (2 - chi) // 2)
        else:
            self.surface = Surface(False, 2 - chi)

    @property
    def genus(self):
        return self.surface.genus

    def __repr__(self):
        return "Embedding(%r, f=%d, surface=%s)" % (self.graph, self.f, self.surface)


def _sign_switching(g, rot):
    """Vertex flips ``phi`` with ``sign(uv) == phi(u) phi(v)`` on a BFS forest."""
    phi = [0] * g.n
    for root in range(g.n):
        if phi[root]:
            continue
        phi[root] = 1
        queue = [root]
        while queue:
            u = queue.pop()
            for v in g.neighbors(u):
                if not phi[v]:
                    phi[v] = phi[u] * rot.sign(u, v)
                    queue.append(v)
    return phi


def is_orientable(g, rot):
    """
    A signed rotation system is orientable iff every cycle carries an even
    number of ``-1`` signatures, i.e. the signature is a switching of all ``+1``.
    """
    phi = _sign_switching(g, rot)
    return all(rot.sign(u, v) == phi[u] * phi[v] for u, v in g.edges())


def trace_faces(g, rot):
    """
    Trace the faces of the rotation system ``rot`` of the connected graph ``g``.

    A traversal state is ``(u, v, s)``: walking the dart ``u -> v`` with local
    orientation ``s``. Crossing an edge multiplies ``s`` by its signature; at
    ``v`` the walk turns to the rotation successor of ``u`` when ``s = +1`` and
    to the predecessor otherwise. Each face is traced once, and its reverse
    traversal is marked as used.

    :param g: A connected graph
    :type g: Graph
    :param rot: Rotation system for ``g``
    :type rot: RotationSystem
    :rtype: Embedding
    """
    if g.n == 0 or not is_connected(g):
        raise ValueError("Face tracing needs a connected nonempty graph.")
    rot.validate(g)
    if g.m == 0:
        return Embedding(g, rot, [[0]], {}, True)

    position = [dict((u, i) for i, u in enumerate(order)) for order in rot.rotation]

    def step(state):
        u, v, s = state
        s = s * rot.sign(u, v)
        order = rot.rotation[v]
        i = position[v][u] + (1 if s > 0 else -1)
        return (v, order[i % len(order)], s)

    def reverse(state):
        u, v, s = state
        return (v, u, -s * rot.sign(u, v))

    used = set()
    faces = []
    sides = dict((e, []) for e in g.edges())
    for e in g.edges():
        for start in ((e.u, e.v, 1), (e.v, e.u, 1), (e.u, e.v, -1), (e.v, e.u, -1)):
            if start in used:
                continue
            walk = []
            state = start
            while True:
                walk.append(state)
                used.add(state)
                used.add(reverse(state))
                state = step(state)
                if state == start:
                    break
            for u, v, _ in walk:
                sides[Edge.of(u, v)].append(len(walk))
            faces.append([u for u, _, _ in walk])

    face_lengths = {}
    for e, lengths in sides.items():
        if len(lengths) != 2:
            raise AssertionError("Edge %r lies on %d face sides instead of 2." % (e, len(lengths)))
        face_lengths[e] = tuple(lengths)
    return Embedding(g, rot, faces, face_lengths, is_orientable(g, rot))


# Closed forms ---------------------------------------------------------------

def euler_genus_lower_bound(g, orientable=True, triangle_free=False):
    """
    Least genus allowed by ``m <= 3(n - chi)`` (``m <= 2(n - chi)`` without
    triangles), for ``n >= 3``. Non-orientable genera are at least 1.
    """
    n, m = g.n, g.m
    if n < 3:
        return 0 if orientable else 1
    if triangle_free:
        # 2 - chi >= (m - 2n + 4) / 2
        excess, per = m - 2 * n + 4, 2
    else:
        # 2 - chi >= (m - 3n + 6) / 3
        excess, per = m - 3 * n + 6, 3
    if orientable:
        return max(0, -((-excess) // (2 * per)))
    return max(1, -((-excess) // per))


def max_orientable_genus_upper(g):
    """``floor((m - n + 1) / 2)``, attained by upper-embeddable graphs."""
    return (g.m - g.n + 1) // 2


def complete_graph_genus(n):
    """Orientable genus of ``K_n``: ``ceil((n - 3)(n - 4) / 12)`` for ``n >= 3``."""
    if n < 3:
        return 0
    return -((-(n - 3) * (n - 4)) // 12)


def max_nonorientable_genus(g):
    """
    ``k_M(G) = m - n + 1`` for a connected graph which is not a tree.
    """
    if not is_connected(g):
        raise ValueError("Maximum non-orientable genus needs a connected graph.")
    if g.m < g.n:
        raise ValueError("Maximum non-orientable genus is not applicable to trees.")
    return g.m - g.n + 1


def min_vertices_on_surface(surface, triangle_free=False):
    """
    Least number of vertices of a graph 2-cell embedded on ``surface``:
    ``(3 + sqrt(16h + 1)) / 2`` and ``(3 + sqrt(8k + 1)) / 2`` in general,
    ``2(1 + sqrt(2h))`` and ``2(1 + sqrt(k))`` for triangle-free graphs.
    """
    g = surface.genus
    if surface.orientable:
        if g == 0:
            return 1
        if triangle_free:
            return numeric.ceil_sqrt_expr(2, 8 * g, 1)
        return numeric.ceil_sqrt_expr(3, 16 * g + 1, 2)
    if triangle_free:
        return numeric.ceil_sqrt_expr(2, 4 * g, 1)
    return numeric.ceil_sqrt_expr(3, 8 * g + 1, 2)


# Curvature ------------------------------------------------------------------

class CurvatureProfile(object):
    """
    Per-edge weights ``w_i = 1/d(u) + 1/d(v)``, ``f_i = 1/m' + 1/m''`` and
    curvature ``Q(e_i) = w_i + f_i - 1 - chi/m`` in exact rationals.

    :ivar edges: ``Edge -> (w, f, q)``
    """

    def __init__(self, edges):
        self.edges = edges
        self.total_w = sum((w for w, _, _ in edges.values()), numeric.rational(0))
        self.total_f = sum((f for _, f, _ in edges.values()), numeric.rational(0))
        self.total_q = sum((q for _, _, q in edges.values()), numeric.rational(0))

    def __repr__(self):
        return "CurvatureProfile(sum_w=%s, sum_f=%s, sum_q=%s)" % (self.total_w, self.total_f, self.total_q)


def edge_curvatures(embedding, surface):
    """
    Curvature profile of ``embedding`` on ``surface``.

    :raises ValueError: if the Euler characteristic of the embedding differs from ``surface``'s
    :rtype: CurvatureProfile
    """
    chi = surface.euler_characteristic
    if embedding.euler_characteristic != chi:
        raise ValueError("Embedding has Euler characteristic %d, surface %s has %d."
                         % (embedding.euler_characteristic, surface, chi))
    g = embedding.graph
    if g.m == 0:
        raise ValueError("Edge curvature needs at least one edge.")
    shift = 1 + numeric.rational(chi, g.m)
    edges = {}
    for e in g.edges():
        a, b = embedding.face_lengths[e]
        w = numeric.rational(1, g.degree(e.u)) + numeric.rational(1, g.degree(e.v))
        f = numeric.rational(1, a) + numeric.rational(1, b)
        edges[e] = (w, f, w + f - shift)
    return CurvatureProfile(edges)


# Rotation systems -----------------------------------------------------------

def random_rotation_system(g, rng=None, signed=False):
    """
    Uniformly shuffled rotations, with uniformly random signatures if ``signed``.

    :param rng: A numpy random generator, e.g. ``np.random.default_rng(1234)``; a fresh unseeded one if None
    """
    if rng is None:
        rng = np.random.default_rng()
    rotation = [[int(u) for u in rng.permutation(g.neighbors(v))] if g.degree(v) else [] for v in range(g.n)]
    signature = {}
    if signed:
        for e in g.edges():
            signature[e] = int(rng.choice([-1, 1]))
    return RotationSystem(rotation, signature)


def planar_rotation(g):
    """
    A planar rotation system of ``g`` from networkx's planarity test, or None
    when ``g`` is not planar.
    """
    planar, embedding = nx.check_planarity(g.to_networkx())
    if not planar:
        return None
    return RotationSystem([list(embedding.neighbors_cw_order(v)) if g.degree(v) else [] for v in range(g.n)])


def write_embedding(embedding):
    """
    Text form: ``n m``, then ``v: w1 w2 ...`` per vertex in rotation order, then
    ``u v s`` per edge with its signature.
    """
    g, rot = embedding.graph, embedding.rotation
    lines = ["%d %d" % (g.n, g.m)]
    lines += ["%d: %s" % (v, " ".join(str(u) for u in order)) for v, order in enumerate(rot.rotation)]
    lines += ["%d %d %+d" % (e.u, e.v, rot.sign(e.u, e.v)) for e in g.edges()]
    return "\n".join(lines) + "\n"


def read_embedding(text):
    """
    Parse :func:`write_embedding` output.

    :return: The graph and its rotation system
    :rtype: (Graph, RotationSystem)
    """
    lines = [line.strip() for line in text.splitlines() if line.strip()]
    n, m = (int(x) for x in lines[0].split())
    if len(lines) != 1 + n + m:
        raise InvalidRotation("Expected %d lines for n=%d, m=%d, found %d." % (1 + n + m, n, m, len(lines)))
    rotation = []
    for v, line in enumerate(lines[1:1 + n]):
        head, _, rest = line.partition(":")
        if int(head) != v:
            raise InvalidRotation("Rotation lines must be in vertex order, got %r." % line)
        rotation.append([int(u) for u in rest.split()])
    signature = {}
    edges = []
    for line in lines[1 + n:]:
        u, v, s = line.split()
        edges.append((int(u), int(v)))
        signature[Edge.of(int(u), int(v))] = int(s)
    g = Graph.from_edges(n, edges)
    rot = RotationSystem(rotation, signature)
    rot.validate(g)
    return g, rot


# Genus search ---------------------------------------------------------------

class SearchBudget(object):
    """
    Limits for the rotation-system searches.

    Keyword arguments::

        - node_limit (int): Maximum number of partial rotation systems visited (default 10**8)
        - time_limit (float): Wall-clock limit in seconds, None for no limit (default None)
        - workers (int): Processes sharing the first vertex's rotations, 1 searches in-process (default 1).
          Node and time limits then apply to every branch.
    """

    def __init__(self, **args):
        self.node_limit = 10 ** 8
        self.time_limit = None
        self.workers = 1
        for key, value in args.items():
            if not hasattr(self, key):
                raise ValueError("Invalid argument " + key + " to SearchBudget!")
            logger.info("Using the value %s=%s.", key, value)
            setattr(self, key, value)

    def __enter__(self):
        return self

    def __exit__(self, t1, t2, t3):
        return False

    def __repr__(self):
        return "SearchBudget(node_limit=%r, time_limit=%r, workers=%r)" % (self.node_limit, self.time_limit,
                                                                           self.workers)


class GenusResult(object):
    """
    :ivar genus: The genus found
    :ivar witness: An :class:`Embedding` attaining it, None for closed-form results
    :ivar method: ``"planarity"``, ``"search"`` or ``"closed-form"``
    :ivar nodes: Search nodes visited
    """

    def __init__(self, genus, witness, method, nodes=0):
        self.genus = genus
        self.witness = witness
        self.method = method
        self.nodes = nodes

    def __repr__(self):
        return "GenusResult(genus=%d, method=%r, nodes=%d)" % (self.genus, self.method, self.nodes)


class _RotationSearch(object):
    """
    Depth-first search over orientable rotation systems, one vertex at a time.

    Faces whose every turn is at an already rotated vertex are closed; the
    count of closed faces and of darts still on open walks bounds the final
    face count from both sides (every face of a simple graph with ``m >= 2``
    has length at least 3, and ``f`` has the parity of ``m - n``).
    """

    def __init__(self, g, budget, first=None):
        self.g = g
        self.budget = budget or SearchBudget()
        self.order = self._vertex_order()
        self.darts = 2 * g.m
        self.parity = (g.m - g.n) % 2
        self.nodes = 0
        self.started = None
        self.succ = [None] * g.n
        # rotation the first vertex is pinned to, None for all of them
        self.first = first

    def _vertex_order(self):
        """Breadth-first from a maximum-degree vertex, higher degrees first within a layer."""
        g = self.g
        degrees = g.degrees()
        root = min(range(g.n), key=lambda v: (-degrees[v], v))
        order, seen = [root], set([root])
        i = 0
        while i < len(order):
            nxt = sorted((u for u in g.neighbors(order[i]) if u not in seen), key=lambda u: (-degrees[u], u))
            for u in nxt:
                seen.add(u)
                order.append(u)
            i += 1
        return order

    def first_rotations(self):
        """Rotations of the first vertex, one per mirror pair."""
        return list(self._rotations(self.order[0], True)) if self.order else []

    def _rotations(self, v, first):
        if first and self.first is not None:
            yield self.first
            return
        nbrs = self.g.neighbors(v)
        if len(nbrs) <= 2:
            yield tuple(nbrs)
            return
        head = nbrs[0]
        for rest in itertools.permutations(nbrs[1:]):
            # Reversing every rotation mirrors the embedding, so the first vertex
            # only takes one of each mirror pair.
            if first and rest[0] > rest[-1]:
                continue
            yield (head,) + rest

    def _close_at(self, v):
        """Faces closed by rotating ``v``: (face count, dart count)."""
        succ = self.succ
        seen = set()
        faces = darts = 0
        for u in self.g.neighbors(v):
            start = (u, v)
            if start in seen:
                continue
            walk = []
            a, b = start
            closed = True
            while True:
                walk.append((a, b))
                if succ[b] is None:
                    closed = False
                    break
                a, b = b, succ[b][a]
                if (a, b) == start:
                    break
            seen.update(walk)
            if closed:
                faces += 1
                darts += len(walk)
        return faces, darts

    def _tick(self):
        self.nodes += 1
        if self.nodes > self.budget.node_limit:
            return False
        if self.budget.time_limit is not None and self.nodes % 256 == 0:
            if time.monotonic() - self.started > self.budget.time_limit:
                return False
        return True

    def _range(self, closed, darts_left):
        """Bounds on the final face count given the closed faces so far."""
        if darts_left == 0:
            return closed, closed
        lo = closed + 1
        hi = closed + darts_left // 3 if self.g.m >= 2 else closed + 1
        if (lo - self.parity) % 2:
            lo += 1
        if (hi - self.parity) % 2:
            hi -= 1
        return lo, hi

    def run(self, accept, prune, stop):
        """
        :param accept: ``accept(f, best_f)`` decides whether a complete system improves on the best
        :param prune: ``prune(lo, hi, best_f)`` cuts a partial system with face range ``[lo, hi]``
        :param stop: ``stop(best_f)`` ends the search early
        :return: (best face count, best rotation, whether the search space was exhausted)
        """
        self.started = time.monotonic()
        best = [None, None]
        exhausted = [False]
        g = self.g
        order = self.order

        def recurse(depth, closed, darts_left):
            if depth == len(order):
                if accept(closed, best[0]):
                    best[0] = closed
                    best[1] = [self.succ_order[v] for v in range(g.n)]
                return stop(best[0])
            v = order[depth]
            for rotation in self._rotations(v, depth == 0):
                if not self._tick():
                    exhausted[0] = True
                    return True
                self.succ[v] = dict((rotation[i - 1], rotation[i]) for i in range(len(rotation)))
                self.succ_order[v] = rotation
                faces, darts = self._close_at(v)
                lo, hi = self._range(closed + faces, darts_left - darts)
                if not prune(lo, hi, best[0]):
                    if recurse(depth + 1, closed + faces, darts_left - darts):
                        self.succ[v] = None
                        return True
                self.succ[v] = None
            return False

        self.succ_order = [()] * g.n
        recurse(0, 0, self.darts)
        if exhausted[0]:
            return best[0], best[1], False
        return best[0], best[1], True


def _criteria(goal, target):
    """accept, prune and stop callbacks of :meth:`_RotationSearch.run` for a face-count goal."""
    if goal == "most_faces":
        return (lambda f, best: best is None or f > best,
                lambda lo, hi, best: best is not None and hi <= best,
                lambda best: best is not None and best >= target)
    if goal == "fewest_faces":
        return (lambda f, best: best is None or f < best,
                lambda lo, hi, best: best is not None and lo >= best,
                lambda best: best is not None and best <= target)
    if goal == "exact_faces":
        return (lambda f, best: f == target,
                lambda lo, hi, best: not lo <= target <= hi,
                lambda best: best is not None)
    raise ValueError("Unknown search goal %r." % goal)


def _search_branch(task):
    code, node_limit, time_limit, goal, target, first = task
    budget = SearchBudget(node_limit=node_limit, time_limit=time_limit)
    search = _RotationSearch(parse_graph6(code), budget, first)
    best_f, rotation, complete = search.run(*_criteria(goal, target))
    return best_f, rotation, complete, search.nodes


def _search(g, budget, goal, target):
    """
    Run the rotation search for ``goal``, split over the first vertex's
    rotations when the budget asks for several workers.

    :return: (best face count, best rotation, whether the answer is proven, nodes visited)
    """
    budget = budget or SearchBudget()
    accept, prune, stop = _criteria(goal, target)
    search = _RotationSearch(g, budget)
    firsts = search.first_rotations()
    if budget.workers <= 1 or len(firsts) < 2:
        best_f, rotation, complete = search.run(accept, prune, stop)
        return best_f, rotation, complete, search.nodes

    logger.info("Splitting the search of %r into %d branches on %d workers.", g, len(firsts), budget.workers)
    code = write_graph6(g)
    tasks = [(code, budget.node_limit, budget.time_limit, goal, target, first) for first in firsts]
    best = [None, None]
    complete, nodes = True, 0
    with ProcessPoolExecutor(max_workers=budget.workers) as executor:
        pending = set(executor.submit(_search_branch, task) for task in tasks)
        while pending and not stop(best[0]):
            done, pending = wait(pending, return_when=FIRST_COMPLETED)
            for future in done:
                best_f, rotation, branch_complete, branch_nodes = future.result()
                nodes += branch_nodes
                complete = complete and branch_complete
                if best_f is not None and accept(best_f, best[0]):
                    best = [best_f, rotation]
        for future in pending:
            future.cancel()
    return best[0], best[1], complete or stop(best[0]), nodes


def _require_connected(g):
    if g.n == 0 or not is_connected(g):
        raise ValueError("Genus search needs a connected nonempty graph.")


def _witness(g, rotation):
    return trace_faces(g, RotationSystem(rotation))


def min_orientable_genus(g, budget=None):
    """
    Exact orientable genus ``h(G)`` with a witness embedding.

    Planar graphs are settled by a planarity test. Otherwise the search
    maximizes the face count and stops as soon as the Euler lower bound
    (and ``h >= 1``) is attained.

    :param budget: Search limits
    :type budget: SearchBudget, optional
    :raises GenusBudgetExhausted: carrying the proven lower bound and the best embedding found
    :rtype: GenusResult
    """
    _require_connected(g)
    rot = planar_rotation(g)
    if rot is not None:
        witness = trace_faces(g, rot)
        if witness.genus != 0:
            raise AssertionError("Planar rotation traced to genus %d." % witness.genus)
        return GenusResult(0, witness, "planarity")

    lower = max(1, euler_genus_lower_bound(g))
    target_f = g.m - g.n + 2 - 2 * lower
    logger.info("Searching a genus-%d embedding of %r (f=%d).", lower, g, target_f)
    best_f, rotation, complete, nodes = _search(g, budget, "most_faces", target_f)
    found = _witness(g, rotation) if rotation is not None else None
    if found is None or (not complete and found.f < target_f):
        raise GenusBudgetExhausted("Genus search of %r exhausted its budget after %d nodes."
                                   % (g, nodes), lower_bound=lower, best=found)
    logger.info("Orientable genus of %r is %d (%d nodes).", g, found.genus, nodes)
    return GenusResult(found.genus, found, "search", nodes)


def max_orientable_genus(g, budget=None):
    """
    Exact maximum orientable genus ``h_M(G)`` with a witness embedding.

    The search minimizes the face count and stops at the Euler bound
    ``floor((m - n + 1) / 2)``. If the budget runs out on a 4-edge-connected
    graph, which is upper-embeddable, the closed form is returned without
    witness.

    :rtype: GenusResult
    """
    _require_connected(g)
    upper = max_orientable_genus_upper(g)
    target_f = g.m - g.n + 2 - 2 * upper
    best_f, rotation, complete, nodes = _search(g, budget, "fewest_faces", target_f)
    found = _witness(g, rotation) if rotation is not None else None
    if found is not None and (complete or found.f <= target_f):
        logger.info("Maximum orientable genus of %r is %d (%d nodes).", g, found.genus, nodes)
        return GenusResult(found.genus, found, "search", nodes)
    if nx.edge_connectivity(g.to_networkx()) >= 4:
        logger.info("Budget exhausted on 4-edge-connected %r, using the closed form %d.", g, upper)
        return GenusResult(upper, None, "closed-form", nodes)
    raise GenusBudgetExhausted("Maximum genus search of %r exhausted its budget after %d nodes."
                               % (g, nodes), lower_bound=upper, best=found)


def find_embedding(g, genus, budget=None):
    """
    An orientable 2-cell embedding of ``g`` of exactly the given genus, or None
    when the search proves there is none.

    :rtype: Embedding or None
    """
    _require_connected(g)
    target_f = g.m - g.n + 2 - 2 * genus
    if genus < 0 or target_f < 1:
        return None
    best_f, rotation, complete, nodes = _search(g, budget, "exact_faces", target_f)
    if rotation is not None:
        return _witness(g, rotation)
    if not complete:
        raise GenusBudgetExhausted("Embedding search of %r at genus %d exhausted its budget." % (g, genus))
    return None
