"""
Upper bounds on the bondage number in terms of the maximum degree, the order
and the orientable or non-orientable genus, packaged as certificates.

Every bound is an integer: real-valued formulas are floored, since ``b`` is
an integer and ``b <= x`` iff ``b <= floor(x)``. Irrational quantities go
through :mod:`bondtools.numeric` so no floating-point rounding enters a
comparison.

Throughout, ``D`` is the maximum degree, ``d`` the minimum degree, ``h`` the
orientable and ``k`` the non-orientable genus of the graph.
"""
import logging
from collections import namedtuple

from . import numeric
from .bondage import edge_local_bound
from .embedding import Surface, min_vertices_on_surface
from .graph import is_connected, is_triangle_free

__all__ = ["GraphFacts", "BoundCertificate", "ConjectureVerdict", "ImprovementWindow",
           "InconsistentFacts", "NoApplicableBound", "TableMismatch",
           "bound_kang_yuan", "bound_genus_additive", "bound_constant_general",
           "bound_triangle_free", "bound_sqrt_degree", "bound_orientable_degree",
           "bound_orientable_degree_refined", "bound_nonorientable_degree",
           "bound_nonorientable_degree_refined", "bound_small_surfaces",
           "bound_euler_hartnell_rall", "bound_edge_local", "bound_degree_sum",
           "bound_nonorientable_threshold", "ALL_BOUNDS", "best_bound",
           "regenerate_table1", "TABLE1_ORIENTABLE", "TABLE1_NONORIENTABLE",
           "sachs_min_degree_cap", "improvement_window", "current_best_constant",
           "check_teschner", "check_dunbar_planar", "check_genus_constants",
           "validate_facts", "facts_from_graph"]

logger = logging.getLogger(__name__)

# Published constants c_h (h = 2..15) and c'_k (k = 3..16).
TABLE1_ORIENTABLE = dict(zip(range(2, 16), (15, 19, 22, 25, 28, 30, 33, 35, 37, 39, 41, 43, 44, 46)))
TABLE1_NONORIENTABLE = dict(zip(range(3, 17), (13, 15, 17, 19, 21, 22, 24, 25, 27, 28, 29, 30, 32, 33)))


class InconsistentFacts(ValueError):
    """The declared facts cannot belong to any graph, e.g. too few vertices for the genus."""
    pass


class NoApplicableBound(ValueError):
    pass


class TableMismatch(AssertionError):
    pass


class GraphFacts(namedtuple("GraphFacts", ["n", "m", "max_degree", "min_degree", "connected",
                                           "triangle_free", "orientable_genus", "nonorientable_genus",
                                           "genus_provenance", "edge_local"])):
    """
    The invariants the bounds are evaluated on.

    ``orientable_genus``/``nonorientable_genus`` are None when unknown;
    ``genus_provenance`` is ``"computed"`` or ``"declared"``; ``edge_local`` is
    the edge-local bound ``min d(u) + d(v) - 1 - d_uv`` when known.
    """
    __slots__ = ()

    def __new__(cls, n, m, max_degree, min_degree, connected=True, triangle_free=False,
                orientable_genus=None, nonorientable_genus=None, genus_provenance="computed",
                edge_local=None):
        return super(GraphFacts, cls).__new__(cls, n, m, max_degree, min_degree, connected, triangle_free,
                                              orientable_genus, nonorientable_genus, genus_provenance,
                                              edge_local)

    @property
    def h(self):
        return self.orientable_genus

    @property
    def k(self):
        return self.nonorientable_genus

    def surfaces(self):
        """Surfaces of the known genera, orientable first."""
        result = []
        if self.h is not None:
            result.append(Surface(True, self.h))
        if self.k is not None:
            result.append(Surface(False, self.k))
        return result


class BoundCertificate(namedtuple("BoundCertificate", ["name", "citation", "applicable", "reason",
                                                       "value", "inputs"])):
    """
    One named upper bound on ``b(G)``.

    :ivar name: Identifier, e.g. ``"kang_yuan"``
    :ivar citation: The formula the value comes from
    :ivar applicable: Whether the hypotheses hold for the facts
    :ivar reason: Which branch produced the value, or why it is inapplicable
    :ivar value: Integer bound, None when inapplicable
    :ivar inputs: The facts the value was computed from
    """
    __slots__ = ()

    def __str__(self):
        if not self.applicable:
            return "%-34s n/a  (%s)" % (self.name, self.reason)
        return "%-34s %4d  %s [%s]" % (self.name, self.value, self.citation, self.reason)


class ConjectureVerdict(namedtuple("ConjectureVerdict", ["conjecture", "holds", "margin"])):
    """
    :ivar conjecture: ``"Teschner"``, ``"DunbarPlanar"`` or ``"GenusConstants"``
    :ivar holds: Whether the exact bondage number satisfies it
    :ivar margin: Bound minus ``b``; for Teschner ``3D - 2b``
    """
    __slots__ = ()


ImprovementWindow = namedtuple("ImprovementWindow", ["h", "k"])


def _inputs(facts, *names):
    return dict((name, getattr(facts, name)) for name in names)


def _inapplicable(name, citation, facts, reason):
    return BoundCertificate(name, citation, False, reason, None, {})


def _best_branch(name, citation, facts, branches, inputs, missing):
    """Certificate from the smallest of ``(value, reason)`` branches."""
    if not facts.connected:
        return _inapplicable(name, citation, facts, "graph is disconnected")
    branches = [b for b in branches if b is not None]
    if not branches:
        return _inapplicable(name, citation, facts, missing)
    value, reason = min(branches)
    return BoundCertificate(name, citation, True, reason, value, _inputs(facts, *inputs))


def _require_vertices(facts, surface, triangle_free=False):
    least = min_vertices_on_surface(surface, triangle_free)
    if facts.n < least:
        raise InconsistentFacts("A graph 2-cell embedded on %s has at least %d vertices, facts say n=%d."
                                % (surface, least, facts.n))


# Bounds ---------------------------------------------------------------------

def bound_kang_yuan(facts):
    """``b <= min(8, D + 2)`` for connected planar graphs."""
    citation = "planar: min(8, D+2)"
    branch = None
    if facts.h == 0:
        branch = (min(8, facts.max_degree + 2), "h=0")
    return _best_branch("kang_yuan", citation, facts, [branch], ("max_degree", "orientable_genus"),
                        "needs a planar graph (h=0)")


def bound_genus_additive(facts):
    """``b <= min(D + h + 2, D + k + 1)`` over the known genera."""
    d = facts.max_degree
    branches = [(d + facts.h + 2, "D+h+2") if facts.h is not None else None,
                (d + facts.k + 1, "D+k+1") if facts.k is not None else None]
    return _best_branch("genus_additive", "min(D+h+2, D+k+1)", facts, branches,
                        ("max_degree", "orientable_genus", "nonorientable_genus"), "no genus known")


def bound_constant_general(facts):
    """
    Constant bounds from ``4m >= n(b + 1)`` and ``m <= 3(n - chi)``.

    ``h = 0`` or ``k = 1`` give 10. ``h >= 1`` with ``n > 12(2h - 2)``, or
    ``k >= 2`` with ``n > 12(k - 2)``, give 11. Otherwise the order is at its
    smallest for the genus and the value is
    ``11 + 24(h-1)(3 - sqrt(16h+1)) / (1 - 8h)``, respectively
    ``11 + 12(k-2)(3 - sqrt(8k+1)) / (1 - 4k)``.

    :raises InconsistentFacts: when ``n`` is below the least order for the genus
    """
    n = facts.n
    branches = []
    h, k = facts.h, facts.k
    if h is not None:
        if h == 0:
            branches.append((10, "h=0"))
        elif h == 1 or n > 12 * (2 * h - 2):
            branches.append((11, "h>=1, n>12(2h-2)"))
        else:
            _require_vertices(facts, Surface(True, h))
            branches.append((numeric.floor_real_bound("constant_orientable", h), "h>=2, n<=12(2h-2)"))
    if k is not None:
        if k == 1:
            branches.append((10, "k=1"))
        elif k == 2 or n > 12 * (k - 2):
            branches.append((11, "k>=2, n>12(k-2)"))
        else:
            _require_vertices(facts, Surface(False, k))
            branches.append((numeric.floor_real_bound("constant_nonorientable", k), "k>=3, n<=12(k-2)"))
    return _best_branch("constant_general", "11 - 12 chi / n at the least order", facts, branches,
                        ("n", "orientable_genus", "nonorientable_genus"), "no genus known")


def bound_triangle_free(facts):
    """
    Triangle-free analogue of :func:`bound_constant_general` from
    ``m <= 2(n - chi)``: 6, then 7 for ``n > 8(2h - 2)`` / ``n > 8(k - 2)``,
    else ``7 + 8(h-1) / (1 + sqrt(2h))`` / ``7 + 4(k-2) / (1 + sqrt(k))``.
    """
    citation = "triangle-free: 7 - 8 chi / n at the least order"
    if not facts.triangle_free:
        return _inapplicable("triangle_free", citation, facts, "graph has a triangle")
    if 4 * facts.m > facts.n * facts.n:
        raise InconsistentFacts("Triangle-free facts with m=%d > n^2/4 for n=%d." % (facts.m, facts.n))
    n = facts.n
    branches = []
    h, k = facts.h, facts.k
    if h is not None:
        if h == 0:
            branches.append((6, "h=0"))
        elif n > 8 * (2 * h - 2):
            branches.append((7, "h>=1, n>8(2h-2)"))
        else:
            _require_vertices(facts, Surface(True, h), triangle_free=True)
            branches.append((numeric.floor_real_bound("triangle_free_orientable", h), "h>=2, n<=8(2h-2)"))
    if k is not None:
        if k == 1:
            branches.append((6, "k=1"))
        elif n > 8 * (k - 2):
            branches.append((7, "k>=2, n>8(k-2)"))
        else:
            _require_vertices(facts, Surface(False, k), triangle_free=True)
            branches.append((numeric.floor_real_bound("triangle_free_nonorientable", k), "k>=3, n<=8(k-2)"))
    return _best_branch("triangle_free", citation, facts, branches,
                        ("n", "m", "orientable_genus", "nonorientable_genus"), "no genus known")


def bound_sqrt_degree(facts):
    """``b <= min(D + floor((3 + sqrt(1+48h)) / 2), D + floor((3 + sqrt(1+24k)) / 2))`` for ``h, k >= 1``."""
    d = facts.max_degree
    branches = []
    if facts.h is not None and facts.h >= 1:
        branches.append((d + numeric.floor_sqrt_expr(3, 1 + 48 * facts.h, 2), "h>=1"))
    if facts.k is not None and facts.k >= 1:
        branches.append((d + numeric.floor_sqrt_expr(3, 1 + 24 * facts.k, 2), "k>=1"))
    return _best_branch("sqrt_degree", "D + floor((3 + sqrt(1+48h))/2), D + floor((3 + sqrt(1+24k))/2)",
                        facts, branches, ("max_degree", "orientable_genus", "nonorientable_genus"),
                        "needs h>=1 or k>=1")


def bound_orientable_degree(facts):
    """``D + ceil(h^0.7) + 2`` for ``h <= 5``, ``+ 3`` for ``h >= 6``."""
    branch = None
    h = facts.h
    if h is not None:
        lift = 2 if h <= 5 else 3
        branch = (facts.max_degree + numeric.ceil_power(h, 7, 10) + lift, "h<=5" if h <= 5 else "h>=6")
    return _best_branch("orientable_degree", "D + ceil(h^0.7) + 2 (h<=5) / + 3 (h>=6)", facts, [branch],
                        ("max_degree", "orientable_genus"), "orientable genus unknown")


def bound_orientable_degree_refined(facts):
    """
    For ``h >= 1``: ``D + ceil(ln^2 h) + 3`` if ``n >= h``,
    ``D + ceil(ln h) + 3`` if ``n >= h^1.9``, ``D + 4`` if ``n >= h^2.5``.
    """
    h, n, d = facts.h, facts.n, facts.max_degree
    branches = []
    if h is not None and h >= 1:
        if n >= h:
            branches.append((d + numeric.ceil_log(h, 2) + 3, "n>=h"))
        if numeric.power_at_least(n, h, 19, 10):
            branches.append((d + numeric.ceil_log(h) + 3, "n>=h^1.9"))
        if numeric.power_at_least(n, h, 5, 2):
            branches.append((d + 4, "n>=h^2.5"))
    missing = "needs h>=1" if h is None or h < 1 else "n too small for every branch"
    return _best_branch("orientable_degree_refined", "D + ceil(ln^2 h)+3 / ceil(ln h)+3 / 4", facts, branches,
                        ("n", "max_degree", "orientable_genus"), missing)


def bound_nonorientable_degree(facts):
    """``D + ceil(k^0.6) + 1`` for ``k <= 5``, ``+ 2`` for ``k >= 6``."""
    branch = None
    k = facts.k
    if k is not None and k >= 1:
        lift = 1 if k <= 5 else 2
        branch = (facts.max_degree + numeric.ceil_power(k, 3, 5) + lift, "k<=5" if k <= 5 else "k>=6")
    return _best_branch("nonorientable_degree", "D + ceil(k^0.6) + 1 (k<=5) / + 2 (k>=6)", facts, [branch],
                        ("max_degree", "nonorientable_genus"), "non-orientable genus unknown")


def bound_nonorientable_degree_refined(facts):
    """
    For ``k >= 1``: ``D + ceil(ln^2 k) + 2`` if ``n >= k/6``,
    ``D + ceil(ln k) + 2`` if ``n >= k^1.6``, ``D + 3`` if ``n > k^2``.
    For ``k = 1`` the first branch is ``D + 2``.
    """
    k, n, d = facts.k, facts.n, facts.max_degree
    branches = []
    if k is not None and k >= 1:
        if 6 * n >= k:
            branches.append((d + numeric.ceil_log(k, 2) + 2, "n>=k/6"))
        if numeric.power_at_least(n, k, 8, 5):
            branches.append((d + numeric.ceil_log(k) + 2, "n>=k^1.6"))
        if n > k * k:
            branches.append((d + 3, "n>k^2"))
    missing = "needs k>=1" if k is None else "n too small for every branch"
    return _best_branch("nonorientable_degree_refined", "D + ceil(ln^2 k)+2 / ceil(ln k)+2 / 3", facts, branches,
                        ("n", "max_degree", "nonorientable_genus"), missing)


def bound_small_surfaces(facts):
    """Projective plane ``min(10, D + 2)``; torus and Klein bottle ``min(11, D + 3)``."""
    d = facts.max_degree
    branches = []
    if facts.k == 1:
        branches.append((min(10, d + 2), "k=1"))
    if facts.h == 1:
        branches.append((min(11, d + 3), "h=1"))
    if facts.k == 2:
        branches.append((min(11, d + 3), "k=2"))
    return _best_branch("small_surfaces", "min(10, D+2) on N_1; min(11, D+3) on S_1, N_2", facts, branches,
                        ("max_degree", "orientable_genus", "nonorientable_genus"), "needs h=1, k=1 or k=2")


def bound_euler_hartnell_rall(facts):
    """
    ``b <= floor(11 - 12 chi / n)``, and ``floor(7 - 8 chi / n)`` for
    triangle-free graphs, for ``n >= 3`` on every known surface.
    """
    branches = []
    if facts.n >= 3:
        for surface in facts.surfaces():
            chi = surface.euler_characteristic
            branches.append(((11 * facts.n - 12 * chi) // facts.n, "%s, 11 - 12chi/n" % (surface,)))
            if facts.triangle_free:
                branches.append(((7 * facts.n - 8 * chi) // facts.n, "%s, 7 - 8chi/n" % (surface,)))
    missing = "needs n>=3" if facts.n < 3 else "no genus known"
    return _best_branch("euler_hartnell_rall", "floor(11 - 12 chi/n), triangle-free floor(7 - 8 chi/n)",
                        facts, branches, ("n", "triangle_free", "orientable_genus", "nonorientable_genus"),
                        missing)


def bound_edge_local(facts):
    """``min over edges uv of d(u) + d(v) - 1 - d_uv``."""
    branch = (facts.edge_local, "min over edges") if facts.edge_local is not None else None
    return _best_branch("edge_local", "min d(u)+d(v)-1-d_uv", facts, [branch], ("edge_local",),
                        "edge-local value unknown")


def bound_degree_sum(facts):
    branch = (facts.max_degree + facts.min_degree - 1, "m>=1") if facts.m >= 1 else None
    return _best_branch("degree_sum", "D + d - 1", facts, [branch], ("max_degree", "min_degree"),
                        "needs an edge")


def bound_nonorientable_threshold(facts):
    """``b <= D + k - 5`` for ``k >= 13``."""
    branch = None
    if facts.k is not None and facts.k >= 13:
        branch = (facts.max_degree + facts.k - 5, "k>=13")
    return _best_branch("nonorientable_threshold", "D + k - 5", facts, [branch],
                        ("max_degree", "nonorientable_genus"), "needs k>=13")


ALL_BOUNDS = (bound_kang_yuan, bound_genus_additive, bound_constant_general, bound_triangle_free,
              bound_sqrt_degree, bound_orientable_degree, bound_orientable_degree_refined,
              bound_nonorientable_degree, bound_nonorientable_degree_refined, bound_small_surfaces,
              bound_euler_hartnell_rall, bound_edge_local, bound_degree_sum, bound_nonorientable_threshold)


def best_bound(facts, include_inapplicable=False):
    """
    All applicable certificates sorted ascending by value, ties by name.

    :raises NoApplicableBound: if none applies
    :rtype: list of BoundCertificate
    """
    certificates = [bound(facts) for bound in ALL_BOUNDS]
    applicable = sorted((c for c in certificates if c.applicable), key=lambda c: (c.value, c.name))
    if not applicable:
        raise NoApplicableBound("No bound applies to %r." % (facts,))
    if include_inapplicable:
        return applicable + [c for c in certificates if not c.applicable]
    return applicable


# Constant table ---------------------------------------------------------------

TableEntry = namedtuple("TableEntry", ["kind", "genus", "constant", "expected"])


def regenerate_table1(check=True):
    """
    Recompute the constants for ``h = 2..15`` and ``k = 3..16`` by flooring the
    least-order constant bounds.

    :param check: Raise :class:`TableMismatch` if any value differs from the published one
    :rtype: list of TableEntry
    """
    rows = []
    for h, expected in sorted(TABLE1_ORIENTABLE.items()):
        rows.append(TableEntry("orientable", h, numeric.floor_real_bound("constant_orientable", h), expected))
    for k, expected in sorted(TABLE1_NONORIENTABLE.items()):
        rows.append(TableEntry("nonorientable", k, numeric.floor_real_bound("constant_nonorientable", k), expected))
    mismatches = [row for row in rows if row.constant != row.expected]
    for row in mismatches:
        logger.error("Constant for %s genus %d is %d, published %d.", row.kind, row.genus, row.constant, row.expected)
    if check and mismatches:
        raise TableMismatch("%d of %d constants differ from the published table." % (len(mismatches), len(rows)))
    return rows


def current_best_constant(orientable, genus):
    """
    Best known constant ``c`` with ``b(G) <= c`` for every connected graph of
    the given genus.
    """
    if orientable:
        if genus == 0:
            return 8
        if genus == 1:
            return 11
        value = numeric.floor_real_bound("constant_orientable", genus)
        return min(value, TABLE1_ORIENTABLE.get(genus, value))
    if genus == 1:
        return 10
    if genus == 2:
        return 11
    value = numeric.floor_real_bound("constant_nonorientable", genus)
    return min(value, TABLE1_NONORIENTABLE.get(genus, value))


# Surface facts --------------------------------------------------------------

def sachs_min_degree_cap(surface):
    """
    Largest possible minimum degree on ``surface``: 5 on the sphere and the
    projective plane, ``floor((5 + sqrt(1+48h)) / 2)`` and
    ``floor((5 + sqrt(1+24k)) / 2)`` otherwise.
    """
    g = surface.genus
    if surface.orientable:
        return 5 if g == 0 else numeric.floor_sqrt_expr(5, 1 + 48 * g, 2)
    return 5 if g == 1 else numeric.floor_sqrt_expr(5, 1 + 24 * g, 2)


def _integer_window(center2, radicand, floor):
    """Integers ``x >= floor`` with ``(2x - center2)^2 <= radicand``, as ``(lo, hi)``."""
    r = int(numeric.floor_sqrt_expr(0, radicand, 1))
    lo = -((r - center2) // 2)
    hi = (center2 + r) // 2
    return (max(lo, floor), hi)


def improvement_window(a, b):
    """
    Genera where ``D + h - a`` (resp. ``D + k - b``) is at least as good as the
    square-root degree bound:
    ``h in [a + 15/2 - sqrt(48a+217)/2, a + 15/2 + sqrt(48a+217)/2]`` and
    ``k in [b + 9/2 - sqrt(24b+73)/2, b + 9/2 + sqrt(24b+73)/2]``,
    intersected with the integers ``>= 1``.

    :rtype: ImprovementWindow of two ``(lo, hi)`` integer pairs
    """
    if a < -1 or b < 0:
        raise ValueError("improvement_window needs a >= -1 and b >= 0, got a=%d, b=%d." % (a, b))
    return ImprovementWindow(_integer_window(2 * a + 15, 48 * a + 217, 1),
                             _integer_window(2 * b + 9, 24 * b + 73, 1))


# Conjectures ----------------------------------------------------------------

def check_teschner(facts, exact_b):
    """``2b <= 3D`` in integers; margin ``3D - 2b``."""
    margin = 3 * facts.max_degree - 2 * exact_b
    return ConjectureVerdict("Teschner", margin >= 0, margin)


def check_dunbar_planar(facts, exact_b):
    """``b <= D + 1`` for planar graphs; None when the graph is not known to be planar."""
    if facts.h != 0:
        return None
    margin = facts.max_degree + 1 - exact_b
    return ConjectureVerdict("DunbarPlanar", margin >= 0, margin)


def check_genus_constants(facts, exact_b):
    """``b`` against the current best constant of each known genus; None without a genus."""
    constants = [current_best_constant(s.orientable, s.genus) for s in facts.surfaces()]
    if not constants:
        return None
    margin = min(constants) - exact_b
    return ConjectureVerdict("GenusConstants", margin >= 0, margin)


# Facts ----------------------------------------------------------------------

def validate_facts(facts):
    """
    Necessary conditions on declared facts: degree ranges, the triangle-free
    edge count ``m <= n^2/4``, Euler's ``m <= 3(n - chi)`` (``2(n - chi)``
    without triangles), the least order and the minimum degree cap for
    every known genus.

    :raises InconsistentFacts: on the first violated condition
    """
    n, m = facts.n, facts.m
    if n < 1 or m < 0 or m > n * (n - 1) // 2:
        raise InconsistentFacts("No simple graph has n=%d, m=%d." % (n, m))
    if facts.min_degree > facts.max_degree:
        raise InconsistentFacts("Minimum degree %d exceeds maximum degree %d." % (facts.min_degree, facts.max_degree))
    if facts.connected and n >= 2 and facts.min_degree < 1:
        raise InconsistentFacts("A connected graph on %d vertices has no isolated vertex." % n)
    if facts.triangle_free and 4 * m > n * n:
        raise InconsistentFacts("Triangle-free facts with m=%d > n^2/4 for n=%d." % (m, n))
    if facts.k is not None and facts.k < 1:
        raise InconsistentFacts("Non-orientable genus must be at least 1, got %d." % facts.k)
    for surface in facts.surfaces():
        chi = surface.euler_characteristic
        if n >= 3:
            per = 2 if facts.triangle_free else 3
            if m > per * (n - chi):
                raise InconsistentFacts("m=%d exceeds %d(n - chi)=%d on %s." % (m, per, per * (n - chi), surface))
        if facts.connected:
            _require_vertices(facts, surface, facts.triangle_free)
        cap = sachs_min_degree_cap(surface)
        if facts.min_degree > cap:
            raise InconsistentFacts("Minimum degree %d exceeds %d on %s." % (facts.min_degree, cap, surface))
    return facts


def facts_from_graph(g, h=None, k=None, provenance="computed"):
    """
    :param h: Orientable genus, if known
    :param k: Non-orientable genus, if known
    :param provenance: ``"computed"`` or ``"declared"``
    :rtype: GraphFacts
    """
    if g.n == 0:
        raise ValueError("Facts of the empty graph are undefined.")
    return GraphFacts(g.n, g.m, g.max_degree(), g.min_degree(), is_connected(g), is_triangle_free(g),
                      h, k, provenance, edge_local_bound(g) if g.m else None)
