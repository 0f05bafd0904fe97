"""
Verification pipeline: for every corpus graph compute its facts, genus,
domination and bondage numbers, evaluate every bound and conjecture, and
check that no proven bound falls below the exact bondage number.
"""
import logging
import time
from concurrent.futures import ProcessPoolExecutor

import numpy as np
import pandas as pd
from tqdm import tqdm

from .bondage import bondage_number, hartnell_rall_edge_floor
from .bounds import (NoApplicableBound, best_bound, check_dunbar_planar, check_genus_constants,
                     check_teschner, facts_from_graph, regenerate_table1, validate_facts)
from .domination import domination_number
from .embedding import (GenusBudgetExhausted, SearchBudget, edge_curvatures, min_orientable_genus,
                        random_rotation_system, trace_faces)
from .graph import is_connected, parse_graph6, write_graph6

__all__ = ["VerificationRecord", "Verifier", "SoundnessViolation", "REPORT_COLUMNS",
           "verify_corpus", "search_teschner_violations", "teschner_violations", "teschner_equalities",
           "records_to_frame", "emit_report", "export_table1", "curvature_sweep"]

logger = logging.getLogger(__name__)

REPORT_COLUMNS = ["graph6", "n", "m", "max_degree", "min_degree", "connected", "triangle_free",
                  "h", "k", "gamma", "b", "best_bound_name", "best_bound_value", "teschner_margin"]
_INTEGER_COLUMNS = ["h", "k", "gamma", "b", "best_bound_value", "teschner_margin"]

STAGES = ("facts", "genus", "domination", "bondage", "bounds", "verdicts")


class SoundnessViolation(RuntimeError):
    """A proven bound or identity failed on a concrete graph."""

    def __init__(self, message, graph6=None):
        RuntimeError.__init__(self, message, graph6)

    @property
    def graph6(self):
        return self.args[1]

    def __str__(self):
        return self.args[0]


class VerificationRecord(object):
    """
    Everything computed for one corpus graph.

    Public attributes::

        - graph6 (str): Identifier of the graph
        - facts (GraphFacts): Invariants and genera, None if the facts stage failed
        - gamma (int): Domination number
        - b (int): Bondage number, None for edgeless graphs
        - certificates (list): Applicable :class:`BoundCertificate` objects, tightest first
        - verdicts (list): :class:`ConjectureVerdict` objects
        - hartnell_rall (bool): Whether ``4m >= n(b + 1)`` holds
        - timings (dict): Seconds spent per stage
        - failed_stage (str): Stage that raised, None on success
        - error (str): Message of that failure
    """

    def __init__(self, graph6):
        self.graph6 = graph6
        self.facts = None
        self.gamma = None
        self.b = None
        self.certificates = []
        self.verdicts = []
        self.hartnell_rall = None
        self.timings = {}
        self.failed_stage = None
        self.error = None

    def __repr__(self):
        return "VerificationRecord(%r, gamma=%r, b=%r)" % (self.graph6, self.gamma, self.b)

    def verdict(self, conjecture):
        for verdict in self.verdicts:
            if verdict.conjecture == conjecture:
                return verdict
        return None

    @property
    def best_certificate(self):
        return self.certificates[0] if self.certificates else None

    def row(self):
        facts = self.facts
        best = self.best_certificate
        teschner = self.verdict("Teschner")
        return {
            "graph6": self.graph6,
            "n": facts.n if facts else None,
            "m": facts.m if facts else None,
            "max_degree": facts.max_degree if facts else None,
            "min_degree": facts.min_degree if facts else None,
            "connected": facts.connected if facts else None,
            "triangle_free": facts.triangle_free if facts else None,
            "h": facts.h if facts else None,
            "k": facts.k if facts else None,
            "gamma": self.gamma,
            "b": self.b,
            "best_bound_name": best.name if best else None,
            "best_bound_value": best.value if best else None,
            "teschner_margin": teschner.margin if teschner else None,
        }


class Verifier(object):
    """
    Runs the verification stages on single graphs or whole corpora.

    Keyword arguments::

        - genus_mode (str): ``"search"``, ``"declared"`` or ``"skip"`` (default ``"search"``)
        - node_limit (int): Genus search node budget per graph (default 10**8)
        - time_limit (float): Genus search time budget per graph in seconds (default 10.0)
        - workers (int): Worker processes, 1 runs in-process (default 1)
        - strict (bool): Raise :class:`SoundnessViolation` on the first unsound bound (default True)
        - progress (bool): Show a progress bar (default False)
    """

    def __init__(self, **args):
        self.genus_mode = "search"
        self.node_limit = 10 ** 8
        self.time_limit = 10.0
        self.workers = 1
        self.strict = True
        self.progress = False
        for key, value in args.items():
            if not hasattr(self, key):
                raise ValueError("Invalid argument " + key + " to Verifier!")
            logger.info("Using the value %s=%s.", key, value)
            setattr(self, key, value)
        if self.genus_mode not in ("search", "declared", "skip"):
            raise ValueError("Unknown genus mode %r." % self.genus_mode)
        self._budget = SearchBudget(node_limit=self.node_limit, time_limit=self.time_limit)

    def __enter__(self):
        return self

    def __exit__(self, t1, t2, t3):
        return False

    def config(self):
        return dict(genus_mode=self.genus_mode, node_limit=self.node_limit, time_limit=self.time_limit,
                    strict=self.strict)

    def _genus(self, g, declared_h, declared_k):
        if self.genus_mode == "skip":
            return None, None, "computed"
        if self.genus_mode == "declared":
            return declared_h, declared_k, "declared"
        if not is_connected(g):
            return None, declared_k, "computed"
        try:
            h = min_orientable_genus(g, self._budget).genus
        except GenusBudgetExhausted as e:
            logger.warning("Genus of %s unknown (>= %s): %s", write_graph6(g), e.lower_bound, e)
            h = None
        return h, declared_k, "computed"

    def verify(self, g, declared_h=None, declared_k=None):
        """
        :rtype: VerificationRecord
        :raises SoundnessViolation: if ``strict`` and a proven bound fails
        """
        record = VerificationRecord(write_graph6(g))
        stage = None
        violations = []
        try:
            stage = "facts"
            started = time.perf_counter()
            facts = facts_from_graph(g)
            record.facts = facts
            record.timings[stage] = time.perf_counter() - started

            stage = "genus"
            started = time.perf_counter()
            h, k, provenance = self._genus(g, declared_h, declared_k)
            facts = validate_facts(facts._replace(orientable_genus=h, nonorientable_genus=k,
                                                  genus_provenance=provenance))
            record.facts = facts
            record.timings[stage] = time.perf_counter() - started

            stage = "domination"
            started = time.perf_counter()
            record.gamma = domination_number(g).gamma
            record.timings[stage] = time.perf_counter() - started

            stage = "bondage"
            started = time.perf_counter()
            if g.m:
                record.b = bondage_number(g).b
            record.timings[stage] = time.perf_counter() - started

            stage = "bounds"
            started = time.perf_counter()
            try:
                record.certificates = best_bound(facts)
            except NoApplicableBound:
                record.certificates = []
            if record.b is not None:
                violations += ["%s=%d < b=%d" % (c.name, c.value, record.b)
                               for c in record.certificates if c.value < record.b]
                if facts.connected:
                    record.hartnell_rall = hartnell_rall_edge_floor(g, record.b)
                    if not record.hartnell_rall:
                        violations.append("4m < n(b+1)")
            record.timings[stage] = time.perf_counter() - started

            stage = "verdicts"
            started = time.perf_counter()
            if record.b is not None:
                verdicts = [check_teschner(facts, record.b), check_dunbar_planar(facts, record.b),
                            check_genus_constants(facts, record.b)]
                record.verdicts = [v for v in verdicts if v is not None]
            record.timings[stage] = time.perf_counter() - started
        except Exception as e:
            record.failed_stage = stage
            record.error = "%s: %s" % (type(e).__name__, e)
            logger.error("Stage %s failed on %s: %s", stage, record.graph6, record.error)

        if violations:
            message = "Unsound bounds on %s: %s" % (record.graph6, "; ".join(violations))
            logger.error(message)
            if self.strict:
                raise SoundnessViolation(message, record.graph6)
        return record

    def run(self, entries):
        """
        Verify corpus entries in order, in a process pool when ``workers > 1``.

        :rtype: list of VerificationRecord
        """
        tasks = [(self.config(), write_graph6(e.graph), e.h, e.k) for e in entries]
        if self.workers > 1:
            with ProcessPoolExecutor(max_workers=self.workers) as executor:
                records = list(tqdm(executor.map(_verify_task, tasks, chunksize=8), total=len(tasks),
                                    desc="verify", disable=not self.progress))
        else:
            records = [_verify_task(task) for task in tqdm(tasks, desc="verify", disable=not self.progress)]
        logger.info("Finished verifying %d graphs.", len(records))
        return records


_worker_verifiers = {}


def _verify_task(task):
    config, code, h, k = task
    key = tuple(sorted(config.items()))
    if key not in _worker_verifiers:
        _worker_verifiers[key] = Verifier(**config)
    return _worker_verifiers[key].verify(parse_graph6(code), h, k)


def verify_corpus(spec, verifier=None):
    """
    Verify every graph of a :class:`CorpusSpec`.

    :rtype: list of VerificationRecord, in corpus order
    """
    if verifier is None:
        verifier = Verifier(genus_mode=spec.genus_mode)
    return verifier.run(spec.entries())


def teschner_violations(records):
    """graph6 strings of records with ``2b > 3D``."""
    return [r.graph6 for r in records if r.verdict("Teschner") is not None and not r.verdict("Teschner").holds]


def teschner_equalities(records):
    """graph6 strings of records with ``2b == 3D``."""
    return [r.graph6 for r in records if r.verdict("Teschner") is not None and r.verdict("Teschner").margin == 0]


def search_teschner_violations(spec, verifier=None):
    """
    :return: graph6 strings of every corpus graph violating ``b <= 3D/2``
    :rtype: list of str
    """
    records = verify_corpus(spec, verifier)
    found = teschner_violations(records)
    failed = [r.graph6 for r in records if r.failed_stage]
    if failed:
        logger.warning("Teschner search has no verdict for %d graphs: %s", len(failed), ", ".join(failed))
    logger.info("Teschner search over %d graphs: %d violations, %d equality cases.",
                len(records), len(found), len(teschner_equalities(records)))
    return found


def records_to_frame(records):
    frame = pd.DataFrame([r.row() for r in records], columns=REPORT_COLUMNS)
    for column in _INTEGER_COLUMNS + ["n", "m", "max_degree", "min_degree"]:
        frame[column] = frame[column].astype("Int64")
    return frame


def emit_report(records, path, fmt="csv"):
    """
    Write the records as CSV (header always present) or JSON lines (one
    object per record, nothing for an empty corpus).

    :param path: File path or writable buffer
    :param fmt: ``"csv"`` or ``"jsonl"``
    """
    frame = records_to_frame(records)
    if fmt == "csv":
        frame.to_csv(path, index=False)
    elif fmt == "jsonl":
        if frame.empty:
            text = ""
        else:
            text = frame.to_json(orient="records", lines=True)
            if not text.endswith("\n"):
                text += "\n"
        if hasattr(path, "write"):
            path.write(text)
        else:
            with open(path, "w") as f:
                f.write(text)
    else:
        raise ValueError("Unknown report format %r." % fmt)
    logger.info("Wrote %d records as %s.", len(frame), fmt)


def export_table1(path, check=True):
    """Write the regenerated genus constants as CSV with columns kind, genus, constant, expected."""
    rows = regenerate_table1(check=check)
    frame = pd.DataFrame([row._asdict() for row in rows], columns=["kind", "genus", "constant", "expected"])
    frame.to_csv(path, index=False)
    return frame


def curvature_sweep(pool, count=1000, seed=0, signed=True):
    """
    Trace ``count`` random rotation systems over the connected graphs in
    ``pool`` (cycled) and check the exact identities
    ``sum w = n``, ``sum f = faces`` and ``sum Q = 0``.

    :raises SoundnessViolation: on the first failed identity
    :rtype: pandas.DataFrame with one row per traced embedding
    """
    pool = [g for g in pool if g.m >= 1 and is_connected(g)]
    if not pool:
        raise ValueError("Curvature sweep needs connected graphs with edges.")
    rng = np.random.default_rng(seed)
    rows = []
    for i in range(count):
        g = pool[i % len(pool)]
        embedding = trace_faces(g, random_rotation_system(g, rng, signed))
        profile = edge_curvatures(embedding, embedding.surface)
        code = write_graph6(g)
        if profile.total_w != g.n or profile.total_f != embedding.f or profile.total_q != 0:
            raise SoundnessViolation("Curvature identities fail on %s: %r" % (code, profile), code)
        rows.append({"graph6": code, "faces": embedding.f, "euler_characteristic": embedding.euler_characteristic,
                     "orientable": embedding.orientable, "genus": embedding.genus})
    return pd.DataFrame(rows, columns=["graph6", "faces", "euler_characteristic", "orientable", "genus"])
