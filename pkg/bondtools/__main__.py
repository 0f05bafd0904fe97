import argparse
import logging
import os
import sys

from .bondage import UndefinedBondage, bondage_number
from .bounds import InconsistentFacts, TableMismatch, best_bound, facts_from_graph, regenerate_table1, validate_facts
from .corpus import parse_corpus_spec
from .domination import domination_number
from .embedding import (GenusBudgetExhausted, SearchBudget, find_embedding, max_orientable_genus,
                        min_orientable_genus, write_embedding)
from .graph import is_connected, is_triangle_free, parse_graph6, read_graph_file, write_graph6
from .harness import (SoundnessViolation, Verifier, emit_report, teschner_equalities, teschner_violations,
                      verify_corpus)

logger = logging.getLogger("bondtools")

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_UNSOUND = 2
EXIT_CONJECTURE = 3


def _graphs(text):
    if os.path.isfile(text):
        return read_graph_file(text)
    return [parse_graph6(text)]


def _budget(args):
    return SearchBudget(node_limit=args.budget, time_limit=args.time_limit, workers=args.workers)


def cmd_invariants(args):
    for g in _graphs(args.graph):
        gamma = domination_number(g).gamma
        try:
            b = bondage_number(g, args.workers).b
        except UndefinedBondage:
            b = "undefined"
        print("%s n=%d m=%d max_degree=%d min_degree=%d gamma=%d b=%s connected=%s triangle_free=%s"
              % (write_graph6(g), g.n, g.m, g.max_degree(), g.min_degree(), gamma, b,
                 is_connected(g), is_triangle_free(g)))
    return EXIT_OK


def cmd_genus(args):
    g = parse_graph6(args.graph)
    code = EXIT_OK
    for label, search in (("h", min_orientable_genus), ("h_M", max_orientable_genus)):
        try:
            result = search(g, _budget(args))
        except GenusBudgetExhausted as e:
            print("%s unknown, budget exhausted (bound %s)" % (label, e.lower_bound))
            code = EXIT_ERROR
            continue
        print("%s = %d (%s, %d nodes)" % (label, result.genus, result.method, result.nodes))
        if result.witness is not None:
            sys.stdout.write(write_embedding(result.witness))
    return code


def cmd_bounds(args):
    g = parse_graph6(args.graph)
    h = args.h
    provenance = "declared" if h is not None or args.k is not None else "computed"
    if h is None and is_connected(g):
        try:
            h = min_orientable_genus(g, _budget(args)).genus
        except GenusBudgetExhausted:
            logger.warning("Orientable genus unknown, evaluating without it.")
    facts = validate_facts(facts_from_graph(g, h, args.k, provenance))
    for certificate in best_bound(facts, include_inapplicable=args.all):
        print(certificate)
    return EXIT_OK


def cmd_table1(args):
    rows = regenerate_table1(check=False)
    mismatches = 0
    for row in rows:
        flag = "" if row.constant == row.expected else "  MISMATCH (published %d)" % row.expected
        mismatches += bool(flag)
        print("%-14s %2d  %d%s" % (row.kind, row.genus, row.constant, flag))
    if args.check:
        print("%d mismatches" % mismatches)
        return EXIT_UNSOUND if mismatches else EXIT_OK
    return EXIT_OK


def _verifier(args):
    return Verifier(genus_mode=args.genus_mode, node_limit=args.budget, time_limit=args.time_limit,
                    workers=args.workers, progress=args.progress)


def cmd_verify(args):
    spec = parse_corpus_spec(args.corpus, genus_mode=args.genus_mode)
    records = verify_corpus(spec, _verifier(args))
    if args.out:
        emit_report(records, args.out, args.format)
    else:
        emit_report(records, sys.stdout, args.format)
    failed = [r for r in records if r.failed_stage]
    violations = teschner_violations(records)
    logger.info("%d graphs, %d failed stages, %d Teschner violations.", len(records), len(failed), len(violations))
    if violations:
        return EXIT_CONJECTURE
    return EXIT_ERROR if failed else EXIT_OK


def cmd_search_teschner(args):
    spec = parse_corpus_spec(args.corpus, genus_mode=args.genus_mode)
    records = verify_corpus(spec, _verifier(args))
    violations = teschner_violations(records)
    for code in violations:
        print("violation %s" % code)
    for code in teschner_equalities(records):
        print("equality %s" % code)
    failed = [r for r in records if r.failed_stage]
    for record in failed:
        logger.error("No verdict for %s, stage %s failed: %s", record.graph6, record.failed_stage, record.error)
    print("%d graphs searched, %d violations, %d failed" % (len(records), len(violations), len(failed)))
    if violations:
        return EXIT_CONJECTURE
    return EXIT_ERROR if failed else EXIT_OK


def cmd_embed(args):
    g = parse_graph6(args.graph)
    embedding = find_embedding(g, args.genus, _budget(args))
    if embedding is None:
        print("%s has no 2-cell embedding of orientable genus %d" % (args.graph, args.genus))
        return EXIT_ERROR
    sys.stdout.write(write_embedding(embedding))
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(prog="bondtools",
                                     description="Domination, bondage and genus computations with bound verification")
    parser.add_argument("-v", "--verbose", action="store_true", help="Debug logging")
    parser.add_argument("-q", "--quiet", action="store_true", help="Warnings and errors only")
    sub = parser.add_subparsers(dest="command")
    sub.required = True

    def search_options(p):
        p.add_argument("--budget", type=int, default=10 ** 8, help="Genus search node limit")
        p.add_argument("--time-limit", type=float, default=None, help="Genus search time limit in seconds")
        p.add_argument("--workers", type=int, default=1, help="Processes sharing the genus search")

    def corpus_options(p):
        p.add_argument("--corpus", required=True,
                       help="connected:N, connected:A-B, file:PATH, family:NAME:N or graph6 strings")
        p.add_argument("--genus-mode", choices=("search", "declared", "skip"), default="search")
        p.add_argument("--workers", type=int, default=1)
        p.add_argument("--progress", action="store_true")
        p.add_argument("--budget", type=int, default=10 ** 8, help="Genus search node limit per graph")
        p.add_argument("--time-limit", type=float, default=10.0, help="Genus search time limit per graph")

    p = sub.add_parser("invariants", help="n, m, degrees, gamma and b of a graph6 string or file")
    p.add_argument("graph")
    p.add_argument("--workers", type=int, default=1, help="Processes sharing a bondage deepening level")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("genus", help="Minimum and maximum orientable genus with witnesses")
    p.add_argument("graph")
    search_options(p)
    p.set_defaults(func=cmd_genus)

    p = sub.add_parser("bounds", help="All bound certificates, tightest first")
    p.add_argument("graph")
    p.add_argument("--h", type=int, default=None, help="Declared orientable genus")
    p.add_argument("--k", type=int, default=None, help="Declared non-orientable genus")
    p.add_argument("--all", action="store_true", help="Also list inapplicable bounds")
    search_options(p)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("table1", help="Regenerate the constant bounds for h=2..15 and k=3..16")
    p.add_argument("--check", action="store_true", help="Compare with the published constants")
    p.set_defaults(func=cmd_table1)

    p = sub.add_parser("verify", help="Run the verification pipeline over a corpus")
    corpus_options(p)
    p.add_argument("--out", default=None, help="Report file, stdout if omitted")
    p.add_argument("--format", choices=("csv", "jsonl"), default="csv")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search-teschner", help="Search a corpus for graphs with b > 3D/2")
    corpus_options(p)
    p.set_defaults(func=cmd_search_teschner)

    p = sub.add_parser("embed", help="Witness rotation system of a given orientable genus")
    p.add_argument("graph")
    p.add_argument("--genus", type=int, required=True)
    search_options(p)
    p.set_defaults(func=cmd_embed)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    level = logging.DEBUG if args.verbose else logging.WARNING if args.quiet else logging.INFO
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except SoundnessViolation as e:
        logger.error("Soundness violation on %s: %s", e.graph6, e)
        return EXIT_UNSOUND
    except TableMismatch as e:
        logger.error("%s", e)
        return EXIT_UNSOUND
    except (ValueError, OSError, InconsistentFacts, GenusBudgetExhausted) as e:
        logger.error("%s", e)
        return EXIT_ERROR


if __name__ == '__main__':
    sys.exit(main())
