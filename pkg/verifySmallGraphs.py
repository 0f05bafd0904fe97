#!/usr/bin/python
# -*- coding: utf-8 -*-
import logging
import os

import pandas as pd
from bondtools import (Verifier, curvature_sweep, enumerate_connected_graphs, export_table1, parse_corpus_spec,
                       records_to_frame, teschner_equalities, teschner_violations, verify_corpus)

logging.basicConfig(level=logging.INFO, format="%(levelname)s %(name)s: %(message)s")

maxOrder = 6  # Verify every connected graph on 1..maxOrder vertices
workers = 4  # Worker processes for the verification
timeLimit = 60.0  # Genus search time limit per graph in seconds
curvatureSamples = 2000  # Random signed rotation systems traced for the curvature identities
fileprefix = 'connected%d' % maxOrder
outputFolder = 'DATA/' + fileprefix


def main():
    # Create the data folder
    print("Creating " + outputFolder)
    os.makedirs(outputFolder, exist_ok=True)

    # Regenerate the genus constants, fails if any differs from the published table
    table = export_table1(outputFolder + '/genus_constants.csv', check=True)
    print(table.to_string(index=False))

    # Verify the corpus
    spec = parse_corpus_spec('connected:%d' % maxOrder, progress=True)
    verifier = Verifier(workers=workers, time_limit=timeLimit, progress=True)
    records = verify_corpus(spec, verifier)

    # Various output options

    # Pickling the records
    pd.to_pickle(records, outputFolder + '/' + fileprefix + '_records.pckl')

    # Saving the report
    frame = records_to_frame(records)
    print("Saving to file " + outputFolder + '/' + fileprefix + '.csv')
    frame.to_csv(outputFolder + '/' + fileprefix + '.csv', index=False)

    # Tightest bound per order against the exact bondage numbers
    frame["gap"] = frame["best_bound_value"] - frame["b"]
    summary = frame.groupby("n").agg(graphs=("graph6", "size"), max_b=("b", "max"), min_gap=("gap", "min"))
    print(summary.to_string())

    print("Failed stages: %d" % sum(1 for r in records if r.failed_stage))
    print("Teschner violations: %s" % (teschner_violations(records) or "none"))
    print("Teschner equality cases: %s" % ", ".join(teschner_equalities(records)))

    # Curvature identities over random signed embeddings of the largest order
    pool = enumerate_connected_graphs(maxOrder)
    sweep = curvature_sweep(pool, count=curvatureSamples, seed=0, signed=True)
    sweep.to_csv(outputFolder + '/' + fileprefix + '_curvature.csv', index=False)
    print(sweep.groupby(["orientable", "genus"]).size().to_string())


if __name__ == '__main__':
    main()
