"""Detection of abelian runs.

A fragment of a word has abelian period P when it factors as
head . core_1 ... core_m . tail with every core an anagram of the same
letter-count vector P and head/tail strictly contained in P. Runs are the
fragments maximal under one-letter extension. The heavy lifting happens in
the C++ extension; see the project README for the command line tool.
"""

from abelruns._abelruns import (
    NormScanner,
    Run,
    Scanner,
    abelian_runs,
    abelian_runs_norm,
    abelian_squares,
    all_abelian_runs,
    anchored_runs,
    anchored_runs_norm,
    oracle_abelian_runs,
    oracle_all_runs,
    parikh,
)

__all__ = [
    "NormScanner",
    "Run",
    "Scanner",
    "abelian_runs",
    "abelian_runs_norm",
    "abelian_squares",
    "all_abelian_runs",
    "anchored_runs",
    "anchored_runs_norm",
    "oracle_abelian_runs",
    "oracle_all_runs",
    "parikh",
]

__version__ = "0.1.0"
