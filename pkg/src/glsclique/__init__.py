"""Clique counting and the maximum number of t-cliques in graphs of bounded degree."""

from .bound import BoundParams, binomial, convexity_step_check, decompose_n, gls_bound
from .cliques import contains_s_clique, count_cliques, count_T, enumerate_cliques
from .decompose import Certificate, CertificateStep, decompose, find_witness, verify_certificate
from .generators import all_labeled_graphs, extremizer, named, random_bounded
from .graph import Graph, format_graph, parse_graph, read_graph
from .lemma2 import HClassification, TupleCensus, census, check_identities, classify_H, sum_over_H_check

__all__ = [
    "BoundParams",
    "Certificate",
    "CertificateStep",
    "Graph",
    "HClassification",
    "TupleCensus",
    "all_labeled_graphs",
    "binomial",
    "census",
    "check_identities",
    "classify_H",
    "contains_s_clique",
    "convexity_step_check",
    "count_T",
    "count_cliques",
    "decompose",
    "decompose_n",
    "enumerate_cliques",
    "extremizer",
    "find_witness",
    "format_graph",
    "gls_bound",
    "named",
    "parse_graph",
    "random_bounded",
    "read_graph",
    "sum_over_H_check",
    "verify_certificate",
]
