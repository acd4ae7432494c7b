"""Kumjian-Pask algebras of higher-rank graphs."""

import json

from ._core import (
    Graph,
    KPError,
    check_mt3,
    classify_json,
    classify_text,
    desourcify,
    evaluate,
    fixture,
    is_aperiodic,
    load_kg,
    maximal_tails,
    omega,
    parse_kg,
    prime_ideals,
    primitive_ideals,
    primitivity_chain,
    quotient,
    sat_her,
)


def classify(graph, ring="q", bound=0):
    """Classification report as a dict with the same keys as `kp classify --format json`."""
    return json.loads(classify_json(graph, ring, bound))


__all__ = [
    "Graph",
    "KPError",
    "check_mt3",
    "classify",
    "classify_json",
    "classify_text",
    "desourcify",
    "evaluate",
    "fixture",
    "is_aperiodic",
    "load_kg",
    "maximal_tails",
    "omega",
    "parse_kg",
    "prime_ideals",
    "primitive_ideals",
    "primitivity_chain",
    "quotient",
    "sat_her",
]
