"""Python access to the tricolor library.

Graphs, holed instances and audit reports are returned as plain dicts
(the same JSON documents the command-line tool writes).
"""

import json

from . import _tricolor
from ._tricolor import (
    TricolorError,
    canonicalize,
    color3,
    cps,
    decide3,
    e_collapse,
    enumerate_codes,
    fan_collapse,
    in_t,
    is_symmetric,
)

__all__ = [
    "TricolorError", "canonicalize", "color3", "count_colorings", "cps", "decide3",
    "decide3_holes", "e_collapse", "enumerate_codes", "fan_collapse", "find_coloring",
    "gen_holed", "in_t", "is_symmetric", "realize", "reverify", "run_campaign",
]


def realize(runs):
    return json.loads(_tricolor.realize_json(list(runs)))


def find_coloring(graph, k=3):
    """Colours 1..k per vertex, or None."""
    return _tricolor.find_coloring_json(json.dumps(graph), k)


def count_colorings(graph, k=3):
    return _tricolor.count_colorings_json(json.dumps(graph), k)


def gen_holed(seed, holes=2, max_vertices=40, lattice=False):
    return json.loads(_tricolor.gen_holed_json(seed, holes, max_vertices, lattice))


def decide3_holes(instance):
    return json.loads(_tricolor.decide3_holes_json(json.dumps(instance)))


def run_campaign(claim, seed=1, max_triangles=12, max_length=14, instances=200, holes=3):
    return json.loads(_tricolor.run_campaign_json(claim, seed, max_triangles, max_length, instances, holes))


def reverify(report):
    """Returns (checked, confirmed) counts over the report's counterexamples."""
    return _tricolor.reverify_json(json.dumps(report))
