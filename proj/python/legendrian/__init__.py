"""Legendrian cable links in the standard tight 3-sphere and in J^1(S^1)."""

import json

from . import _core
from ._core import Error, jet_max_tb, max_tb2, peaks, transverse_range, transverse_realizable

__all__ = [
    "Error",
    "ascii_plot",
    "classify_cable",
    "classify_jet",
    "construct",
    "front_invariants",
    "front_violations",
    "jet_max_tb",
    "jet_to_sphere",
    "max_tb2",
    "mountain_range",
    "normalize",
    "peaks",
    "realizable",
    "run_cli",
    "stabilize",
    "transverse_range",
    "transverse_realizable",
    "unknot_front",
    "verify_geometry",
]


def _doc(front):
    return front if isinstance(front, str) else json.dumps(front)


def front_invariants(front):
    return json.loads(_core.front_invariants(_doc(front)))


def front_violations(front):
    return _core.front_violations(_doc(front))


def stabilize(front, component, sign):
    return json.loads(_core.stabilize(_doc(front), component, sign))


def unknot_front(tb, rot):
    return json.loads(_core.unknot_front(tb, rot))


def construct(tuple_):
    return json.loads(_core.construct(tuple(tuple_)))


def normalize(tuple_):
    return json.loads(_core.normalize(tuple(tuple_)))


def realizable(tuple_):
    return json.loads(_core.realizable(tuple(tuple_)))


def mountain_range(p, q, m, rot1, floor=None):
    if floor is None:
        floor = max_tb2(p, q, m) - 4
    return json.loads(_core.mountain_range(p, q, m, rot1, floor))


def ascii_plot(p, q, m, rot1, floor=None):
    if floor is None:
        floor = max_tb2(p, q, m) - 4
    return _core.ascii_plot(p, q, m, rot1, floor)


def classify_cable(a, b):
    return json.loads(_core.classify_cable(tuple(a), tuple(b)))


def jet_to_sphere(knot):
    return json.loads(_core.jet_to_sphere(tuple(knot)))


def classify_jet(a, b):
    return json.loads(_core.classify_jet(tuple(a), tuple(b)))


def verify_geometry(samples=10000, seed=7, segments=512):
    return json.loads(_core.verify_geometry(samples, seed, segments))


def run_cli(*args):
    """Runs the command-line tool in-process; returns (exit_code, stdout, stderr)."""
    return _core.run_cli([str(a) for a in args])
