"""Asymmetric dilations of the hyperbolic disk.

Report-producing functions return plain dicts decoded from the JSON the
C++ library emits.
"""

import json

from ._hypexpand import (
    DiskPoint,
    DomainError,
    dilate,
    dilate_origin,
    geodesic_curvature_samples,
    hyperbolic_distance,
    render_svg,
    trace_csv,
    translate,
)
from . import _hypexpand as _ext

__all__ = [
    "DiskPoint",
    "DomainError",
    "curvature_sweep",
    "dilate",
    "dilate_origin",
    "geodesic_curvature_samples",
    "hyperbolic_distance",
    "render_svg",
    "replay_witness",
    "search_counterexample",
    "sphere_conjecture",
    "trace_csv",
    "translate",
    "verify_lemmas",
    "verify_theorem",
]


def verify_theorem(seed=1, trials=200, threads=0):
    return json.loads(_ext._verify_theorem(seed, trials, threads))


def search_counterexample(seed=1, k1=0.25, k2=1.0, budget=2000):
    return json.loads(_ext._search_counterexample(seed, k1, k2, budget))


def replay_witness(witness):
    if not isinstance(witness, str):
        witness = json.dumps(witness)
    return _ext._replay_witness(witness)


def verify_lemmas(grid_n=500):
    return json.loads(_ext._verify_lemmas(grid_n))


def curvature_sweep(seed=1, grid_n=50):
    return json.loads(_ext._curvature_sweep(seed, grid_n))


def sphere_conjecture(seed=1, trials=500, threads=0):
    return json.loads(_ext._sphere_conjecture(seed, trials, threads))
