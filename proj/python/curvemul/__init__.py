"""Multiplication of curves on surfaces: torus classes, curve scenes and twist coordinates."""

import json as _json

from ._core import (
    CurvemulError,
    DTCoords,
    DTFile,
    Scene,
    TorusClass,
    census,
    convexity_profile,
    crossing_count,
    dehn_twist,
    dt_curve_intersection,
    dt_dehn_twist,
    find_bigons,
    intersection,
    isomorphic,
    load_dt,
    load_scene,
    multiply,
    normalize,
    parallel_copies,
    power,
    resolve,
    scene_from_text,
    signed_power_multiply,
    solve_twists,
    suite_names,
    torus_grid_scene,
    twist_multiply,
    validate,
)
from ._core import _verify_json


def verify(suites=None, **params):
    """Run the verification suites and return the report as a dict.

    Keyword parameters mirror the CLI: theorem1_bound, convexity_bound, n_min,
    n_max, theorem6_bound, gamma_bound, prop7_bound, m_max, lemma4_bound,
    dt_trials, seed, corpus_dir.
    """
    return _json.loads(_verify_json(list(suites or []), params))


__all__ = [name for name in dir() if not name.startswith("_")]
