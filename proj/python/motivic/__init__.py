"""Exact motivic measures, power structures and plane curve invariants."""

import json as _json

from ._core import (
    GClass,
    MotivicError,
    config_class_p1,
    geometric_sum,
    is_degenerate,
    kouchnirenko_count,
    measure_stratum,
    modality_formula,
    moebius,
    mult_sequence,
    one_minus_t_pow,
    pgen,
    power_coefficients,
)
from . import _core


def invariants(*branches):
    """Invariants of a germ given as (x, y) expression pairs in t."""
    return _json.loads(_core.invariants_json(list(branches)))


def lift(f, x, y, target, relaxed=False):
    return _json.loads(_core.lift_json(f, x, y, target, relaxed))


def verify(suite="all", seed=None, instances=0):
    if seed is None:
        return _json.loads(_core.verify_json(suite, instances=instances))
    return _json.loads(_core.verify_json(suite, seed, instances))


def example1_checks(k):
    return _json.loads(_core.example1_checks_json(k))


def example3_checks(p, q):
    return _json.loads(_core.example3_checks_json(p, q))


def example2_sum_checks():
    return _json.loads(_core.example2_sum_checks_json())
