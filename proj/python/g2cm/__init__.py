"""Genus-2 Jacobians over prime fields and quartic CM parameters."""

import json as _json

from ._core import (
    CMField,
    Curve,
    Divisor,
    Error,
    WeilPoly,
    cantor_add,
    char_poly_from_counts,
    count_points,
    embedding_degree,
    enumerate_jacobian,
    factorize,
    frobenius_char_poly,
    frobenius_norm,
    group_structure,
    neg,
    q_bound,
    random_divisor,
    remainder_mod_sq,
    scalar_mul,
    sylow_generator_search,
    theorem_c2_check,
    theorem_ed1_check,
    weil_poly,
    weil_validate,
)
from . import _core


def analyze_curve(p, f, ells=(), enum_bound=97, seed=0):
    return _json.loads(_core._analyze_curve(p, list(f), list(ells), enum_bound, seed))


def analyze_cm(D, a, b, c, seed=0):
    return _json.loads(_core._analyze_cm(D, a, b, list(c), seed))


def verify(suite, **params):
    return _json.loads(_core._verify(suite, params))


__all__ = [name for name in dir() if not name.startswith("_")]
