"""Exact invariants of 4-orbifolds with isolated cyclic singularities.

Values come back as ``int`` or ``fractions.Fraction``; the JSON entry points
``run`` and ``batch`` return the same documents as the ``orbicalc`` tool.
"""
import json
from fractions import Fraction

from . import _orbicalc
from ._orbicalc import ComputationError, Error, ValidationError, command_names

__all__ = [
    "ComputationError",
    "Error",
    "ValidationError",
    "batch",
    "character_sum",
    "command_names",
    "delta",
    "fixed_point_weight_pairs",
    "local_intersection",
    "run",
    "self_intersection",
    "self_intersection_monomial",
]


def run(request, truncation=None, trace=False):
    """Runs one request (a dict or JSON text); returns (status, report)."""
    text = request if isinstance(request, str) else json.dumps(request)
    status, report = _orbicalc.run(text, truncation, trace)
    return status, json.loads(report)


def batch(requests, truncation=None, trace=False):
    """Runs a batch (a list, {"requests": [...]} or JSON text)."""
    text = requests if isinstance(requests, str) else json.dumps(requests)
    status, report = _orbicalc.batch(text, truncation, trace)
    return status, json.loads(report)


def local_intersection(g1, g2, truncation=None):
    return int(_orbicalc.local_intersection(g1, g2, truncation))


def self_intersection(germ):
    """Returns (value, exact); an inexact value is a lower bound."""
    value, exact = _orbicalc.self_intersection(germ)
    return Fraction(value), exact


def self_intersection_monomial(l1, l2):
    return int(_orbicalc.self_intersection_monomial(l1, l2))


def delta(m, b, c):
    return int(_orbicalc.delta(m, b, c))


def character_sum(m, a, b, c):
    return Fraction(_orbicalc.character_sum(m, a, b, c))


def fixed_point_weight_pairs(n):
    return [tuple(p) for p in _orbicalc.fixed_point_weight_pairs(n)]
