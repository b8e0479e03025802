"""Python bindings for mvlab.

Lusztig data are plain lists of entries in lexicographic root order
(a_12, a_13, a_23, a_14, ...).
"""

import json as _json

from ._core import (
    MvlabError,
    ResourceLimit,
    apply,
    enumerate_by_height,
    epsilon,
    epsilon_star,
    m_k_of_point,
    quiver,
    roots_in_order,
    suite_names,
    transition,
    weight,
)
from . import _core


def psi(n, entries):
    """e-BZ datum as a dict {"k1,k2,...": value}."""
    return _json.loads(_core.psi_json(n, entries))["M"]


def polytope(n, entries):
    return _json.loads(_core.polytope_json(n, entries))


def verify(suite, n=None, max_height=None, jobs=1):
    return _json.loads(_core.verify_json(suite, n, max_height, jobs))


__all__ = [
    "MvlabError",
    "ResourceLimit",
    "apply",
    "enumerate_by_height",
    "epsilon",
    "epsilon_star",
    "m_k_of_point",
    "polytope",
    "psi",
    "quiver",
    "roots_in_order",
    "suite_names",
    "transition",
    "verify",
    "weight",
]
