# SPDX-License-Identifier: MIT
"""Boundary slopes and surgery classification for two-bridge links.

Thin wrappers over the compiled extension.  Each function returns the same
record the ``twobridge`` command-line tool writes under ``result``, decoded
into plain Python objects.  Rationals are strings such as ``"-6/1"``.
"""

import json

from . import _core

SCHEMA_VERSION = _core.SCHEMA_VERSION

__all__ = [
    "SCHEMA_VERSION",
    "all_b_invariants",
    "catalog",
    "genus_zero_solutions",
    "invariants",
    "link_ws",
    "reducible_surgeries",
    "satellite_candidates",
    "surgery_knot",
    "torus_knot_surgeries",
    "verify",
]


def link_ws(r, s):
    """Return (w, u) with r = 2w + 1 and s = 2u + 1."""
    return _core.link_ws(r, s)


def catalog(r, s):
    """Named edge-paths of L([r, s]) in every regime."""
    return json.loads(_core.catalog(r, s))


def invariants(family, w, u, alpha, beta, n=0, closed_form=False):
    """Slopes, Euler characteristic and circle counts of one weighted path."""
    return json.loads(_core.invariants(family, w, u, alpha, beta, n, closed_form))


def genus_zero_solutions(family, w, u, alpha_max=64):
    return json.loads(_core.genus_zero_solutions(family, w, u, alpha_max))


def reducible_surgeries(w, u):
    return json.loads(_core.reducible_surgeries(w, u))


def surgery_knot(w, u, gamma):
    return json.loads(_core.surgery_knot(w, u, str(gamma)))


def torus_knot_surgeries(fraction):
    return json.loads(_core.torus_knot_surgeries(str(fraction)))


def satellite_candidates(fraction, gamma):
    return json.loads(_core.satellite_candidates(str(fraction), str(gamma)))


def all_b_invariants(m):
    return json.loads(_core.all_b_invariants(m))


def verify(alpha_max=24, families=()):
    """Run the brute-force sweeps; ``result["ok"]`` is the overall verdict."""
    return json.loads(_core.verify(alpha_max, list(families)))
