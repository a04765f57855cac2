"""Python front end for the busemann C++ core.

Spaces, points, families and measures use the same JSON shapes as the
command-line config files; Python dicts and lists are accepted directly.
"""

import json

from . import _core
from ._core import ResourceError, UnsupportedError

__all__ = [
    "ResourceError",
    "UnsupportedError",
    "bar_n",
    "bar_star",
    "distance",
    "geodesic_point",
    "run",
    "temperedness",
    "w1",
]


def _dump(obj):
    return obj if isinstance(obj, str) else json.dumps(obj)


def distance(space, p, q):
    return _core.distance(_dump(space), _dump(p), _dump(q))


def geodesic_point(space, p, q, t):
    return json.loads(_core.geodesic_point(_dump(space), _dump(p), _dump(q), t))


def bar_n(space, family, tol=1e-6):
    """Inductive barycenter report of an ordered family."""
    return json.loads(_core.bar_n(_dump(space), _dump(family), tol))


def bar_star(space, measure, tol=1e-6, options=None):
    """Replication-limit barycenter report of a rational measure."""
    return json.loads(_core.bar_star(_dump(space), _dump(measure), tol, _dump(options or {})))


def w1(space, mu1, mu2, bruteforce=False):
    return _core.w1(_dump(space), _dump(mu1), _dump(mu2), bruteforce)


def temperedness(group, max_n):
    return _core.temperedness(group, max_n)


def run(command, config, tol=None, seed=None, format="json"):
    """Same dispatch as the command-line tool; returns (status, stdout, stderr)."""
    return _core.run(command, _dump(config), tol, seed, format)
