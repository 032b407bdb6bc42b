"""Python access to the widthlab core.

Every function takes the same text formats as the command line tool and
returns plain dictionaries.
"""

import json

from . import _core
from ._core import WidthlabError

__all__ = [
    "WidthlabError",
    "bounds",
    "census",
    "certify",
    "check",
    "dual_graph",
    "inequalities",
    "width",
]


def check(text):
    """Validation report, orientability and skeleton counts of a triangulation."""
    return json.loads(_core.check(text))


def dual_graph(text):
    """Edge list of the dual graph of a closed orientable triangulation."""
    return _core.dual_graph(text)


def width(edge_list, param, seed=None):
    """Exact width, or a seeded heuristic upper bound when `seed` is given."""
    return json.loads(_core.width(edge_list, param, seed))


def certify(text, mode="linear", witness=""):
    """Linear or graph certificate; optimal witnesses are used by default."""
    return json.loads(_core.certify(text, mode, witness))


def inequalities(edge_list):
    return json.loads(_core.inequalities(edge_list))


def bounds(tw=None, pw=None, cw=None, cng=None, irreducible=False, non_haken=False):
    return json.loads(_core.bounds(tw, pw, cw, cng, irreducible, non_haken))


def census(max_tets):
    """Serialized triangulations of the census up to `max_tets` tetrahedra."""
    return list(_core.census(max_tets))
