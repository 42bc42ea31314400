"""Exact rational lattice geometry in the plane.

Coordinates may be ints, Fractions or strings such as "-4/3" and "0.25".
Rationals in results are returned as fractions.Fraction.
"""

import json
from fractions import Fraction

from . import _flatcert

__all__ = [
    "lattice_width",
    "rational_diameter",
    "is_free",
    "maximality",
    "verify",
    "flt1",
    "certify_case",
]


def _vertices(polygon):
    return json.dumps([[str(c) for c in v] for v in polygon])


def _q(s):
    return Fraction(s)


def lattice_width(polygon):
    """Return (width, (a, b)) for the minimising primitive functional."""
    r = json.loads(_flatcert.width(_vertices(polygon)))
    return _q(r["width"]), tuple(int(c) for c in r["functional"])


def rational_diameter(polygon):
    r = json.loads(_flatcert.ratdiam(_vertices(polygon)))
    return _q(r["length"]), tuple(int(c) for c in r["direction"])


def is_free(polygon, ring="z"):
    """Freeness verdict as a dict; "free" is a bool."""
    return json.loads(_flatcert.free(_vertices(polygon), ring))


def maximality(polygon, ring="z", shape_bound=4):
    return json.loads(_flatcert.maximal(_vertices(polygon), ring, shape_bound))


def verify(polygon, report, kind="maximal"):
    """Re-check a freeness or maximality report against the polygon."""
    return _flatcert.verify(_vertices(polygon), json.dumps(report), kind)


def flt1(x, y):
    return _q(_flatcert.flt1(str(x), str(y)))


def certify_case(name="case1", target="10/3", threads=1):
    return json.loads(_flatcert.certify(name, str(target), threads))
