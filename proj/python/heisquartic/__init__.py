"""Exact computations on Heisenberg-invariant quartic surfaces.

Rational results are returned as fractions.Fraction; parameters u may be
given as ints, Fractions or "p/q" strings.
"""

import json
from fractions import Fraction

from . import _core
from ._core import (
    DegenerateError,
    SingularSystemError,
    conic_submatrix,
    det as _det,
    fermat_line_count,
    group_order,
    incidence_set,
    is_even,
    label_name,
    lambda15,
    norm_counts,
    signature,
    symplectic_form,
)

__all__ = [
    "DegenerateError",
    "SingularSystemError",
    "conic_submatrix",
    "det",
    "discriminant",
    "fermat_line_count",
    "group_order",
    "incidence_set",
    "is_even",
    "kummer_param",
    "label_name",
    "lambda15",
    "mukai_average",
    "nieto_value",
    "norm_counts",
    "quartic",
    "segre_value",
    "signature",
    "symplectic_form",
    "verify",
]


def _text(values):
    return [str(Fraction(v)) for v in values]


def discriminant(u):
    return Fraction(_core.discriminant(_text(u)))


def segre_value(u):
    return Fraction(_core.segre_value(_text(u)))


def nieto_value(u):
    return Fraction(_core.nieto_value(_text(u)))


def quartic(u):
    return _core.quartic(_text(u))


def kummer_param(point):
    return [Fraction(q) for q in _core.kummer_param([int(c) for c in point])]


def mukai_average(u):
    return Fraction(_core.mukai_average(_text(u)))


def det(gram):
    return int(_det(gram))


def verify(only=(), seed=1234567):
    return json.loads(_core.verify(list(only), seed))
