"""Exact Hessian-rank tools for cubic forms.

Forms, models and results are plain dicts in the JSON schema used by the
``cubiform`` command line tool.
"""

import json

from . import _core
from ._core import CubiformError

__all__ = [
    "CubiformError",
    "abelian_cubic",
    "quotient_cubic",
    "hessian_rank",
    "resolve",
    "certify",
    "obstruct",
]


def _text(obj):
    return obj if isinstance(obj, str) else json.dumps(obj)


def abelian_cubic():
    return json.loads(_core.abelian_cubic())


def quotient_cubic(zeta):
    return json.loads(_core.quotient_cubic(zeta))


def hessian_rank(form, point):
    return _core.hessian_rank(_text(form), _text(point))


def resolve(form, a):
    return json.loads(_core.resolve(_text(form), list(a)))


def certify(form, threads=1, depth=4):
    return json.loads(_core.certify(_text(form), threads, depth))


def obstruct(model, threads=1, depth=4):
    return json.loads(_core.obstruct(_text(model), threads, depth))
