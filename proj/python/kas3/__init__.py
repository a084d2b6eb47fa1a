"""Exact 3-matrix permanents, triangular configurations and Kasteleyn constructions."""

import json
from fractions import Fraction
from os import PathLike

from . import _kas3
from ._kas3 import Error, GuardExceeded, InternalError, PreconditionError, SchemaError

__all__ = [
    "Error",
    "GuardExceeded",
    "InternalError",
    "PreconditionError",
    "SchemaError",
    "binet_cauchy_check",
    "decode_value",
    "determinant3",
    "dimers",
    "fold",
    "gadget",
    "kasteleyn_build",
    "kernel_weight_enumerator",
    "lattice_off",
    "perfect_matching_polynomial",
    "permanent2",
    "permanent3",
    "sign_k1",
    "triadjacency",
    "tripartite_reduction",
    "weight_enumerator",
]


def _text(doc):
    if isinstance(doc, (dict, list)):
        return json.dumps(doc)
    if isinstance(doc, PathLike):
        with open(doc, encoding="utf-8") as f:
            return f.read()
    return doc


def decode_value(v):
    """Turn a JSON scalar or polynomial into int, Fraction or {exponent: coefficient}."""
    if isinstance(v, dict) and set(v) == {"poly"}:
        return {int(e): decode_value(c) for e, c in v["poly"].items()}
    if isinstance(v, str):
        return Fraction(v) if "/" in v else int(v)
    return v


def gadget(kind, recertify=False):
    return json.loads(_kas3.gadget(kind, recertify))


def perfect_matching_polynomial(config, threads=1):
    return decode_value(json.loads(_kas3.perfect_matching_polynomial(_text(config), threads)))


def tripartite_reduction(config):
    return json.loads(_kas3.tripartite_reduction(_text(config)))


def permanent3(tensor, threads=1):
    return decode_value(json.loads(_kas3.permanent3(_text(tensor), threads)))


def determinant3(tensor, threads=1):
    return decode_value(json.loads(_kas3.determinant3(_text(tensor), threads)))


def triadjacency(config):
    return json.loads(_kas3.triadjacency(_text(config)))


def kasteleyn_build(matrix, certify=False, threads=1):
    return json.loads(_kas3.kasteleyn_build(_text(matrix), certify, threads))


def sign_k1(tensor, threads=1):
    return json.loads(_kas3.sign_k1(_text(tensor), threads))


def dimers(a, b, c, threads=1):
    out = json.loads(_kas3.dimers(a, b, c, threads))
    for key in ("count", "direct", "tensor", "ryser"):
        out[key] = decode_value(out[key])
    return out


def lattice_off(a, b, c):
    return _kas3.lattice_off(a, b, c)


def permanent2(matrix):
    return decode_value(json.loads(_kas3.permanent2(_text(matrix))))


def weight_enumerator(code):
    return decode_value(json.loads(_kas3.weight_enumerator(_text(code))))


def fold(poly, e):
    return decode_value(json.loads(_kas3.fold(poly, e)))


def kernel_weight_enumerator(config, p):
    return decode_value(json.loads(_kas3.kernel_weight_enumerator(_text(config), p)))


def binet_cauchy_check(r, n, seed=0, trials=20):
    return [
        {k: decode_value(v) for k, v in case.items()}
        for case in json.loads(_kas3.binet_cauchy_check(r, n, seed, trials))
    ]
