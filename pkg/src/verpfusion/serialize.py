"""JSON encoding of the core value types.

Every encoded value is a dict carrying a ``"type"`` tag, so
``decode(encode(x)) == x`` for all supported types.
"""
from __future__ import annotations

import json
from fractions import Fraction

from .charoracle import LaurentChar
from .glx import Factorization, GLXShape, GWeight, SimpleIndex
from .qcyclo import CycNum
from .verp import JordanModule, VerpObject
from .versln import AlcoveWeight, SLnParams


def _frac(x: Fraction) -> str:
    return str(x)


def encode(obj) -> dict:
    if isinstance(obj, CycNum):
        return {"type": "CycNum", "p": obj.p, "coeffs": [_frac(c) for c in obj.coeffs],
                "approx": round(obj.to_float(), 12)}
    if isinstance(obj, VerpObject):
        return {"type": "VerpObject", "p": obj.p, "mult": list(obj.mult)}
    if isinstance(obj, JordanModule):
        return {"type": "JordanModule", "p": obj.p, "blocks": list(obj.blocks)}
    if isinstance(obj, AlcoveWeight):
        return {"type": "AlcoveWeight", "p": obj.params.p, "n": obj.params.n, "parts": list(obj.parts)}
    if isinstance(obj, GLXShape):
        return {"type": "GLXShape", "p": obj.p, "mults": list(obj.mults)}
    if isinstance(obj, GWeight):
        return {"type": "GWeight", "shape": encode(obj.shape), "entries": list(obj.entries)}
    if isinstance(obj, SimpleIndex):
        return {"type": "SimpleIndex", "lam": encode(obj.lam),
                "V": [[list(lab) for lab in comp] for comp in obj.V]}
    if isinstance(obj, Factorization):
        return {"type": "Factorization", "base": encode(obj.base),
                "twists": [encode(t) for t in obj.twists]}
    if isinstance(obj, LaurentChar):
        return {"type": "LaurentChar", "nvars": obj.nvars,
                "terms": [[list(k), v] for k, v in obj.terms.items()]}
    if isinstance(obj, dict) and all(isinstance(k, AlcoveWeight) for k in obj):
        return {"type": "FusionExpansion",
                "terms": [[encode(k), v] for k, v in sorted(obj.items(), key=lambda kv: kv[0].parts)]}
    raise TypeError(f"cannot encode {type(obj).__name__}")


def decode(d: dict):
    kind = d.get("type")
    if kind == "CycNum":
        return CycNum(d["p"], tuple(Fraction(c) for c in d["coeffs"]))
    if kind == "VerpObject":
        return VerpObject(d["p"], tuple(d["mult"]))
    if kind == "JordanModule":
        return JordanModule(d["p"], tuple(d["blocks"]))
    if kind == "AlcoveWeight":
        return AlcoveWeight(SLnParams(d["p"], d["n"]), tuple(d["parts"]))
    if kind == "GLXShape":
        return GLXShape(d["p"], tuple(d["mults"]))
    if kind == "GWeight":
        return GWeight(decode(d["shape"]), tuple(d["entries"]))
    if kind == "SimpleIndex":
        return SimpleIndex(decode(d["lam"]), tuple(tuple(tuple(lab) for lab in comp) for comp in d["V"]))
    if kind == "Factorization":
        return Factorization(decode(d["base"]), tuple(decode(t) for t in d["twists"]))
    if kind == "LaurentChar":
        return LaurentChar(d["nvars"], {tuple(k): v for k, v in d["terms"]})
    if kind == "FusionExpansion":
        return {decode(k): v for k, v in d["terms"]}
    raise ValueError(f"unknown type tag {kind!r}")


def dumps(obj) -> str:
    return json.dumps(encode(obj), sort_keys=True)


def loads(s: str):
    return decode(json.loads(s))
