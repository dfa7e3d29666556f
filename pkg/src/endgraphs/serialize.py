"""Canonical JSON: sorted keys, rationals as "p/q", sets as sorted lists."""
from __future__ import annotations

import json
from fractions import Fraction

from .graph import vsorted


def rational(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def plain(obj):
    """Convert to JSON-ready data; output depends only on the value."""
    if hasattr(obj, "to_json"):
        return plain(obj.to_json())
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, Fraction):
        return rational(obj)
    if isinstance(obj, float):
        return repr(obj)  # irrational thresholds; repr is platform independent
    if isinstance(obj, dict):
        return {str(k): plain(v) for k, v in obj.items()}
    if isinstance(obj, (set, frozenset)):
        return [plain(v) for v in vsorted(obj)]
    if isinstance(obj, (list, tuple)):
        return [plain(v) for v in obj]
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def dumps(obj) -> str:
    return json.dumps(plain(obj), sort_keys=True, indent=2, ensure_ascii=True) + "\n"


def parse_rational(s) -> Fraction:
    return Fraction(s) if not isinstance(s, Fraction) else s
