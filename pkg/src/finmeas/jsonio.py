"""JSON wire format for distributions, points, and test-function tables.

Round trips are bit-exact: rationals travel as `p/q` strings and points
arrays are emitted in canonical order, so equal values always serialize
to identical bytes.
"""

from __future__ import annotations

from fractions import Fraction

from .dist import Dist, FiniteSpace, Left, Right, as_point, point_key
from .errors import ParseError
from .scalars import RATIONAL_RE, format_rational, parse_rational
from .strength import FunTable


def point_to_json(x):
    x = as_point(x)
    if isinstance(x, Fraction):
        return format_rational(x)
    if isinstance(x, str):
        if RATIONAL_RE.match(x):
            raise ParseError(
                f"atom {x!r} collides with the rational syntax; rename it"
            )
        return x
    if isinstance(x, tuple):
        return {"pair": [point_to_json(x[0]), point_to_json(x[1])]}
    if isinstance(x, Left):
        return {"L": point_to_json(x.value)}
    if isinstance(x, Right):
        return {"R": point_to_json(x.value)}
    raise ParseError(f"point {x!r} has no wire representation")


def point_from_json(obj):
    if isinstance(obj, str):
        if RATIONAL_RE.match(obj):
            return Fraction(obj)
        return obj
    if isinstance(obj, int):
        return Fraction(obj)
    if isinstance(obj, dict) and len(obj) == 1:
        (tag, payload), = obj.items()
        if tag == "pair":
            if not isinstance(payload, list) or len(payload) != 2:
                raise ParseError("a pair point needs a 2-element list")
            return (point_from_json(payload[0]), point_from_json(payload[1]))
        if tag == "L":
            return Left(point_from_json(payload))
        if tag == "R":
            return Right(point_from_json(payload))
    raise ParseError(f"unrecognized point encoding: {obj!r}")


def dist_to_json(p: Dist) -> dict:
    if p.semiring.name != "rational":
        raise ParseError("only rational-weighted distributions have a wire form")
    return {
        "points": [
            {"x": point_to_json(x), "w": format_rational(c)} for x, c in p.items()
        ]
    }


def dist_from_json(obj) -> Dist:
    if not isinstance(obj, dict) or "points" not in obj:
        raise ParseError('a distribution payload needs a "points" array')
    entries = obj["points"]
    if not isinstance(entries, list):
        raise ParseError('"points" must be an array')
    pairs = []
    for entry in entries:
        if not isinstance(entry, dict) or set(entry) != {"x", "w"}:
            raise ParseError(f'each point needs exactly "x" and "w": {entry!r}')
        pairs.append((point_from_json(entry["x"]), parse_rational(entry["w"])))
    return Dist(pairs)


def table_to_json(table: FunTable) -> dict:
    out = {}
    for x, v in table.items():
        key = point_to_json(x)
        if not isinstance(key, str):
            raise ParseError("table keys on the wire must be atoms or rationals")
        out[key] = format_rational(Fraction(v))
    return out


def table_from_json(obj) -> FunTable:
    """A test-function table: a JSON object mapping points to rationals."""
    if not isinstance(obj, dict):
        raise ParseError("a table payload must be a JSON object")
    mapping = {}
    for key, value in obj.items():
        if not isinstance(value, str):
            raise ParseError(f"table values must be rational strings: {value!r}")
        mapping[point_from_json(key)] = parse_rational(value)
    domain = FiniteSpace(sorted(mapping, key=point_key))
    return FunTable(domain, mapping)
