import json
from fractions import Fraction

import pytest
from hypothesis import given

from finmeas import Dist, Left, ParseError, Right
from finmeas.jsonio import (
    dist_from_json,
    dist_to_json,
    point_from_json,
    point_to_json,
    table_from_json,
    table_to_json,
)

from .conftest import atom_dists, line_dists


def test_point_encodings():
    assert point_to_json(Fraction(1, 2)) == "1/2"
    assert point_to_json(Fraction(-4)) == "-4"
    assert point_to_json("north") == "north"
    assert point_to_json(("a", Fraction(2))) == {"pair": ["a", "2"]}
    assert point_to_json(Left("a")) == {"L": "a"}
    assert point_to_json(Right(Fraction(1))) == {"R": "1"}


def test_point_decoding_round_trip():
    for x in [Fraction(1, 2), "north", ("a", Fraction(2)), Left("a"), Right((1, 2))]:
        assert point_from_json(point_to_json(x)) == x


def test_numeric_looking_atoms_are_rejected():
    with pytest.raises(ParseError):
        point_to_json("3/4")


def test_rational_strings_decode_as_rationals():
    assert point_from_json("7") == Fraction(7)
    assert isinstance(point_from_json("7"), Fraction)


def test_dist_round_trip_with_mixed_points():
    p = Dist({Fraction(1, 2): 3, "a": Fraction(-1, 7), ("a", "b"): 1, Left(2): 2})
    assert dist_from_json(dist_to_json(p)) == p


def test_dist_json_is_sorted_and_stringly_exact():
    p = Dist({Fraction(1, 2): Fraction(2, 4), Fraction(0): Fraction(1, 2)})
    payload = dist_to_json(p)
    assert payload == {
        "points": [{"x": "0", "w": "1/2"}, {"x": "1/2", "w": "1/2"}]
    }
    assert json.dumps(payload, separators=(",", ":")) == (
        '{"points":[{"x":"0","w":"1/2"},{"x":"1/2","w":"1/2"}]}'
    )


@given(line_dists())
def test_line_dist_round_trip(p):
    assert dist_from_json(dist_to_json(p)) == p


@given(atom_dists())
def test_atom_dist_round_trip(p):
    assert dist_from_json(dist_to_json(p)) == p


def test_duplicate_points_merge_on_decode():
    payload = {"points": [{"x": "1", "w": "1/2"}, {"x": "1", "w": "1/2"}]}
    assert dist_from_json(payload) == Dist({Fraction(1): 1})


@pytest.mark.parametrize(
    "payload",
    [
        {},
        {"points": {}},
        {"points": [{"x": "1"}]},
        {"points": [{"x": "1", "w": "0.5"}]},
        {"points": [{"x": "1", "w": "1/2", "extra": 1}]},
        {"points": [{"x": {"pair": ["1"]}, "w": "1"}]},
        {"points": [{"x": 1.5, "w": "1"}]},
    ],
)
def test_malformed_payloads_rejected(payload):
    with pytest.raises(ParseError):
        dist_from_json(payload)


def test_table_round_trip():
    payload = {"1": "1/2", "a": "-3", "2/3": "0"}
    table = table_from_json(payload)
    assert table(Fraction(1)) == Fraction(1, 2)
    assert table("a") == -3
    assert table(Fraction(2, 3)) == 0
    assert table_to_json(table) == payload


def test_table_values_must_be_rational_strings():
    with pytest.raises(ParseError):
        table_from_json({"a": 0.5})
