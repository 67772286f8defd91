import json
from fractions import Fraction

import pytest

import gemkit

O2 = "gem1:3:2:1,0|1,0|1,0|1,0"
RP3 = "gem1:3:8:1,0,5,6,7,2,3,4|2,5,0,7,6,1,4,3|3,6,7,0,5,4,1,2|4,7,6,5,0,3,2,1"


def test_parse_and_round_trip():
    g = gemkit.Graph.parse(O2)
    assert g.dimension == 3 and g.order == 2
    assert g.census_line() == O2
    assert gemkit.Graph.parse(g.gem_json()) == g
    assert g == gemkit.Graph.standard(3)


def test_invalid_graph_raises():
    with pytest.raises(gemkit.GemError):
        gemkit.Graph.parse("gem1:3:2:0,1|1,0|1,0|1,0")


def test_invariants():
    g = gemkit.Graph.parse(RP3)
    assert g.gurau_degree_x2() == 6
    assert g.euler_characteristic() == 0
    assert g.certify_gem() == "yes"
    assert g.certify_sphere() != "yes"
    info = gemkit.info(RP3)
    assert info["gurau_degree"] == 3
    assert "R3b" in [h["id"] for h in info["hints"]]


def test_connected_sum():
    a = gemkit.Graph.standard(3)
    s = gemkit.connected_sum(a, 0, gemkit.Graph.parse(RP3), 0)
    assert s.order == 8
    assert gemkit.isomorphic(s, gemkit.Graph.parse(RP3))


def test_enumerate():
    records = gemkit.enumerate(3, 4)
    assert len(records) == 14
    assert records[0]["code"] == O2


def test_gaussian_means():
    assert gemkit.gaussian_mean(gemkit.quartic_bubble(4)) == {-1: 1, 1: 1}
    assert gemkit.gaussian_mean_text(json.dumps(gemkit.quadratic_bubble(3))) == "N^1"
    q = gemkit.quartic_bubble(3, 2)
    mean = gemkit.gaussian_mean(q)
    for n in (2, 3):
        assert sum(c * Fraction(n) ** e
                   for e, c in mean.items()) == gemkit.literal_mean(q, n)


def test_not_a_bubble():
    with pytest.raises(gemkit.NotABubble):
        gemkit.gaussian_mean({"colors": [[1, 0], [1, 0], [1, 0]], "parity": [1, 1]})


def test_budget():
    with pytest.raises(gemkit.BudgetExceeded):
        gemkit.enumerate(4, 12)


def test_cli():
    code, out, err = gemkit.run_cli(["wick", "--builtin", "quartic", "--d", "4", "--format", "text"])
    assert code == 0 and out == "N^1 + N^-1\n"
    code, out, err = gemkit.run_cli(["enumerate", "--dim", "3"])
    assert code == 2
