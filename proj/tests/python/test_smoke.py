import json

import pytest

import segver


def test_exceptional_systems():
    r = segver.dim([2, 2, 2], n=7)
    assert (r["virtual"], r["computed"], r["status"]) == (-2, 0, "SpecialCandidate")
    assert segver.dim([1, 1, 1, 1], n=3)["computed"] == 1


def test_non_special():
    r = segver.dim([3, 3], n=5)
    assert r["computed"] == 0 and r["status"] == "NonSpecial"


def test_classify_and_secant():
    c = segver.classify([4, 2], 5)
    assert c == {"status": "Special", "dim": 0, "family": "TwoTwoA"}
    s = segver.secant([2, 2, 2], 7)
    assert (s["secant_dim"], s["expected_secant_dim"], s["defective"]) == (25, 26, True)


def test_reduction_chain():
    r, d, mults = segver.to_projective([2, 2, 2], 7)
    assert (r, d, sorted(mults, reverse=True)) == (3, 6, [4, 4, 4] + [2] * 7)
    chain = segver.cremona_chain(r, d, mults)
    assert chain[-1] == (4, [2] * 9)
    assert segver.dim_projective(3, 4, [2] * 9)["computed"] == 0


def test_certificate_round_trip():
    text = segver.certify([2, 2, 2, 6], 38)
    assert json.loads(text)["rule"] == "SimpleDeg"
    assert segver.check_certificate(text) == (True, "", "")
    broken = json.loads(text)
    broken["params"]["n2"] += 1
    ok, path, _ = segver.check_certificate(json.dumps(broken))
    assert not ok and path == "root"


def test_pencil_points():
    p1 = [[1, 0]] * 4
    p2 = [[0, 1]] * 4
    p3 = [[1, 1]] * 4
    assert segver.dim_at_points([1, 1, 1, 1], [p1, p2, p3]) == 1


def test_catalecticant():
    sym = segver.symbolic_catalecticant()
    assert sym[0][0] == (8, 0) and sym[7][7] == (8, 26)
    z = [0] * 27
    z[0] = 1
    m = segver.catalecticant(z)
    assert m[0][0] == 8 and sum(map(sum, m)) == 8
    assert segver.catalecticant_determinant(z) == 0


def test_helpers():
    assert segver.monomial_basis([1, 1]) == [[0, 0], [0, 1], [1, 0], [1, 1]]
    assert segver.critical_range([2, 2, 2]) == (6, 7)
    assert segver.virtual_dimension([1, 1, 1, 1], 3) == 0
    assert segver.expected_dimension([2, 4], 5) == -1


def test_errors_are_value_errors():
    with pytest.raises(ValueError):
        segver.dim([-1, 2], n=1)
    with pytest.raises(ValueError):
        segver.catalecticant([0] * 26)
