from fractions import Fraction

import pytest

from flexcurves.arith import evaluate_bound
from flexcurves.curve import CurveSpec, Surface
from flexcurves.errors import AmbientMismatch, InvalidSpec, MissingChi
from flexcurves.scheme import Ambient, enumerate_schemes, parse_scheme
from flexcurves.verdict import Status, applicable_bounds, check, spec_for

ODD = Ambient.PROJECTIVE_ODD


def test_applicable_bounds():
    assert applicable_bounds(CurveSpec(Surface.CP2, 7)) == ["harnack", "vz", "zvonilov", "s", "structural-j"]
    assert applicable_bounds(CurveSpec(Surface.CP2, 7, q_flexible=False)) == ["harnack", "vz", "zvonilov", "structural-j"]
    assert applicable_bounds(CurveSpec(Surface.HYPERBOLOID, bidegree=(1, 1))) == ["hyperboloid", "structural"]
    assert applicable_bounds(CurveSpec(Surface.CP2, 2)) == ["harnack"]
    assert applicable_bounds(CurveSpec(Surface.CP2, 5, orientable=False, chi_F=-10)) == ["harnack-no", "novz", "structural-j"]
    assert applicable_bounds(CurveSpec(Surface.ELLIPSOID, 3)) == ["ellipsoid"]


def test_degree_seven_example_passes():
    v = check(CurveSpec(Surface.CP2, 7), parse_scheme("<J + 2 + 1<1>>", ODD))
    assert v.passed
    assert v.record("harnack").observed == 5 and v.record("harnack").bound == 16
    for cid, bound in (("vz", 4), ("s", 9), ("zvonilov", 6)):
        assert v.record(cid).observed == 1 and v.record(cid).bound == bound
    assert v.min_oval_bound == 4


def test_too_many_ovals_fail_harnack():
    v = check(CurveSpec(Surface.CP2, 3), parse_scheme("<J + 5>", ODD))
    assert v.record("harnack").status is Status.FAIL
    assert v.record("harnack").observed == 6
    assert v.overall is Status.FAIL


def test_nonorientable_extremal():
    spec = CurveSpec(Surface.CP2, 5, orientable=False, extremal_chi=True)
    v = check(spec, parse_scheme("<J + 1<1>>", ODD))
    assert v.record("novz").bound == 4
    assert v.record("harnack-no").bound == 13
    assert any("conjecture" in n for n in v.notes)


def test_equality_notes():
    # S(5) = 4: four nests of depth one give l0 = 4
    v = check(CurveSpec(Surface.CP2, 5), parse_scheme("<J + 4<1>>", ODD))
    assert v.record("s").status is Status.EQUALITY
    assert any("type I" in n for n in v.notes)
    assert v.record("vz").status is Status.FAIL
    m_curve = check(CurveSpec(Surface.CP2, 3), parse_scheme("<J + 1>", ODD))
    assert m_curve.record("harnack").status is Status.EQUALITY
    assert any("M-curve" in n for n in m_curve.notes)


def test_missing_pseudo_line_fails_structural():
    v = check(CurveSpec(Surface.CP2, 3), parse_scheme("<1>", Ambient.PROJECTIVE_EVEN))
    assert v.record("structural-j").status is Status.FAIL and not v.passed


def test_ambient_mismatch():
    with pytest.raises(AmbientMismatch):
        check(CurveSpec(Surface.CP2, 4), parse_scheme("<J>", ODD))
    with pytest.raises(AmbientMismatch):
        check(CurveSpec(Surface.ELLIPSOID, 3), parse_scheme("<J>", ODD))


def test_spec_errors():
    with pytest.raises(MissingChi):
        spec_for("cp2", 5, orientable=False)
    with pytest.raises(InvalidSpec):
        spec_for("torus", 5)
    with pytest.raises(InvalidSpec):
        spec_for("cp2", 5, extremal_chi=True)
    with pytest.raises(InvalidSpec):
        spec_for("hyperboloid", bidegree=(3, 3), orientable=False, chi_F=0)


def test_hyperboloid_and_ellipsoid_checks():
    v = check(CurveSpec(Surface.HYPERBOLOID, bidegree=(1, 1)), parse_scheme("<1(1,1): 1 + 1<2>>", Ambient.HYPERBOLOID))
    assert v.record("hyperboloid").observed == 1 and v.record("hyperboloid").status is Status.EQUALITY
    bad = check(CurveSpec(Surface.HYPERBOLOID, bidegree=(1, 1)), parse_scheme("<1(3,1): >", Ambient.HYPERBOLOID))
    assert bad.record("structural").status is Status.FAIL
    e = check(CurveSpec(Surface.ELLIPSOID, 1), parse_scheme("<2>", Ambient.ELLIPSOID))
    assert e.record("ellipsoid").observed == 1 and e.passed


def test_json_shape():
    v = check(CurveSpec(Surface.CP2, 7), parse_scheme("<J + 2 + 1<1>>", ODD))
    data = v.to_json()
    assert set(data) == {"spec", "scheme", "stats", "constraints", "notes", "overall"}
    assert data["stats"] == {"l": 4, "l_plus": 3, "l_zero": 1, "l_minus": 0, "b0": 5}
    assert data["constraints"][0] == {"id": "harnack", "bound": "16", "observed": 5, "status": "pass"}
    vz = check(CurveSpec(Surface.CP2, 15), parse_scheme("<J>", ODD)).record("vz")
    assert vz.to_json()["bound"] == "38"
    v21 = check(CurveSpec(Surface.CP2, 21), parse_scheme("<J>", ODD)).record("vz")
    # (m/h)^2 - 1 is divisible by 8 for odd m, so VZ is integral
    assert v21.bound == evaluate_bound("vz", m=21).value == 83 and v21.to_json()["bound"] == "83"


def test_overall_iff_no_failure_and_min_bound():
    for n in range(0, 7):
        for s in enumerate_schemes(n):
            for m in (3, 5, 7):
                v = check(CurveSpec(Surface.CP2, m), s)
                assert v.passed == all(r.status is not Status.FAIL for r in v.records)
                expected = min(evaluate_bound(k, m=m).value for k in ("vz", "zvonilov", "s"))
                assert v.min_oval_bound == expected


def test_monotonicity_adding_an_empty_oval():
    spec = CurveSpec(Surface.CP2, 7)
    for n in range(0, 6):
        for s in enumerate_schemes(n):
            before = check(spec, s)
            after = check(spec, s.with_extra_oval())
            assert after.scheme.b0 >= before.scheme.b0
            d = after.stats.l_zero_minus - before.stats.l_zero_minus
            assert 0 <= d <= 1


def test_extremal_bound_identity():
    for m in range(3, 100, 2):
        spec = CurveSpec(Surface.CP2, m, orientable=False, extremal_chi=True)
        v = check(spec, parse_scheme("<J>", ODD))
        assert v.record("novz").bound == m - 1
        assert v.record("harnack-no").bound == Fraction(m * m + 1, 2)
