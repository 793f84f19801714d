"""Check a real scheme against every bound that applies to a curve."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction

from .arith import BoundKind, evaluate_bound, format_rational
from .curve import CurveSpec, Surface
from .errors import AmbientMismatch, InvalidSpec
from .genus import GenusStatus
from .scheme import Ambient, RealScheme, RegionStats, classify_regions


class Status(enum.Enum):
    PASS = "pass"
    FAIL = "fail"
    EQUALITY = "equality"


@dataclass(frozen=True)
class ConstraintRecord:
    id: str
    bound: Fraction
    observed: int
    status: Status

    def to_json(self) -> dict:
        return {"id": self.id, "bound": format_rational(self.bound), "observed": self.observed,
                "status": self.status.value}


@dataclass(frozen=True)
class Verdict:
    spec: CurveSpec
    scheme: RealScheme
    stats: RegionStats
    records: tuple[ConstraintRecord, ...]
    notes: tuple[str, ...] = field(default=())

    @property
    def overall(self) -> Status:
        return Status.FAIL if any(r.status is Status.FAIL for r in self.records) else Status.PASS

    @property
    def passed(self) -> bool:
        return self.overall is Status.PASS

    def record(self, constraint_id: str) -> ConstraintRecord:
        for r in self.records:
            if r.id == constraint_id:
                return r
        raise KeyError(constraint_id)

    @property
    def min_oval_bound(self) -> Fraction | None:
        """Smallest bound among those limiting l0 + l-."""
        values = [r.bound for r in self.records if r.id in _OVAL_BOUNDS]
        return min(values) if values else None

    def to_json(self) -> dict:
        s = self.stats
        return {
            "spec": self.spec.to_json(),
            "scheme": str(self.scheme),
            "stats": {"l": s.total_ovals, "l_plus": s.l_plus, "l_zero": s.l_zero, "l_minus": s.l_minus,
                      "b0": self.scheme.b0},
            "constraints": [r.to_json() for r in self.records],
            "notes": list(self.notes),
            "overall": self.overall.value,
        }


_OVAL_BOUNDS = {"vz", "zvonilov", "s", "novz", "hyperboloid", "ellipsoid"}


def applicable_bounds(spec: CurveSpec) -> list[str]:
    if spec.ambient is Surface.HYPERBOLOID:
        return (["hyperboloid"] if spec.q_flexible else []) + ["structural"]
    if spec.ambient is Surface.ELLIPSOID:
        return ["ellipsoid"] if spec.q_flexible else []
    m = spec.degree
    if not spec.orientable:
        if not spec.odd:
            return ["harnack-no"]
        return ["harnack-no"] + (["novz"] if spec.q_flexible else []) + ["structural-j"]
    if not spec.odd:
        return ["harnack"]
    ids = ["harnack"]
    if m >= 3:
        ids.append("vz")
    ids.append("zvonilov")
    if spec.q_flexible:
        ids.append("s")
    ids.append("structural-j")
    return ids


def _expected_ambient(spec: CurveSpec) -> Ambient:
    if spec.ambient is Surface.HYPERBOLOID:
        return Ambient.HYPERBOLOID
    if spec.ambient is Surface.ELLIPSOID:
        return Ambient.ELLIPSOID
    return Ambient.PROJECTIVE_ODD if spec.odd else Ambient.PROJECTIVE_EVEN


def _bound_value(cid: str, spec: CurveSpec) -> Fraction:
    m = spec.degree
    if cid == "harnack":
        return evaluate_bound(BoundKind.HARNACK, m=m).value
    if cid == "harnack-no":
        return evaluate_bound(BoundKind.HARNACK_NON_ORIENTABLE, chi=spec.chi).value
    if cid == "novz":
        return evaluate_bound(BoundKind.NON_ORIENTABLE, m=m, chi=spec.chi).value
    if cid == "hyperboloid":
        a, b = spec.bidegree
        return evaluate_bound(BoundKind.HYPERBOLOID, a=a, b=b).value
    return evaluate_bound(BoundKind(cid), m=m).value


def _compare(cid: str, bound: Fraction, observed: int) -> ConstraintRecord:
    if observed > bound:
        status = Status.FAIL
    elif observed == bound:
        status = Status.EQUALITY
    else:
        status = Status.PASS
    return ConstraintRecord(cid, bound, observed, status)


def check(spec: CurveSpec, scheme: RealScheme) -> Verdict:
    expected = _expected_ambient(spec)
    # an odd-degree curve without J is reported by the structural-j record
    missing_j = expected is Ambient.PROJECTIVE_ODD and scheme.ambient is Ambient.PROJECTIVE_EVEN
    if scheme.ambient is not expected and not missing_j:
        if expected is Ambient.PROJECTIVE_EVEN and scheme.ambient is Ambient.PROJECTIVE_ODD:
            raise AmbientMismatch(f"degree {spec.degree} is even: the scheme cannot contain a pseudo-line J")
        raise AmbientMismatch(f"{scheme.ambient.value} scheme given for a {spec.ambient.value} curve")
    stats = classify_regions(scheme)
    records: list[ConstraintRecord] = []
    notes: list[str] = []
    for cid in applicable_bounds(spec):
        if cid == "structural-j":
            ok = scheme.pseudo_line
            records.append(ConstraintRecord(cid, Fraction(1), int(scheme.pseudo_line), Status.PASS if ok else Status.FAIL))
            continue
        if cid == "structural":
            a, b = spec.bidegree
            tc = scheme.torus_class
            ok = abs(tc.alpha) <= a and abs(tc.beta) <= b
            records.append(ConstraintRecord(cid, Fraction(1), int(ok), Status.PASS if ok else Status.FAIL))
            if not ok:
                notes.append(f"torus class ({tc.alpha},{tc.beta}) does not fit bidegree ({a},{b})")
            continue
        bound = _bound_value(cid, spec)
        observed = scheme.b0 if cid.startswith("harnack") else stats.l_zero_minus
        rec = _compare(cid, bound, observed)
        records.append(rec)
        if cid == "zvonilov":
            notes.append("zvonilov: assumes a genericity condition that Q-flexibility does not imply")
        if rec.status is Status.EQUALITY and cid == "s":
            notes.append("s: equality holds, so the curve is of type I")
        if rec.status is Status.EQUALITY and cid == "harnack":
            notes.append("harnack: M-curve (maximal number of components)")
        if bound < 0:
            notes.append(f"{cid}: negative bound, no such curve exists")
    if not spec.orientable and spec.extremal_chi:
        g = spec.extremal_genus()
        notes.append(f"extremal mode uses chi = g~({spec.degree}^2) = {g.value}")
        if g.status is GenusStatus.LOWER_BOUND_ONLY:
            notes.append("extremal chi is only a lower bound; the resulting limits rely on the conjecture that it is attained")
    return Verdict(spec, scheme, stats, tuple(records), tuple(notes))


def spec_for(ambient: str, degree: int | None = None, bidegree: tuple[int, int] | None = None,
             **kwargs) -> CurveSpec:
    """Convenience constructor that reports problems as InvalidSpec."""
    try:
        return CurveSpec(Surface(ambient), degree, bidegree, **kwargs)
    except ValueError as exc:
        if isinstance(exc, InvalidSpec):
            raise
        raise InvalidSpec(str(exc)) from None
