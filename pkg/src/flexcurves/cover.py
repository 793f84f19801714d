"""Surface and 4-manifold invariants under 2-fold branched covers.

Normal Euler numbers can be half-integers in intermediate steps, so
``SurfaceData`` keeps them doubled (``e2 = 2e``).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .curve import CurveSpec, Surface
from .errors import NonIntegerSignature, ParityError


class Relation(enum.Enum):
    TRANSVERSE = "transverse"
    IN_BRANCH_LOCUS = "in-branch-locus"


def lift_euler(e_base: Fraction | int, relation: Relation) -> Fraction:
    """Normal Euler number of the preimage of a surface.

    A surface meeting the branch locus transversely lifts with e doubled;
    a surface inside the branch locus lifts with e halved.
    """
    e = Fraction(e_base)
    out = 2 * e if relation is Relation.TRANSVERSE else e / 2
    if (2 * out).denominator != 1:
        raise ParityError(f"lifted Euler number {out} is not a half-integer")
    return out


def riemann_hurwitz_chi(chi_base: int, chi_branch: int) -> int:
    return 2 * chi_base - chi_branch


def hirzebruch_signature(sigma_base: int, e_branch: Fraction | int) -> int:
    value = 2 * Fraction(sigma_base) - Fraction(e_branch) / 2
    if value.denominator != 1:
        raise NonIntegerSignature(f"signature 2*{sigma_base} - {e_branch}/2 = {value} is not an integer")
    return int(value)


@dataclass(frozen=True)
class SurfaceData:
    chi: int
    e2: int
    orientable: bool = True
    closed: bool = True

    def __post_init__(self) -> None:
        if self.closed and self.e2 % 2:
            raise ParityError(f"closed surface with half-integral Euler number {Fraction(self.e2, 2)}")
        if self.closed and self.orientable and self.chi % 2:
            raise ParityError(f"closed orientable surface with odd chi {self.chi}")

    @classmethod
    def of(cls, chi: int, e: Fraction | int, orientable: bool = True, closed: bool = True) -> "SurfaceData":
        e2 = 2 * Fraction(e)
        if e2.denominator != 1:
            raise ParityError(f"Euler number {e} is not a half-integer")
        return cls(chi, int(e2), orientable, closed)

    @property
    def e(self) -> Fraction:
        return Fraction(self.e2, 2)


def smooth_crossings(s: SurfaceData, signs: Sequence[int]) -> SurfaceData:
    """Resolve transverse double points; each changes e by ±2 and chi by −1."""
    if not s.closed:
        raise ParityError("crossings are smoothed on closed immersed surfaces only")
    if any(sign not in (1, -1) for sign in signs):
        raise ValueError(f"crossing signs must be +1 or -1, got {list(signs)}")
    if not signs:
        return s
    return SurfaceData(s.chi - len(signs), s.e2 + 4 * sum(signs), orientable=False)


def immersed_union(a: SurfaceData, b: SurfaceData, crossings: int) -> SurfaceData:
    """Union of two surfaces meeting transversely in ``crossings`` points,
    with the double points counted once (chi drops by one per point)."""
    return SurfaceData(a.chi + b.chi - crossings, a.e2 + b.e2, a.orientable and b.orientable, a.closed and b.closed)


def arnold_surface_odd(m: int, chi_F: int) -> SurfaceData:
    if m < 1 or m % 2 == 0:
        raise ParityError(f"odd degree required, got {m}")
    return SurfaceData.of(chi_F - m + 1, m * m - 2, orientable=False)


def arnold_surface_even(k: int, chi_RP2_plus: int) -> int:
    if k < 1:
        raise ValueError(f"half-degree must be positive, got {k}")
    return 2 * k * k - 2 * chi_RP2_plus


def region_surface_euler(chi_region: int) -> int:
    """Self-intersection of the lifted region surface in the double cover."""
    return -4 * chi_region


@dataclass(frozen=True)
class FourManifold:
    chi: int
    sigma: int


S4 = FourManifold(2, 0)
CP2 = FourManifold(3, 1)
CP2_BAR = FourManifold(3, -1)
QUADRIC = FourManifold(4, 0)  # CP1 x CP1


def branched_double_cover(base: FourManifold, branch: SurfaceData) -> FourManifold:
    return FourManifold(
        riemann_hurwitz_chi(base.chi, branch.chi),
        hirzebruch_signature(base.sigma, branch.e),
    )


@dataclass(frozen=True)
class CoverReport:
    chi_A: int
    e_A: Fraction
    chi_X: int
    e_X: Fraction
    chi_Y: int
    sigma_Y: int
    b2: int
    b2_plus: int
    b2_minus: int

    def to_json(self) -> dict:
        out = {}
        for key, value in self.__dict__.items():
            if isinstance(value, Fraction):
                value = int(value) if value.denominator == 1 else str(value)
            out[key] = value
        return out


@dataclass(frozen=True)
class _Chain:
    """Ingredients of one cover pipeline (quotient side, then lifted)."""

    chi_F: int
    e_F: int            # self-intersection of F in the original ambient
    branch_points: int  # points where the quotient half-surface meets the conic image
    half_qbar: SurfaceData   # half of the lifted branch-curve image
    lifted_conic: SurfaceData  # lift of the quotient conic, inside the branch locus
    crossings: int
    base: FourManifold  # quotient 4-manifold containing the smoothed surface


# Quotient-side data for each ambient; every entry is a lift computed from
# the stated base surface so that the tables stay self-checking.
def _cp2_chain(m: int, chi_F: int) -> _Chain:
    # sphere over RP^2 (e = -2 in S^4), unbranched: chi 2, e -4
    qbar = SurfaceData.of(riemann_hurwitz_chi(1, 0), lift_euler(-2, Relation.TRANSVERSE), closed=True)
    # image of the conic: RP^2 with e = +2 in S^4, lifted inside the branch locus
    rp2 = SurfaceData.of(1, lift_euler(2, Relation.IN_BRANCH_LOCUS), orientable=False)
    return _Chain(chi_F, m * m, m, SurfaceData.of(qbar.chi // 2, qbar.e / 2, closed=False),
                  rp2, m, branched_double_cover(S4, SurfaceData.of(1, 2, orientable=False)))


def _hyperboloid_chain(a: int, b: int) -> _Chain:
    # image of the real torus: torus with e = 0, lifted unbranched
    qbar = SurfaceData.of(riemann_hurwitz_chi(0, 0), lift_euler(0, Relation.TRANSVERSE))
    klein = SurfaceData.of(0, 4, orientable=False)  # image of the (2,2) conic torus, e = 8/2
    lifted = SurfaceData.of(0, lift_euler(klein.e, Relation.IN_BRANCH_LOCUS), orientable=False)
    chi_F = 2 - 2 * (a - 1) * (b - 1)
    return _Chain(chi_F, 2 * a * b, a + b, SurfaceData.of(qbar.chi // 2, qbar.e / 2, closed=False),
                  lifted, a + b, branched_double_cover(S4, klein))


def _ellipsoid_chain(m: int) -> _Chain:
    # image of the real sphere: sphere with e = -4 in the quotient, lifted unbranched
    qbar = SurfaceData.of(riemann_hurwitz_chi(2, 0), lift_euler(-4, Relation.TRANSVERSE))
    klein = SurfaceData.of(0, 4, orientable=False)
    lifted = SurfaceData.of(0, lift_euler(klein.e, Relation.IN_BRANCH_LOCUS), orientable=False)
    chi_F = 2 - 2 * (m - 1) ** 2
    return _Chain(chi_F, 2 * m * m, 2 * m, SurfaceData.of(qbar.chi // 2, qbar.e / 2, closed=False),
                  lifted, 2 * m, branched_double_cover(CP2_BAR, klein))


def _run_chain(c: _Chain) -> CoverReport:
    if c.chi_F % 2:
        raise ParityError(f"chi(F) = {c.chi_F} must be even to split F into two halves")
    # half of F modulo the real structure, inside the branch locus
    half_chi = c.chi_F // 2
    half_e = lift_euler(c.e_F, Relation.IN_BRANCH_LOCUS)
    # its lift, branched at the points over the conic image
    lifted_half = SurfaceData.of(riemann_hurwitz_chi(half_chi, c.branch_points),
                                 lift_euler(half_e, Relation.TRANSVERSE), closed=False)
    arnold = SurfaceData(lifted_half.chi + c.half_qbar.chi, lifted_half.e2 + c.half_qbar.e2, orientable=False)
    union = immersed_union(arnold, c.lifted_conic, c.crossings)
    smoothed = smooth_crossings(union, [1] * c.crossings)
    y = branched_double_cover(c.base, smoothed)
    b2 = y.chi - 2
    if (b2 + y.sigma) % 2:
        raise NonIntegerSignature(f"b2 = {b2} and sigma = {y.sigma} have different parity")
    return CoverReport(
        chi_A=arnold.chi, e_A=arnold.e, chi_X=smoothed.chi, e_X=smoothed.e,
        chi_Y=y.chi, sigma_Y=y.sigma, b2=b2,
        b2_plus=(b2 + y.sigma) // 2, b2_minus=(b2 - y.sigma) // 2,
    )


def pipeline(spec: CurveSpec) -> CoverReport:
    """Invariants of the double cover Y branched along the smoothed surface X(F)."""
    if spec.ambient is Surface.HYPERBOLOID:
        return _run_chain(_hyperboloid_chain(*spec.bidegree))
    m = spec.degree
    if m % 2 == 0:
        raise ParityError(f"the cover pipeline needs odd degree, got {m}")
    if spec.ambient is Surface.ELLIPSOID:
        return _run_chain(_ellipsoid_chain(m))
    return _run_chain(_cp2_chain(m, spec.chi))
