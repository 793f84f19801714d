"""The non-orientable genus function g̃ for surfaces in the projective plane.

g̃(e) is the largest Euler characteristic of a closed non-orientable
surface in CP² with normal Euler number e. For positive odd e ≥ 11 only
a lower bound is known; the status flag says so.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import OutOfDomain


class GenusStatus(enum.Enum):
    EXACT = "exact"
    LOWER_BOUND_ONLY = "lower-bound-only"


@dataclass(frozen=True)
class GenusValue:
    value: int
    status: GenusStatus

    @property
    def exact(self) -> bool:
        return self.status is GenusStatus.EXACT


_SPECIAL = {0: 0, 1: 0, 2: 1, 3: 1, 4: 0, 5: 0, 7: -1, 9: -2}


def genus_tilde(m: int) -> GenusValue:
    if m in _SPECIAL:
        return GenusValue(_SPECIAL[m], GenusStatus.EXACT)
    if m < 0:
        k = -m
        return GenusValue(2 - (k + k % 2) // 2, GenusStatus.EXACT)
    k, r = divmod(m, 4)
    if r == 0:
        return GenusValue(4 - 2 * k, GenusStatus.EXACT)
    if r == 2:
        return GenusValue(3 - 2 * k, GenusStatus.EXACT)
    value = 2 - 2 * k if r == 1 else 1 - 2 * k
    return GenusValue(value, GenusStatus.LOWER_BOUND_ONLY)


def whitney_massey_admissible(chi: int) -> frozenset[int]:
    """Normal Euler numbers allowed for a non-orientable surface in the 4-sphere."""
    if chi >= 2:
        raise OutOfDomain(f"non-orientable surfaces have chi <= 1, got {chi}")
    return frozenset(range(2 * chi - 4, 4 - 2 * chi + 1, 4))


class Partner(enum.Enum):
    LINE = "line"
    CONIC = "conic"
    STANDARD_RP2 = "standard-rp2"

    @property
    def euler(self) -> int:
        return {"line": 1, "conic": 4, "standard-rp2": -1}[self.value]

    @property
    def chi(self) -> int:
        return 1 if self is Partner.STANDARD_RP2 else 2


@dataclass(frozen=True)
class Construction:
    """Recipe for a surface in CP²: a surface inside a small 4-ball
    (non-orientable genus ``local_genus``, 0 meaning absent) joined by tubes
    to standard algebraic pieces."""

    local_genus: int
    local_self_int: int
    partners: tuple[Partner, ...] = ()

    @property
    def tube_partner(self) -> Partner | None:
        return self.partners[0] if len(self.partners) == 1 else None

    @property
    def has_local(self) -> bool:
        return self.local_genus > 0

    @property
    def local_chi(self) -> int:
        return 2 - self.local_genus

    @property
    def achieved(self) -> tuple[int, int]:
        """(normal Euler number, Euler characteristic) of the result."""
        pieces = [(p.euler, p.chi) for p in self.partners]
        if self.has_local:
            pieces.append((self.local_self_int, self.local_chi))
        e = sum(pe for pe, _ in pieces)
        chi = sum(pc for _, pc in pieces) - 2 * (len(pieces) - 1)
        return e, chi

    def local_admissible(self) -> bool:
        if not self.has_local:
            return True
        return self.local_self_int in whitney_massey_admissible(self.local_chi)

    def describe(self) -> str:
        parts = []
        if self.has_local:
            parts.append(f"local genus {self.local_genus}, self-int {self.local_self_int:+d}")
        parts += [p.value for p in self.partners]
        return " # ".join(parts)


def plan_construction(e_target: int) -> Construction:
    """A construction reaching (e_target, g̃(e_target)) (the lower bound when not exact)."""
    e = e_target
    line, conic = (Partner.LINE,), (Partner.CONIC,)
    if e < 0:
        k = -e
        p = k // 2
        if k % 2 == 0:
            return Construction(p, -2 * p)
        return Construction(p + 1, -2 * p - 2, line)
    if e in (0, 1):
        return Construction(2, 0, line if e else ())
    if e == 2:
        return Construction(1, 2)
    if e == 3:
        return Construction(0, 0, (Partner.CONIC, Partner.STANDARD_RP2))
    if e == 4:
        return Construction(2, 4)
    k, r = divmod(e, 4)
    if r == 0:
        return Construction(2 * (k - 1), 4 * (k - 1), conic)
    if r == 2:
        return Construction(2 * k - 1, 4 * k - 2, conic)
    if r == 1:
        return Construction(2 * k, 4 * k, line)
    return Construction(2 * k + 1, 4 * k + 2, line)
