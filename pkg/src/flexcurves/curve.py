"""Description of the flexible curve being tested."""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import InvalidSpec, MissingChi
from .genus import GenusValue, genus_tilde


class Surface(enum.Enum):
    CP2 = "cp2"
    HYPERBOLOID = "hyperboloid"
    ELLIPSOID = "ellipsoid"


@dataclass(frozen=True)
class CurveSpec:
    ambient: Surface
    degree: int | None = None
    bidegree: tuple[int, int] | None = None
    orientable: bool = True
    chi_F: int | None = None
    q_flexible: bool = True
    extremal_chi: bool = False

    def __post_init__(self) -> None:
        try:
            object.__setattr__(self, "ambient", Surface(self.ambient))
        except ValueError:
            raise InvalidSpec(f"unknown ambient {self.ambient!r}") from None
        if self.ambient is Surface.HYPERBOLOID:
            if self.bidegree is None or self.degree is not None:
                raise InvalidSpec("the hyperboloid takes a bidegree (a, b), not a degree")
            a, b = self.bidegree
            object.__setattr__(self, "bidegree", (int(a), int(b)))
            if a < 1 or b < 1 or a % 2 == 0 or b % 2 == 0:
                raise InvalidSpec(f"bidegree ({a},{b}) must have both entries odd and positive")
        else:
            if self.degree is None or self.bidegree is not None:
                raise InvalidSpec(f"{self.ambient.value} takes a degree, not a bidegree")
            if self.degree < 1:
                raise InvalidSpec(f"degree must be positive, got {self.degree}")
            if self.ambient is Surface.ELLIPSOID and self.degree % 2 == 0:
                raise InvalidSpec("ellipsoid curves are handled for odd bidegree (m, m) only")
        if self.orientable:
            if self.extremal_chi:
                raise InvalidSpec("extremal Euler characteristic applies to non-orientable curves only")
            if self.chi_F is not None and self.chi_F != self.orientable_chi():
                raise InvalidSpec(f"an orientable curve here has chi {self.orientable_chi()}, not {self.chi_F}")
            return
        if self.ambient is not Surface.CP2:
            raise InvalidSpec("non-orientable flexible curves are handled in the projective plane only")
        if self.extremal_chi and self.chi_F is not None:
            raise InvalidSpec("give either an explicit chi or the extremal flag, not both")
        if not self.extremal_chi:
            if self.chi_F is None:
                raise MissingChi("non-orientable curves need an Euler characteristic (or the extremal flag)")
            if self.chi_F > 1:
                raise InvalidSpec(f"non-orientable surfaces have chi <= 1, got {self.chi_F}")
            if self.degree % 2 and self.chi_F % 2:
                raise InvalidSpec(f"odd degree forces an even Euler characteristic, got {self.chi_F}")

    def orientable_chi(self) -> int:
        if self.ambient is Surface.HYPERBOLOID:
            a, b = self.bidegree
            return 2 - 2 * (a - 1) * (b - 1)
        m = self.degree
        if self.ambient is Surface.ELLIPSOID:
            return 2 - 2 * (m - 1) ** 2
        return 3 * m - m * m

    def extremal_genus(self) -> GenusValue:
        return genus_tilde(self.degree**2)

    @property
    def chi(self) -> int:
        """Euler characteristic of the curve surface actually used."""
        if self.orientable:
            return self.orientable_chi()
        if self.extremal_chi:
            return self.extremal_genus().value
        return self.chi_F

    @property
    def odd(self) -> bool:
        return self.degree is not None and self.degree % 2 == 1

    def to_json(self) -> dict:
        out: dict = {"ambient": self.ambient.value}
        if self.degree is not None:
            out["degree"] = self.degree
        else:
            out["bidegree"] = list(self.bidegree)
        out["orientable"] = self.orientable
        out["chi"] = self.chi
        out["q_flexible"] = self.q_flexible
        out["extremal_chi"] = self.extremal_chi
        return out
