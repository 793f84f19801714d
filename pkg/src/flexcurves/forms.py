"""Z/4-valued quadratic refinements of Z/2 intersection forms, their Brown
invariants, and the congruences that use them."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Mapping, Sequence

from . import _kernels
from .errors import (
    DegenerateForm,
    DimensionMismatch,
    InvalidForm,
    OddDifference,
    ParityError,
    ParityViolation,
)

Matrix = tuple[tuple[int, ...], ...]


def _as_matrix(rows: Sequence[Sequence[int]]) -> Matrix:
    m = tuple(tuple(int(v) for v in row) for row in rows)
    n = len(m)
    if any(len(row) != n for row in m):
        raise DimensionMismatch(f"bilinear form must be square, got {[len(r) for r in m]} columns for {n} rows")
    if any(v not in (0, 1) for row in m for v in row):
        raise InvalidForm("bilinear form entries must be 0 or 1")
    if any(m[i][j] != m[j][i] for i in range(n) for j in range(i)):
        raise InvalidForm("bilinear form must be symmetric")
    return m


def _check_parity(bilinear: Matrix, index: int, residue: int) -> None:
    if residue % 2 != bilinear[index][index]:
        raise ParityViolation(
            f"phi(e{index}) = {residue} must have the parity of the self-pairing {bilinear[index][index]}"
        )


@dataclass(frozen=True)
class QuadraticForm:
    bilinear: Matrix
    phi: tuple[int, ...]

    def __post_init__(self) -> None:
        b = _as_matrix(self.bilinear)
        phi = tuple(int(v) % 4 for v in self.phi)
        if len(phi) != len(b):
            raise DimensionMismatch(f"{len(b)} basis vectors but {len(phi)} values of phi")
        for i, v in enumerate(phi):
            _check_parity(b, i, v)
        object.__setattr__(self, "bilinear", b)
        object.__setattr__(self, "phi", phi)

    @property
    def rank(self) -> int:
        return len(self.phi)

    def row_masks(self) -> list[int]:
        return [sum(bit << j for j, bit in enumerate(row)) for row in self.bilinear]

    def pair(self, x: Sequence[int], y: Sequence[int]) -> int:
        return sum(x[i] * self.bilinear[i][j] * y[j] for i in range(self.rank) for j in range(self.rank)) % 2

    @classmethod
    def from_json(cls, data: Mapping) -> "QuadraticForm":
        try:
            q = cls(data["bilinear"], data["phi"])
        except KeyError as exc:
            raise InvalidForm(f"form JSON lacks {exc.args[0]!r}") from None
        if "rank" in data and int(data["rank"]) != q.rank:
            raise DimensionMismatch(f"rank {data['rank']} does not match the {q.rank}x{q.rank} matrix")
        return q

    def to_json(self) -> dict:
        return {"rank": self.rank, "bilinear": [list(r) for r in self.bilinear], "phi": list(self.phi)}


def _vector(q: QuadraticForm, x: Sequence[int] | int) -> tuple[int, ...]:
    if isinstance(x, int):
        if x < 0 or x >> q.rank:
            raise DimensionMismatch(f"bit mask {x} has more than {q.rank} bits")
        return tuple((x >> i) & 1 for i in range(q.rank))
    if len(x) != q.rank:
        raise DimensionMismatch(f"vector of length {len(x)} for a rank-{q.rank} form")
    return tuple(int(v) % 2 for v in x)


def evaluate_form(q: QuadraticForm, x: Sequence[int] | int) -> int:
    """phi(x), extended from the basis by phi(u+v) = phi(u) + phi(v) + 2·B(u, v)."""
    v = _vector(q, x)
    support = [i for i, bit in enumerate(v) if bit]
    total = sum(q.phi[i] for i in support)
    cross = sum(q.bilinear[i][j] for a, i in enumerate(support) for j in support[a + 1:])
    return (total + 2 * cross) % 4


@dataclass(frozen=True)
class GaussianInteger:
    re: int
    im: int

    def norm(self) -> int:
        return self.re * self.re + self.im * self.im

    def __str__(self) -> str:
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}i"
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}i"


@dataclass(frozen=True)
class BrownResult:
    beta: int
    gauss_sum: GaussianInteger


def gauss_sum(q: QuadraticForm) -> GaussianInteger:
    """Sum of i^phi(x) over all x, computed exactly."""
    n0, n1, n2, n3 = _kernels.residue_counts(q.row_masks(), list(q.phi))
    return GaussianInteger(n0 - n2, n1 - n3)


def _match_root(total: GaussianInteger, rank: int) -> int | None:
    if rank % 2 == 0:
        s = 1 << (rank // 2)
        table = {(s, 0): 0, (0, s): 2, (-s, 0): 4, (0, -s): 6}
    else:
        t = 1 << ((rank - 1) // 2)
        table = {(t, t): 1, (-t, t): 3, (-t, -t): 5, (t, -t): 7}
    return table.get((total.re, total.im))


def brown(q: QuadraticForm) -> BrownResult:
    """Brown invariant: the Gauss sum equals 2^(b/2)·exp(2πi·beta/8)."""
    total = gauss_sum(q)
    beta = _match_root(total, q.rank)
    if beta is None:
        raise DegenerateForm(f"Gauss sum {total} is not 2^(b/2) times an eighth root of unity; is B singular?")
    return BrownResult(beta, total)


def enumerate_betas(bilinear: Sequence[Sequence[int]], phi_choices: Sequence[Iterable[int]]) -> frozenset[int]:
    b = _as_matrix(bilinear)
    choices = [sorted({int(v) % 4 for v in options}) for options in phi_choices]
    if len(choices) != len(b):
        raise DimensionMismatch(f"{len(b)} basis vectors but {len(choices)} choice lists")
    for i, options in enumerate(choices):
        if not options:
            raise ParityViolation(f"no admissible value for phi(e{i})")
        for v in options:
            _check_parity(b, i, v)
    return frozenset(brown(QuadraticForm(b, phi)).beta for phi in product(*choices))


def direct_sum(q1: QuadraticForm, q2: QuadraticForm) -> QuadraticForm:
    n1, n2 = q1.rank, q2.rank
    rows = [list(r) + [0] * n2 for r in q1.bilinear] + [[0] * n1 + list(r) for r in q2.bilinear]
    return QuadraticForm(rows, q1.phi + q2.phi)


def _gf2_rank(vectors: Sequence[int]) -> int:
    basis: list[int] = []
    for v in vectors:
        for w in basis:
            v = min(v, v ^ w)
        if v:
            basis.append(v)
    return len(basis)


def change_basis(q: QuadraticForm, new_basis: Sequence[Sequence[int]]) -> QuadraticForm:
    """The same form written in another basis (rows of ``new_basis``)."""
    vectors = [_vector(q, v) for v in new_basis]
    masks = [sum(bit << i for i, bit in enumerate(v)) for v in vectors]
    if len(vectors) != q.rank or _gf2_rank(masks) != q.rank:
        raise DimensionMismatch("new basis must consist of rank-many independent vectors")
    bilinear = [[q.pair(u, v) for v in vectors] for u in vectors]
    return QuadraticForm(bilinear, [evaluate_form(q, v) for v in vectors])


@dataclass(frozen=True)
class GMVerdict:
    consistent: bool
    required: int
    beta_set: frozenset[int]

    @property
    def label(self) -> str:
        return "consistent" if self.consistent else "contradiction"


def guillou_marin_check(sigma: int, e: int, beta_set: Iterable[int]) -> GMVerdict:
    """Characteristic surfaces satisfy sigma − e ≡ 2·beta (mod 16)."""
    if (sigma - e) % 2:
        raise OddDifference(f"sigma - e = {sigma - e} is odd")
    required = ((sigma - e) // 2) % 8
    betas = frozenset(v % 8 for v in beta_set)
    return GMVerdict(required in betas, required, betas)


def yamada_residue(e: int, chi: int) -> int:
    return (e + 2 * chi) % 4


def yamada_consistent(e: int, chi: int, q: int) -> bool:
    """Whether e + 2χ matches the class residue q mod 4."""
    return yamada_residue(e, chi) == q % 4


def ellipsoid_gm_residue(m: int) -> int:
    if m % 2 == 0:
        raise ParityError(f"odd degree required, got {m}")
    return -((m + 1) ** 2) % 8


RP2_BILINEAR: Matrix = ((1,),)
RP2_CHOICES = ((1, 3),)
KLEIN_BILINEAR: Matrix = ((1, 1), (1, 0))
KLEIN_CHOICES = ((1, 3), (0, 2))
PRESETS = {
    "rp2": (RP2_BILINEAR, RP2_CHOICES),
    "klein": (KLEIN_BILINEAR, KLEIN_CHOICES),
}


def backend() -> str:
    return _kernels.BACKEND
