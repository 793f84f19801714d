"""Prime-power arithmetic and the closed-form oval bounds, all exact."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import NotPrime, OutOfDomain

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_MR_DETERMINISTIC_LIMIT = 3_317_044_064_679_887_385_961_981
_TRIAL_LIMIT = 10_000


def _strong_probable_prime(n: int, a: int) -> bool:
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    x = pow(a, d, n)
    if x in (1, n - 1):
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def _jacobi(a: int, n: int) -> int:
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def _strong_lucas(n: int) -> bool:
    # Selfridge parameters: first D in 5, -7, 9, -11, ... with (D/n) = -1
    d = 5
    while True:
        j = _jacobi(d, n)
        if j == -1:
            break
        if j == 0 and abs(d) != n:
            return False
        d = -d - 2 if d > 0 else -d + 2
        if d == 13 and math.isqrt(n) ** 2 == n:
            return False
    p, q = 1, (1 - d) // 4
    k, s = n + 1, 0
    while k % 2 == 0:
        k //= 2
        s += 1

    def half(x: int) -> int:
        return (x + n if x % 2 else x) // 2 % n

    u, v, qk = 1, p, q % n
    for bit in bin(k)[3:]:
        u, v = u * v % n, (v * v - 2 * qk) % n
        qk = qk * qk % n
        if bit == "1":
            u, v = half(p * u + v), half(d * u + p * v)
            qk = qk * q % n
    if u == 0 or v == 0:
        return True
    for _ in range(s - 1):
        v = (v * v - 2 * qk) % n
        qk = qk * qk % n
        if v == 0:
            return True
    return False


def is_prime(n: int) -> bool:
    """Deterministic primality test (Miller–Rabin below 3.3e24, Baillie–PSW above)."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    if n < _MR_DETERMINISTIC_LIMIT:
        return all(_strong_probable_prime(n, a) for a in _SMALL_PRIMES)
    return _strong_probable_prime(n, 2) and _strong_lucas(n)


def _pollard_brent(n: int) -> int:
    """A non-trivial factor of the odd composite n."""
    for c in range(1, n):
        y, m, g, r, q = 2, 128, 1, 1, 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
    raise ArithmeticError(f"rho failed on {n}")


def factorize(m: int) -> dict[int, int]:
    """Prime factorization {p: exponent} of m ≥ 1."""
    if m < 1:
        raise OutOfDomain(f"cannot factor {m}")
    factors: dict[int, int] = {}
    for p in (2, 3):
        while m % p == 0:
            factors[p] = factors.get(p, 0) + 1
            m //= p
    p = 5
    while p <= _TRIAL_LIMIT and p * p <= m:
        for q in (p, p + 2):
            while m % q == 0:
                factors[q] = factors.get(q, 0) + 1
                m //= q
        p += 6
    stack = [m] if m > 1 else []
    while stack:
        n = stack.pop()
        if is_prime(n):
            factors[n] = factors.get(n, 0) + 1
            continue
        d = _pollard_brent(n)
        stack += [d, n // d]
    return dict(sorted(factors.items()))


def p_adic_valuation(p: int, m: int) -> int:
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if m < 1:
        raise OutOfDomain(f"valuation needs m >= 1, got {m}")
    count = 0
    while m % p == 0:
        m //= p
        count += 1
    return count


def largest_prime_power(m: int) -> int:
    """h(m): the largest prime power dividing m exactly."""
    if m <= 1:
        raise OutOfDomain(f"largest prime power needs m >= 2, got {m}")
    return max(p**k for p, k in factorize(m).items())


class BoundKind(enum.Enum):
    S = "s"
    VZ = "vz"
    ZVONILOV = "zvonilov"
    HYPERBOLOID = "hyperboloid"
    ELLIPSOID = "ellipsoid"
    NON_ORIENTABLE = "novz"
    HARNACK = "harnack"
    HARNACK_NON_ORIENTABLE = "harnack-no"


@dataclass(frozen=True)
class BoundValue:
    value: Fraction
    kind: BoundKind
    note: str = ""

    def __str__(self) -> str:
        return format_rational(self.value)


def format_rational(q: Fraction | int) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _odd_degree(m: int, least: int = 1) -> None:
    if m < least or m % 2 == 0:
        raise OutOfDomain(f"degree must be odd and >= {least}, got {m}")


def _s(m: int) -> Fraction:
    _odd_degree(m)
    value = Fraction((m - 1) ** 2, 4)
    assert value.denominator == 1
    return value


def _vz(m: int) -> Fraction:
    _odd_degree(m, 3)
    h = largest_prime_power(m)
    return Fraction((m - 3) ** 2, 4) + Fraction(m * m - h * h, 4 * h * h)


def _zvonilov(m: int) -> Fraction:
    _odd_degree(m)
    return Fraction((m - 1) * (m - 3), 4)


def _hyperboloid(a: int, b: int) -> Fraction:
    _odd_degree(a)
    _odd_degree(b)
    return Fraction(a * b + 1, 2)


def _ellipsoid(m: int) -> Fraction:
    _odd_degree(m)
    return Fraction(m * m + 1, 2)


def _non_orientable(m: int, chi: int) -> Fraction:
    _odd_degree(m)
    if chi % 2:
        raise OutOfDomain(f"a non-orientable odd-degree flexible curve has even Euler characteristic, got {chi}")
    return Fraction(-chi, 2) - Fraction(m * m - 1, 4) + m


def _harnack(m: int) -> Fraction:
    if m < 1:
        raise OutOfDomain(f"degree must be positive, got {m}")
    return Fraction((m - 1) * (m - 2), 2) + 1


def _harnack_no(chi: int) -> Fraction:
    if chi > 1:
        raise OutOfDomain(f"non-orientable surfaces have chi <= 1, got {chi}")
    return Fraction(3 - chi)


_NOTES = {
    BoundKind.S: "l0 + l- for Q-flexible curves of odd degree",
    BoundKind.VZ: "l0 + l- for flexible curves of odd degree",
    BoundKind.ZVONILOV: "l0 + l-; needs an extra genericity condition independent of Q-flexibility",
    BoundKind.HYPERBOLOID: "l0 + l- on the hyperboloid, odd bidegree",
    BoundKind.ELLIPSOID: "l0 + l- over all complement regions on the ellipsoid",
    BoundKind.NON_ORIENTABLE: "l0 + l- for Q-flexible non-orientable curves",
    BoundKind.HARNACK: "number of real components",
    BoundKind.HARNACK_NON_ORIENTABLE: "number of real components, non-orientable surface",
}


def evaluate_bound(kind: BoundKind | str, **params: int) -> BoundValue:
    """Evaluate a bound by kind. Parameters: ``m``, ``a``/``b``, ``chi``."""
    kind = BoundKind(kind)
    try:
        if kind is BoundKind.S:
            value = _s(params["m"])
        elif kind is BoundKind.VZ:
            value = _vz(params["m"])
        elif kind is BoundKind.ZVONILOV:
            value = _zvonilov(params["m"])
        elif kind is BoundKind.HYPERBOLOID:
            value = _hyperboloid(params["a"], params["b"])
        elif kind is BoundKind.ELLIPSOID:
            value = _ellipsoid(params["m"])
        elif kind is BoundKind.NON_ORIENTABLE:
            value = _non_orientable(params["m"], params["chi"])
        elif kind is BoundKind.HARNACK:
            value = _harnack(params["m"])
        else:
            value = _harnack_no(params["chi"])
    except KeyError as exc:
        raise OutOfDomain(f"bound {kind.value} needs parameter {exc.args[0]!r}") from None
    return BoundValue(value, kind, _NOTES[kind])


def vz_minus_s(m: int) -> Fraction:
    """Closed form of VZ(m) − S(m), computed without evaluating either bound."""
    _odd_degree(m, 3)
    k = m // largest_prime_power(m)
    return Fraction(k * k - 4 * m + 7, 4)


@dataclass(frozen=True)
class MpCertificate:
    p: int
    m: int
    divisible_by_5: bool
    divisible_by_7: bool
    h: int
    vz_minus_s: Fraction

    @property
    def odd(self) -> bool:
        return self.m % 2 == 1


def mp_sequence(p: int) -> MpCertificate:
    """m_p = 1287·429^(12p+1), a family of degrees where VZ(m) exceeds S(m)."""
    if p < 0:
        raise OutOfDomain(f"p must be non-negative, got {p}")
    m = 1287 * 429 ** (12 * p + 1)
    return MpCertificate(
        p=p,
        m=m,
        divisible_by_5=(m + 2) % 5 == 0,
        divisible_by_7=(m + 2) % 7 == 0,
        h=largest_prime_power(m),
        vz_minus_s=vz_minus_s(m),
    )
