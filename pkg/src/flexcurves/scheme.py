"""Real schemes as nesting forests: parsing, canonical text, region
classification, lifting to the double cover, and enumeration.

Text grammar (ASCII, with typographic synonyms)::

    scheme  := '<' [items] '>' | '<' [copies] pair (':' | ',') zones '>'
    items   := item (('+' | ',' | '⊔') item)*
    item    := 'J' | NAT | NAT '<' items '>'
    pair    := '(' INT ',' INT ')'
    zones   := items? ('|' items?)*

``⟨`` and ``⟩`` are accepted in place of ``<`` and ``>``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from itertools import groupby
from math import gcd
from typing import Iterable, Sequence

from .errors import AmbientMismatch, SchemeSyntaxError, UnsupportedAmbient


class Ambient(enum.Enum):
    PROJECTIVE_ODD = "cp2-odd"
    PROJECTIVE_EVEN = "cp2-even"
    HYPERBOLOID = "hyperboloid"
    ELLIPSOID = "ellipsoid"

    @classmethod
    def coerce(cls, value: "Ambient | str") -> "Ambient":
        if isinstance(value, cls):
            return value
        try:
            return cls(value)
        except ValueError:
            raise UnsupportedAmbient(f"unknown ambient {value!r}") from None


class OvalNode:
    """An oval together with the ovals it immediately contains.

    Children are stored in canonical order, so structural equality is
    equality of canonical text.
    """

    __slots__ = ("children", "size", "text")

    def __init__(self, children: Iterable["OvalNode"] = ()) -> None:
        kids = canonical_forest(children)
        self.children: tuple[OvalNode, ...] = kids
        self.size: int = 1 + sum(c.size for c in kids)
        self.text: str = "1" if not kids else f"1<{format_forest(kids)}>"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, OvalNode) and self.text == other.text

    def __hash__(self) -> int:
        return hash(self.text)

    def __repr__(self) -> str:
        return f"OvalNode({self.text!r})"

    def sort_key(self) -> tuple[int, str]:
        return (-self.size, self.text)

    def walk(self) -> Iterable["OvalNode"]:
        yield self
        for child in self.children:
            yield from child.walk()


Forest = tuple[OvalNode, ...]


def canonical_forest(nodes: Iterable[OvalNode]) -> Forest:
    return tuple(sorted(nodes, key=OvalNode.sort_key))


def format_forest(forest: Sequence[OvalNode]) -> str:
    """Canonical text for an already-sorted forest (no surrounding brackets)."""
    parts = []
    for text, run in groupby(node.text for node in forest):
        count = sum(1 for _ in run)
        parts.append(str(count) if text == "1" else f"{count}{text[1:]}")
    return " + ".join(parts)


def forest_size(forest: Iterable[OvalNode]) -> int:
    return sum(node.size for node in forest)


@dataclass(frozen=True)
class TorusClass:
    alpha: int
    beta: int
    copies: int = 1


@dataclass(frozen=True)
class RealScheme:
    ambient: Ambient
    forest: Forest = ()
    pseudo_line: bool = False
    torus_class: TorusClass | None = None
    zones: tuple[Forest, ...] | None = None

    def __post_init__(self) -> None:
        amb = Ambient.coerce(self.ambient)
        object.__setattr__(self, "ambient", amb)
        object.__setattr__(self, "forest", canonical_forest(self.forest))
        if amb is Ambient.HYPERBOLOID:
            self._init_torus()
            return
        if self.torus_class is not None or self.zones is not None:
            raise AmbientMismatch(f"torus data is only meaningful on the hyperboloid, not {amb.value}")
        if amb is Ambient.PROJECTIVE_ODD and not self.pseudo_line:
            raise AmbientMismatch("odd-degree plane schemes need exactly one pseudo-line J")
        if amb is not Ambient.PROJECTIVE_ODD and self.pseudo_line:
            raise AmbientMismatch(f"a pseudo-line J cannot occur in a {amb.value} scheme")

    def _init_torus(self) -> None:
        tc = self.torus_class
        if tc is None:
            raise AmbientMismatch("hyperboloid schemes need a torus class (alpha, beta)")
        if self.pseudo_line:
            raise AmbientMismatch("a pseudo-line J cannot occur in a hyperboloid scheme")
        if self.forest:
            raise AmbientMismatch("hyperboloid ovals must be placed in zones")
        if tc.alpha % 2 == 0 or tc.beta % 2 == 0:
            raise AmbientMismatch(f"torus class ({tc.alpha},{tc.beta}) must have both entries odd")
        if gcd(tc.alpha, tc.beta) != 1:
            raise AmbientMismatch(f"torus class ({tc.alpha},{tc.beta}) must be primitive")
        if tc.copies < 1:
            raise AmbientMismatch("at least one copy of the torus curve is required")
        if tc.alpha < 0:
            tc = TorusClass(-tc.alpha, -tc.beta, tc.copies)
            object.__setattr__(self, "torus_class", tc)
        zones = self.zones if self.zones is not None else ((),) * tc.copies
        zones = tuple(canonical_forest(z) for z in zones)
        if len(zones) != tc.copies:
            raise AmbientMismatch(f"{tc.copies} copies need {tc.copies} zones, got {len(zones)}")
        # zones are cyclically ordered around the torus; pick the least rotation
        texts = [format_forest(z) for z in zones]
        best = min(range(len(zones)), key=lambda r: texts[r:] + texts[:r])
        object.__setattr__(self, "zones", zones[best:] + zones[:best])

    @property
    def ovals(self) -> int:
        if self.zones is not None:
            return sum(forest_size(z) for z in self.zones)
        return forest_size(self.forest)

    @property
    def b0(self) -> int:
        """Number of connected components of the real part."""
        if self.torus_class is not None:
            return self.ovals + self.torus_class.copies
        return self.ovals + int(self.pseudo_line)

    def with_extra_oval(self) -> "RealScheme":
        """Same scheme with one more empty oval at the outermost level."""
        if self.zones is not None:
            zones = (self.zones[0] + (OvalNode(),),) + self.zones[1:]
            return RealScheme(self.ambient, (), False, self.torus_class, zones)
        return RealScheme(self.ambient, self.forest + (OvalNode(),), self.pseudo_line)

    def __str__(self) -> str:
        return format_scheme(self)


# ---------------------------------------------------------------- parsing

_SYMBOLS = {
    "<": "LT", "⟨": "LT", ">": "GT", "⟩": "GT",
    "+": "SEP", "⊔": "SEP", ",": "SEP",
    "|": "BAR", ":": "COLON", "(": "LP", ")": "RP", "J": "J",
}
_DIGITS = frozenset("0123456789")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch in _SYMBOLS:
            tokens.append((_SYMBOLS[ch], ch, i))
            i += 1
        elif ch in _DIGITS or (ch == "-" and i + 1 < n and text[i + 1] in _DIGITS):
            j = i + 1
            while j < n and text[j] in _DIGITS:
                j += 1
            tokens.append(("INT", text[i:j], i))
            i = j
        else:
            raise SchemeSyntaxError(f"unexpected character {ch!r}", i)
    tokens.append(("EOF", "", n))
    return tokens


class _Parser:
    def __init__(self, text: str) -> None:
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self, offset: int = 0) -> tuple[str, str, int]:
        return self.tokens[min(self.i + offset, len(self.tokens) - 1)]

    def take(self, kind: str, what: str) -> tuple[str, str, int]:
        tok = self.peek()
        if tok[0] != kind:
            found = tok[1] or "end of input"
            raise SchemeSyntaxError(f"expected {what}, found {found!r}", tok[2])
        self.i += 1
        return tok

    def nat(self) -> int:
        tok = self.take("INT", "a count")
        if tok[1].startswith("-"):
            raise SchemeSyntaxError("counts must be non-negative", tok[2])
        return int(tok[1])

    def scheme(self):
        self.take("LT", "'<'")
        kind = self.peek()[0]
        if kind == "LP" or (kind == "INT" and self.peek(1)[0] == "LP"):
            result = ("torus",) + self.torus_body()
        elif kind == "GT":
            result = ("plain", [], 0)
        else:
            result = ("plain",) + self.items(top=True)
        self.take("GT", "'>'")
        self.take("EOF", "end of input")
        return result

    def torus_body(self):
        copies = self.nat() if self.peek()[0] == "INT" else 1
        self.take("LP", "'('")
        alpha = int(self.take("INT", "an integer")[1])
        tok = self.take("SEP", "','")
        if tok[1] != ",":
            raise SchemeSyntaxError("expected ',' inside the torus class", tok[2])
        beta = int(self.take("INT", "an integer")[1])
        self.take("RP", "')'")
        zones: list[list[OvalNode]] = []
        if self.peek()[0] in ("COLON", "SEP"):
            self.i += 1
            zones.append(self.zone())
            while self.peek()[0] == "BAR":
                self.i += 1
                zones.append(self.zone())
        return TorusClass(alpha, beta, copies), zones

    def zone(self) -> list[OvalNode]:
        if self.peek()[0] in ("BAR", "GT"):
            return []
        return self.items(top=False)[0]

    def items(self, top: bool) -> tuple[list[OvalNode], int]:
        nodes, j_count = self.item(top)
        while self.peek()[0] == "SEP":
            self.i += 1
            more, js = self.item(top)
            nodes += more
            j_count += js
        return nodes, j_count

    def item(self, top: bool) -> tuple[list[OvalNode], int]:
        tok = self.peek()
        if tok[0] == "J":
            if not top:
                raise AmbientMismatch(f"a pseudo-line cannot sit inside an oval or zone (column {tok[2] + 1})")
            self.i += 1
            return [], 1
        count = self.nat()
        if self.peek()[0] == "LT":
            if count == 0:
                raise SchemeSyntaxError("a nest needs a positive multiplicity", tok[2])
            self.i += 1
            inner, _ = self.items(top=False)
            self.take("GT", "'>'")
            node = OvalNode(inner)
            return [node] * count, 0
        return [OvalNode() for _ in range(count)], 0


def parse_scheme(text: str, ambient: Ambient | str) -> RealScheme:
    """Parse scheme text for the given ambient and return its canonical form."""
    amb = Ambient.coerce(ambient)
    parsed = _Parser(text).scheme()
    if parsed[0] == "torus":
        _, tc, zones = parsed
        if amb is not Ambient.HYPERBOLOID:
            raise AmbientMismatch(f"torus-class notation needs the hyperboloid, not {amb.value}")
        if not zones:
            zones = [[] for _ in range(tc.copies)]
        return RealScheme(amb, (), False, tc, tuple(tuple(z) for z in zones))
    _, nodes, j_count = parsed
    if amb is Ambient.HYPERBOLOID:
        raise AmbientMismatch("hyperboloid schemes are written '<k(a,b): zone | ...>'")
    if j_count > 1:
        raise AmbientMismatch(f"found {j_count} pseudo-lines, at most one is allowed")
    return RealScheme(amb, tuple(nodes), j_count == 1)


def format_scheme(scheme: RealScheme) -> str:
    if scheme.ambient is Ambient.HYPERBOLOID:
        tc = scheme.torus_class
        body = " ".join(" | ".join(format_forest(z) for z in scheme.zones).split())
        head = f"<{tc.copies}({tc.alpha},{tc.beta}):"
        return f"{head} {body}>" if body else f"{head}>"
    parts = (["J"] if scheme.pseudo_line else []) + ([format_forest(scheme.forest)] if scheme.forest else [])
    return "<" + " + ".join(parts) + ">"


# --------------------------------------------------------- classification


@dataclass(frozen=True)
class RegionStats:
    total_ovals: int
    l_plus: int
    l_zero: int
    l_minus: int
    exterior_count: int
    chi_J: int | None
    region_chis: tuple[tuple[str, int], ...]

    @property
    def l_zero_minus(self) -> int:
        return self.l_zero + self.l_minus


def _oval_regions(forest: Forest, prefix: str) -> list[tuple[str, int]]:
    out = []
    for idx, node in enumerate(forest, 1):
        rid = f"{prefix}{idx}"
        out.append((rid, 1 - len(node.children)))
        out.extend(_oval_regions(node.children, rid + "."))
    return out


def classify_regions(scheme: RealScheme) -> RegionStats:
    """Euler characteristics of the complement regions and the ℓ± counts.

    Each oval bounds, from outside, a region of Euler characteristic
    1 − (number of ovals it directly contains).
    """
    amb = scheme.ambient
    chi_J = None
    if amb is Ambient.HYPERBOLOID:
        counted: list[tuple[str, int]] = []
        extra: list[tuple[str, int]] = []
        for z, forest in enumerate(scheme.zones, 1):
            extra.append((f"zone{z}", -len(forest)))
            counted.extend(_oval_regions(forest, f"z{z}:"))
        exterior = sum(len(z) for z in scheme.zones)
        regions = extra + counted
    else:
        exterior = len(scheme.forest)
        counted = _oval_regions(scheme.forest, "o")
        if amb is Ambient.PROJECTIVE_ODD:
            chi_J = 1 - exterior
            regions = [("J", chi_J)] + counted
        elif amb is Ambient.PROJECTIVE_EVEN:
            regions = [("outer", 1 - exterior)] + counted
        else:
            outer = ("outer", 2 - exterior)
            counted = [outer] + counted
            regions = counted
    chis = [chi for _, chi in counted]
    return RegionStats(
        total_ovals=scheme.ovals,
        l_plus=sum(1 for c in chis if c > 0),
        l_zero=sum(1 for c in chis if c == 0),
        l_minus=sum(1 for c in chis if c < 0),
        exterior_count=exterior,
        chi_J=chi_J,
        region_chis=tuple(regions),
    )


# ------------------------------------------------------------------ lift


@dataclass(frozen=True)
class LiftedScheme:
    """Real part of the lifted curve: oval forests on the covering surface.

    ``zones`` holds one forest per hemisphere (plane case) or per annulus
    (torus case); ``curve_copies`` counts lifted copies of the torus curve
    and ``non_doubled`` the components that lift to a single circle.
    """

    zones: tuple[Forest, ...]
    non_doubled: int
    curve_copies: int

    @property
    def ovals(self) -> int:
        return sum(forest_size(z) for z in self.zones)


def lift_real_scheme(scheme: RealScheme) -> LiftedScheme:
    if scheme.ambient is Ambient.PROJECTIVE_ODD:
        return LiftedScheme((scheme.forest, scheme.forest), non_doubled=1, curve_copies=0)
    if scheme.ambient is Ambient.HYPERBOLOID:
        # both entries odd, so every copy of the curve lifts to two circles
        return LiftedScheme(scheme.zones * 2, non_doubled=0, curve_copies=2 * scheme.torus_class.copies)
    raise UnsupportedAmbient(f"no lift rule for {scheme.ambient.value} schemes")


# ------------------------------------------------------------ enumeration


@lru_cache(maxsize=None)
def _trees(n: int) -> tuple[OvalNode, ...]:
    """All rooted trees with n ovals, in a fixed order."""
    return tuple(OvalNode(f) for f in _forests(n - 1, n - 1, None))


@lru_cache(maxsize=None)
def _forests(n: int, max_size: int, max_index: int | None) -> tuple[Forest, ...]:
    """Multisets of trees totalling n ovals, each listed once.

    Trees are emitted in non-increasing (size, index) order, which is what
    makes every multiset appear exactly once.
    """
    if n == 0:
        return ((),)
    out = []
    for size in range(min(n, max_size), 0, -1):
        trees = _trees(size)
        top = len(trees) - 1 if size < max_size or max_index is None else max_index
        for idx in range(top + 1):
            for rest in _forests(n - size, size, idx):
                out.append((trees[idx],) + rest)
    return tuple(out)


def enumerate_schemes(n_ovals: int, ambient: Ambient | str = Ambient.PROJECTIVE_ODD) -> list[RealScheme]:
    """Every scheme with exactly ``n_ovals`` ovals, sorted by canonical text."""
    amb = Ambient.coerce(ambient)
    if amb is Ambient.HYPERBOLOID:
        raise UnsupportedAmbient("enumeration needs zone assignments on the hyperboloid")
    if n_ovals < 0:
        raise ValueError("n_ovals must be non-negative")
    schemes = [RealScheme(amb, f, amb is Ambient.PROJECTIVE_ODD) for f in _forests(n_ovals, n_ovals, None)]
    return sorted(schemes, key=format_scheme)
