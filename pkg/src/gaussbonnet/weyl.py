"""Classical Weyl groups acting on maximal-torus points by signed permutations.

A torus point is a tuple of coordinates in C*.  Each coordinate is modelled
exactly as a root of unity times a monomial in formal generic generators
``g1, g2, ...``, so Weyl-group actions (permute, invert) keep equality
decidable and "generic" points are symbolic rather than sampled.
"""

from __future__ import annotations

import math
import re
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import InvalidInputError, ParseError, ResourceLimitError

SERIES = ("A", "B", "C", "D")
REALIZATIONS = ("SL", "GL")
MAX_RANK = 6
DEFAULT_ORDER_CAP = 2**20


@dataclass(frozen=True)
class CoordValue:
    """exp(2*pi*i*torsion) * prod(g_j ** exponents[j])."""

    torsion: Fraction = Fraction(0)
    exponents: tuple[int, ...] = ()

    def __post_init__(self):
        t = Fraction(self.torsion) % 1
        exps = tuple(int(e) for e in self.exponents)
        while exps and exps[-1] == 0:
            exps = exps[:-1]
        object.__setattr__(self, "torsion", t)
        object.__setattr__(self, "exponents", exps)

    @classmethod
    def generic(cls, index: int, power: int = 1) -> CoordValue:
        """The monomial g_index ** power (generators are 1-based)."""
        if index < 1:
            raise InvalidInputError(f"generic generator index must be >= 1, got {index}")
        exps = [0] * index
        exps[index - 1] = power
        return cls(Fraction(0), tuple(exps))

    @classmethod
    def root_of_unity(cls, torsion) -> CoordValue:
        return cls(Fraction(torsion), ())

    def __mul__(self, other: CoordValue) -> CoordValue:
        n = max(len(self.exponents), len(other.exponents))
        a = self.exponents + (0,) * (n - len(self.exponents))
        b = other.exponents + (0,) * (n - len(other.exponents))
        return CoordValue(self.torsion + other.torsion, tuple(x + y for x, y in zip(a, b)))

    def inverse(self) -> CoordValue:
        return CoordValue(-self.torsion, tuple(-e for e in self.exponents))

    def is_identity(self) -> bool:
        return self.torsion == 0 and not self.exponents

    def __str__(self):
        parts = []
        for j, e in enumerate(self.exponents, start=1):
            if e == 1:
                parts.append(f"g{j}")
            elif e:
                parts.append(f"g{j}^{e}")
        if self.torsion:
            parts.append(f"w:{self.torsion.numerator}/{self.torsion.denominator}")
        return "*".join(parts) if parts else "1"

    @classmethod
    def parse(cls, text: str) -> CoordValue:
        """Parse ``g1``, ``g2^-1``, ``w:1/3``, ``1`` and ``*``-products of these."""
        text = text.strip()
        if not text:
            raise ParseError("empty coordinate expression")
        value = cls()
        for factor in text.split("*"):
            factor = factor.strip()
            if factor == "1":
                continue
            m = _GENERIC_RE.fullmatch(factor)
            if m:
                power = int(m.group(2)) if m.group(2) is not None else 1
                value = value * cls.generic(int(m.group(1)), power)
                continue
            m = _TORSION_RE.fullmatch(factor)
            if m:
                den = int(m.group(2)) if m.group(2) is not None else 1
                if den == 0:
                    raise ParseError(f"zero denominator in {factor!r}")
                value = value * cls.root_of_unity(Fraction(int(m.group(1)), den))
                continue
            raise ParseError(f"bad coordinate factor {factor!r}")
        return value


_GENERIC_RE = re.compile(r"g([1-9][0-9]*)(?:\^(-?[0-9]+))?")
_TORSION_RE = re.compile(r"w:(-?[0-9]+)(?:/([0-9]+))?")


@dataclass(frozen=True)
class TorusPoint:
    coords: tuple[CoordValue, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(self.coords))

    @classmethod
    def identity(cls, n: int) -> TorusPoint:
        return cls((CoordValue(),) * n)

    @classmethod
    def parse(cls, spec: str) -> TorusPoint:
        """Comma-separated coordinate expressions, e.g. ``"g1,g1,g2^-1"``."""
        return cls(tuple(CoordValue.parse(c) for c in spec.split(",")))

    def __len__(self):
        return len(self.coords)

    def __mul__(self, other: TorusPoint) -> TorusPoint:
        if len(self) != len(other):
            raise InvalidInputError("torus points of different lengths")
        return TorusPoint(tuple(a * b for a, b in zip(self.coords, other.coords)))

    def inverse(self) -> TorusPoint:
        return TorusPoint(tuple(c.inverse() for c in self.coords))

    def is_identity(self) -> bool:
        return all(c.is_identity() for c in self.coords)

    def __str__(self):
        return "(" + ", ".join(str(c) for c in self.coords) + ")"


@dataclass(frozen=True)
class WeylElement:
    """Signed permutation: ``perm[j]`` is the image of coordinate ``j``.

    Acting on a torus point, result coordinate ``i`` is input coordinate
    ``perm^-1(i)``, inverted when ``signs[i] == -1``.
    """

    perm: tuple[int, ...]
    signs: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.perm) != list(range(len(self.perm))):
            raise InvalidInputError(f"not a permutation: {self.perm}")
        if len(self.signs) != len(self.perm) or any(s not in (1, -1) for s in self.signs):
            raise InvalidInputError(f"bad signs {self.signs}")

    @classmethod
    def identity(cls, n: int) -> WeylElement:
        return cls(tuple(range(n)), (1,) * n)

    @property
    def size(self) -> int:
        return len(self.perm)

    def _preimage(self) -> list[int]:
        inv = [0] * len(self.perm)
        for j, i in enumerate(self.perm):
            inv[i] = j
        return inv

    def compose(self, other: WeylElement) -> WeylElement:
        """``self o other``: act by ``other`` first, then by ``self``."""
        if self.size != other.size:
            raise InvalidInputError("composing Weyl elements of different sizes")
        inv = self._preimage()
        perm = tuple(self.perm[other.perm[j]] for j in range(self.size))
        signs = tuple(self.signs[i] * other.signs[inv[i]] for i in range(self.size))
        return WeylElement(perm, signs)

    __matmul__ = compose

    def inverse(self) -> WeylElement:
        inv = self._preimage()
        # w^-1 sends i back to inv[i]; its sign at j undoes the sign w put at perm[j]
        return WeylElement(tuple(inv), tuple(self.signs[self.perm[j]] for j in range(self.size)))

    def is_identity(self) -> bool:
        return self.perm == tuple(range(self.size)) and all(s == 1 for s in self.signs)

    def matrix(self) -> list[list[int]]:
        """Signed permutation matrix M with M[i][perm^-1(i)] = signs[i]."""
        inv = self._preimage()
        return [[self.signs[i] if j == inv[i] else 0 for j in range(self.size)]
                for i in range(self.size)]


@dataclass(frozen=True)
class RootSystem:
    series: str
    rank: int
    realization: str | None = None

    @property
    def coordinate_count(self) -> int:
        if self.series == "A" and (self.realization == "GL" or self.rank >= 2):
            return self.rank + 1
        return self.rank

    @property
    def simple_reflections(self) -> tuple[WeylElement, ...]:
        return _simple_reflections(self)

    @property
    def order(self) -> int:
        """The classical order of W, independent of enumeration."""
        n = self.rank
        if self.series == "A":
            return math.factorial(n + 1)
        if self.series in ("B", "C"):
            return 2**n * math.factorial(n)
        return 2 ** (n - 1) * math.factorial(n)

    @property
    def torus_dim(self) -> int:
        """Dimension of the maximal torus (the rank of G)."""
        if self.series == "A" and self.realization == "GL":
            return self.rank + 1
        return self.rank

    @property
    def group_dim(self) -> int:
        """dim G for GL_{n+1}, SL_{n+1}, SO_{2n+1}, Sp_{2n}, SO_{2n}."""
        n = self.rank
        if self.series == "A":
            return (n + 1) ** 2 - (self.realization == "SL")
        if self.series in ("B", "C"):
            return n * (2 * n + 1)
        return n * (2 * n - 1)

    def identity_point(self) -> TorusPoint:
        return TorusPoint.identity(self.coordinate_count)

    def __str__(self):
        if self.series == "A":
            return f"A{self.rank} ({self.realization}-type)"
        return f"{self.series}{self.rank}"


def build_root_system(series: str, rank: int, realization: str | None = None) -> RootSystem:
    """Validate and build a classical root system.

    ``realization`` applies to series A only and defaults to ``"GL"``; it is
    ignored (normalised to ``None``) for B, C, D.
    """
    series = str(series).upper()
    if series not in SERIES:
        raise InvalidInputError(f"unsupported series {series!r}; expected one of {SERIES}")
    if isinstance(rank, bool) or not isinstance(rank, int):
        raise InvalidInputError(f"rank must be an integer, got {rank!r}")
    if not 1 <= rank <= MAX_RANK:
        raise InvalidInputError(f"rank must lie in 1..{MAX_RANK}, got {rank}")
    if series == "D" and rank < 2:
        raise InvalidInputError("series D requires rank >= 2")
    if series == "A":
        realization = (realization or "GL").upper()
        if realization not in REALIZATIONS:
            raise InvalidInputError(f"realization must be SL or GL, got {realization!r}")
    else:
        realization = None
    return RootSystem(series, rank, realization)


def _swap(n: int, i: int, j: int, invert: bool = False) -> WeylElement:
    perm = list(range(n))
    perm[i], perm[j] = j, i
    signs = [1] * n
    if invert:
        signs[i] = signs[j] = -1
    return WeylElement(tuple(perm), tuple(signs))


def _flip(n: int, i: int) -> WeylElement:
    signs = [1] * n
    signs[i] = -1
    return WeylElement(tuple(range(n)), tuple(signs))


@lru_cache(maxsize=None)
def _simple_reflections(rs: RootSystem) -> tuple[WeylElement, ...]:
    n = rs.coordinate_count
    if rs.series == "A":
        if n == 1:
            # A1 on the SL2 torus diag(x, 1/x), recorded by x alone
            return (_flip(1, 0),)
        return tuple(_swap(n, i, i + 1) for i in range(n - 1))
    swaps = [_swap(n, i, i + 1) for i in range(n - 1)]
    if rs.series in ("B", "C"):
        return tuple(swaps) + (_flip(n, n - 1),)
    return tuple(swaps) + (_swap(n, n - 2, n - 1, invert=True),)


def weyl_group(rs: RootSystem, cap: int = DEFAULT_ORDER_CAP) -> tuple[WeylElement, ...]:
    """All elements of W, in breadth-first order from the identity.

    Words are extended on the right by simple reflections in their fixed
    order, so the ordering is deterministic.
    """
    return _weyl_group(rs, cap)


@lru_cache(maxsize=32)
def _weyl_group(rs: RootSystem, cap: int) -> tuple[WeylElement, ...]:
    gens = rs.simple_reflections
    start = WeylElement.identity(rs.coordinate_count)
    seen = {start}
    elements = [start]
    queue = deque([start])
    while queue:
        w = queue.popleft()
        for s in gens:
            ws = w.compose(s)
            if ws not in seen:
                if len(elements) >= cap:
                    raise ResourceLimitError(f"Weyl group of {rs} exceeds order cap {cap}")
                seen.add(ws)
                elements.append(ws)
                queue.append(ws)
    return tuple(elements)


def act(w: WeylElement, t: TorusPoint) -> TorusPoint:
    if w.size != len(t):
        raise InvalidInputError(
            f"Weyl element on {w.size} coordinates cannot act on a point with {len(t)}")
    inv = w._preimage()
    out = []
    for i in range(w.size):
        c = t.coords[inv[i]]
        out.append(c.inverse() if w.signs[i] == -1 else c)
    return TorusPoint(tuple(out))


def _check_point(rs: RootSystem, t: TorusPoint):
    if len(t) != rs.coordinate_count:
        raise InvalidInputError(
            f"{rs} acts on {rs.coordinate_count} coordinates, point has {len(t)}")


def orbit(rs: RootSystem, t: TorusPoint, cap: int = DEFAULT_ORDER_CAP) -> frozenset[TorusPoint]:
    _check_point(rs, t)
    return frozenset(act(w, t) for w in weyl_group(rs, cap))


def stabilizer(rs: RootSystem, t: TorusPoint, cap: int = DEFAULT_ORDER_CAP) -> list[WeylElement]:
    _check_point(rs, t)
    return [w for w in weyl_group(rs, cap) if act(w, t) == t]


def stabilizer_order(rs: RootSystem, t: TorusPoint, cap: int = DEFAULT_ORDER_CAP) -> int:
    return len(stabilizer(rs, t, cap))


def orbit_euler_characteristic(rs: RootSystem, t: TorusPoint,
                               cap: int = DEFAULT_ORDER_CAP) -> int:
    """chi of the adjoint orbit through a torus point, as |W| / |Stab|."""
    order = len(weyl_group(rs, cap))
    stab = stabilizer_order(rs, t, cap)
    q, r = divmod(order, stab)
    assert r == 0, "stabilizer order must divide |W|"
    return q


def point_from_exponents(rows: Iterable[Sequence[int]]) -> TorusPoint:
    """Torus point whose i-th coordinate is the monomial with exponent row i."""
    return TorusPoint(tuple(CoordValue(Fraction(0), tuple(r)) for r in rows))
