"""Exact normalized volumes of lattice polytopes.

The convex hull is triangulated by recursive pulling: the lexicographically
smallest point is coned over a triangulation of every facet that does not
contain it.  Facets are found exactly by testing hyperplanes through
affinely independent point subsets, so everything stays in integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import factorial
from typing import Iterable, Sequence

from .errors import InvalidInputError, ParseError

Point = tuple[int, ...]


@dataclass(frozen=True)
class LatticePolytope:
    vertices: tuple[Point, ...]

    def __post_init__(self):
        pts = tuple(sorted({tuple(int(c) for c in v) for v in self.vertices}))
        if not pts:
            raise InvalidInputError("a lattice polytope needs at least one vertex")
        dims = {len(v) for v in pts}
        if len(dims) != 1:
            raise InvalidInputError(f"vertices of mixed dimensions {sorted(dims)}")
        if 0 in dims:
            raise InvalidInputError("vertices must have dimension >= 1")
        object.__setattr__(self, "vertices", pts)

    @property
    def dim(self) -> int:
        """Ambient dimension n of the lattice Z^n."""
        return len(self.vertices[0])

    def affine_dim(self) -> int:
        return affine_rank(self.vertices)

    def translate(self, shift: Sequence[int]) -> LatticePolytope:
        return LatticePolytope(tuple(tuple(a + b for a, b in zip(v, shift)) for v in self.vertices))

    def transform(self, matrix: Sequence[Sequence[int]]) -> LatticePolytope:
        """Image under the integer linear map v -> M v."""
        return LatticePolytope(tuple(
            tuple(sum(m * x for m, x in zip(row, v)) for row in matrix) for v in self.vertices))

    def __str__(self):
        return " ".join(",".join(str(c) for c in v) for v in self.vertices)


def segment(length: int) -> LatticePolytope:
    return LatticePolytope(((0,), (length,)))


def unit_simplex(n: int) -> LatticePolytope:
    verts = [(0,) * n] + [tuple(int(i == j) for j in range(n)) for i in range(n)]
    return LatticePolytope(tuple(verts))


def unit_cube(n: int) -> LatticePolytope:
    verts = [tuple((k >> j) & 1 for j in range(n)) for k in range(2**n)]
    return LatticePolytope(tuple(verts))


def det(matrix: Sequence[Sequence[int]]) -> int:
    """Integer determinant by fraction-free (Bareiss) elimination."""
    m = [list(row) for row in matrix]
    n = len(m)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def _row_reduce(vectors: Iterable[Sequence[int]]) -> tuple[int, list[int]]:
    """Rank and pivot columns of a list of row vectors (exact)."""
    rows = [[Fraction(x) for x in v] for v in vectors]
    if not rows:
        return 0, []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c] / rows[r][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return r, pivots


def affine_rank(points: Sequence[Point]) -> int:
    base = points[0]
    return _row_reduce([tuple(a - b for a, b in zip(p, base)) for p in points[1:]])[0]


def _normal(vectors: Sequence[Sequence[int]], d: int) -> list[int]:
    """Integer normal to d-1 vectors in Z^d (generalised cross product)."""
    return [(-1) ** k * det([[v[j] for j in range(d) if j != k] for v in vectors])
            for k in range(d)]


def _facets(points: list[Point], d: int) -> list[list[Point]]:
    """Point sets of the facets of a full-dimensional configuration in Z^d."""
    found: dict[frozenset, list[Point]] = {}
    for subset in combinations(points, d):
        q0 = subset[0]
        vecs = [tuple(a - b for a, b in zip(q, q0)) for q in subset[1:]]
        n = _normal(vecs, d)
        if not any(n):
            continue
        side = [sum(a * (x - y) for a, x, y in zip(n, p, q0)) for p in points]
        if all(s >= 0 for s in side) or all(s <= 0 for s in side):
            face = [p for p, s in zip(points, side) if s == 0]
            found.setdefault(frozenset(face), face)
    return list(found.values())


def _chart(points: list[Point]) -> tuple[int, list[int]]:
    """Affine dimension and coordinate indices projecting the hull injectively."""
    base = points[0]
    return _row_reduce([tuple(a - b for a, b in zip(p, base)) for p in points[1:]])


def _triangulate(points: list[Point]) -> list[tuple[Point, ...]]:
    d, cols = _chart(points)
    if d == 0:
        return [(points[0],)]
    v0 = min(points)
    proj = {p: tuple(p[c] for c in cols) for p in points}
    back: dict[Point, list[Point]] = {}
    for p, q in proj.items():
        back.setdefault(q, []).append(p)
    simplices = []
    for face in _facets(list(back), d):
        members = [p for q in face for p in back[q]]
        if v0 in members:
            continue
        for simplex in _triangulate(sorted(members)):
            simplices.append((v0,) + simplex)
    return simplices


def triangulate(p: LatticePolytope) -> list[tuple[Point, ...]]:
    """Simplices (as vertex tuples) of a triangulation of conv(p)."""
    return _triangulate(list(p.vertices))


def simplex_normalized_volume(simplex: Sequence[Point]) -> int:
    v0 = simplex[0]
    return abs(det([[a - b for a, b in zip(v, v0)] for v in simplex[1:]]))


def polytope_normalized_volume(p: LatticePolytope) -> int:
    """n! * Euclidean volume of conv(p); 0 when the hull is lower-dimensional."""
    if p.affine_dim() < p.dim:
        return 0
    return sum(simplex_normalized_volume(s) for s in triangulate(p))


def euclidean_volume(p: LatticePolytope) -> Fraction:
    return Fraction(polytope_normalized_volume(p), factorial(p.dim))


def parse_vertices(text: str) -> LatticePolytope:
    """One vertex per line, whitespace-separated integer coordinates; ``#`` comments."""
    verts = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            verts.append(tuple(int(tok) for tok in line.replace(",", " ").split()))
        except ValueError:
            raise ParseError(f"non-integer coordinate in {line!r}", lineno) from None
        if len(verts[-1]) != len(verts[0]):
            raise ParseError(f"expected {len(verts[0])} coordinates, got {len(verts[-1])}",
                             lineno)
    if not verts:
        raise ParseError("no vertices")
    return LatticePolytope(tuple(verts))
