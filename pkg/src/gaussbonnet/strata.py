"""Combinatorial model of an admissible Ad-invariant stratification.

A stratification is reduced to its finite shadow: strata with dimensions,
semisimplicity data and compactly supported Euler characteristics, the
closure order, and the Euler characteristics e(a, b) of complex links.  A
constructible sheaf enters only through its local Euler characteristic on
each stratum.

On top of this model we compute Euler integrals, characteristic-cycle
multiplicities by the Dubson-Kashiwara index formula, and the restriction of
everything to the maximal torus.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Hashable, Iterable, Mapping, Union

from .errors import InvalidInputError
from .polytope import LatticePolytope

StratumId = Hashable


# -- torus models: how X ∩ T looks, which is what determines gdeg -------------

@dataclass(frozen=True)
class Finite:
    count: int


@dataclass(frozen=True)
class FullDimensional:
    pass


@dataclass(frozen=True)
class Subtorus:
    dim: int


@dataclass(frozen=True)
class Hypersurface:
    polytope: LatticePolytope


@dataclass(frozen=True)
class Declared:
    """Trusted, externally supplied Gaussian degree of X ∩ T."""

    gdeg: int


TorusModel = Union[Finite, FullDimensional, Subtorus, Hypersurface, Declared]


@dataclass(frozen=True)
class Semisimple:
    rank: int
    dim_in_torus: int
    torus_model: TorusModel


@dataclass(frozen=True)
class Nonsemisimple:
    pass


NONSEMISIMPLE = Nonsemisimple()


@dataclass(frozen=True)
class Stratum:
    id: StratumId
    dim: int
    kind: Union[Semisimple, Nonsemisimple]
    chi_c: int

    @property
    def is_semisimple(self) -> bool:
        return isinstance(self.kind, Semisimple)


def _transitive_closure(pairs: Iterable[tuple]) -> frozenset:
    succ: dict = {}
    for a, b in pairs:
        succ.setdefault(a, set()).add(b)
    closed = set()
    for a in list(succ):
        stack = list(succ[a])
        seen = set()
        while stack:
            b = stack.pop()
            if b in seen:
                continue
            seen.add(b)
            closed.add((a, b))
            stack.extend(succ.get(b, ()))
    return frozenset(closed)


@dataclass(frozen=True)
class StratPoset:
    """Strata plus the strict closure order ``a < b`` (X_a in closure of X_b).

    ``closure`` is stored transitively closed; build with :meth:`create` to
    pass only generating relations.  ``torus_dim`` is the rank of the group,
    i.e. the dimension of the maximal torus.
    """

    strata: tuple[Stratum, ...]
    closure: frozenset
    ambient_dim: int
    torus_dim: int

    @classmethod
    def create(cls, strata, relations, ambient_dim, torus_dim) -> StratPoset:
        return cls(tuple(strata), _transitive_closure(relations), ambient_dim, torus_dim)

    @property
    def ids(self) -> list:
        return [s.id for s in self.strata]

    def __getitem__(self, sid) -> Stratum:
        for s in self.strata:
            if s.id == sid:
                return s
        raise KeyError(sid)

    def __contains__(self, sid):
        return any(s.id == sid for s in self.strata)

    def __len__(self):
        return len(self.strata)

    def less(self, a, b) -> bool:
        return (a, b) in self.closure

    def up_set(self, a) -> list:
        """Strata b >= a (b = a first, then strict ones in input order)."""
        return [a] + [s.id for s in self.strata if (a, s.id) in self.closure]

    def down_set(self, b) -> list:
        """Ids of closure(X_b): b itself and every stratum below it, input order."""
        return [s.id for s in self.strata if s.id == b or (s.id, b) in self.closure]

    def comparable_pairs(self) -> list[tuple]:
        return [(a.id, b.id) for a in self.strata for b in self.strata
                if (a.id, b.id) in self.closure]

    def semisimple_ids(self) -> list:
        return [s.id for s in self.strata if s.is_semisimple]

    def is_torus_poset(self) -> bool:
        return self.ambient_dim == self.torus_dim


@dataclass(frozen=True)
class LinkData:
    """e(a, b) for a <= b.  A missing diagonal entry means the convention -1."""

    e: Mapping = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "e", dict(self.e))

    def get(self, a, b):
        if a == b:
            return self.e.get((a, a), -1)
        return self.e.get((a, b))

    def __getitem__(self, pair):
        value = self.get(*pair)
        if value is None:
            raise InvalidInputError(f"no link value e({pair[0]}, {pair[1]})")
        return value

    def with_value(self, a, b, value) -> LinkData:
        e = dict(self.e)
        e[(a, b)] = value
        return LinkData(e)


@dataclass(frozen=True)
class ConstructibleFunction:
    chi_local: Mapping = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "chi_local", dict(self.chi_local))

    def __getitem__(self, sid) -> int:
        return self.chi_local[sid]

    def __add__(self, other: ConstructibleFunction) -> ConstructibleFunction:
        keys = list(self.chi_local) + [k for k in other.chi_local if k not in self.chi_local]
        return ConstructibleFunction(
            {k: self.chi_local.get(k, 0) + other.chi_local.get(k, 0) for k in keys})

    def scale(self, k: int) -> ConstructibleFunction:
        return ConstructibleFunction({s: k * v for s, v in self.chi_local.items()})


@dataclass(frozen=True)
class CharCycle:
    multiplicities: Mapping = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "multiplicities", dict(self.multiplicities))

    def __getitem__(self, sid) -> int:
        return self.multiplicities[sid]

    def vector(self, ids) -> tuple[int, ...]:
        return tuple(self.multiplicities[i] for i in ids)


def constant_function(poset: StratPoset, value: int = 1) -> ConstructibleFunction:
    return ConstructibleFunction({sid: value for sid in poset.ids})


def indicator(poset: StratPoset, support: Iterable) -> ConstructibleFunction:
    support = set(support)
    unknown = support - set(poset.ids)
    if unknown:
        raise InvalidInputError(f"unknown strata {sorted(map(str, unknown))}")
    return ConstructibleFunction({sid: int(sid in support) for sid in poset.ids})


def closure_indicator(poset: StratPoset, top) -> ConstructibleFunction:
    """Constant sheaf on closure(X_top), extended by zero."""
    return indicator(poset, poset.down_set(top))


# -- validation ---------------------------------------------------------------

@dataclass(frozen=True)
class Violation:
    code: str
    message: str
    ids: tuple = ()

    def __str__(self):
        where = ", ".join(str(i) for i in self.ids)
        return f"{self.code}: {self.message}" + (f" [{where}]" if where else "")


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    def codes(self) -> set[str]:
        return {v.code for v in self.violations}

    def __str__(self):
        if self.ok:
            return "OK"
        return "\n".join(str(v) for v in self.violations)


def _is_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def _check_torus_model(s: Stratum, torus_dim: int, out: list):
    kind = s.kind
    model = kind.torus_model
    d = kind.dim_in_torus
    bad = None
    if isinstance(model, Finite):
        if not _is_int(model.count) or model.count < 0:
            bad = "Finite count must be a nonnegative integer"
        elif d != 0:
            bad = "a finite torus intersection has dim_in_torus 0"
    elif isinstance(model, Subtorus):
        if not _is_int(model.dim) or model.dim < 1:
            bad = "Subtorus dimension must be >= 1"
        elif model.dim != d:
            bad = "Subtorus dimension must equal dim_in_torus"
    elif isinstance(model, FullDimensional):
        if d != torus_dim:
            bad = f"FullDimensional requires dim_in_torus = {torus_dim}"
    elif isinstance(model, Hypersurface):
        if model.polytope.dim != torus_dim:
            bad = f"Newton polytope must live in Z^{torus_dim}"
        elif d != torus_dim - 1:
            bad = f"a torus hypersurface has dim_in_torus {torus_dim - 1}"
    elif isinstance(model, Declared):
        if not _is_int(model.gdeg) or model.gdeg < 0:
            bad = "Declared gdeg must be a nonnegative integer"
    else:
        bad = f"unknown torus model {model!r}"
    if bad:
        out.append(Violation("torus-model", bad, (s.id,)))


def validate(poset: StratPoset, links: LinkData) -> ValidationReport:
    """Check every admissibility and bookkeeping condition; never raises."""
    out: list[Violation] = []
    ids = poset.ids
    seen = set()
    for sid in ids:
        if sid in seen:
            out.append(Violation("duplicate-id", "stratum id used twice", (sid,)))
        seen.add(sid)

    for s in poset.strata:
        if not _is_int(s.dim) or s.dim < 0:
            out.append(Violation("dimension", "dim must be a nonnegative integer", (s.id,)))
            continue
        if s.dim > poset.ambient_dim:
            out.append(Violation("dimension", "stratum dim exceeds ambient dim", (s.id,)))
        if not _is_int(s.chi_c):
            out.append(Violation("chi-c", "chi_c must be an integer", (s.id,)))
        if s.is_semisimple:
            k = s.kind
            if not _is_int(k.rank) or k.rank < 0:
                out.append(Violation("rank", "rank must be a nonnegative integer", (s.id,)))
            if not _is_int(k.dim_in_torus) or not 0 <= k.dim_in_torus <= s.dim:
                out.append(Violation("torus-dimension",
                                     "need 0 <= dim_in_torus <= dim", (s.id,)))
                continue
            if k.dim_in_torus > poset.torus_dim:
                out.append(Violation("torus-dimension",
                                     "dim_in_torus exceeds the torus dimension", (s.id,)))
            if (s.dim - k.dim_in_torus) % 2:
                out.append(Violation("orbit-direction-parity",
                                     "dim - dim_in_torus must be even", (s.id,)))
            _check_torus_model(s, poset.torus_dim, out)

    if poset.strata and not any(s.dim == poset.ambient_dim for s in poset.strata):
        out.append(Violation("open-stratum", f"no stratum of ambient dimension {poset.ambient_dim}"))

    for a, b in sorted(poset.closure, key=lambda p: (str(p[0]), str(p[1]))):
        if a not in seen or b not in seen:
            out.append(Violation("closure-unknown-id", "closure relation names an unknown stratum",
                                 (a, b)))
            continue
        if a == b:
            out.append(Violation("closure-cycle", "closure order is not irreflexive", (a,)))
            continue
        if poset[a].dim >= poset[b].dim:
            out.append(Violation("closure-dimension",
                                 "a < b requires dim(a) < dim(b)", (a, b)))

    for (a, b), value in links.e.items():
        if a not in seen or b not in seen:
            out.append(Violation("link-unknown-id", "link names an unknown stratum", (a, b)))
        elif a != b and not poset.less(a, b):
            out.append(Violation("link-incomparable",
                                 "link given for a pair outside the closure order", (a, b)))
        if not _is_int(value):
            out.append(Violation("link-value", "link values must be integers", (a, b)))
    for sid in ids:
        if links.get(sid, sid) != -1:
            out.append(Violation("diagonal-link", "diagonal link must be -1", (sid,)))
    for a, b in poset.comparable_pairs():
        value = links.get(a, b)
        if value is None:
            out.append(Violation("link-missing", "no link value for a comparable pair", (a, b)))
        elif poset[a].is_semisimple and not poset[b].is_semisimple and value != 0:
            out.append(Violation("link-semisimple-to-nonsemisimple",
                                 "e(a, b) must be 0 for semisimple a below nonsemisimple b",
                                 (a, b)))
    return ValidationReport(tuple(out))


def require_valid(poset: StratPoset, links: LinkData):
    report = validate(poset, links)
    if not report.ok:
        raise InvalidInputError("invalid stratification:\n" + str(report))


def _check_function(poset: StratPoset, f: ConstructibleFunction):
    missing = [sid for sid in poset.ids if sid not in f.chi_local]
    if missing:
        raise InvalidInputError(f"constructible function undefined on {missing}")
    extra = [sid for sid in f.chi_local if sid not in poset]
    if extra:
        raise InvalidInputError(f"constructible function names unknown strata {extra}")
    bad = [sid for sid, v in f.chi_local.items() if not _is_int(v)]
    if bad:
        raise InvalidInputError(f"non-integer values on {bad}")


# -- the computations ---------------------------------------------------------

def euler_integral(poset: StratPoset, f: ConstructibleFunction) -> int:
    """Integral of f against the Euler characteristic: sum of f(a) * chi_c(X_a)."""
    _check_function(poset, f)
    return sum(f[s.id] * s.chi_c for s in poset.strata)


def cc_multiplicities(poset: StratPoset, links: LinkData,
                      f: ConstructibleFunction) -> CharCycle:
    """Dubson-Kashiwara: c_a = (-1)^(dim a + 1) * sum over b >= a of e(a, b) f(b)."""
    require_valid(poset, links)
    _check_function(poset, f)
    mult = {}
    for s in poset.strata:
        total = sum(links[s.id, b] * f[b] for b in poset.up_set(s.id))
        mult[s.id] = (-1) ** (s.dim + 1) * total
    return CharCycle(mult)


def torus_restriction(poset: StratPoset, links: LinkData) -> tuple[StratPoset, LinkData]:
    """Induced stratification of T by the semisimple strata.

    Each surviving stratum keeps its id and chi_c (X and X ∩ T have the same
    compactly supported Euler characteristic); its dimension becomes
    dim_in_torus and its rank becomes dim T, since T is its own centralizer.
    """
    require_valid(poset, links)
    keep = poset.semisimple_ids()
    strata = []
    for s in poset.strata:
        if not s.is_semisimple:
            continue
        kind = Semisimple(poset.torus_dim, s.kind.dim_in_torus, s.kind.torus_model)
        strata.append(Stratum(s.id, s.kind.dim_in_torus, kind, s.chi_c))
    kept = set(keep)
    closure = frozenset((a, b) for a, b in poset.closure if a in kept and b in kept)
    e = {(a, b): v for (a, b), v in links.e.items() if a in kept and b in kept}
    for sid in keep:
        e.setdefault((sid, sid), -1)
    return (StratPoset(tuple(strata), closure, poset.torus_dim, poset.torus_dim), LinkData(e))


def restrict_function(f: ConstructibleFunction, torus_poset: StratPoset) -> ConstructibleFunction:
    """Same local Euler characteristics on the strata that meet the torus."""
    missing = [sid for sid in torus_poset.ids if sid not in f.chi_local]
    if missing:
        raise InvalidInputError(f"function has no value on torus strata {missing}")
    return ConstructibleFunction({sid: f[sid] for sid in torus_poset.ids})
