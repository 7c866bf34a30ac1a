"""Built-in desk-scale cases.

Every number that goes into a case is derived here rather than typed in:

* chi_c of a semisimple stratum is computed on its torus intersection
  (finite point counts from Weyl orbits, chi_c((C*)^k) = 0 for k >= 1, and
  additivity of chi_c over disjoint pieces);
* chi_c of a nonsemisimple stratum is 0, because its torus intersection is
  empty;
* link values not forced by the conventions (e(a, a) = -1, and 0 from a
  semisimple stratum into a nonsemisimple one) are pinned by requiring that
  the constant sheaf on a closure which is smooth along the smaller stratum
  has characteristic cycle (-1)^dim times the conormal of its dense stratum.

The expected values stored in each case are separate hand evaluations, kept
with a note, so that the operations have something independent to match.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
from functools import lru_cache

from . import weyl
from .errors import NotFoundError
from .polytope import segment, unit_simplex
from .strata import (
    NONSEMISIMPLE,
    ConstructibleFunction,
    Finite,
    FullDimensional,
    Hypersurface,
    LinkData,
    Semisimple,
    StratPoset,
    Stratum,
    Subtorus,
    closure_indicator,
    constant_function,
    indicator,
)
from .weyl import CoordValue, RootSystem, TorusPoint, build_root_system


@dataclass(frozen=True)
class Expected:
    value: object
    note: str


@dataclass(frozen=True)
class CaseSpec:
    name: str
    description: str
    root_system: RootSystem | None
    poset: StratPoset
    links: LinkData
    sheaves: dict = field(default_factory=dict)
    expected: dict = field(default_factory=dict)
    # top strata whose closures are smooth closed invariant subvarieties
    smooth_closed: tuple = ()


# -- oracles used while building cases ----------------------------------------

def chi_c_torus(k: int) -> int:
    """chi_c((C*)^k): a point for k = 0, and 0 otherwise (C* acts freely)."""
    return 1 if k == 0 else 0


def chi_c_complement(whole: int, *pieces: int) -> int:
    return whole - sum(pieces)


def weyl_fixed_torsion_points(rs: RootSystem, order: int) -> list[TorusPoint]:
    """Points of a rank-one torus with x^order = 1 whose Weyl stabilizer is nontrivial."""
    pts = [TorusPoint((CoordValue.root_of_unity(Fraction(k, order)),)) for k in range(order)]
    return [t for t in pts if weyl.stabilizer_order(rs, t) > 1]


def pin_link(poset: StratPoset, e: dict, a, top) -> int:
    """Link value e(a, top) forced by smoothness of closure(X_top) along X_a.

    The constant sheaf on that closure must have c_a = 0, i.e. the sum of
    e(a, b) over a <= b <= top vanishes; e(a, a) = -1.
    """
    between = [b for b in poset.up_set(a)[1:] if poset.less(b, top)]
    return 1 - sum(e[(a, b)] for b in between)


def _ss(sid, dim, rank, dim_in_torus, model, chi_c) -> Stratum:
    return Stratum(sid, dim, Semisimple(rank, dim_in_torus, model), chi_c)


def _nss(sid, dim) -> Stratum:
    # torus intersection is empty, so chi_c = chi_c(X ∩ T) = 0
    return Stratum(sid, dim, NONSEMISIMPLE, 0)


def _hand(value, note="hand evaluation of the index formula") -> Expected:
    return Expected(value, note)


def _expect(table: dict) -> dict:
    out = {}
    for sheaf, (chi, cc) in table.items():
        out[f"chi:{sheaf}"] = _hand(chi, "hand evaluation: sum of chi_local * chi_c")
        out[f"cc:{sheaf}"] = _hand(tuple(cc))
    return out


# -- cases ----------------------------------------------------------------------

def _torus1_two_points() -> CaseSpec:
    p = _ss("p", 0, 1, 0, Finite(1), chi_c_torus(0))
    q = _ss("q", 0, 1, 0, Finite(1), chi_c_torus(0))
    u = _ss("U", 1, 1, 1, FullDimensional(), chi_c_complement(chi_c_torus(1), p.chi_c, q.chi_c))
    poset = StratPoset.create([p, q, u], [("p", "U"), ("q", "U")], 1, 1)
    e = {}
    e[("p", "U")] = pin_link(poset, e, "p", "U")
    e[("q", "U")] = pin_link(poset, e, "q", "U")
    sheaves = {
        "constant": constant_function(poset),
        "skyscraper": indicator(poset, ["p"]),
        "orbit_closure": closure_indicator(poset, "q"),
        "open": indicator(poset, ["U"]),
        "mixed": ConstructibleFunction({"p": 2, "q": -1, "U": 3}),
    }
    expected = _expect({
        "constant": (0, (0, 0, -1)),
        "skyscraper": (1, (1, 0, 0)),
        "orbit_closure": (1, (0, 1, 0)),
        "open": (-2, (-1, -1, -1)),
        "mixed": (-5, (-1, -4, -3)),
    })
    return CaseSpec("torus1_two_points", "C* with two marked points", None, poset,
                    LinkData(e), sheaves, expected, ("p", "q", "U"))


def _torus1_cubic() -> CaseSpec:
    # {x^3 = 1}: Newton segment [0, 3]; its points are the cube roots of unity
    roots = {CoordValue.root_of_unity(Fraction(k, 3)) for k in range(3)}
    pts = _ss("P", 0, 1, 0, Hypersurface(segment(3)), len(roots))
    u = _ss("U", 1, 1, 1, FullDimensional(), chi_c_complement(chi_c_torus(1), pts.chi_c))
    poset = StratPoset.create([pts, u], [("P", "U")], 1, 1)
    e = {}
    e[("P", "U")] = pin_link(poset, e, "P", "U")
    sheaves = {
        "constant": constant_function(poset),
        "skyscraper": indicator(poset, ["P"]),
        # P is closed, so this coincides with the skyscraper
        "orbit_closure": closure_indicator(poset, "P"),
        "open": indicator(poset, ["U"]),
        "mixed": ConstructibleFunction({"P": -2, "U": 5}),
    }
    expected = _expect({
        "constant": (0, (0, -1)),
        "skyscraper": (3, (1, 0)),
        "orbit_closure": (3, (1, 0)),
        "open": (-3, (-1, -1)),
        "mixed": (-21, (-7, -5)),
    })
    return CaseSpec("torus1_cubic", "C* stratified by the roots of x^3 - 1", None, poset,
                    LinkData(e), sheaves, expected, ("P", "U"))


def _torus2_subtorus() -> CaseSpec:
    s = _ss("S", 1, 2, 1, Subtorus(1), chi_c_torus(1))
    u = _ss("U", 2, 2, 2, FullDimensional(), chi_c_complement(chi_c_torus(2), s.chi_c))
    poset = StratPoset.create([s, u], [("S", "U")], 2, 2)
    e = {}
    e[("S", "U")] = pin_link(poset, e, "S", "U")
    sheaves = {
        "constant": constant_function(poset),
        "skyscraper": indicator(poset, ["S"]),
        # S is closed, so this coincides with the skyscraper
        "orbit_closure": closure_indicator(poset, "S"),
        "open": indicator(poset, ["U"]),
        "mixed": ConstructibleFunction({"S": 4, "U": -3}),
    }
    expected = _expect({
        "constant": (0, (0, 1)),
        "skyscraper": (0, (-1, 0)),
        "orbit_closure": (0, (-1, 0)),
        "open": (0, (1, 1)),
        "mixed": (0, (-7, -3)),
    })
    return CaseSpec("torus2_subtorus", "(C*)^2 stratified by the subtorus {x = 1}", None,
                    poset, LinkData(e), sheaves, expected, ("S", "U"))


def _torus2_line() -> CaseSpec:
    # C = {x + y + 1 = 0}: parametrised by x in C minus {0, -1}
    affine_line = chi_c_torus(1) + chi_c_torus(0)
    chi_line = chi_c_complement(affine_line, chi_c_torus(0), chi_c_torus(0))
    c = _ss("C", 1, 2, 1, Hypersurface(unit_simplex(2)), chi_line)
    u = _ss("U", 2, 2, 2, FullDimensional(), chi_c_complement(chi_c_torus(2), c.chi_c))
    poset = StratPoset.create([c, u], [("C", "U")], 2, 2)
    e = {}
    e[("C", "U")] = pin_link(poset, e, "C", "U")
    sheaves = {
        "constant": constant_function(poset),
        "skyscraper": indicator(poset, ["C"]),
        # C is closed, so this coincides with the skyscraper
        "orbit_closure": closure_indicator(poset, "C"),
        "open": indicator(poset, ["U"]),
        "mixed": ConstructibleFunction({"C": 3, "U": 2}),
    }
    expected = _expect({
        "constant": (0, (0, 1)),
        "skyscraper": (-1, (-1, 0)),
        "orbit_closure": (-1, (-1, 0)),
        "open": (1, (1, 1)),
        "mixed": (-1, (-1, 2)),
    })
    return CaseSpec("torus2_line", "(C*)^2 stratified by the line x + y + 1 = 0", None,
                    poset, LinkData(e), sheaves, expected, ("C", "U"))


def _sl2_strata(rs: RootSystem, extra_orbit: TorusPoint | None = None):
    """Strata of SL2: {I}, {-I}, the two unipotent-type orbits, optionally one
    regular semisimple orbit, and the rest of the regular semisimple locus."""
    ident = rs.identity_point()
    minus = TorusPoint((CoordValue.root_of_unity(Fraction(1, 2)),))
    central = weyl_fixed_torsion_points(rs, 2)
    assert set(central) == {ident, minus}
    n_id = len(weyl.orbit(rs, ident))
    n_minus = len(weyl.orbit(rs, minus))
    strata = [
        _ss("I", 0, 3, 0, Finite(n_id), n_id),
        _ss("-I", 0, 3, 0, Finite(n_minus), n_minus),
        _nss("Ou", 2),
        _nss("O-u", 2),
    ]
    removed = [n_id, n_minus]
    if extra_orbit is not None:
        n_a = len(weyl.orbit(rs, extra_orbit))
        strata.append(_ss("Oa", 2, 1, 0, Finite(n_a), n_a))
        removed.append(n_a)
    strata.append(_ss("rs", 3, 1, 1, FullDimensional(),
                      chi_c_complement(chi_c_torus(1), *removed)))
    rel = [("I", "Ou"), ("-I", "O-u"), ("Ou", "rs"), ("O-u", "rs"), ("I", "rs"), ("-I", "rs")]
    if extra_orbit is not None:
        rel.append(("Oa", "rs"))
    poset = StratPoset.create(strata, rel, rs.group_dim, rs.torus_dim)
    e = {("I", "Ou"): 0, ("-I", "O-u"): 0}
    # SL2 is smooth, which pins every link into the open stratum
    for a in ["Ou", "O-u"] + (["Oa"] if extra_orbit is not None else []) + ["I", "-I"]:
        e[(a, "rs")] = pin_link(poset, e, a, "rs")
    return poset, LinkData(e)


SL2_CONSTANT_CC = (0, 0, 0, 0, -1)


def _sl2_adjoint() -> CaseSpec:
    rs = build_root_system("A", 1, "SL")
    poset, links = _sl2_strata(rs)
    sheaves = {
        "constant": constant_function(poset),
        "skyscraper": indicator(poset, ["I"]),
        "orbit_closure": closure_indicator(poset, "Ou"),
        "open": indicator(poset, ["rs"]),
        "mixed": ConstructibleFunction({"I": 2, "-I": -1, "Ou": 3, "O-u": 0, "rs": 1}),
    }
    expected = _expect({
        "constant": (0, SL2_CONSTANT_CC),
        "skyscraper": (1, (1, 0, 0, 0, 0)),
        "orbit_closure": (1, (1, 0, 1, 0, 0)),
        "open": (-2, (-1, -1, -1, -1, -1)),
        "mixed": (-1, (1, -2, 2, -1, -1)),
    })
    return CaseSpec("sl2_adjoint", "SL2 stratified by central, unipotent-type and regular "
                    "semisimple conjugacy classes", rs, poset, links, sheaves, expected,
                    ("I", "-I", "rs"))


def _sl2_orbit_closure() -> CaseSpec:
    rs = build_root_system("A", 1, "SL")
    poset, links = _sl2_strata(rs)
    sheaves = {
        "orbit_closure": closure_indicator(poset, "Ou"),
        "minus_orbit_closure": closure_indicator(poset, "O-u"),
        "constant": constant_function(poset),
        "skyscraper": indicator(poset, ["I"]),
    }
    expected = _expect({
        "orbit_closure": (1, (1, 0, 1, 0, 0)),
        "minus_orbit_closure": (1, (0, 1, 0, 1, 0)),
        "constant": (0, SL2_CONSTANT_CC),
        "skyscraper": (1, (1, 0, 0, 0, 0)),
    })
    # only semisimple stratum in closure(Ou) is {I}: c_I must equal chi_I
    expected["c_semisimple:orbit_closure"] = Expected(
        1, "c_alpha(F) = chi_alpha(F) on the unique semisimple stratum of an orbit closure")
    return CaseSpec("sl2_orbit_closure", "SL2 with a sheaf supported on the closure of the "
                    "unipotent orbit", rs, poset, links, sheaves, expected, ("I", "-I", "rs"))


def _sl2_semisimple_orbit() -> CaseSpec:
    rs = build_root_system("A", 1, "SL")
    a = TorusPoint((CoordValue.generic(1),))
    poset, links = _sl2_strata(rs, extra_orbit=a)
    sheaves = {
        "constant": constant_function(poset),
        "skyscraper": indicator(poset, ["I"]),
        "orbit_closure": closure_indicator(poset, "Oa"),
        "unipotent_closure": closure_indicator(poset, "Ou"),
        "open": indicator(poset, ["rs"]),
    }
    expected = _expect({
        "constant": (0, (0, 0, 0, 0, 0, -1)),
        "skyscraper": (1, (1, 0, 0, 0, 0, 0)),
        "orbit_closure": (2, (0, 0, 0, 0, 1, 0)),
        "unipotent_closure": (1, (1, 0, 1, 0, 0, 0)),
        "open": (-4, (-1, -1, -1, -1, -1, -1)),
    })
    expected["chi_orbit:Oa"] = Expected(2, "|W| / |Stab a| = 2 / 1 for generic a")
    return CaseSpec("sl2_semisimple_orbit", "SL2 with a closed regular semisimple orbit "
                    "split off the regular locus", rs, poset, links, sheaves, expected,
                    ("I", "-I", "Oa", "rs"))


def _gl2_adjoint() -> CaseSpec:
    rs = build_root_system("A", 1, "GL")
    # center: diagonal {(c, c)} in T, a one-dimensional subtorus
    z = _ss("Z", 1, 4, 1, Subtorus(1), chi_c_torus(1))
    n = _nss("N", 3)
    r = _ss("R", 4, 2, 2, FullDimensional(), chi_c_complement(chi_c_torus(2), z.chi_c))
    poset = StratPoset.create([z, n, r], [("Z", "N"), ("N", "R")], rs.group_dim, rs.torus_dim)
    e = {("Z", "N"): 0}
    e[("N", "R")] = pin_link(poset, e, "N", "R")
    e[("Z", "R")] = pin_link(poset, e, "Z", "R")
    sheaves = {
        "constant": constant_function(poset),
        "skyscraper": indicator(poset, ["Z"]),
        "orbit_closure": closure_indicator(poset, "N"),
        "open": indicator(poset, ["R"]),
    }
    expected = _expect({
        "constant": (0, (0, 0, 1)),
        "skyscraper": (0, (-1, 0, 0)),
        "orbit_closure": (0, (-1, -1, 0)),
        "open": (0, (1, 1, 1)),
    })
    return CaseSpec("gl2_adjoint", "GL2 stratified by the center, the non-scalar classes "
                    "with a repeated eigenvalue, and the regular semisimple locus",
                    rs, poset, LinkData(e), sheaves, expected, ("Z", "R"))


def _gl2_fine() -> CaseSpec:
    rs = build_root_system("A", 1, "GL")
    ident = rs.identity_point()
    n_id = len(weyl.orbit(rs, ident))
    i = _ss("I", 0, 4, 0, Finite(n_id), n_id)
    zp = _ss("Z'", 1, 4, 1, Subtorus(1), chi_c_complement(chi_c_torus(1), i.chi_c))
    n1 = _nss("N1", 2)
    np_ = _nss("N'", 3)
    r = _ss("R", 4, 2, 2, FullDimensional(),
            chi_c_complement(chi_c_torus(2), i.chi_c, zp.chi_c))
    rel = [("I", "Z'"), ("I", "N1"), ("Z'", "N'"), ("N1", "N'"), ("N'", "R"), ("Z'", "R"),
           ("I", "R"), ("N1", "R")]
    poset = StratPoset.create([i, zp, n1, np_, r], rel, rs.group_dim, rs.torus_dim)
    e = {("I", "N1"): 0, ("I", "N'"): 0, ("Z'", "N'"): 0}
    e[("I", "Z'")] = pin_link(poset, e, "I", "Z'")      # the center is smooth
    e[("N1", "N'")] = pin_link(poset, e, "N1", "N'")    # C* x O_u is smooth along O_u
    for a in ["N'", "N1", "Z'", "I"]:
        e[(a, "R")] = pin_link(poset, e, a, "R")        # GL2 is smooth
    sheaves = {
        "constant": constant_function(poset),
        "skyscraper": indicator(poset, ["I"]),
        "orbit_closure": closure_indicator(poset, "N1"),
        "center": closure_indicator(poset, "Z'"),
        "open": indicator(poset, ["R"]),
        "mixed": ConstructibleFunction({"I": 3, "Z'": -2, "N1": 1, "N'": 4, "R": -1}),
    }
    expected = _expect({
        "constant": (0, (0, 0, 0, 0, 1)),
        "skyscraper": (1, (1, 0, 0, 0, 0)),
        "orbit_closure": (1, (1, 0, 1, 0, 0)),
        "center": (0, (0, -1, 0, 0, 0)),
        "open": (0, (0, 1, 0, 1, 1)),
        "mixed": (5, (5, 1, -3, -5, -1)),
    })
    return CaseSpec("gl2_fine", "GL2 with the identity and its unipotent orbit split off",
                    rs, poset, LinkData(e), sheaves, expected, ("I", "Z'", "R"))


_BUILDERS = {
    "torus1_two_points": _torus1_two_points,
    "torus1_cubic": _torus1_cubic,
    "torus2_subtorus": _torus2_subtorus,
    "torus2_line": _torus2_line,
    "sl2_adjoint": _sl2_adjoint,
    "sl2_orbit_closure": _sl2_orbit_closure,
    "sl2_semisimple_orbit": _sl2_semisimple_orbit,
    "gl2_adjoint": _gl2_adjoint,
    "gl2_fine": _gl2_fine,
}

CASE_NAMES = tuple(_BUILDERS)


@lru_cache(maxsize=None)
def catalog_case(name: str) -> CaseSpec:
    try:
        builder = _BUILDERS[name]
    except KeyError:
        raise NotFoundError(
            f"unknown case {name!r}; available: {', '.join(CASE_NAMES)}") from None
    return builder()


def all_cases() -> list[CaseSpec]:
    return [catalog_case(n) for n in CASE_NAMES]


def corrupted(case: CaseSpec) -> CaseSpec:
    """Negative control: add 1 to the first link value that no rule forces."""
    poset = case.poset
    for a, b in poset.comparable_pairs():
        forced = poset[a].is_semisimple and not poset[b].is_semisimple
        if not forced:
            wrong = case.links.with_value(a, b, case.links[a, b] + 1)
            return replace(case, links=wrong, name=case.name)
    return case
