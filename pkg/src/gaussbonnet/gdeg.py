"""Gaussian degrees of Ad-invariant strata and the Gauss-Bonnet comparison.

Degrees are never obtained from a Gauss map.  An invariant stratum made of
nonsemisimple elements has degree 0; a semisimple one has the degree of its
intersection with the maximal torus, which is read off its torus model.  The
torus base cases are: finite sets (one zero per point), subtori and open
subsets (a generic invariant form restricts to a nowhere-vanishing one), and
generic hypersurfaces (normalized volume of the Newton polytope).
"""

from __future__ import annotations

from dataclasses import dataclass

from . import weyl
from .polytope import LatticePolytope, polytope_normalized_volume
from .strata import (
    CharCycle,
    ConstructibleFunction,
    Declared,
    Finite,
    FullDimensional,
    Hypersurface,
    LinkData,
    StratPoset,
    Stratum,
    Subtorus,
    cc_multiplicities,
    closure_indicator,
    euler_integral,
    require_valid,
)
from .weyl import RootSystem, TorusPoint


def gdeg_orbit(rs: RootSystem, t: TorusPoint) -> int:
    """Gaussian degree of the adjoint orbit of t: the number of its torus points."""
    return len(weyl.orbit(rs, t))


def gdeg_generic_hypersurface(p: LatticePolytope) -> int:
    return polytope_normalized_volume(p)


def gdeg_stratum(s: Stratum, rs: RootSystem | None = None) -> int:
    if not s.is_semisimple:
        return 0
    model = s.kind.torus_model
    if isinstance(model, Finite):
        return model.count
    if isinstance(model, (FullDimensional, Subtorus)):
        return 0
    if isinstance(model, Hypersurface):
        return gdeg_generic_hypersurface(model.polytope)
    if isinstance(model, Declared):
        return model.gdeg
    raise TypeError(f"unknown torus model {model!r}")


@dataclass(frozen=True)
class GaussBonnetResult:
    chi_via_integral: int
    chi_via_cc: int
    multiplicities: CharCycle
    gdegs: dict
    declared: tuple = ()

    @property
    def match(self) -> bool:
        return self.chi_via_integral == self.chi_via_cc


def gauss_bonnet(poset: StratPoset, links: LinkData, f: ConstructibleFunction,
                 rs: RootSystem | None = None) -> GaussBonnetResult:
    """Evaluate both sides of chi(G, F) = sum of c_a * gdeg(X_a).

    Neither side is trusted over the other; compare ``match``.  Strata whose
    degree was declared rather than computed are listed in ``declared``.
    """
    require_valid(poset, links)
    chi = euler_integral(poset, f)
    cc = cc_multiplicities(poset, links, f)
    gdegs = {s.id: gdeg_stratum(s, rs) for s in poset.strata}
    chi_cc = sum(cc[sid] * gdegs[sid] for sid in poset.ids)
    declared = tuple(s.id for s in poset.strata
                     if s.is_semisimple and isinstance(s.kind.torus_model, Declared))
    return GaussBonnetResult(chi, chi_cc, cc, gdegs, declared)


def hopf_sides(poset: StratPoset, top, rs: RootSystem | None = None) -> tuple[int, int]:
    """For a smooth closed invariant X = closure(X_top): ((-1)^dim * chi(X), gdeg(X)).

    gdeg is birational, so it is that of the dense stratum X_top.
    """
    top_stratum = poset[top]
    chi = euler_integral(poset, closure_indicator(poset, top))
    return (-1) ** top_stratum.dim * chi, gdeg_stratum(top_stratum, rs)


def linked_chi_c_identity(poset: StratPoset, links: LinkData,
                          rs: RootSystem | None = None) -> dict:
    """Per-stratum form of the main identity.

    The identity holds for every constructible function exactly when, for
    each b, chi_c(X_b) equals sum over a <= b of (-1)^(dim a + 1) e(a, b) gdeg(X_a).
    Returns b -> (lhs, rhs).
    """
    require_valid(poset, links)
    out = {}
    for b in poset.strata:
        rhs = sum((-1) ** (poset[a].dim + 1) * links[a, b.id] * gdeg_stratum(poset[a], rs)
                  for a in poset.down_set(b.id))
        out[b.id] = (b.chi_c, rhs)
    return out
