"""The verification battery behind ``gaussbonnet verify``."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from . import catalog, weyl
from .catalog import CaseSpec, pin_link
from .gdeg import gauss_bonnet, hopf_sides, linked_chi_c_identity
from .polytope import (
    LatticePolytope,
    polytope_normalized_volume,
    segment,
    unit_cube,
    unit_simplex,
)
from .strata import (
    cc_multiplicities,
    closure_indicator,
    euler_integral,
    restrict_function,
    torus_restriction,
    validate,
)
from .weyl import CoordValue, RootSystem, TorusPoint, build_root_system

GLOBAL = "global"


@dataclass(frozen=True)
class Check:
    case: str
    name: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        tail = f" {self.detail}" if self.detail else ""
        return f"{status} {self.case} {self.name}{tail}"


# -- Weyl groups --------------------------------------------------------------

def classical_types(max_rank: int = 3) -> list[RootSystem]:
    out = []
    for n in range(1, max_rank + 1):
        out.append(build_root_system("A", n, "SL"))
        out.append(build_root_system("A", n, "GL"))
        out.append(build_root_system("B", n))
        out.append(build_root_system("C", n))
        if n >= 2:
            out.append(build_root_system("D", n))
    return out


def sample_points(rs: RootSystem, count: int = 12, seed: int = 0) -> list[TorusPoint]:
    """Deterministic torus points: structured ones first, then random mixes of
    generic, repeated, inverse-paired and torsion coordinates."""
    n = rs.coordinate_count
    g = [CoordValue.generic(i) for i in range(1, n + 2)]
    pts = [
        TorusPoint.identity(n),
        TorusPoint(tuple(g[:n])),
        TorusPoint((g[0],) * n),
        TorusPoint(tuple(g[0] if i % 2 == 0 else g[0].inverse() for i in range(n))),
        TorusPoint((CoordValue.root_of_unity(Fraction(1, 2)),) * n),
    ]
    pool = g[:3] + [x.inverse() for x in g[:3]] + [
        CoordValue(), CoordValue.root_of_unity(Fraction(1, 2)),
        CoordValue.root_of_unity(Fraction(1, 3)), g[0] * CoordValue.root_of_unity(Fraction(1, 2)),
    ]
    rng = random.Random(f"{rs.series}{rs.rank}{rs.realization}{seed}")
    while len(pts) < count:
        pts.append(TorusPoint(tuple(rng.choice(pool) for _ in range(n))))
    return pts


def weyl_checks(max_rank: int = 3, points_per_type: int = 12) -> list[Check]:
    checks = []
    for rs in classical_types(max_rank):
        group = weyl.weyl_group(rs)
        checks.append(Check(GLOBAL, f"weyl_order[{rs.series}{rs.rank}{rs.realization or ''}]",
                            len(group) == rs.order, f"|W|={len(group)} expected={rs.order}"))
        bad = []
        for t in sample_points(rs, points_per_type):
            orb = len(weyl.orbit(rs, t))
            stab = weyl.stabilizer_order(rs, t)
            if len(group) % stab or len(group) // stab != orb:
                bad.append(f"{t}: |orbit|={orb} |stab|={stab}")
        checks.append(Check(GLOBAL, f"orbit_stabilizer[{rs.series}{rs.rank}{rs.realization or ''}]",
                            not bad, "; ".join(bad) or f"points={points_per_type}"))
    return checks


# -- lattice volumes ----------------------------------------------------------

def random_unimodular(n: int, rng: random.Random, steps: int = 6) -> list[list[int]]:
    """Product of random elementary integer matrices and a signed permutation."""
    m = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(steps):
        if n > 1:
            i, j = rng.sample(range(n), 2)
            k = rng.choice([-2, -1, 1, 2])
            m[i] = [a + k * b for a, b in zip(m[i], m[j])]
        if rng.random() < 0.3:
            i = rng.randrange(n)
            m[i] = [-a for a in m[i]]
    return m


def volume_checks(seed: int = 0) -> list[Check]:
    checks = []
    seg_bad = [d for d in range(0, 11) if polytope_normalized_volume(segment(d)) != d]
    checks.append(Check(GLOBAL, "volume_segments", not seg_bad, f"failed d={seg_bad}" if seg_bad else "d=0..10"))
    simp_bad = [n for n in range(1, 5) if polytope_normalized_volume(unit_simplex(n)) != 1]
    checks.append(Check(GLOBAL, "volume_unimodular_simplices", not simp_bad, "n=1..4"))
    sq = polytope_normalized_volume(unit_cube(2))
    checks.append(Check(GLOBAL, "volume_square", sq == 2, f"vol={sq}"))

    rng = random.Random(seed)
    bases = [unit_cube(2), unit_simplex(3), LatticePolytope(((0, 0), (3, 0), (1, 2), (0, 1))),
             unit_cube(3)]
    bad = []
    for k in range(20):
        p = bases[k % len(bases)]
        m = random_unimodular(p.dim, rng)
        shift = [rng.randint(-5, 5) for _ in range(p.dim)]
        q = p.transform(m).translate(shift)
        if polytope_normalized_volume(q) != polytope_normalized_volume(p):
            bad.append(str(m))
    checks.append(Check(GLOBAL, "volume_unimodular_invariance", not bad,
                        "; ".join(bad) or "transforms=20"))

    lower = LatticePolytope(((0, 0), (1, 0), (0, 1)))
    upper = LatticePolytope(((1, 0), (0, 1), (1, 1)))
    halves = polytope_normalized_volume(lower) + polytope_normalized_volume(upper)
    checks.append(Check(GLOBAL, "volume_subdivision_square", halves == sq,
                        f"halves={halves} whole={sq}"))
    return checks


# -- catalog cases ------------------------------------------------------------

def case_checks(case: CaseSpec) -> list[Check]:
    name = case.name
    out = []
    report = validate(case.poset, case.links)
    out.append(Check(name, "validate", report.ok, "" if report.ok else str(report).replace("\n", "; ")))
    if not report.ok:
        return out
    poset, links, rs = case.poset, case.links, case.root_system
    tposet, tlinks = torus_restriction(poset, links)
    ids = poset.ids

    for sheaf, f in case.sheaves.items():
        res = gauss_bonnet(poset, links, f, rs)
        out.append(Check(name, f"index_identity[{sheaf}]", res.match,
                         f"chi_integral={res.chi_via_integral} chi_cc={res.chi_via_cc}"))
        ft = restrict_function(f, tposet)
        chi_t = euler_integral(tposet, ft)
        out.append(Check(name, f"localization[{sheaf}]", chi_t == res.chi_via_integral,
                         f"chi_G={res.chi_via_integral} chi_T={chi_t}"))
        cc_t = cc_multiplicities(tposet, tlinks, ft)
        diff = [sid for sid in tposet.ids if cc_t[sid] != res.multiplicities[sid]]
        out.append(Check(name, f"cc_matching[{sheaf}]", not diff,
                         f"differ={diff}" if diff else f"semisimple={len(tposet)}"))
        exp = case.expected.get(f"chi:{sheaf}")
        if exp is not None:
            out.append(Check(name, f"expected_chi[{sheaf}]", exp.value == res.chi_via_integral,
                             f"got={res.chi_via_integral} expected={exp.value}"))
        exp = case.expected.get(f"cc:{sheaf}")
        if exp is not None:
            got = res.multiplicities.vector(ids)
            out.append(Check(name, f"expected_cc[{sheaf}]", tuple(exp.value) == got,
                             f"got={list(got)} expected={list(exp.value)}"))

    identity = linked_chi_c_identity(poset, links, rs)
    bad = [sid for sid, (lhs, rhs) in identity.items() if lhs != rhs]
    out.append(Check(name, "stratumwise_identity", not bad, f"failed={bad}" if bad else ""))

    # links into the open torus stratum, pinned afresh by smoothness of T
    opens = [s.id for s in tposet.strata if s.dim == tposet.ambient_dim]
    known = {pair: tlinks[pair] for pair in tposet.comparable_pairs()}
    mism = [(a, top) for top in opens for a in tposet.down_set(top)
            if a != top and pin_link(tposet, known, a, top) != tlinks[a, top]]
    out.append(Check(name, "torus_links", not mism, f"mismatch={mism}" if mism else ""))

    for top in case.smooth_closed:
        signed_chi, g = hopf_sides(poset, top, rs)
        out.append(Check(name, f"hopf[{top}]", signed_chi == g,
                         f"signed_chi={signed_chi} gdeg={g}"))
        cc = cc_multiplicities(poset, links, closure_indicator(poset, top))
        want = {sid: 0 for sid in ids}
        want[top] = (-1) ** poset[top].dim
        out.append(Check(name, f"smooth_cc[{top}]", dict(cc.multiplicities) == want,
                         f"c_top={cc[top]}"))

    exp = case.expected.get("c_semisimple:orbit_closure")
    if exp is not None:
        f = case.sheaves["orbit_closure"]
        cc = cc_multiplicities(poset, links, f)
        support = [sid for sid in ids if f[sid] != 0 and poset[sid].is_semisimple]
        ok = len(support) == 1 and cc[support[0]] == f[support[0]] == exp.value
        out.append(Check(name, "orbit_closure_multiplicity", ok,
                         f"stratum={support} c={[cc[s] for s in support]}"))
    exp = case.expected.get("chi_orbit:Oa")
    if exp is not None and rs is not None:
        t = TorusPoint((CoordValue.generic(1),))
        got = weyl.orbit_euler_characteristic(rs, t)
        out.append(Check(name, "orbit_chi[Oa]", got == exp.value == poset["Oa"].chi_c,
                         f"chi_orbit={got} chi_c={poset['Oa'].chi_c}"))
    return out


def run_checks(case_filter: str | None = None, corrupt: bool = False) -> list[Check]:
    """All checks, in a fixed order.  ``case_filter`` restricts to one catalog case."""
    names = catalog.CASE_NAMES if case_filter is None else (
        catalog.catalog_case(case_filter).name,)
    checks = []
    for n in names:
        case = catalog.catalog_case(n)
        if corrupt:
            case = catalog.corrupted(case)
        checks.extend(case_checks(case))
    if case_filter is None:
        checks.extend(weyl_checks())
        checks.extend(volume_checks())
    return checks
