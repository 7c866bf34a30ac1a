import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gaussbonnet.catalog import CASE_NAMES, catalog_case
from gaussbonnet.gdeg import (
    gauss_bonnet,
    gdeg_orbit,
    gdeg_stratum,
    hopf_sides,
    linked_chi_c_identity,
)
from gaussbonnet.polytope import segment, unit_simplex
from gaussbonnet.strata import (
    NONSEMISIMPLE,
    ConstructibleFunction,
    Declared,
    Finite,
    FullDimensional,
    Hypersurface,
    LinkData,
    Semisimple,
    StratPoset,
    Stratum,
    Subtorus,
    cc_multiplicities,
    closure_indicator,
    constant_function,
    indicator,
)
from gaussbonnet.weyl import TorusPoint, build_root_system, orbit


def P(spec):
    return TorusPoint.parse(spec)


class TestOrbitDegree:
    def test_sl2_generic(self):
        assert gdeg_orbit(build_root_system("A", 1, "SL"), P("g1")) == 2

    def test_identity(self):
        rs = build_root_system("C", 2)
        assert gdeg_orbit(rs, rs.identity_point()) == 1

    def test_gl3_repeated(self):
        assert gdeg_orbit(build_root_system("A", 2, "GL"), P("g1,g1,g2")) == 3

    @pytest.mark.parametrize("point", ["g1,g2,g3", "g1,g1^-1,w:1/2", "w:1/3,w:1/3,g1"])
    def test_equals_orbit_size(self, point):
        rs = build_root_system("B", 3)
        assert gdeg_orbit(rs, P(point)) == len(orbit(rs, P(point)))


class TestStratumDegree:
    def test_nonsemisimple_is_zero(self):
        assert gdeg_stratum(Stratum("Ou", 2, NONSEMISIMPLE, 0)) == 0

    @pytest.mark.parametrize("model,expected", [
        (Finite(1), 1), (Finite(6), 6), (FullDimensional(), 0), (Subtorus(2), 0),
        (Hypersurface(segment(3)), 3), (Hypersurface(unit_simplex(2)), 1), (Declared(7), 7),
    ])
    def test_models(self, model, expected):
        assert gdeg_stratum(Stratum("s", 1, Semisimple(1, 1, model), 0)) == expected


class TestGaussBonnet:
    @pytest.fixture
    def sl2(self):
        c = catalog_case("sl2_adjoint")
        return c.poset, c.links, c.root_system

    def test_constant(self, sl2):
        poset, links, rs = sl2
        res = gauss_bonnet(poset, links, constant_function(poset), rs)
        assert (res.chi_via_integral, res.chi_via_cc) == (0, 0)
        assert res.multiplicities.vector(poset.ids) == (0, 0, 0, 0, -1)
        assert res.gdegs["rs"] == 0
        assert res.match

    def test_skyscraper(self, sl2):
        poset, links, rs = sl2
        res = gauss_bonnet(poset, links, indicator(poset, ["I"]), rs)
        assert (res.chi_via_integral, res.chi_via_cc) == (1, 1)
        assert res.multiplicities["I"] == 1 and res.gdegs["I"] == 1

    def test_orbit_closure(self, sl2):
        poset, links, rs = sl2
        res = gauss_bonnet(poset, links, closure_indicator(poset, "Ou"), rs)
        assert (res.chi_via_integral, res.chi_via_cc) == (1, 1)

    def test_mismatch_surfaced(self, sl2):
        poset, links, rs = sl2
        res = gauss_bonnet(poset, links.with_value("I", "rs", 2), constant_function(poset), rs)
        assert res.chi_via_integral == 0 and res.chi_via_cc == -1
        assert not res.match

    def test_declared_flagged(self):
        p = Stratum("p", 0, Semisimple(1, 0, Declared(1)), 1)
        u = Stratum("U", 1, Semisimple(1, 1, FullDimensional()), -1)
        poset = StratPoset.create([p, u], [("p", "U")], 1, 1)
        res = gauss_bonnet(poset, LinkData({("p", "U"): 1}), constant_function(poset))
        assert res.declared == ("p",)
        assert res.match


@st.composite
def case_and_function(draw):
    case = catalog_case(draw(st.sampled_from(CASE_NAMES)))
    values = {sid: draw(st.integers(-20, 20)) for sid in case.poset.ids}
    return case, ConstructibleFunction(values)


@settings(max_examples=200, deadline=None)
@given(case_and_function())
def test_main_identity_for_random_functions(data):
    case, f = data
    assert gauss_bonnet(case.poset, case.links, f, case.root_system).match


@settings(max_examples=100, deadline=None)
@given(case_and_function())
def test_nonnegative_cycle_gives_nonnegative_chi(data):
    case, f = data
    res = gauss_bonnet(case.poset, case.links, f, case.root_system)
    assert all(g >= 0 for g in res.gdegs.values())
    if all(c >= 0 for c in res.multiplicities.multiplicities.values()):
        assert res.chi_via_cc >= 0


@pytest.mark.parametrize("name", CASE_NAMES)
def test_stratumwise_identity(name):
    case = catalog_case(name)
    for sid, (lhs, rhs) in linked_chi_c_identity(case.poset, case.links, case.root_system).items():
        assert lhs == rhs, sid


@pytest.mark.parametrize("name", CASE_NAMES)
def test_hopf(name):
    case = catalog_case(name)
    assert case.smooth_closed
    for top in case.smooth_closed:
        signed_chi, g = hopf_sides(case.poset, top, case.root_system)
        assert signed_chi == g


def test_hopf_values_pinned():
    case = catalog_case("sl2_semisimple_orbit")
    # closed orbit of a generic semisimple element: chi = |W| / |Stab| = 2, dim 2
    assert hopf_sides(case.poset, "Oa", case.root_system) == (2, 2)
    assert hopf_sides(catalog_case("torus2_line").poset, "C") == (1, 1)
    assert hopf_sides(catalog_case("torus1_cubic").poset, "P") == (3, 3)


def test_cc_times_gdeg_needs_nonsemisimple_zero():
    # the unipotent orbit closure carries c = 1 on Ou, which contributes nothing
    case = catalog_case("sl2_orbit_closure")
    f = case.sheaves["orbit_closure"]
    cc = cc_multiplicities(case.poset, case.links, f)
    assert cc["Ou"] == 1 and gdeg_stratum(case.poset["Ou"]) == 0
