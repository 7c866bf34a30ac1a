import pytest

from gaussbonnet import weyl
from gaussbonnet.catalog import (
    CASE_NAMES,
    all_cases,
    catalog_case,
    corrupted,
    pin_link,
    weyl_fixed_torsion_points,
)
from gaussbonnet.errors import NotFoundError
from gaussbonnet.gdeg import gauss_bonnet
from gaussbonnet.strata import cc_multiplicities, constant_function, validate
from gaussbonnet.weyl import build_root_system

REQUIRED = ["torus1_two_points", "torus2_subtorus", "sl2_adjoint", "gl2_adjoint",
            "sl2_orbit_closure"]


def test_required_cases_present():
    assert set(REQUIRED) <= set(CASE_NAMES)
    assert len(CASE_NAMES) >= 5


@pytest.mark.parametrize("name", CASE_NAMES)
def test_case_valid_with_battery(name):
    case = catalog_case(name)
    assert case.name == name
    assert validate(case.poset, case.links).ok
    assert len(case.sheaves) >= 3
    assert {"constant", "skyscraper"} <= set(case.sheaves)
    assert all(e.note for e in case.expected.values())


def test_sizes():
    assert len(catalog_case("sl2_adjoint").poset) == 5
    assert len(catalog_case("torus1_two_points").poset) == 3


def test_unknown_case():
    with pytest.raises(NotFoundError) as info:
        catalog_case("nonexistent")
    assert "sl2_adjoint" in str(info.value)


def test_sl2_chi_c_from_torus():
    poset = catalog_case("sl2_adjoint").poset
    assert [poset[s].chi_c for s in ["I", "-I", "Ou", "O-u", "rs"]] == [1, 1, 0, 0, -2]


def test_sl2_central_points_are_the_weyl_fixed_points():
    rs = build_root_system("A", 1, "SL")
    fixed = weyl_fixed_torsion_points(rs, 2)
    assert len(fixed) == 2
    assert all(weyl.orbit_euler_characteristic(rs, t) == 1 for t in fixed)


def test_unipotent_link_is_uniquely_pinned():
    """e(Ou, rs) is the only integer for which the constant sheaf on SL2
    has c = 0 on Ou; scan a window of candidates."""
    case = catalog_case("sl2_adjoint")
    good = []
    for v in range(-5, 6):
        links = case.links.with_value("Ou", "rs", v)
        cc = cc_multiplicities(case.poset, links, constant_function(case.poset))
        if cc["Ou"] == 0 and cc["rs"] == -1:
            good.append(v)
    assert good == [1]


def test_pin_link_against_torus_value():
    # In C*, a point's complex link inside the complement is one point.
    case = catalog_case("torus1_two_points")
    assert pin_link(case.poset, {}, "p", "U") == 1
    # In (C*)^2 the identity meets the diagonal; its link in the complement
    # of the diagonal is a disc minus a point.
    gl = catalog_case("gl2_fine")
    assert gl.links["I", "R"] == 0


@pytest.mark.parametrize("case", all_cases(), ids=lambda c: c.name)
def test_expected_values_reproduced(case):
    ids = case.poset.ids
    for sheaf, f in case.sheaves.items():
        res = gauss_bonnet(case.poset, case.links, f, case.root_system)
        assert res.chi_via_integral == case.expected[f"chi:{sheaf}"].value
        assert res.multiplicities.vector(ids) == case.expected[f"cc:{sheaf}"].value


def test_corrupted_breaks_identity_for_sl2():
    case = corrupted(catalog_case("sl2_adjoint"))
    assert validate(case.poset, case.links).ok
    res = gauss_bonnet(case.poset, case.links, case.sheaves["constant"], case.root_system)
    assert not res.match
