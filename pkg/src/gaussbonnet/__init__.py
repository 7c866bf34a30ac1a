"""Exact checks of the Gauss-Bonnet identity for Ad-equivariant constructible
sheaves on reductive groups, on desk-scale stratifications."""

from .catalog import CASE_NAMES, CaseSpec, catalog_case
from .gdeg import (
    GaussBonnetResult,
    gauss_bonnet,
    gdeg_generic_hypersurface,
    gdeg_orbit,
    gdeg_stratum,
)
from .polytope import LatticePolytope, polytope_normalized_volume
from .strata import (
    CharCycle,
    ConstructibleFunction,
    LinkData,
    StratPoset,
    Stratum,
    cc_multiplicities,
    euler_integral,
    restrict_function,
    torus_restriction,
    validate,
)
from .weyl import (
    CoordValue,
    RootSystem,
    TorusPoint,
    WeylElement,
    act,
    build_root_system,
    orbit,
    orbit_euler_characteristic,
    stabilizer_order,
    weyl_group,
)

__all__ = [
    "CASE_NAMES",
    "CaseSpec",
    "catalog_case",
    "GaussBonnetResult",
    "gauss_bonnet",
    "gdeg_generic_hypersurface",
    "gdeg_orbit",
    "gdeg_stratum",
    "LatticePolytope",
    "polytope_normalized_volume",
    "CharCycle",
    "ConstructibleFunction",
    "LinkData",
    "StratPoset",
    "Stratum",
    "cc_multiplicities",
    "euler_integral",
    "restrict_function",
    "torus_restriction",
    "validate",
    "CoordValue",
    "RootSystem",
    "TorusPoint",
    "WeylElement",
    "act",
    "build_root_system",
    "orbit",
    "orbit_euler_characteristic",
    "stabilizer_order",
    "weyl_group",
]

__version__ = "0.1.0"
