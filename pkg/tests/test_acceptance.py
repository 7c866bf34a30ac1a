"""Acceptance gate: one check per criterion, each printing a PASS/FAIL line.

Run under pytest (lines are repeated in the terminal summary) or directly with
``python3 tests/test_acceptance.py``.
"""

import random
import subprocess
import sys
import time
from itertools import permutations, product


from gaussbonnet.casefile import format_case
from gaussbonnet.catalog import CASE_NAMES, catalog_case
from gaussbonnet.cli import main
from gaussbonnet.gdeg import gauss_bonnet, hopf_sides
from gaussbonnet.polytope import (
    LatticePolytope,
    det,
    polytope_normalized_volume,
    segment,
    unit_cube,
    unit_simplex,
)
from gaussbonnet.strata import (
    cc_multiplicities,
    closure_indicator,
    constant_function,
    euler_integral,
    indicator,
    restrict_function,
    torus_restriction,
)
from gaussbonnet.verify import classical_types, random_unimodular, sample_points
from gaussbonnet.weyl import _weyl_group, stabilizer_order, weyl_group

RESULTS = []


def report(number, title, ok, detail):
    line = f"criterion {number} {'PASS' if ok else 'FAIL'} {title}: {detail}"
    RESULTS.append(line)
    print(line)
    return ok


# 1 ---------------------------------------------------------------------------

def check_identity_on_catalog():
    # time from cold caches so catalog construction is included
    catalog_case.cache_clear()
    _weyl_group.cache_clear()
    start = time.perf_counter()
    failures, pairs = [], 0
    for name in CASE_NAMES:
        case = catalog_case(name)
        for sheaf in ("constant", "skyscraper", "orbit_closure"):
            if sheaf not in case.sheaves:
                failures.append(f"{name} lacks {sheaf}")
        if len(case.sheaves) < 3:
            failures.append(f"{name} has {len(case.sheaves)} sheaves")
        for sheaf, f in case.sheaves.items():
            res = gauss_bonnet(case.poset, case.links, f, case.root_system)
            pairs += 1
            if res.chi_via_integral != res.chi_via_cc:
                failures.append(f"{name}/{sheaf}: {res.chi_via_integral} != {res.chi_via_cc}")
    elapsed = time.perf_counter() - start
    ok = not failures and len(CASE_NAMES) >= 5 and elapsed < 5.0
    detail = f"cases={len(CASE_NAMES)} case_sheaf_pairs={pairs} time={elapsed:.3f}s"
    return report(1, "chi_integral == chi_cc on the catalog", ok,
                  detail + ("" if not failures else " failures=" + "; ".join(failures)))


# 2 ---------------------------------------------------------------------------

def check_sl2_pinned():
    case = catalog_case("sl2_adjoint")
    poset, links, rs = case.poset, case.links, case.root_system
    assert poset.ids == ["I", "-I", "Ou", "O-u", "rs"]
    const = gauss_bonnet(poset, links, constant_function(poset), rs)
    sky = gauss_bonnet(poset, links, indicator(poset, ["I"]), rs)
    orb_f = closure_indicator(poset, "Ou")
    orb = gauss_bonnet(poset, links, orb_f, rs)
    got = {
        "constant": (const.chi_via_integral, const.chi_via_cc, const.multiplicities.vector(poset.ids)),
        "skyscraper": (sky.chi_via_integral, sky.chi_via_cc, sky.multiplicities["I"]),
        "orbit_closure": (orb.chi_via_integral, orb.chi_via_cc,
                          orb.multiplicities["I"], orb.multiplicities["Ou"]),
    }
    want = {
        "constant": (0, 0, (0, 0, 0, 0, -1)),
        "skyscraper": (1, 1, 1),
        "orbit_closure": (1, 1, 1, 1),
    }
    ok = got == want and orb.multiplicities["I"] == orb_f["I"]
    return report(2, "SL2 pinned values", ok, f"got={got}")


# 3 ---------------------------------------------------------------------------

def _signed_permutations(rs):
    """Group elements listed straight from the series constraints."""
    n = rs.coordinate_count
    if rs.series == "A" and n == 1:
        yield (0,), (1,)
        yield (0,), (-1,)
        return
    for perm in permutations(range(n)):
        for signs in product((1, -1), repeat=n):
            if rs.series == "A" and -1 in signs:
                continue
            if rs.series == "D" and signs.count(-1) % 2:
                continue
            yield perm, signs


def _apply(perm, signs, coords):
    out = [None] * len(coords)
    for j, i in enumerate(perm):
        out[i] = coords[j].inverse() if signs[i] == -1 else coords[j]
    return tuple(out)


def check_orbit_formula():
    failures, types, points = [], 0, 0
    for rs in classical_types(3):
        types += 1
        elements = list(_signed_permutations(rs))
        order = len(weyl_group(rs))
        if order != len(elements):
            failures.append(f"{rs}: |W|={order} vs {len(elements)}")
        pts = sample_points(rs, 12)
        for t in pts:
            images = [_apply(p, s, t.coords) for p, s in elements]
            orbit_size = len(set(images))
            stab = stabilizer_order(rs, t)
            points += 1
            if order % stab or order // stab != orbit_size or images.count(t.coords) != stab:
                failures.append(f"{rs} {t}: |W|/stab={order}/{stab} |orbit|={orbit_size}")
    ok = not failures and types >= 14 and points >= 10 * types
    return report(3, "|W| / |Stab| == |orbit|", ok,
                  f"types={types} points={points}" + ("" if ok else " " + "; ".join(failures)))


# 4 ---------------------------------------------------------------------------

def check_localization():
    failures, pairs = [], 0
    for name in CASE_NAMES:
        case = catalog_case(name)
        tposet, tlinks = torus_restriction(case.poset, case.links)
        for sheaf, f in case.sheaves.items():
            pairs += 1
            ft = restrict_function(f, tposet)
            if euler_integral(case.poset, f) != euler_integral(tposet, ft):
                failures.append(f"{name}/{sheaf}: integral")
            cc = cc_multiplicities(case.poset, case.links, f)
            cct = cc_multiplicities(tposet, tlinks, ft)
            bad = [sid for sid in tposet.ids if cc[sid] != cct[sid]]
            if bad:
                failures.append(f"{name}/{sheaf}: multiplicities {bad}")
    return report(4, "localization to the torus", not failures,
                  f"case_sheaf_pairs={pairs}" + ("" if not failures else " " + "; ".join(failures)))


# 5 ---------------------------------------------------------------------------

def check_volumes():
    failures = []
    for d in range(0, 11):
        if polytope_normalized_volume(segment(d)) != d:
            failures.append(f"segment {d}")
    rng = random.Random(2024)
    for n in range(1, 5):
        simplices = [unit_simplex(n)] + [
            unit_simplex(n).transform(random_unimodular(n, rng)) for _ in range(3)]
        for s in simplices:
            if polytope_normalized_volume(s) != 1:
                failures.append(f"unimodular simplex {s}")
    square = unit_cube(2)
    if polytope_normalized_volume(square) != 2:
        failures.append("square")
    shapes = [square, unit_cube(3), segment(7),
              LatticePolytope(((0, 0), (3, 1), (1, 4), (-2, 2))),
              LatticePolytope(((0, 0, 0), (2, 0, 0), (0, 3, 0), (0, 0, 1), (1, 1, 1)))]
    transforms = 0
    for shape in shapes:
        base = polytope_normalized_volume(shape)
        for _ in range(20):
            m = random_unimodular(shape.dim, rng)
            if abs(det(m)) != 1:
                failures.append("non-unimodular sample")
            shift = [rng.randint(-9, 9) for _ in range(shape.dim)]
            transforms += 1
            if polytope_normalized_volume(shape.transform(m)) != base:
                failures.append(f"transform {m} of {shape}")
            if polytope_normalized_volume(shape.translate(shift)) != base:
                failures.append(f"shift {shift} of {shape}")
    halves = [LatticePolytope(((0, 0), (1, 0), (0, 1))), LatticePolytope(((1, 0), (0, 1), (1, 1)))]
    if sum(polytope_normalized_volume(h) for h in halves) != polytope_normalized_volume(square):
        failures.append("square subdivision")
    strips = [LatticePolytope(((0, 0), (1, 0), (0, 2), (1, 2))),
              LatticePolytope(((1, 0), (2, 0), (1, 2), (2, 2)))]
    if sum(map(polytope_normalized_volume, strips)) != polytope_normalized_volume(
            LatticePolytope(((0, 0), (2, 0), (0, 2), (2, 2)))):
        failures.append("rectangle subdivision")
    return report(5, "normalized volume oracle", not failures,
                  f"segments=0..10 transforms={transforms} square=2"
                  + ("" if not failures else " " + "; ".join(failures)))


# 6 ---------------------------------------------------------------------------

def _hopf_kind(case, top):
    s = case.poset[top]
    if s.dim == 0:
        return "point"
    if case.root_system is None and s.dim == case.poset.ambient_dim:
        return "torus"
    return "other"


def check_hopf():
    failures, pairs, kinds = [], [], set()
    for name in CASE_NAMES:
        case = catalog_case(name)
        for top in case.smooth_closed:
            signed_chi, g = hopf_sides(case.poset, top, case.root_system)
            pairs.append(f"{name}:{top}={signed_chi}/{g}")
            if signed_chi != g:
                failures.append(pairs[-1])
            kinds.add(_hopf_kind(case, top))
    ok = not failures and {"point", "torus"} <= kinds
    return report(6, "(-1)^dim chi == gdeg on smooth closed invariant subvarieties", ok,
                  f"checked={len(pairs)} kinds={sorted(kinds)}" + ("" if not failures else " " + "; ".join(failures)))


# 7 ---------------------------------------------------------------------------

def _compute_exit(tmp_path, label, text):
    path = tmp_path / f"{label}.case"
    path.write_text(text)
    return main(["compute", str(path)])


def check_negative_controls(tmp_path):
    base = format_case(catalog_case("sl2_adjoint"))
    lines = base.splitlines()
    idx = next(i for i, line in enumerate(lines) if line.split()[:1] == ["rs"])
    parity = lines[:idx] + ["rs 3 semisimple 1 0 finite:1 -2"] + lines[idx + 1:]
    got = {
        "diagonal": _compute_exit(tmp_path, "diagonal", base.replace("[links]\n", "[links]\ne I I = 0\n")),
        "parity": _compute_exit(tmp_path, "parity", "\n".join(parity) + "\n"),
        "wrong_e": _compute_exit(tmp_path, "wrong_e", base.replace("e I rs = 1", "e I rs = 2")),
        "control": _compute_exit(tmp_path, "control", base),
    }
    want = {"diagonal": 2, "parity": 2, "wrong_e": 3, "control": 0}
    return report(7, "negative controls", got == want, f"exit_codes={got}")


# 8 ---------------------------------------------------------------------------

def check_determinism():
    cmd = [sys.executable, "-m", "gaussbonnet", "verify"]
    a = subprocess.run(cmd, capture_output=True, check=False)
    b = subprocess.run(cmd, capture_output=True, check=False)
    ok = a.stdout == b.stdout and a.returncode == b.returncode == 0 and len(a.stdout) > 0
    return report(8, "verify output is byte-identical across runs", ok,
                  f"bytes={len(a.stdout)} exit={a.returncode},{b.returncode}")


# -- pytest entry points -------------------------------------------------------

def test_criterion_1_identity():
    assert check_identity_on_catalog()


def test_criterion_2_sl2_values():
    assert check_sl2_pinned()


def test_criterion_3_orbit_formula():
    assert check_orbit_formula()


def test_criterion_4_localization():
    assert check_localization()


def test_criterion_5_volumes():
    assert check_volumes()


def test_criterion_6_hopf():
    assert check_hopf()


def test_criterion_7_negative_controls(tmp_path):
    assert check_negative_controls(tmp_path)


def test_criterion_8_determinism():
    assert check_determinism()


if __name__ == "__main__":
    import contextlib
    import io
    import tempfile
    from pathlib import Path

    with tempfile.TemporaryDirectory() as tmp:
        checks = [check_identity_on_catalog, check_sl2_pinned, check_orbit_formula,
                  check_localization, check_volumes, check_hopf,
                  lambda: check_negative_controls(Path(tmp)), check_determinism]
        outcomes = []
        for check in checks:
            with contextlib.redirect_stderr(io.StringIO()), \
                    contextlib.redirect_stdout(io.StringIO()):
                outcomes.append(check())
        print("\n".join(RESULTS))
    sys.exit(0 if all(outcomes) else 1)
