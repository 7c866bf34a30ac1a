"""Command-line front end.

Exit codes: 0 success / MATCH, 1 parse or usage error, 2 validation error,
3 MISMATCH or failed verification.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import catalog, weyl
from .casefile import format_case, parse_case
from .errors import GaussBonnetError, ParseError
from .gdeg import gauss_bonnet, gdeg_orbit
from .polytope import parse_vertices, polytope_normalized_volume
from .strata import validate
from .verify import run_checks

EXIT_OK, EXIT_PARSE, EXIT_INVALID, EXIT_MISMATCH = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_PARSE, f"{self.prog}: error: {message}\n")


def _table(header: list[str], rows: list[list]) -> list[str]:
    cells = [header] + [[str(c) for c in r] for r in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    return ["  " + "  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in cells]


def compute_report(case, sheaf: str) -> tuple[str, int]:
    """Report text and exit code for one case and sheaf (case already parsed)."""
    lines = [f"case={case.name}", f"sheaf={sheaf}"]
    report = validate(case.poset, case.links)
    if not report.ok:
        lines.append(f"validation=FAILED ({len(report.violations)} violations)")
        lines += [f"  {v}" for v in report.violations]
        return "\n".join(lines) + "\n", EXIT_INVALID
    lines.append("validation=OK")
    res = gauss_bonnet(case.poset, case.links, case.sheaves[sheaf], case.root_system)
    lines.append("strata:")
    lines += _table(["id", "dim", "kind", "chi_c", "gdeg"], [
        [s.id, s.dim, "semisimple" if s.is_semisimple else "nonsemisimple", s.chi_c,
         res.gdegs[s.id]] for s in case.poset.strata])
    lines.append("multiplicities:")
    lines += _table(["id", "chi_local", "c"], [
        [sid, case.sheaves[sheaf][sid], res.multiplicities[sid]] for sid in case.poset.ids])
    if res.declared:
        lines.append("declared_gdeg=" + ",".join(str(s) for s in res.declared))
    lines.append(f"chi_integral={res.chi_via_integral}")
    lines.append(f"chi_cc={res.chi_via_cc}")
    lines.append("MATCH" if res.match else "MISMATCH")
    return "\n".join(lines) + "\n", EXIT_OK if res.match else EXIT_MISMATCH


def _load_case(args):
    if args.case:
        return catalog.catalog_case(args.case)
    if not args.path:
        raise ParseError("give a case file or --case NAME")
    path = Path(args.path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    return parse_case(text, default_name=path.stem)


def cmd_compute(args) -> int:
    try:
        case = _load_case(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    sheaf = args.sheaf
    if sheaf not in case.sheaves:
        print(f"unknown sheaf {sheaf!r}; available: {', '.join(case.sheaves) or 'none'}",
              file=sys.stderr)
        return EXIT_PARSE
    try:
        text, code = compute_report(case, sheaf)
    except GaussBonnetError as exc:
        # e.g. a sheaf that misses strata
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID
    sys.stdout.write(text)
    return code


def cmd_verify(args) -> int:
    checks = run_checks(args.case, corrupt=args.corrupt)
    for c in checks:
        print(c.line())
    failed = sum(not c.ok for c in checks)
    print(f"checks={len(checks)} passed={len(checks) - failed} failed={failed}")
    return EXIT_OK if not failed else EXIT_MISMATCH


def cmd_orbit(args) -> int:
    if len(args.spec) == 1:
        realization, point = None, args.spec[0]
    elif len(args.spec) == 2:
        realization, point = args.spec
    else:
        print("expected [REALIZATION] POINT", file=sys.stderr)
        return EXIT_PARSE
    try:
        rs = weyl.build_root_system(args.series, args.rank, realization)
        t = weyl.TorusPoint.parse(point)
        order = len(weyl.weyl_group(rs))
        orb = len(weyl.orbit(rs, t))
        stab = weyl.stabilizer_order(rs, t)
        chi = weyl.orbit_euler_characteristic(rs, t)
        g = gdeg_orbit(rs, t)
    except GaussBonnetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    print(f"group={rs}")
    print(f"point={t}")
    print(f"|W|={order}")
    print(f"|orbit|={orb}")
    print(f"|stab|={stab}")
    print(f"chi_orbit={chi}")
    print(f"gdeg_orbit={g}")
    return EXIT_OK


def cmd_volume(args) -> int:
    try:
        p = parse_vertices(Path(args.path).read_text())
    except OSError as exc:
        print(f"cannot read {args.path}: {exc.strerror}", file=sys.stderr)
        return EXIT_PARSE
    except GaussBonnetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    print(f"dim={p.dim}")
    print(f"vertices={len(p.vertices)}")
    print(f"normalized_volume={polytope_normalized_volume(p)}")
    return EXIT_OK


def cmd_export(args) -> int:
    try:
        case = catalog.catalog_case(args.name)
    except GaussBonnetError as exc:
        print(exc, file=sys.stderr)
        return EXIT_PARSE
    text = format_case(case)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_cases(args) -> int:
    for name in catalog.CASE_NAMES:
        case = catalog.catalog_case(name)
        print(f"{name}: {case.description} (sheaves: {', '.join(case.sheaves)})")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="gaussbonnet",
                     description="Euler characteristics, characteristic cycles and Gaussian "
                                 "degrees of Ad-invariant stratifications.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("compute", help="evaluate both sides of the index identity for a case")
    p.add_argument("path", nargs="?", help="case file")
    p.add_argument("--case", help="use a built-in catalog case instead of a file")
    p.add_argument("--sheaf", default="constant", help="sheaf name (default: constant)")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("verify", help="run the verification battery")
    p.add_argument("--case", help="only the checks of this catalog case")
    p.add_argument("--corrupt", action="store_true",
                   help="test hook: perturb one free link value in every case")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("orbit", help="Weyl orbit, stabilizer and orbit Euler characteristic")
    p.add_argument("series")
    p.add_argument("rank", type=int)
    p.add_argument("spec", nargs="+", metavar="[REALIZATION] POINT",
                   help="e.g. 'GL g1,g1,g2' or 'w:1/3,g1^-1'")
    p.set_defaults(func=cmd_orbit)

    p = sub.add_parser("volume", help="normalized volume of a lattice polytope")
    p.add_argument("path", help="file with one vertex per line")
    p.set_defaults(func=cmd_volume)

    p = sub.add_parser("export", help="write a catalog case in case-file format")
    p.add_argument("name")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_export)

    p = sub.add_parser("cases", help="list catalog cases")
    p.set_defaults(func=cmd_cases)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
