"""Plain-text case files.

Example::

    [case]
    name = sl2_adjoint
    [group]
    series = A
    rank = 1
    realization = SL
    [strata]
    # id  dim  kind           rank  dim_in_torus  torus_model  chi_c
    I     0    semisimple     3     0             finite:1     1
    Ou    2    nonsemisimple  -     -             -            0
    rs    3    semisimple     1     1             full         -2
    [closure]
    I < Ou < rs
    [links]
    e I Ou = 0
    e I rs = 1
    e Ou rs = 1
    [sheaf constant]
    I = 1
    Ou = 1
    rs = 1
    [smooth]
    rs

Torus models are ``finite:N``, ``full``, ``subtorus:D``, ``declared:G`` and
``hypersurface:x,y;x,y;...`` (Newton polytope vertices).  A bare torus is
``series = torus`` with ``rank`` its dimension.  ``[case]`` and ``[smooth]``
are optional.
"""

from __future__ import annotations

import re

from .catalog import CaseSpec
from .errors import GaussBonnetError, ParseError
from .polytope import LatticePolytope
from .strata import (
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
)
from .weyl import build_root_system

_SECTION_RE = re.compile(r"\[\s*([a-z]+)(?:\s+(\S+))?\s*\]")
_TOKEN_RE = re.compile(r"\S+")
_GROUP_KEYS = {"series", "rank", "realization", "dim"}
_CASE_KEYS = {"name", "description"}
_KINDS = {"semisimple": True, "ss": True, "nonsemisimple": False, "nss": False}


def _tokens(line: str) -> list[tuple[str, int]]:
    return [(m.group(), m.start() + 1) for m in _TOKEN_RE.finditer(line)]


def _int(tok: str, lineno: int, col: int, what: str) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"{what} must be an integer, got {tok!r}", lineno, col) from None


def _parse_model(tok: str, lineno: int, col: int):
    head, _, arg = tok.partition(":")
    if head == "full" and not arg:
        return FullDimensional()
    if head == "finite":
        return Finite(_int(arg, lineno, col, "finite count"))
    if head == "subtorus":
        return Subtorus(_int(arg, lineno, col, "subtorus dimension"))
    if head == "declared":
        return Declared(_int(arg, lineno, col, "declared gdeg"))
    if head == "hypersurface":
        try:
            verts = tuple(tuple(int(x) for x in v.split(",")) for v in arg.split(";"))
            return Hypersurface(LatticePolytope(verts))
        except (ValueError, GaussBonnetError) as exc:
            raise ParseError(f"bad Newton polytope {arg!r}: {exc}", lineno, col) from None
    raise ParseError(f"unknown torus model {tok!r}", lineno, col)


def _key_value(line: str, lineno: int) -> tuple[str, str]:
    if "=" not in line:
        raise ParseError("expected 'key = value'", lineno, 1)
    key, _, value = line.partition("=")
    return key.strip(), value.strip()


def parse_case(text: str, default_name: str = "case") -> CaseSpec:
    section = None
    sheaf_name = None
    group: dict[str, str] = {}
    meta: dict[str, str] = {}
    strata: list[Stratum] = []
    relations: list[tuple[str, str]] = []
    links: dict = {}
    sheaves: dict[str, dict] = {}
    smooth: list[str] = []
    seen_sections = set()

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        indent = len(line) - len(line.lstrip())
        m = _SECTION_RE.fullmatch(line.strip())
        if m:
            section, arg = m.group(1), m.group(2)
            if section == "sheaf":
                if arg is None:
                    raise ParseError("[sheaf] needs a name", lineno, indent + 1)
                if arg in sheaves:
                    raise ParseError(f"sheaf {arg!r} defined twice", lineno, indent + 1)
                sheaf_name = arg
                sheaves[arg] = {}
            elif section in ("case", "group", "strata", "closure", "links", "smooth"):
                if arg is not None:
                    raise ParseError(f"[{section}] takes no argument", lineno, indent + 1)
                if section in seen_sections:
                    raise ParseError(f"section [{section}] repeated", lineno, indent + 1)
                seen_sections.add(section)
            else:
                raise ParseError(f"unknown section [{section}]", lineno, indent + 1)
            continue
        if section is None:
            raise ParseError("content before the first section", lineno, indent + 1)
        toks = _tokens(line)

        if section in ("group", "case"):
            key, value = _key_value(line, lineno)
            allowed = _GROUP_KEYS if section == "group" else _CASE_KEYS
            target = group if section == "group" else meta
            if key not in allowed:
                raise ParseError(f"unknown key {key!r} in [{section}]", lineno, indent + 1)
            if key in target:
                raise ParseError(f"key {key!r} repeated", lineno, indent + 1)
            target[key] = value

        elif section == "strata":
            if len(toks) != 7:
                raise ParseError(f"stratum line needs 7 fields, got {len(toks)}",
                                 lineno, toks[0][1])
            (sid, _), (dim, cdim), (kind, ckind), (rank, crank), (dt, cdt), (model, cmodel), \
                (chi, cchi) = toks
            if kind.lower() not in _KINDS:
                raise ParseError(f"kind must be semisimple or nonsemisimple, got {kind!r}",
                                 lineno, ckind)
            dim_v = _int(dim, lineno, cdim, "dim")
            chi_v = _int(chi, lineno, cchi, "chi_c")
            if _KINDS[kind.lower()]:
                k = Semisimple(_int(rank, lineno, crank, "rank"),
                               _int(dt, lineno, cdt, "dim_in_torus"),
                               _parse_model(model, lineno, cmodel))
            else:
                for tok, col in ((rank, crank), (dt, cdt), (model, cmodel)):
                    if tok != "-":
                        raise ParseError("nonsemisimple strata take '-' for rank, "
                                         "dim_in_torus and torus_model", lineno, col)
                k = NONSEMISIMPLE
            strata.append(Stratum(sid, dim_v, k, chi_v))

        elif section == "closure":
            words = [t for t, _ in toks]
            if len(words) < 3 or len(words) % 2 == 0 or any(
                    w != "<" for w in words[1::2]):
                raise ParseError("expected 'a < b' (chains allowed)", lineno, toks[0][1])
            ids = words[0::2]
            relations.extend(zip(ids, ids[1:]))

        elif section == "links":
            words = [t for t, _ in toks]
            if len(words) != 5 or words[0] != "e" or words[3] != "=":
                raise ParseError("expected 'e a b = integer'", lineno, toks[0][1])
            pair = (words[1], words[2])
            if pair in links:
                raise ParseError(f"link e({pair[0]}, {pair[1]}) given twice", lineno, toks[0][1])
            links[pair] = _int(words[4], lineno, toks[4][1], "link value")

        elif section == "sheaf":
            key, value = _key_value(line, lineno)
            if key in sheaves[sheaf_name]:
                raise ParseError(f"stratum {key!r} repeated in sheaf {sheaf_name!r}",
                                 lineno, indent + 1)
            sheaves[sheaf_name][key] = _int(value, lineno, line.index("=") + 2, "sheaf value")

        elif section == "smooth":
            if len(toks) != 1:
                raise ParseError("one stratum id per line", lineno, toks[0][1])
            smooth.append(toks[0][0])

    if "group" not in seen_sections:
        raise ParseError("missing [group] section")
    if "strata" not in seen_sections:
        raise ParseError("missing [strata] section")
    for key in ("series", "rank"):
        if key not in group:
            raise ParseError(f"[group] is missing {key!r}")
    try:
        rank = int(group["rank"])
    except ValueError:
        raise ParseError(f"rank must be an integer, got {group['rank']!r}") from None
    if group["series"].lower() == "torus":
        if "realization" in group:
            raise ParseError("a bare torus has no realization")
        rs = None
        torus_dim = rank
        ambient = torus_dim
    else:
        try:
            rs = build_root_system(group["series"], rank, group.get("realization"))
        except GaussBonnetError as exc:
            raise ParseError(f"[group]: {exc}") from None
        torus_dim = rs.torus_dim
        ambient = rs.group_dim
    if "dim" in group:
        try:
            ambient = int(group["dim"])
        except ValueError:
            raise ParseError(f"dim must be an integer, got {group['dim']!r}") from None

    poset = StratPoset.create(strata, relations, ambient, torus_dim)
    return CaseSpec(
        name=meta.get("name", default_name),
        description=meta.get("description", ""),
        root_system=rs,
        poset=poset,
        links=LinkData(links),
        sheaves={k: ConstructibleFunction(v) for k, v in sheaves.items()},
        smooth_closed=tuple(smooth),
    )


def _format_model(model) -> str:
    if isinstance(model, FullDimensional):
        return "full"
    if isinstance(model, Finite):
        return f"finite:{model.count}"
    if isinstance(model, Subtorus):
        return f"subtorus:{model.dim}"
    if isinstance(model, Declared):
        return f"declared:{model.gdeg}"
    verts = ";".join(",".join(str(c) for c in v) for v in model.polytope.vertices)
    return f"hypersurface:{verts}"


def _covers(poset: StratPoset) -> list[tuple]:
    """Covering relations of the closure order, in stratum order."""
    out = []
    for a, b in poset.comparable_pairs():
        if not any(poset.less(a, m) and poset.less(m, b) for m in poset.ids):
            out.append((a, b))
    return out


def format_case(case: CaseSpec) -> str:
    poset = case.poset
    lines = ["[case]", f"name = {case.name}"]
    if case.description:
        lines.append(f"description = {case.description}")
    lines += ["", "[group]"]
    rs = case.root_system
    if rs is None:
        lines += ["series = torus", f"rank = {poset.torus_dim}"]
    else:
        lines += [f"series = {rs.series}", f"rank = {rs.rank}"]
        if rs.realization:
            lines.append(f"realization = {rs.realization}")
        if rs.group_dim != poset.ambient_dim:
            lines.append(f"dim = {poset.ambient_dim}")
    lines += ["", "[strata]", "# id dim kind rank dim_in_torus torus_model chi_c"]
    for s in poset.strata:
        if s.is_semisimple:
            k = s.kind
            fields = [s.id, s.dim, "semisimple", k.rank, k.dim_in_torus,
                      _format_model(k.torus_model), s.chi_c]
        else:
            fields = [s.id, s.dim, "nonsemisimple", "-", "-", "-", s.chi_c]
        lines.append(" ".join(str(f) for f in fields))
    lines += ["", "[closure]"]
    lines += [f"{a} < {b}" for a, b in _covers(poset)]
    lines += ["", "[links]"]
    for (a, b), v in case.links.e.items():
        lines.append(f"e {a} {b} = {v}")
    for name, f in case.sheaves.items():
        lines += ["", f"[sheaf {name}]"]
        lines += [f"{sid} = {v}" for sid, v in f.chi_local.items()]
    if case.smooth_closed:
        lines += ["", "[smooth]"] + [str(t) for t in case.smooth_closed]
    return "\n".join(lines) + "\n"
