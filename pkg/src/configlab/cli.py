"""Command line entry point: ``configlab <subcommand> ...``."""

from __future__ import annotations

import argparse
import json
import sys

from . import catalog
from .errors import ConfigError, Undefined
from .incidence import (
    IncidenceStructure,
    is_connected,
    is_lineal,
    s_equivalence_classes,
    validate_tactical,
)

SCHEMA_VERSION = 1
MAX_SAFE_INT = 2 ** 53


def json_safe(obj):
    """Integers beyond 2^53 become decimal strings so JSON readers keep them exact."""
    if isinstance(obj, bool) or obj is None:
        return obj
    if isinstance(obj, int):
        return str(obj) if abs(obj) > MAX_SAFE_INT else obj
    if isinstance(obj, dict):
        return {k: json_safe(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [json_safe(v) for v in obj]
    return obj


def dumps(obj) -> str:
    return json.dumps(json_safe(obj), sort_keys=True, indent=1)


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def load_structure(path: str) -> IncidenceStructure:
    data = json.loads(_read(path))
    if "structure" in data:
        data = data["structure"]
    return IncidenceStructure.from_dict(data)


def _write(text: str, out: str | None):
    if out:
        with open(out, "w") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


# build

def _build(args):
    name = args.name
    if name == "fano":
        return catalog.fano()
    if name == "pg":
        from .geometry import pg_configuration
        return pg_configuration(args.n, args.r, args.s, args.q)
    if name == "mukai":
        from .geometry import mukai_incidence
        return mukai_incidence(args.q)
    if name == "kummer":
        from .symplectic import kummer_configuration
        return kummer_configuration(args.g)
    if name == "cremona-richmond":
        from .symplectic import cremona_richmond
        return cremona_richmond()
    if name == "isotropic-anisotropic":
        from .symplectic import isotropic_anisotropic_config
        return isotropic_anisotropic_config()
    if name == "ceva":
        if args.realize:
            return catalog.ceva_realize(args.n, args.q)
        return catalog.ceva(args.n)
    if name == "modular":
        return catalog.modular_config(args.n)
    if name == "desargues":
        return catalog.desargues_realize() if args.realize else catalog.desargues()
    if name == "reye":
        return catalog.reye()
    if name == "hesse-salmon":
        return catalog.hesse_salmon()
    if name == "complete":
        return catalog.complete_configuration(args.v)
    if name == "golden":
        return catalog.golden(args.which)
    raise ConfigError(f"unknown builder {name!r}")


BUILDERS = ("fano", "pg", "mukai", "kummer", "cremona-richmond", "isotropic-anisotropic",
            "ceva", "modular", "desargues", "reye", "hesse-salmon", "complete", "golden")


def cmd_build(args):
    obj = _build(args)
    if isinstance(obj, IncidenceStructure):
        _write(obj.to_json(), args.output)
    else:
        report = obj.to_dict()
        report["structure"] = obj.structure.to_dict()
        _write(dumps(report), args.output)
    return 0


# analyze

def analyze(s: IncidenceStructure, max_s: int = 7) -> dict:
    from .designs import design_lambda, design_to_sign_matrix, hadamard_check
    from .symmetry import automorphism_group, canonical_form, s_regularity

    report: dict = {"schema": SCHEMA_VERSION}
    try:
        p = validate_tactical(s)
    except ConfigError as exc:
        report["tactical"] = False
        report["error"] = exc.to_dict()
        return report
    report["tactical"] = True
    report["params"] = {"v": p.v, "k": p.k, "b": p.b, "r": p.r, "distinct": p.distinct}
    d = design_lambda(s)
    report["design"] = d.to_dict()
    hadamard = False
    if d.is_design and p.symmetric:
        hadamard = hadamard_check(design_to_sign_matrix(s))
    report["hadamard"] = hadamard
    report["lineal"] = is_lineal(s)
    report["connected"] = is_connected(s)
    report["s_classes"] = s_equivalence_classes(s)[1]
    proper = automorphism_group(s)
    full = automorphism_group(s, allow_switch=True)
    report["proper_order"] = proper.order
    report["full_order"] = full.order
    report["has_switch"] = full.has_switch
    report["has_polarity"] = full.has_polarity
    g = proper.group
    report["regular"] = g.is_transitive(range(s.v)) and g.is_transitive(range(s.v, s.v + s.b))
    try:
        report["s_regularity"] = s_regularity(s, max_s=max_s)
    except Undefined as exc:
        report["s_regularity"] = None
        report["s_regularity_reason"] = str(exc)
    report["certificate"] = canonical_form(s).hex()
    return report


def render_text(report: dict) -> str:
    if not report.get("tactical"):
        return f"not tactical: {report['error']['message']}"
    p = report["params"]
    d = report["design"]
    lines = [
        f"parameters  ({p['v']}_{p['k']}, {p['b']}_{p['r']})  distinct={p['distinct']}",
        f"design      {d['is_design']}" + (f"  lambda={d['lambda']}" if d["is_design"] else ""),
    ]
    if d.get("bcr"):
        lines.append(f"bcr         {'pass' if d['bcr']['pass'] else 'fail: ' + d['bcr']['reason']}")
    lines += [
        f"hadamard    {report['hadamard']}",
        f"lineal      {report['lineal']}",
        f"connected   {report['connected']}",
        f"s-classes   {report['s_classes']}",
        f"group       proper {report['proper_order']}, full {report['full_order']}",
        f"switch      {report['has_switch']}  polarity {report['has_polarity']}",
        f"regular     {report['regular']}",
        f"s-regular   {report['s_regularity']}",
    ]
    return "\n".join(lines)


def cmd_analyze(args):
    report = analyze(load_structure(args.input), args.max_s)
    _write(render_text(report) if args.text else dumps(report), args.output)
    return 0


def cmd_iso(args):
    from .symmetry import isomorphism

    a, b = load_structure(args.a), load_structure(args.b)
    iso = isomorphism(a, b)
    out = {"isomorphic": iso is not None}
    if iso is not None:
        out["point_map"], out["block_map"] = iso
    _write(dumps(out), None)
    return 0 if iso is not None else 1


def cmd_enumerate(args):
    from .census import enumerate_v3

    res = enumerate_v3(args.v, lineal_only=args.lineal, budget=args.budget)
    out = {"v": args.v, "lineal": args.lineal, "count": res.count,
           "matrices": res.matrices, "nodes": res.nodes,
           "certificates": [c.hex() for c in res.certificates]}
    if args.structures:
        out["structures"] = [s.to_dict() for s in res.representatives]
    _write(dumps(out), args.output)
    return 0


def cmd_realize(args):
    from .realize import generic_point_hyperplane_realization

    real = generic_point_hyperplane_realization(load_structure(args.input))
    _write(dumps(real.to_dict()), args.output)
    return 0 if real.matches else 1


def cmd_export(args):
    from .levi import levi_graph

    s = load_structure(args.input)
    if args.format == "dot":
        text = levi_graph(s).to_dot()
    elif args.format == "csv":
        text = s.to_csv()
    else:
        text = s.to_json()
    _write(text, args.output)
    return 0


def cmd_catalog(args):
    rows = []
    for name, (_, params) in catalog.CATALOG.items():
        rows.append({"name": name, "v": params[0], "k": params[1], "b": params[2], "r": params[3]})
    if args.text:
        text = "\n".join(f"{r['name']:24s} ({r['v']}_{r['k']}, {r['b']}_{r['r']})" for r in rows)
    else:
        text = dumps(rows)
    _write(text, None)
    return 0


def cmd_designcheck(args):
    from .designs import bruck_chowla_ryser, check_design_equations

    v, k, lam = args.v, args.k, args.lam
    out = {"v": v, "k": k, "lambda": lam,
           "equations": check_design_equations(v, k, v, k, lam)}
    out["bcr"] = bruck_chowla_ryser(v, k, lam).to_dict()
    _write(dumps(out), None)
    return 0


def cmd_hadamard(args):
    from .designs import hadamard_check, hadamard_to_design, paley, sylvester

    if (args.sylvester is None) == (args.paley is None):
        raise ConfigError("give exactly one of --sylvester K or --paley Q")
    m = sylvester(args.sylvester) if args.sylvester is not None else paley(args.paley)
    if args.design:
        d = hadamard_to_design(m)
        _write(dumps({"t": d.t, "lambda": d.lam, "degenerate": d.degenerate,
                      "structure": d.structure.to_dict()}), args.output)
    elif args.format == "csv":
        _write(m.to_csv(), args.output)
    else:
        _write(dumps({"n": m.n, "hadamard": hadamard_check(m),
                      "rows": [list(r) for r in m.entries]}), args.output)
    return 0


def cmd_census(args):
    from .symplectic import plane_census_g2

    c = plane_census_g2()
    if not args.full:
        c = {k: v for k, v in c.items() if not isinstance(v, list)}
    _write(dumps(c), None)
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="configlab", description=__doc__)
    ap.add_argument("--workers", type=int, default=1,
                    help="accepted for compatibility; searches run in one process")
    sub = ap.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build", help="write a named configuration as JSON")
    b.add_argument("name", choices=BUILDERS)
    b.add_argument("--n", type=int, default=3)
    b.add_argument("--r", type=int, default=0)
    b.add_argument("--s", type=int, default=1)
    b.add_argument("--q", type=int, default=2)
    b.add_argument("--g", type=int, default=2)
    b.add_argument("--v", type=int, default=5)
    b.add_argument("--which", default="fano", choices=catalog.GOLDEN)
    b.add_argument("--realize", action="store_true")
    b.add_argument("-o", "--output")
    b.set_defaults(func=cmd_build)

    a = sub.add_parser("analyze", help="parameters, design data and symmetry report")
    a.add_argument("input", nargs="?", default="-")
    a.add_argument("--text", action="store_true")
    a.add_argument("--max-s", type=int, default=7)
    a.add_argument("-o", "--output")
    a.set_defaults(func=cmd_analyze)

    i = sub.add_parser("iso", help="exit 0 iff the two structures are isomorphic")
    i.add_argument("a")
    i.add_argument("b")
    i.set_defaults(func=cmd_iso)

    e = sub.add_parser("enumerate", help="v_3 configurations up to isomorphism")
    e.add_argument("--v", type=int, required=True)
    e.add_argument("--lineal", action="store_true")
    e.add_argument("--budget", type=int)
    e.add_argument("--structures", action="store_true")
    e.add_argument("-o", "--output")
    e.set_defaults(func=cmd_enumerate)

    r = sub.add_parser("realize", help="point/hyperplane realization on the moment curve")
    r.add_argument("--input", default="-")
    r.add_argument("-o", "--output")
    r.set_defaults(func=cmd_realize)

    x = sub.add_parser("export", help="dot, csv or json export")
    x.add_argument("input", nargs="?", default="-")
    x.add_argument("--format", choices=("dot", "csv", "json"), default="json")
    x.add_argument("-o", "--output")
    x.set_defaults(func=cmd_export)

    c = sub.add_parser("catalog", help="list builders with their parameters")
    c.add_argument("--text", action="store_true")
    c.set_defaults(func=cmd_catalog)

    d = sub.add_parser("designcheck", help="design equations and the BCR test")
    d.add_argument("--v", type=int, required=True)
    d.add_argument("--k", type=int, required=True)
    d.add_argument("--lam", type=int, required=True)
    d.set_defaults(func=cmd_designcheck)

    h = sub.add_parser("hadamard", help="Sylvester or Paley matrices")
    h.add_argument("--sylvester", type=int)
    h.add_argument("--paley", type=int)
    h.add_argument("--design", action="store_true")
    h.add_argument("--format", choices=("json", "csv"), default="json")
    h.add_argument("-o", "--output")
    h.set_defaults(func=cmd_hadamard)

    p = sub.add_parser("census", help="plane census of the genus 2 symplectic space")
    p.add_argument("what", choices=("planes",))
    p.add_argument("--full", action="store_true")
    p.set_defaults(func=cmd_census)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        sys.stderr.write(json.dumps(exc.to_dict()) + "\n")
        return 2
    except (OSError, json.JSONDecodeError, KeyError) as exc:
        sys.stderr.write(json.dumps({"error": type(exc).__name__, "message": str(exc)}) + "\n")
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
