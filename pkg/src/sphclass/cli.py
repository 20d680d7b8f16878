"""Command-line driver: tables, cells, orbits and report.

Every report is emitted as one JSON object per line (the machine contract)
or rendered as a human table.  Exit codes: 0 all pass, 1 usage error,
2 verification failure, 3 resource cap.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import manifest as mf
from .bruhat import verify_cell_claim
from .classes import ClassFamily, Instance, VerificationReport, catalog, get_family, table_instances, verify_family
from .orbits import (PROBES, ResourceCapError, appendix_gl3_check, appendix_sp4_check, caps,
                     dense_orbit_centralizer_check, group_order, growth_probe)
from .scalars import parse_field

EXIT_OK, EXIT_USAGE, EXIT_FAIL, EXIT_CAP = 0, 1, 2, 3


class UsageError(Exception):
    pass


# -- task workers (top level so they pickle) ------------------------------------------

def _table_task(task) -> dict:
    fid, n, p, sub = task
    f = get_family(fid)
    rep = verify_family(f, n, p, Instance(f.fixed_rank or n, sub))
    return {"kind": "table", **rep.to_dict()}


def _cell_task(task) -> dict:
    fid, n, field_name, sub, params = task
    f = get_family(fid)
    field = parse_field(field_name)
    rep = verify_cell_claim(f, n, params, field, Instance(f.fixed_rank or n, sub))
    if "lambda" in params and field.char == 0:
        rep.notes.insert(0, f"lambda={params['lambda']}")
    return {"kind": "cell", **rep.to_dict()}


def _run(worker, tasks: list, jobs: int) -> list[dict]:
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            return list(ex.map(worker, tasks, chunksize=4))
    return [worker(t) for t in tasks]


# -- task lists ------------------------------------------------------------------------

def _family_filter(man: mf.RunManifest):
    from .classes import _type_matches
    fams = [f for f in catalog() if not man.type_filter or _type_matches(f, man.type_filter)]
    if man.type_filter and not fams:
        raise UsageError(f"no catalog family of type {man.type_filter!r}")
    return fams


def _ranks(f: ClassFamily, man: mf.RunManifest) -> list[int]:
    lo, hi = man.rank_range()
    if f.fixed_rank is not None:
        if man.rank is not None and man.rank != f.fixed_rank:
            return []
        return [f.fixed_rank]
    return [n for n in range(max(lo, f.min_rank), hi + 1) if f.admissible_rank(n)]


def table_tasks(man: mf.RunManifest) -> list:
    out = []
    fams = {f.family_id for f in _family_filter(man)}
    for f, n, p, inst in table_instances(man.rank_range()[1], man.chars):
        if f.family_id in fams and n in _ranks(f, man):
            out.append((f.family_id, n, p, inst.sub))
    return out


def cell_tasks(man: mf.RunManifest) -> list:
    out = []
    for f in _family_filter(man):
        ranks = _ranks(f, man)
        if not f.classical:
            # one report that states the scope rule
            out.append((f.family_id, f.fixed_rank or (ranks[0] if ranks else 1), "Q", (), {}))
            continue
        for n in ranks:
            for fname in man.fields:
                field = parse_field(fname)
                if not f.allows_char(field.char):
                    continue
                lams = man.lambda_values() if field.char == 0 else [man.lambdas[0]]
                for inst in f.instances(n):
                    for lam in lams:
                        out.append((f.family_id, n, field.name, inst.sub, {"lambda": lam, "mu": man.mu}))
    return out


# -- orbit reports -----------------------------------------------------------------------

def _orbit_report(fid: str, group: str, n: int, q: int) -> VerificationReport:
    rep = VerificationReport(fid, group, n, q, f"F{q}")
    rep.notes.append("oracle evidence over F_q")
    return rep


def _census_note(c: dict) -> str:
    return (f"class size {c['class_size']}, {c['b_orbit_count']} B-orbits, "
            f"largest sizes {c['b_orbit_sizes'][:6]}")


def appendix_gl3_reports(man: mf.RunManifest) -> list[dict]:
    out = []
    for q in man.qs:
        r = appendix_gl3_check(q)
        rep = _orbit_report("appendix.gl3", "GL3", 3, q)
        rep.add("distinct_b_orbits", r["expected_b_orbits"], r["distinct_b_orbits"])
        rep.add("same_class", True, r["all_in_one_class"])
        rep.add("char_poly", True, r["char_poly_ok"])
        rep.add("w0_cell", True, r["w0_cell"])
        rep.notes.append("a,b,c=" + ",".join(str(v) for v in r["params"].values()))
        rep.notes.append(_census_note(r["census"]))
        rep.notes.extend(r["notes"])
        out.append({"kind": "orbit", **rep.to_dict()})
    return out


def appendix_sp4_reports(man: mf.RunManifest) -> list[dict]:
    out = []
    for q in man.qs:
        try:
            r = appendix_sp4_check(q, man.a)
        except ValueError as exc:
            rep = _orbit_report("appendix.sp4", "C2", 2, q)
            rep.status = "skipped"
            rep.notes.append(str(exc))
            out.append({"kind": "orbit", **rep.to_dict()})
            continue
        rep = _orbit_report("appendix.sp4", "C2", 2, q)
        rep.add("distinct_b_orbits", r["expected_b_orbits"], r["distinct_b_orbits"])
        rep.add("same_class", True, r["all_in_one_class"])
        rep.add("char_poly", True, r["char_poly_ok"])
        rep.add("one_eigenspace_dim", [1], r["one_eigenspace_dims"])
        rep.add("w0_cell", True, r["w0_cell"])
        rep.notes.append(f"a={man.a}")
        rep.notes.append(_census_note(r["census"]))
        out.append({"kind": "orbit", **rep.to_dict()})
    return out


def growth_reports(man: mf.RunManifest) -> list[dict]:
    names = [man.case] if man.case else list(PROBES)
    out = []
    for name in names:
        if name not in PROBES:
            raise UsageError(f"unknown case {name!r}; choose from {', '.join(PROBES)}")
        pc = PROBES[name]
        r = growth_probe(name, man.qs)
        rep = VerificationReport(f"growth.{name}", pc.description.split(",")[0], 0, 0,
                                 "q in {" + ",".join(str(q) for q in man.qs) + "}")
        rep.notes.append("oracle evidence over F_q")
        for row in r["rows"]:
            q = row["q"]
            x, _, corder = pc.build(q)
            rep.add(f"class_size[q={q}]", group_order(x.tag) // corder, row["class_size"])
            rep.notes.append(f"q={q}: {row['b_orbit_count']} B-orbits, class size {row['class_size']}, "
                             f"largest orbit fraction {row['largest_orbit_fraction']:.4f}")
        for s in r["skipped"]:
            rep.notes.append(f"q={s['q']} skipped: {s['reason']}")
        expected = "stable" if pc.spherical else "increasing"
        rep.add("growth_signature", expected, r["signature"])
        out.append({"kind": "orbit", **rep.to_dict()})
    return out


def centralizer_reports(man: mf.RunManifest) -> list[dict]:
    out = []
    for f in _family_filter(man):
        if not f.classical:
            continue
        for n in _ranks(f, man):
            for inst in f.instances(n):
                for q in man.qs:
                    params = {"lambda": man.lambdas[0], "mu": man.mu}
                    r = dense_orbit_centralizer_check(f, n, q, params, inst)
                    rep = VerificationReport(f.family_id, f"{f.type_label}{f.fixed_rank or n}",
                                             f.fixed_rank or n, q, f"F{q}")
                    if inst.sub:
                        rep.notes.append(",".join(f"{k}={v}" for k, v in inst.sub))
                    for c in r["checks"]:
                        rep.add(c["name"], c["expected"], c["computed"], c["pass"])
                    rep.notes.extend(r["notes"])
                    if r["status"] == "skipped":
                        rep.status = "skipped"
                    out.append({"kind": "orbit", **rep.to_dict()})
    return out


# -- report merging ------------------------------------------------------------------------

def _read_records(paths: list[str]) -> list[dict]:
    files: list[Path] = []
    for p in paths:
        path = Path(p)
        if path.is_dir():
            files += sorted(q for q in path.iterdir() if q.suffix in (".jsonl", ".json"))
        elif path.is_file():
            files.append(path)
        else:
            raise UsageError(f"{p} does not exist")
    if not files:
        raise UsageError("no run files to merge")
    recs = []
    for fpath in files:
        for line in fpath.read_text().splitlines():
            line = line.strip()
            if not line:
                continue
            try:
                obj = json.loads(line)
            except json.JSONDecodeError as exc:
                raise UsageError(f"{fpath}: not a JSON-lines run file ({exc})") from None
            if isinstance(obj, dict) and obj.get("kind") in ("table", "cell", "orbit"):
                recs.append(obj)
    if not recs:
        raise UsageError("run files contain no reports")
    return recs


def _merge_status(statuses) -> str:
    s = set(statuses)
    if "fail" in s or "conditional" in s:
        return "fail"
    if "pass" in s:
        return "pass"
    return "skipped"


def merge_reports(recs: list[dict]) -> dict:
    """One summary: per-family pass matrices for tables and cells, plus orbit runs."""
    order = {f.family_id: i for i, f in enumerate(catalog())}
    fams: dict[str, dict] = {
        f.family_id: {"family_id": f.family_id, "table": f.table, "tables": {}, "cells": {}} for f in catalog()}
    cells: dict[tuple, list] = {}
    orbit_recs: dict[tuple, dict] = {}
    for r in recs:
        if r["kind"] == "orbit":
            key = (r["family_id"], r["group"], r["n"], r["p"], r["field"], tuple(r["notes"][:2]))
            orbit_recs[key] = r
            continue
        col = "tables" if r["kind"] == "table" else "cells"
        entry = fams.setdefault(r["family_id"], {"family_id": r["family_id"], "table": "", "tables": {}, "cells": {}})
        colkey = f"p={r['p']}" if col == "tables" else r["field"]
        cells.setdefault((r["family_id"], col, colkey), []).append(r["status"])
        del entry
    for (fid, col, colkey), sts in cells.items():
        fams[fid][col][colkey] = _merge_status(sts)
    families = []
    for fid in sorted(fams, key=lambda k: (order.get(k, len(order)), k)):
        e = fams[fid]
        e["tables"] = dict(sorted(e["tables"].items()))
        e["cells"] = dict(sorted(e["cells"].items()))
        allst = list(e["tables"].values()) + list(e["cells"].values())
        e["status"] = _merge_status(allst) if allst else "not run"
        families.append(e)
    orbits = [{"family_id": r["family_id"], "group": r["group"], "field": r["field"], "status": r["status"],
               "checks": r["checks"], "notes": r["notes"]}
              for _, r in sorted(orbit_recs.items(), key=lambda kv: json.dumps(kv[0]))]
    statuses = [e["status"] for e in families if e["status"] != "not run"] + [o["status"] for o in orbits]
    return {"families": families, "orbits": orbits, "reports": len(recs),
            "status": _merge_status(statuses) if statuses else "skipped"}


# -- output -----------------------------------------------------------------------------------

def render_table(records: list[dict]) -> str:
    lines = [f"{'status':8} {'family':24} {'group':8} {'field':14} {'checks':>7}  notes"]
    for r in records:
        failed = [c["name"] for c in r["checks"] if not c["pass"]]
        ok = sum(c["pass"] for c in r["checks"])
        if failed:
            extra = "FAILED " + ",".join(failed)
        elif r["status"] == "skipped":
            extra = r["notes"][-1] if r["notes"] else ""
        else:
            extra = "; ".join(r["notes"][:2])
        lines.append(f"{r['status']:8} {r['family_id']:24} {r['group']:8} {r['field']:14} "
                     f"{ok:>3}/{len(r['checks']):<3}  {extra}")
    n_fail = sum(r["status"] in ("fail", "conditional") for r in records)
    lines.append(f"{len(records)} reports, {n_fail} failing")
    return "\n".join(lines)


def _emit(records: list[dict], man: mf.RunManifest, out=None) -> None:
    out = out or sys.stdout
    if man.output:
        with open(man.output, "w") as fh:
            fh.write(json.dumps({"kind": "manifest", **man.to_dict()}) + "\n")
            for r in records:
                fh.write(json.dumps(r) + "\n")
    if man.fmt == "json":
        for r in records:
            out.write(json.dumps(r) + "\n")
    else:
        out.write(render_table(records) + "\n")


def _exit_code(records: list[dict]) -> int:
    return EXIT_FAIL if any(r["status"] in ("fail", "conditional") for r in records) else EXIT_OK


# -- argument parsing ---------------------------------------------------------------------------

def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--json", action="store_true", help="emit JSON lines instead of a table")
    p.add_argument("--output", "-o", help="also write the run (manifest + JSON lines) to this file")
    p.add_argument("--seed", type=int, default=mf.DEFAULT_SEED)
    p.add_argument("--jobs", "-j", type=int, default=1, help="worker processes")


def _filters(p: argparse.ArgumentParser) -> None:
    p.add_argument("--type", dest="type_filter", help="A, C, D, E6, E7, E8, F4, G2 or SL2")
    p.add_argument("--rank", type=int)
    p.add_argument("--max-rank", type=int)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="sphclass", description="Spherical conjugacy class verification suite")
    sub = ap.add_subparsers(dest="command", required=True)

    t = sub.add_parser("tables", help="dimension and centralizer checks for the class tables")
    _filters(t)
    t.add_argument("--char", help="comma-separated characteristics (default 0,2,3,5)")
    _common(t)

    c = sub.add_parser("cells", help="Bruhat-cell membership of the conjugated representatives")
    _filters(c)
    c.add_argument("--field", help="comma-separated fields: q, f2, f3, f5 (default all)")
    c.add_argument("--lambda", dest="lambdas", help="comma-separated lambda values over Q")
    c.add_argument("--no-random", action="store_true", help="skip the seeded random lambda")
    _common(c)

    o = sub.add_parser("orbits", help="finite-field B-orbit censuses (oracle evidence)")
    o.add_argument("sub", choices=["appendix-gl3", "appendix-sp4", "growth", "centralizer"])
    _filters(o)
    o.add_argument("--q", help="comma-separated prime field sizes")
    o.add_argument("--case", help="growth probe: " + ", ".join(PROBES))
    o.add_argument("--a", type=int, default=mf.APPENDIX_A, help="Sp(4) appendix parameter")
    _common(o)

    r = sub.add_parser("report", help="merge run files into one summary")
    r.add_argument("paths", nargs="+")
    r.add_argument("--output", "-o")
    return ap


def manifest_from_args(args) -> mf.RunManifest:
    man = mf.RunManifest(command=args.command, seed=args.seed, output=args.output,
                         fmt="json" if args.json else "table", jobs=max(1, args.jobs), caps=caps())
    man.type_filter = args.type_filter
    man.rank, man.max_rank = args.rank, args.max_rank
    if args.command == "tables" and args.char:
        man.chars = mf.parse_int_list(args.char)
    if args.command == "cells":
        if args.field:
            man.fields = tuple(parse_field(x).name for x in args.field.split(","))
        if args.lambdas:
            man.lambdas = mf.parse_int_list(args.lambdas)
        man.randomized = not args.no_random
    if args.command == "orbits":
        man.subcommand = args.sub
        man.qs = mf.parse_int_list(args.q) if args.q else mf.default_qs("orbits", args.sub)
        man.case, man.a = args.case, args.a
    return man


def run(man: mf.RunManifest) -> list[dict]:
    if man.command == "tables":
        return _run(_table_task, table_tasks(man), man.jobs)
    if man.command == "cells":
        return _run(_cell_task, cell_tasks(man), man.jobs)
    if man.command == "orbits":
        return {
            "appendix-gl3": appendix_gl3_reports,
            "appendix-sp4": appendix_sp4_reports,
            "growth": growth_reports,
            "centralizer": centralizer_reports,
        }[man.subcommand](man)
    raise UsageError(f"unknown command {man.command}")


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        if args.command == "report":
            summary = merge_reports(_read_records(args.paths))
            text = json.dumps(summary, indent=2) + "\n"
            if args.output:
                Path(args.output).write_text(text)
            sys.stdout.write(text)
            return EXIT_FAIL if summary["status"] == "fail" else EXIT_OK
        man = manifest_from_args(args)
        records = run(man)
    except UsageError as exc:
        print(f"sphclass: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceCapError as exc:
        print(f"sphclass: resource cap: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (ValueError, KeyError) as exc:
        print(f"sphclass: {exc}", file=sys.stderr)
        return EXIT_USAGE
    _emit(records, man)
    return _exit_code(records)


if __name__ == "__main__":
    sys.exit(main())
