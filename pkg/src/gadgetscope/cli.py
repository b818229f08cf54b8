"""Command-line entry point.

Subcommands: scan, diff, deps, debloat, session (create/run/decide/
compare/list/show), serve.  Exit codes: 0 success, 1 analysis error,
2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .debloat import DebloatConfig, excise_features, scan_markers
from .delta import AnalysisBundle, assess_impact, compute_delta, merge_sets
from .elfimage import load_image
from .errors import GadgetscopeError
from .expressivity import load_catalog
from .gadgets import GadgetSet, ScanParams, harvest_gadgets
from .report import render
from .session import SessionStore


def _parse_params(values) -> ScanParams:
    kw = {}
    for item in values or []:
        for pair in item.split(","):
            k, _, v = pair.partition("=")
            if not v:
                raise SystemExit(f"bad --params entry {pair!r} (want k=v)")
            if k == "depth":
                kw["max_gadget_len"] = int(v)
            elif k == "align":
                kw["align"] = int(v)
            elif k == "int80":
                kw["include_int80"] = v.lower() in ("1", "true", "yes")
            else:
                raise SystemExit(f"unknown scan parameter {k!r}")
    return ScanParams(**kw)


def _catalog_names(args):
    names = []
    for c in args.catalog or []:
        names.extend(c.split(","))
    return names or ["practical", "turing", "aslr_proof"]


def _emit(report):
    sys.stdout.write(report.text)


def _analyze(path, params, catalog_names, label):
    image = load_image(path)
    gadgets = harvest_gadgets(image, params)
    catalogs = [load_catalog(n) for n in catalog_names]
    return AnalysisBundle.analyze(label, gadgets, catalogs)


def cmd_scan(args) -> int:
    params = _parse_params(args.params)
    names = _catalog_names(args)
    bundle = _analyze(args.binary, params, names, Path(args.binary).name)
    if args.gadgets:
        Path(args.gadgets).write_text(bundle.gadgets.to_json())
    if args.format == "json":
        _emit(render("type_counts", bundle.to_dict(), "json"))
        return 0
    if args.format == "csv":
        if not args.out:
            raise SystemExit("scan --format csv needs --out DIR "
                             "(one table per file)")
        outdir = Path(args.out)
        outdir.mkdir(parents=True, exist_ok=True)
        parts = {
            "type_counts": render("type_counts",
                                  [(bundle.label,
                                    bundle.type_counts.to_dict())], "csv"),
            "special_purpose": render("special_purpose",
                                      bundle.special.to_dict(), "csv"),
            "expressivity": render("expressivity",
                                   [e.to_dict() for e in bundle.expressivity],
                                   "csv"),
        }
        for name, rep in parts.items():
            (outdir / f"{name}.csv").write_bytes(rep.body)
        return 0
    _emit(render("type_counts",
                 [(bundle.label, bundle.type_counts.to_dict())], "text"))
    sys.stdout.write("\n")
    _emit(render("special_purpose", bundle.special.to_dict(), "text",
                 ascii_arrows=args.ascii))
    sys.stdout.write("\n")
    _emit(render("expressivity", [e.to_dict() for e in bundle.expressivity],
                 "text", ascii_arrows=args.ascii))
    return 0


def cmd_diff(args) -> int:
    params = _parse_params(args.params)
    names = _catalog_names(args)
    original = _analyze(args.original, params, names, args.original_label)
    variant = _analyze(args.variant, params, names, args.variant_label)
    delta = compute_delta(original, variant)
    verdict = assess_impact(delta)
    if args.format == "json":
        doc = delta.to_dict()
        doc["assessment"] = verdict.to_dict()
        _emit(render("delta_summary", doc, "json"))
        return 0
    row = delta.table5_row(ascii_arrows=args.ascii)
    _emit(render("delta_summary", row, args.format,
                 ascii_arrows=args.ascii))
    sys.stdout.write("\n")
    _emit(render("introduction", delta.to_dict(), args.format,
                 ascii_arrows=args.ascii))
    return 0


def cmd_deps(args) -> int:
    params = _parse_params(args.params)
    names = _catalog_names(args)
    image = load_image(args.binary)
    primary = harvest_gadgets(image, params)
    resolved, missing = [], []
    for soname in image.dependencies:
        dep_path = Path(args.resolve) / soname
        if dep_path.is_file():
            resolved.append(harvest_gadgets(load_image(dep_path), params))
        else:
            missing.append(soname)
    for m in missing:
        print(f"warning: dependency {m} not found under {args.resolve}",
              file=sys.stderr)
    merged = merge_sets(primary, resolved)
    catalogs = [load_catalog(n) for n in names]
    bundle = AnalysisBundle.analyze("merged-with-dependencies", merged,
                                    catalogs)
    doc = bundle.to_dict()
    doc["scope"] = "merged-with-dependencies"
    doc["resolved"] = [gs.source for gs in resolved]
    doc["missing"] = missing
    if args.format == "json":
        _emit(render("type_counts", doc, "json"))
        return 0
    _emit(render("type_counts",
                 [(bundle.label, bundle.type_counts.to_dict())], "text"))
    sys.stdout.write("\n")
    _emit(render("expressivity", [e.to_dict() for e in bundle.expressivity],
                 "text"))
    return 0


def cmd_debloat(args) -> int:
    if args.config:
        config = DebloatConfig.from_file(args.config)
    elif args.features:
        config = DebloatConfig(frozenset(args.features.split(",")))
    else:
        raise SystemExit("debloat needs --features or --config")
    fmap = scan_markers(args.input)
    excise_features(args.input, fmap, config, args.output,
                    lenient=args.lenient)
    kept = sorted(fmap.features - config.features_to_remove)
    print(f"removed {len(config.features_to_remove)} feature(s); "
          f"kept markers: {', '.join(kept) if kept else '(none)'}")
    return 0


def cmd_markers(args) -> int:
    fmap = scan_markers(args.input)
    print(json.dumps(fmap.to_dict(), indent=2))
    return 0


def cmd_session(args) -> int:
    store = SessionStore(args.sessions_dir)
    if args.session_cmd == "create":
        params = _parse_params(args.params)
        record = store.create_session(args.package, args.binary,
                                      params=params,
                                      catalog_names=_catalog_names(args))
        print(record.id)
        return 0
    if args.session_cmd == "list":
        for sid in store.list_ids():
            record = store.load(sid)
            print(f"{record.id}  {record.package:20s} {record.status:9s} "
                  f"iterations={len(record.iterations)}")
        return 0
    if args.session_cmd == "show":
        print(json.dumps(store.load(args.id).to_dict(), indent=2))
        return 0
    if args.session_cmd == "run":
        config = DebloatConfig.from_file(args.config)
        hooks = {}
        if args.debloat_cmd:
            hooks["debloat"] = args.debloat_cmd
        if args.build_cmd:
            hooks["build"] = args.build_cmd
        it = store.run_iteration(args.id, config, hooks, args.output,
                                 workdir=args.workdir,
                                 short_circuit=tuple(args.short_circuit or []))
        print(f"iteration {it.number}: {it.status}"
              + (f" (short-circuited: {it.short_circuited})"
                 if it.short_circuited else ""))
        if it.assessment:
            print(f"rule verdict: {it.assessment['verdict']}")
        return 0 if it.status == "done" else 1
    if args.session_cmd == "decide":
        store.record_decision(args.id, args.number, args.decision,
                              args.rationale or "")
        print(f"recorded {args.decision} on iteration {args.number}")
        return 0
    if args.session_cmd == "compare":
        table = store.compare_iterations(args.id, args.a, args.b)
        _emit(render("iteration_comparison", table, args.format,
                     ascii_arrows=args.ascii))
        return 0
    raise SystemExit(f"unknown session command {args.session_cmd!r}")


def cmd_serve(args) -> int:
    import uvicorn
    from .api import create_app
    app = create_app(args.sessions_dir, workers=args.workers)
    uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="gadgetscope",
        description="Differential gadget-population analysis for "
                    "debloated binaries")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--params", action="append", metavar="K=V",
                        help="scan parameters: depth=N, align=N, int80=BOOL")
        sp.add_argument("--catalog", action="append", metavar="NAME|FILE",
                        help="expressivity catalog (repeatable)")
        sp.add_argument("--format", choices=["text", "json", "csv"],
                        default="text")
        sp.add_argument("--ascii", action="store_true",
                        help="ASCII arrows instead of UTF-8")

    sp = sub.add_parser("scan", help="analyze one binary")
    sp.add_argument("binary")
    sp.add_argument("--gadgets", metavar="FILE",
                    help="also write the gadget set JSON here")
    sp.add_argument("--out", metavar="DIR", help="output dir for CSV tables")
    common(sp)
    sp.set_defaults(func=cmd_scan)

    sp = sub.add_parser("diff", help="compare original vs variant")
    sp.add_argument("original")
    sp.add_argument("variant")
    sp.add_argument("--original-label", default="O")
    sp.add_argument("--variant-label", default="V")
    common(sp)
    sp.set_defaults(func=cmd_diff)

    sp = sub.add_parser("deps", help="merge dependency gadget sets")
    sp.add_argument("binary")
    sp.add_argument("--resolve", required=True, metavar="DIR",
                    help="directory containing dependency .so files")
    common(sp)
    sp.set_defaults(func=cmd_deps)

    sp = sub.add_parser("debloat", help="excise feature regions from a tree")
    sp.add_argument("--features", metavar="NAME,NAME")
    sp.add_argument("--config", metavar="FILE")
    sp.add_argument("--in", dest="input", required=True, metavar="DIR")
    sp.add_argument("--out", dest="output", required=True, metavar="DIR")
    sp.add_argument("--lenient", action="store_true",
                    help="ignore config features absent from the tree")
    sp.set_defaults(func=cmd_debloat)

    sp = sub.add_parser("markers", help="scan a tree for feature markers")
    sp.add_argument("--in", dest="input", required=True, metavar="DIR")
    sp.set_defaults(func=cmd_markers)

    sp = sub.add_parser("session", help="review-session workflow")
    sp.add_argument("--sessions-dir", default="sessions")
    ssub = sp.add_subparsers(dest="session_cmd", required=True)

    c = ssub.add_parser("create")
    c.add_argument("--package", required=True)
    c.add_argument("--binary", required=True)
    common(c)

    c = ssub.add_parser("list")
    c = ssub.add_parser("show")
    c.add_argument("id")

    c = ssub.add_parser("run")
    c.add_argument("id")
    c.add_argument("--config", required=True, metavar="FILE")
    c.add_argument("--debloat-cmd", metavar="CMD")
    c.add_argument("--build-cmd", metavar="CMD")
    c.add_argument("--output", required=True, metavar="BIN",
                   help="binary the hooks must produce")
    c.add_argument("--workdir", metavar="DIR")
    c.add_argument("--short-circuit", action="append",
                   metavar="CONDITION",
                   help="halt analysis when a rejection condition fires")

    c = ssub.add_parser("decide")
    c.add_argument("id")
    c.add_argument("number", type=int)
    c.add_argument("decision",
                   choices=["accept", "reject", "iterate", "revert"])
    c.add_argument("--rationale")

    c = ssub.add_parser("compare")
    c.add_argument("id")
    c.add_argument("a", type=int)
    c.add_argument("b", type=int)
    c.add_argument("--format", choices=["text", "json", "csv"],
                   default="text")
    c.add_argument("--ascii", action="store_true")

    sp.set_defaults(func=cmd_session)

    sp = sub.add_parser("serve", help="run the HTTP API")
    sp.add_argument("--port", type=int, default=8712)
    sp.add_argument("--host", default="127.0.0.1",
                    help="bind address (loopback unless overridden)")
    sp.add_argument("--sessions-dir", default="sessions")
    sp.add_argument("--workers", type=int, default=None,
                    help="analysis worker pool size")
    sp.set_defaults(func=cmd_serve)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except GadgetscopeError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
