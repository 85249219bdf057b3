"""Command line entry points: serve, session run, eval, assets, validate, transpile."""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys
from pathlib import Path

from . import catalog as catalog_mod
from . import evalharness, grammar, nodegraph, retrieval
from .config import AppConfig, build_llm_client, load_config
from .session import run_script, state_dict


def _load_app_config(path: str | None) -> AppConfig:
    return load_config(path) if path else AppConfig()


def _on_off(value: str) -> bool:
    if value not in ("on", "off"):
        raise argparse.ArgumentTypeError(f"expected on|off, got {value!r}")
    return value == "on"


def _open_catalog(manifest: str | None) -> catalog_mod.Catalog:
    path = Path(manifest) if manifest else catalog_mod.bundled_manifest_path()
    return catalog_mod.load_catalog(path)


def cmd_serve(args) -> int:
    import uvicorn

    from .server import create_app

    config = _load_app_config(args.config)
    if config.clock == "logical":
        # serving interleaves sessions; wall timestamps keep journals ordered
        config = dataclasses.replace(config, clock="wall")
    uvicorn.run(create_app(config), host=args.host, port=args.port)
    return 0


def cmd_session_run(args) -> int:
    config = _load_app_config(args.config)
    script = json.loads(Path(args.script).read_text(encoding="utf-8"))
    session = run_script(config, script)
    print(json.dumps(state_dict(session.state), indent=2, sort_keys=True))
    return 0


def cmd_eval(args) -> int:
    app_config = _load_app_config(args.config)
    if args.backend:
        app_config = dataclasses.replace(app_config, backend=args.backend)
    ablation = evalharness.AblationConfig(
        use_rag=args.rag,
        use_few_shot=args.few_shot,
        corpus_path=args.corpus,
        k=app_config.retrieval.k,
        backend=app_config.backend,
    )
    docs_index = None
    if ablation.use_rag and app_config.corpus_dir:
        docs = retrieval.load_corpus(app_config.corpus_dir)
        docs_index = retrieval.build_index(docs, chunk_size=app_config.retrieval.chunk_size)
    llm = build_llm_client(app_config)
    report = evalharness.run_eval(ablation, llm, docs_index)
    if args.out:
        Path(args.out).write_text(
            evalharness.render_report(report, format="json"), encoding="utf-8"
        )
    print(evalharness.render_report(report, format=args.format), end="")
    return 0


def cmd_assets_list(args) -> int:
    catalog = _open_catalog(args.manifest)
    for record in catalog.records:
        if args.category and record.category != args.category:
            continue
        print(f"{record.id}\t{record.category}\t{record.name}")
    return 0


def cmd_assets_search(args) -> int:
    catalog = _open_catalog(args.manifest)
    for record, score in catalog_mod.search_assets(catalog, args.query, args.k):
        print(f"{score:8.4f}\t{record.id}\t{record.name}")
    return 0


def cmd_assets_ingest(args) -> int:
    catalog = _open_catalog(args.manifest)
    metadata = {
        "name": args.name,
        "category": args.category,
        "description": args.description,
    }
    if args.license:
        metadata["license"] = args.license
    if args.source_url:
        metadata["source_url"] = args.source_url
    record = catalog_mod.ingest_asset(catalog, args.code_file, metadata)
    print(json.dumps({"id": record.id, "code_path": record.code_path}, sort_keys=True))
    return 0


def cmd_assets_stats(args) -> int:
    catalog = _open_catalog(args.manifest)
    counts = catalog.category_counts()
    for category in catalog_mod.CATEGORIES:
        print(f"{category}\t{counts.get(category, 0)}")
    print(f"Total\t{len(catalog.records)}")
    return 0


def cmd_validate(args) -> int:
    line = Path(args.command_file).read_text(encoding="utf-8").strip()
    report = grammar.check_command(line, strict=args.strict)
    payload = {
        "command": line,
        "executable": report.executable,
        "errors": [{"code": d.code, "message": d.message} for d in report.errors],
        "warnings": [{"code": d.code, "message": d.message} for d in report.warnings],
    }
    if report.executable:
        payload["canonical"] = grammar.canonicalize(grammar.parse_command(line))
    print(json.dumps(payload, indent=2, sort_keys=True))
    return 0 if report.executable else 1


def cmd_transpile(args) -> int:
    doc = Path(args.graph_file).read_text(encoding="utf-8")
    graph = nodegraph.parse_graph(doc)
    program = nodegraph.transpile(graph, template=args.template)
    text = program.render()
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        print(text, end="")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sceneloom")
    sub = parser.add_subparsers(dest="command", required=True)

    serve = sub.add_parser("serve", help="run the HTTP session service")
    serve.add_argument("--config", default=None)
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--port", type=int, default=8000)
    serve.set_defaults(func=cmd_serve)

    session = sub.add_parser("session", help="session operations")
    session_sub = session.add_subparsers(dest="session_command", required=True)
    run = session_sub.add_parser("run", help="run a scripted session headless")
    run.add_argument("--script", required=True)
    run.add_argument("--config", default=None)
    run.set_defaults(func=cmd_session_run)

    ev = sub.add_parser("eval", help="executable-rate evaluation over a corpus")
    ev.add_argument("--corpus", required=True)
    ev.add_argument("--rag", type=_on_off, default=True)
    ev.add_argument("--few-shot", dest="few_shot", type=_on_off, default=True)
    ev.add_argument("--backend", choices=["replay", "live"], default=None)
    ev.add_argument("--out", default=None)
    ev.add_argument("--format", choices=["table", "json"], default="table")
    ev.add_argument("--config", default=None)
    ev.set_defaults(func=cmd_eval)

    assets = sub.add_parser("assets", help="asset catalog operations")
    assets_sub = assets.add_subparsers(dest="assets_command", required=True)

    listing = assets_sub.add_parser("list", help="list catalog records")
    listing.add_argument("--manifest", default=None)
    listing.add_argument("--category", default=None)
    listing.set_defaults(func=cmd_assets_list)

    search = assets_sub.add_parser("search", help="rank records against a query")
    search.add_argument("query")
    search.add_argument("-k", type=int, default=5)
    search.add_argument("--manifest", default=None)
    search.set_defaults(func=cmd_assets_search)

    ingest = assets_sub.add_parser("ingest", help="add a code file to the catalog")
    ingest.add_argument("code_file")
    ingest.add_argument("--name", required=True)
    ingest.add_argument("--category", required=True)
    ingest.add_argument("--description", required=True)
    ingest.add_argument("--license", default=None)
    ingest.add_argument("--source-url", dest="source_url", default=None)
    ingest.add_argument("--manifest", default=None)
    ingest.set_defaults(func=cmd_assets_ingest)

    stats = assets_sub.add_parser("stats", help="per-category record counts")
    stats.add_argument("--manifest", default=None)
    stats.set_defaults(func=cmd_assets_stats)

    validate = sub.add_parser("validate", help="check a command file, emit JSON report")
    validate.add_argument("command_file")
    validate.add_argument("--strict", action="store_true")
    validate.set_defaults(func=cmd_validate)

    transpile = sub.add_parser("transpile", help="emit a program for a node graph")
    transpile.add_argument("graph_file")
    transpile.add_argument("--template", default="instruction",
                           choices=sorted(nodegraph.TEMPLATES))
    transpile.add_argument("--out", default=None)
    transpile.set_defaults(func=cmd_transpile)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
