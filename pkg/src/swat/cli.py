"""Operator command line: ingest, synth, stats, queries, serve, bench.

Every query command supports ``--json``, emitting exactly the bytes the
HTTP service would return for the same query, so scripted pipelines can
switch between the two interfaces freely.  Exit codes are disciplined:
0 success, 1 I/O error, 2 domain error, 3 usage error.
"""

from __future__ import annotations

import sys
from pathlib import Path

import click

from swat.bench import run_bench, write_csv
from swat.corpus import cross_validate_history, parse_corpus
from swat.errors import SwatError
from swat.model import build_snapshot
from swat.service import (
    DEFAULT_K,
    DEFAULT_LIMIT,
    DEFAULT_SUGGEST_LIMIT,
    Engine,
    canonical_dumps,
    create_app,
    experts_payload,
    recommend_payload,
    score_payload,
    snapshot_summary,
    stats_payload,
    suggest_payload,
)
from swat.store import load_snapshot, save_snapshot
from swat.synth import SynthParams, generate_synthetic
from swat.teams import MetricWeights

_snapshot_option = click.option(
    "--snapshot",
    "snapshot_path",
    envvar="SWAT_SNAPSHOT",
    required=True,
    type=click.Path(dir_okay=False),
    help="Snapshot file produced by `swat ingest` (env: SWAT_SNAPSHOT).",
)
_json_option = click.option("--json", "as_json", is_flag=True, help="Emit canonical JSON.")
_mode_option = click.option(
    "--mode", type=click.Choice(["avg", "max"]), default="avg", show_default=True
)


def _parse_weights(text: str | None) -> MetricWeights | None:
    if not text:
        return None
    mapping: dict[str, float] = {}
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        name, sep, value = part.partition("=")
        if not sep:
            raise click.BadParameter(f"expected name=value, got {part!r}", param_hint="--weights")
        try:
            mapping[name.strip()] = float(value)
        except ValueError:
            raise click.BadParameter(f"{value!r} is not a number", param_hint="--weights")
    if not mapping:
        raise click.BadParameter("no weights given", param_hint="--weights")
    return MetricWeights.from_mapping(mapping)


def _parse_id_list(text: str, hint: str) -> list[str]:
    ids = [part.strip() for part in text.split(",") if part.strip()]
    if not ids:
        raise click.BadParameter("expected a comma-separated id list", param_hint=hint)
    return ids


def _echo_kv(payload: dict) -> None:
    width = max(len(k) for k in payload)
    for key, value in payload.items():
        click.echo(f"{key:<{width}}  {value}")


@click.group()
def cli():
    """Team recommendation engine over competence, social and history graphs."""


@cli.command()
@click.option("--corpus", "corpus_dir", required=True, type=click.Path(file_okay=False))
@click.option(
    "--out",
    "out_path",
    envvar="SWAT_SNAPSHOT",
    required=True,
    type=click.Path(dir_okay=False),
    help="Where to write the snapshot (env: SWAT_SNAPSHOT).",
)
@click.option(
    "--cross-validate/--no-cross-validate",
    default=False,
    show_default=True,
    help="Derive competence edges from collaboration evidence before building.",
)
@_json_option
def ingest(corpus_dir, out_path, cross_validate, as_json):
    """Parse a corpus directory and persist it as a snapshot file."""
    records, report = parse_corpus(corpus_dir)
    if cross_validate:
        records, derived = cross_validate_history(records)
        report.extend(derived)
    snapshot = build_snapshot(records)
    save_snapshot(snapshot, out_path)
    payload = {
        "snapshot_path": str(out_path),
        "snapshot": snapshot_summary(snapshot),
        "anomalies": len(report),
        "anomaly_entries": [
            {"loc": a.loc, "rule": a.rule, "action": a.action} for a in report
        ],
    }
    if as_json:
        click.echo(canonical_dumps(payload))
    else:
        _echo_kv(
            {
                "snapshot": out_path,
                "individuals": payload["snapshot"]["individuals"],
                "areas": payload["snapshot"]["areas"],
                "publications": payload["snapshot"]["publications"],
                "history_teams": payload["snapshot"]["history_teams"],
                "anomalies": payload["anomalies"],
            }
        )


@cli.command()
@click.option("--out", "out_dir", required=True, type=click.Path(file_okay=False))
@click.option("--individuals", default=100, show_default=True, type=int)
@click.option("--areas", default=12, show_default=True, type=int)
@click.option("--publications", default=300, show_default=True, type=int)
@click.option("--dimensions", default=2, show_default=True, type=int)
@click.option("--seed", default=0, show_default=True, type=int)
@_json_option
def synth(out_dir, individuals, areas, publications, dimensions, seed, as_json):
    """Generate a deterministic synthetic corpus directory."""
    summary = generate_synthetic(
        SynthParams(individuals, areas, publications, dimensions, seed), out_dir
    )
    if as_json:
        click.echo(canonical_dumps(summary))
    else:
        _echo_kv(summary)


@cli.command()
@_snapshot_option
@_json_option
def stats(snapshot_path, as_json):
    """Corpus statistics of a snapshot."""
    payload = stats_payload(load_snapshot(snapshot_path))
    if as_json:
        click.echo(canonical_dumps(payload))
    else:
        _echo_kv(
            {
                k: v
                for k, v in payload.items()
                if not isinstance(v, dict)
            }
        )


@cli.command()
@_snapshot_option
@click.argument("query")
@click.option("--limit", default=DEFAULT_SUGGEST_LIMIT, show_default=True, type=int)
@_json_option
def suggest(snapshot_path, query, limit, as_json):
    """Suggest expertise areas matching a text query."""
    snapshot = load_snapshot(snapshot_path)
    payload = suggest_payload(Engine.from_snapshot(snapshot).index, query, limit)
    if as_json:
        click.echo(canonical_dumps(payload))
    else:
        for hit in payload:
            click.echo(f"{hit['score']:>6.1f}  {hit['area']}  {hit['name']}  [{hit['match_kind']}]")


@cli.command()
@_snapshot_option
@click.option("--area", required=True)
@click.option("--k", default=DEFAULT_K, show_default=True, type=int)
@click.option("--expand", is_flag=True, help="Include experts from related areas, discounted.")
@_json_option
def experts(snapshot_path, area, k, expand, as_json):
    """Top experts for one expertise area."""
    snapshot = load_snapshot(snapshot_path)
    engine = Engine.from_snapshot(snapshot)
    payload = experts_payload(snapshot, engine.index, area, k, expand)
    if as_json:
        click.echo(canonical_dumps(payload))
    else:
        for hit in payload:
            via = f"  via {hit['via_related']['area']}" if hit["via_related"] else ""
            click.echo(
                f"{hit['effective_weight']:.4f}  {hit['individual']}  {hit['name']}{via}"
            )


@cli.command()
@_snapshot_option
@click.option("--areas", "areas_text", required=True, help="Comma-separated area ids.")
@click.option("--k", default=DEFAULT_K, show_default=True, type=int)
@click.option("--weights", "weights_text", default=None, help="Comma list of name=value.")
@_mode_option
@click.option("--limit", default=DEFAULT_LIMIT, show_default=True, type=int)
@_json_option
def recommend(snapshot_path, areas_text, k, weights_text, mode, limit, as_json):
    """Enumerate, score and rank candidate teams for the required areas."""
    snapshot = load_snapshot(snapshot_path)
    engine = Engine.from_snapshot(snapshot)
    payload = recommend_payload(
        snapshot,
        engine.index,
        _parse_id_list(areas_text, "--areas"),
        k=k,
        weights=_parse_weights(weights_text),
        mode=mode,
        limit=limit,
    )
    if as_json:
        click.echo(canonical_dumps(payload))
    else:
        for rank, team in enumerate(payload["teams"], start=1):
            members = ", ".join(m["id"] for m in team["members"])
            click.echo(f"{rank:>3}. total={team['scorecard']['total']:.4f}  [{members}]")
        if not payload["teams"]:
            click.echo("no candidate teams (slates too small or all singleton)")


@cli.command()
@_snapshot_option
@click.option("--members", "members_text", required=True, help="Comma-separated individual ids.")
@click.option("--areas", "areas_text", required=True, help="Comma-separated area ids.")
@click.option("--weights", "weights_text", default=None, help="Comma list of name=value.")
@_mode_option
@_json_option
def score(snapshot_path, members_text, areas_text, weights_text, mode, as_json):
    """Score a hand-picked team against required areas."""
    snapshot = load_snapshot(snapshot_path)
    payload = score_payload(
        snapshot,
        _parse_id_list(members_text, "--members"),
        _parse_id_list(areas_text, "--areas"),
        weights=_parse_weights(weights_text),
        mode=mode,
    )
    if as_json:
        click.echo(canonical_dumps(payload))
    else:
        card = payload["scorecard"]
        _echo_kv(
            {
                "total": f"{card['total']:.4f}",
                "competence": f"{card['normalized']['competence']:.4f}",
                "cohesiveness": f"{card['normalized']['cohesiveness']:.4f}",
                "user_repetition": f"{card['normalized']['user_repetition']:.4f}",
                "concept_repetition": f"{card['normalized']['concept_repetition']:.4f}",
            }
        )


@cli.command()
@_snapshot_option
@click.option("--areas-min", default=2, show_default=True, type=int)
@click.option("--areas-max", default=4, show_default=True, type=int)
@click.option("--k", default=DEFAULT_K, show_default=True, type=int)
@click.option("--reps", default=3, show_default=True, type=int)
@click.option("--out", "out_csv", required=True, type=click.Path(dir_okay=False))
def bench(snapshot_path, areas_min, areas_max, k, reps, out_csv):
    """Time expert queries, metrics and end-to-end recommendation per q."""
    snapshot = load_snapshot(snapshot_path)
    rows = run_bench(snapshot, areas_min=areas_min, areas_max=areas_max, k=k, reps=reps)
    write_csv(rows, out_csv)
    click.echo(f"wrote {len(rows)} rows to {out_csv}")


@cli.command()
@_snapshot_option
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", default=8000, show_default=True, type=int)
@click.option(
    "--ui",
    "ui_dir",
    default=None,
    type=click.Path(file_okay=False),
    help="Directory with the built web UI bundle to serve at /.",
)
def serve(snapshot_path, host, port, ui_dir):
    """Serve the HTTP API (and optionally the web UI) over a snapshot."""
    import uvicorn

    snapshot = load_snapshot(snapshot_path)
    if ui_dir is None and Path("frontend/dist").is_dir():
        ui_dir = "frontend/dist"
    app = create_app(engine=Engine.from_snapshot(snapshot), ui_dir=ui_dir)
    uvicorn.run(app, host=host, port=port, log_level="info")


def main(argv=None) -> int:
    """Entry point with the exit-code contract the commands rely on."""
    try:
        cli.main(args=argv, standalone_mode=False)
    except click.exceptions.Exit as exc:
        return int(exc.exit_code)
    except click.UsageError as exc:
        exc.show(file=sys.stderr)
        return 3
    except click.ClickException as exc:
        exc.show(file=sys.stderr)
        return 3
    except SwatError as exc:
        click.echo(f"error: {exc}", err=True)
        return 2
    except OSError as exc:
        click.echo(f"i/o error: {exc}", err=True)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
