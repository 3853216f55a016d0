"""Command-line entry point: ingest -> model -> detect -> aggregate ->
emit.

The report stream (stdout or --out) and the diagnostic stream (stderr:
NOISE/SKIP lines, warnings) are separate so reports stay pipeable.
Exit codes: 0 success, 1 smells found under --fail-on-smell, 2
usage/config error, 3 fatal I/O error.
"""

from __future__ import annotations

import argparse
import concurrent.futures
import logging
import sys
from dataclasses import dataclass
from pathlib import Path

from smellscan import __version__, ingest, linemodel, report as report_mod
from smellscan.detectors import run_all_detectors
from smellscan.ingest import (
    SCOPE_CORPUS,
    SCOPE_FILE,
    ScanConfig,
    ScanError,
    Thresholds,
)

logger = logging.getLogger("smellscan")

_THRESHOLD_KEYS = {
    "long_statement_words": "long_statement_words",
    "long_class_lines": "long_class_lines",
    "long_method_lines": "long_method_lines",
    "long_loop_lines": "long_loop_lines",
    "long_conditional_lines": "long_conditional_lines",
    "max_params": "max_parameters",
    "dup_window": "duplicate_window_lines",
}

_SCOPE_VALUES = {"file": SCOPE_FILE, "corpus": SCOPE_CORPUS}


class ConfigError(Exception):
    """Unusable configuration (bad file, bad key, bad value)."""


def parse_config(path: Path | str) -> dict:
    """Read a plain ``key = value`` config file. Keys mirror the flag
    names; ``#`` starts a comment line. Unknown keys and non-integer
    threshold values are errors naming the offending line."""
    p = Path(path)
    try:
        content = p.read_text(encoding="utf-8")
    except OSError as err:
        raise ConfigError(f"cannot read config file {p}: {err}") from err
    values: dict = {}
    for lineno, raw in enumerate(content.split("\n"), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ConfigError(f"{p}:{lineno}: expected 'key = value'")
        key, _, value = line.partition("=")
        key = key.strip()
        value = value.strip()
        if key == "scope":
            if value not in _SCOPE_VALUES:
                raise ConfigError(
                    f"{p}:{lineno}: scope must be 'file' or 'corpus', got '{value}'"
                )
            values["scope"] = value
            continue
        if key not in _THRESHOLD_KEYS:
            raise ConfigError(f"{p}:{lineno}: unknown key '{key}'")
        try:
            number = int(value)
        except ValueError:
            raise ConfigError(
                f"{p}:{lineno}: value for '{key}' must be an integer, got '{value}'"
            ) from None
        if number < 1:
            raise ConfigError(f"{p}:{lineno}: value for '{key}' must be >= 1")
        values[key] = number
    return values


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="smellscan",
        description="Scan a source tree for the eight classic code smells.",
    )
    parser.add_argument("root", help="directory to scan")
    parser.add_argument("--config", help="key = value config file")
    parser.add_argument(
        "--format", choices=["text", "csv", "json"], default="text",
        help="report format (default: text)",
    )
    parser.add_argument(
        "--out", help="report destination (csv: a directory); default stdout"
    )
    parser.add_argument(
        "--scope", choices=["file", "corpus"],
        help="duplicate/same-name comparison scope (default: file)",
    )
    parser.add_argument("--long-statement-words", type=int, metavar="N")
    parser.add_argument("--long-class-lines", type=int, metavar="N")
    parser.add_argument("--long-method-lines", type=int, metavar="N")
    parser.add_argument("--long-loop-lines", type=int, metavar="N")
    parser.add_argument("--long-conditional-lines", type=int, metavar="N")
    parser.add_argument("--max-params", type=int, metavar="N")
    parser.add_argument("--dup-window", type=int, metavar="N")
    parser.add_argument(
        "--include", action="append", metavar="GLOB",
        help="path pattern to scan (repeatable; default *.py)",
    )
    parser.add_argument(
        "--exclude", action="append", metavar="GLOB",
        help="path pattern to skip (repeatable)",
    )
    parser.add_argument(
        "--fail-on-smell", action="store_true",
        help="exit 1 when any smell is found",
    )
    parser.add_argument(
        "--quiet", action="store_true", help="suppress the diagnostic stream"
    )
    parser.add_argument(
        "--jobs", type=int, default=1, metavar="N",
        help="worker processes for file modeling (default: 1)",
    )
    parser.add_argument("--version", action="version", version=__version__)
    return parser


def make_config(args) -> ScanConfig:
    """Defaults, overridden by the config file, overridden by flags."""
    values: dict = {}
    if args.config:
        values.update(parse_config(args.config))
    for key in _THRESHOLD_KEYS:
        flag = getattr(args, key, None)
        if flag is not None:
            values[key] = flag
    if args.scope:
        values["scope"] = args.scope

    threshold_kwargs = {
        _THRESHOLD_KEYS[key]: value
        for key, value in values.items()
        if key in _THRESHOLD_KEYS
    }
    try:
        thresholds = Thresholds(**threshold_kwargs)
        return ScanConfig(
            root_path=Path(args.root),
            include_globs=list(args.include) if args.include else ["*.py"],
            exclude_globs=list(args.exclude) if args.exclude else [],
            thresholds=thresholds,
            duplicate_scope=_SCOPE_VALUES[values.get("scope", "file")],
        )
    except ValueError as err:
        raise ConfigError(str(err)) from err


def _build_model(root: str, rel_path: str) -> linemodel.FileModel:
    source = ingest.load_and_sanitize(Path(root) / rel_path, rel_path)
    records = ingest.strip_comments_and_blanks(source)
    blocks = linemodel.extract_blocks(records)
    return linemodel.FileModel(
        path=rel_path, source=source, records=records, blocks=blocks
    )


@dataclass
class ScanResult:
    models: list[linemodel.FileModel]
    diagnostics: list[str]
    findings: list
    report: report_mod.BucketReport
    summary: report_mod.NormalizedSummary


def scan_tree(config: ScanConfig, jobs: int = 1) -> ScanResult:
    """Run the full pipeline over one tree.

    Files are modeled independently (in worker processes when jobs >
    1); results merge in sorted-path order, so the output is identical
    regardless of parallelism.
    """
    diagnostics: list[str] = []
    paths = ingest.discover_files(config, diagnostics)
    root = str(config.root_path)

    models: list[linemodel.FileModel] = []
    if jobs > 1 and len(paths) > 1:
        with concurrent.futures.ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = [pool.submit(_build_model, root, rel) for rel in paths]
            for rel, future in zip(paths, futures):
                try:
                    models.append(future.result())
                except OSError as err:
                    diagnostics.append(f"SKIP {rel} {err}")
    else:
        for rel in paths:
            try:
                models.append(_build_model(root, rel))
            except OSError as err:
                diagnostics.append(f"SKIP {rel} {err}")

    for model in models:
        for lineno, reason in model.source.sanitization_log:
            diagnostics.append(f"NOISE {model.path}:{lineno} {reason}")
        mixed = ingest.find_indent_mix(model.records)
        if mixed is not None:
            diagnostics.append(
                f"NOISE {model.path}:{mixed} mixed tab/space indentation"
            )

    findings = run_all_detectors(models, config)
    table = report_mod.bucket_findings(findings, [m.source for m in models])
    summary = report_mod.normalize(table, config.normalization)
    return ScanResult(
        models=models,
        diagnostics=diagnostics,
        findings=findings,
        report=table,
        summary=summary,
    )


def config_echo(config: ScanConfig) -> dict:
    return {
        "root": str(config.root_path),
        "include": list(config.include_globs),
        "exclude": list(config.exclude_globs),
        "duplicate_scope": config.duplicate_scope,
        "normalization": config.normalization,
        "thresholds": {
            "long_statement_words": config.thresholds.long_statement_words,
            "long_class_lines": config.thresholds.long_class_lines,
            "long_method_lines": config.thresholds.long_method_lines,
            "long_loop_lines": config.thresholds.long_loop_lines,
            "long_conditional_lines": config.thresholds.long_conditional_lines,
            "max_parameters": config.thresholds.max_parameters,
            "duplicate_window_lines": config.thresholds.duplicate_window_lines,
        },
    }


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logger.disabled = args.quiet

    try:
        config = make_config(args)
    except ConfigError as err:
        print(f"smellscan: error: {err}", file=sys.stderr)
        return 2

    try:
        result = scan_tree(config, jobs=max(1, args.jobs))
    except ScanError as err:
        print(f"smellscan: error: {err}", file=sys.stderr)
        return 3

    if not args.quiet:
        for line in result.diagnostics:
            print(line, file=sys.stderr)

    try:
        report_mod.emit(
            result.report,
            result.summary,
            result.findings,
            args.format,
            Path(args.out) if args.out else None,
            config_echo(config),
        )
    except OSError as err:
        print(f"smellscan: error: cannot write report: {err}", file=sys.stderr)
        return 3

    if args.fail_on_smell and result.report.grand_total > 0:
        return 1
    return 0


def run() -> None:
    raise SystemExit(main())
