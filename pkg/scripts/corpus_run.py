#!/usr/bin/env python3
"""Best-effort corpus run over local checkouts (non-gating).

Points the scanner at one or more project trees (for example the four
main components of a large cloud platform), merges them into a single
corpus, and prints the size-bucket table plus the normalized summary.

    python scripts/corpus_run.py ~/src/nova ~/src/neutron \\
        ~/src/horizon ~/src/keystone --jobs 8

Matching any previously published raw counts is explicitly NOT a goal:
upstream trees drift between snapshots, and two of the rule constants
(duplicate window, parameter limit) were never published, so this
script only reproduces the shape of the corpus experiment on whatever
trees you have locally. Nothing in the test suite depends on it.
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

from smellscan import report as report_mod
from smellscan.cli import scan_tree
from smellscan.detectors import run_all_detectors
from smellscan.ingest import SCOPE_CORPUS, SCOPE_FILE, ScanConfig


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("roots", nargs="+", help="project trees to scan")
    parser.add_argument("--scope", choices=["file", "corpus"], default="file")
    parser.add_argument("--jobs", type=int, default=1)
    parser.add_argument(
        "--format", choices=["text", "csv", "json"], default="text"
    )
    parser.add_argument("--out", help="report destination (default stdout)")
    args = parser.parse_args()

    scope = SCOPE_CORPUS if args.scope == "corpus" else SCOPE_FILE
    merged_models = []
    started = time.perf_counter()
    for root in args.roots:
        root_path = Path(root)
        config = ScanConfig(root_path=root_path, duplicate_scope=scope)
        result = scan_tree(config, jobs=args.jobs)
        prefix = root_path.name or str(root_path)
        for model in result.models:
            model.path = f"{prefix}/{model.path}"
            model.source.path = model.path
        merged_models.extend(result.models)
        print(
            f"scanned {root}: {len(result.models)} files, "
            f"{sum(m.source.effective_loc for m in result.models)} effective loc",
            file=sys.stderr,
        )

    corpus_config = ScanConfig(root_path=".", duplicate_scope=scope)
    findings = run_all_detectors(merged_models, corpus_config)
    table = report_mod.bucket_findings(
        findings, [m.source for m in merged_models]
    )
    summary = report_mod.normalize(table)
    elapsed = time.perf_counter() - started
    print(f"total scan time: {elapsed:.1f}s", file=sys.stderr)

    report_mod.emit(
        table,
        summary,
        findings,
        args.format,
        Path(args.out) if args.out else None,
        {"roots": list(args.roots), "duplicate_scope": scope},
    )
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
