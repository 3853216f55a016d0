"""Aggregation of findings into the size-bucket table, the normalized
summary, and the text/csv/json serializations.

Rows group by rule, columns by file size in 100-loc buckets (half-open,
files of 1000+ loc share the last bucket). Internal row/column/grand
sums are asserted on every aggregation; a report that cannot reconcile
its own totals is a bug, not an output.
"""

from __future__ import annotations

import json
import logging
import sys
from dataclasses import dataclass, field
from pathlib import Path

from smellscan import __version__
from smellscan.detectors import SmellKind
from smellscan.ingest import NORM_BOTH, NORM_PER_FILE, NORM_PER_LOC

logger = logging.getLogger("smellscan")

BUCKET_COUNT = 11
BUCKET_WIDTH = 100

FORMAT_TEXT = "text"
FORMAT_CSV = "csv"
FORMAT_JSON = "json"

CSV_FINDINGS = "findings.csv"
CSV_BUCKETS = "buckets.csv"
CSV_NORMALIZED = "normalized.csv"


class ConsistencyError(Exception):
    """A finding or total that cannot be reconciled with the file set."""


def bucket_index(loc: int) -> int:
    return min(loc // BUCKET_WIDTH, BUCKET_COUNT - 1)


def bucket_label(index: int) -> str:
    if index == BUCKET_COUNT - 1:
        return "1000+"
    low = index * BUCKET_WIDTH
    return f"{low}-{low + BUCKET_WIDTH - 1}"


BUCKET_LABELS = [bucket_label(i) for i in range(BUCKET_COUNT)]


def _zero_counts() -> dict[SmellKind, int]:
    return {kind: 0 for kind in SmellKind}


@dataclass
class Bucket:
    label: str
    files_in_bucket: int = 0
    loc_in_bucket: int = 0
    counts: dict[SmellKind, int] = field(default_factory=_zero_counts)


@dataclass
class BucketReport:
    buckets: list[Bucket]
    row_totals: dict[SmellKind, int]
    grand_total: int
    files_total: int
    loc_total: int

    def validate(self) -> None:
        for kind in SmellKind:
            col_sum = sum(b.counts[kind] for b in self.buckets)
            if col_sum != self.row_totals[kind]:
                raise ConsistencyError(
                    f"bucket sum {col_sum} != row total "
                    f"{self.row_totals[kind]} for {kind.value}"
                )
        if sum(self.row_totals.values()) != self.grand_total:
            raise ConsistencyError("row totals do not add up to the grand total")
        if sum(b.files_in_bucket for b in self.buckets) != self.files_total:
            raise ConsistencyError("bucket file counts do not add up")
        if sum(b.loc_in_bucket for b in self.buckets) != self.loc_total:
            raise ConsistencyError("bucket loc counts do not add up")


@dataclass
class NormalizedSummary:
    per_file: dict[SmellKind, float]
    per_loc: dict[SmellKind, float]
    per_bucket_per_loc: list[dict[SmellKind, float]]


def bucket_findings(findings, files) -> BucketReport:
    """Assign every file to its size bucket and count its findings
    there. Raises ConsistencyError for findings naming unknown files."""
    buckets = [Bucket(label=BUCKET_LABELS[i]) for i in range(BUCKET_COUNT)]
    file_bucket: dict[str, int] = {}
    loc_total = 0
    for source in files:
        index = bucket_index(source.effective_loc)
        file_bucket[source.path] = index
        buckets[index].files_in_bucket += 1
        buckets[index].loc_in_bucket += source.effective_loc
        loc_total += source.effective_loc
    for finding in findings:
        index = file_bucket.get(finding.path)
        if index is None:
            raise ConsistencyError(
                f"finding references a file outside the scan: {finding.path}"
            )
        buckets[index].counts[finding.kind] += 1
    row_totals = {
        kind: sum(b.counts[kind] for b in buckets) for kind in SmellKind
    }
    report = BucketReport(
        buckets=buckets,
        row_totals=row_totals,
        grand_total=sum(row_totals.values()),
        files_total=len(file_bucket),
        loc_total=loc_total,
    )
    report.validate()
    return report


def normalize(report: BucketReport, mode: str = NORM_BOTH) -> NormalizedSummary:
    """Ratios of the raw totals: per file scanned, per effective loc,
    and per bucket per loc (the plottable size-trend series). Zero
    denominators yield 0 with a warning."""
    per_file: dict[SmellKind, float] = {}
    per_loc: dict[SmellKind, float] = {}
    series: list[dict[SmellKind, float]] = []

    if mode in (NORM_PER_FILE, NORM_BOTH):
        if report.files_total == 0:
            logger.warning("normalize: no files scanned; per-file ratios are 0")
        per_file = {
            kind: (total / report.files_total if report.files_total else 0.0)
            for kind, total in report.row_totals.items()
        }
    if mode in (NORM_PER_LOC, NORM_BOTH):
        if report.loc_total == 0:
            logger.warning("normalize: corpus has 0 loc; per-loc ratios are 0")
        per_loc = {
            kind: (total / report.loc_total if report.loc_total else 0.0)
            for kind, total in report.row_totals.items()
        }
        for bucket in report.buckets:
            series.append(
                {
                    kind: (
                        bucket.counts[kind] / bucket.loc_in_bucket
                        if bucket.loc_in_bucket
                        else 0.0
                    )
                    for kind in SmellKind
                }
            )
    return NormalizedSummary(
        per_file=per_file, per_loc=per_loc, per_bucket_per_loc=series
    )


# --- serialization ---------------------------------------------------------


def _csv_quote(value: str) -> str:
    return '"' + value.replace('"', '""') + '"'


def _ratio(value: float) -> str:
    return f"{value:.3f}"


def render_findings_csv(findings) -> str:
    rows = ["kind,path,start_line,end_line,unit,message"]
    for f in findings:
        unit = f.unit_name or ""
        rows.append(
            f"{f.kind.value},{f.path},{f.start_line},{f.end_line},"
            f"{unit},{_csv_quote(f.message)}"
        )
    return "\n".join(rows) + "\n"


def render_buckets_csv(report: BucketReport) -> str:
    header = "kind," + ",".join(BUCKET_LABELS) + ",total"
    rows = [header]
    for kind in SmellKind:
        cells = [str(b.counts[kind]) for b in report.buckets]
        rows.append(f"{kind.value}," + ",".join(cells) + f",{report.row_totals[kind]}")
    files_cells = [str(b.files_in_bucket) for b in report.buckets]
    rows.append("files," + ",".join(files_cells) + f",{report.files_total}")
    loc_cells = [str(b.loc_in_bucket) for b in report.buckets]
    rows.append("loc," + ",".join(loc_cells) + f",{report.loc_total}")
    return "\n".join(rows) + "\n"


def render_normalized_csv(report: BucketReport, summary: NormalizedSummary) -> str:
    rows = ["kind,count,per_file,per_loc"]
    for kind in SmellKind:
        per_file = _ratio(summary.per_file[kind]) if summary.per_file else ""
        per_loc = _ratio(summary.per_loc[kind]) if summary.per_loc else ""
        rows.append(f"{kind.value},{report.row_totals[kind]},{per_file},{per_loc}")
    return "\n".join(rows) + "\n"


def render_csv(report, summary, findings) -> dict[str, str]:
    return {
        CSV_FINDINGS: render_findings_csv(findings),
        CSV_BUCKETS: render_buckets_csv(report),
        CSV_NORMALIZED: render_normalized_csv(report, summary),
    }


def render_json(report, summary, findings, config_echo: dict) -> str:
    doc = {
        "version": __version__,
        "config_echo": config_echo,
        "files_total": report.files_total,
        "loc_total": report.loc_total,
        "findings": [
            {
                "kind": f.kind.value,
                "path": f.path,
                "start_line": f.start_line,
                "end_line": f.end_line,
                "unit": f.unit_name,
                "message": f.message,
            }
            for f in findings
        ],
        "buckets": [
            {
                "label": b.label,
                "files": b.files_in_bucket,
                "loc": b.loc_in_bucket,
                "counts": {kind.value: b.counts[kind] for kind in SmellKind},
            }
            for b in report.buckets
        ],
        "normalized": {
            "per_file": {k.value: round(v, 3) for k, v in summary.per_file.items()},
            "per_loc": {k.value: round(v, 3) for k, v in summary.per_loc.items()},
            "per_bucket_per_loc": [
                {
                    "label": BUCKET_LABELS[i],
                    "ratios": {k.value: round(v, 3) for k, v in ratios.items()},
                }
                for i, ratios in enumerate(summary.per_bucket_per_loc)
            ],
        },
    }
    return json.dumps(doc, indent=2) + "\n"


def report_from_json(doc: dict) -> BucketReport:
    """Rebuild a BucketReport from an emitted json document (the
    round-trip check that emitted totals reconcile)."""
    buckets = []
    for raw in doc["buckets"]:
        counts = {SmellKind(k): v for k, v in raw["counts"].items()}
        buckets.append(
            Bucket(
                label=raw["label"],
                files_in_bucket=raw["files"],
                loc_in_bucket=raw["loc"],
                counts=counts,
            )
        )
    row_totals = {
        kind: sum(b.counts[kind] for b in buckets) for kind in SmellKind
    }
    report = BucketReport(
        buckets=buckets,
        row_totals=row_totals,
        grand_total=sum(row_totals.values()),
        files_total=doc["files_total"],
        loc_total=doc["loc_total"],
    )
    report.validate()
    return report


def _align(rows: list[list[str]]) -> str:
    widths = [
        max(len(row[col]) for row in rows) for col in range(len(rows[0]))
    ]
    lines = []
    for row in rows:
        cells = [
            cell.ljust(widths[i]) if i == 0 else cell.rjust(widths[i])
            for i, cell in enumerate(row)
        ]
        lines.append("  ".join(cells).rstrip())
    return "\n".join(lines)


def render_text(report, summary, findings) -> str:
    out = []
    out.append(f"files scanned: {report.files_total}")
    out.append(f"effective loc: {report.loc_total}")
    out.append(f"findings: {report.grand_total}")
    out.append("")

    table = [["kind"] + BUCKET_LABELS + ["total"]]
    for kind in SmellKind:
        table.append(
            [kind.value]
            + [str(b.counts[kind]) for b in report.buckets]
            + [str(report.row_totals[kind])]
        )
    table.append(
        ["files"]
        + [str(b.files_in_bucket) for b in report.buckets]
        + [str(report.files_total)]
    )
    table.append(
        ["loc"]
        + [str(b.loc_in_bucket) for b in report.buckets]
        + [str(report.loc_total)]
    )
    out.append("counts by file-size bucket (effective loc):")
    out.append(_align(table))
    out.append("")

    norm = [["kind", "count", "per_file", "per_loc"]]
    for kind in SmellKind:
        norm.append(
            [
                kind.value,
                str(report.row_totals[kind]),
                _ratio(summary.per_file[kind]) if summary.per_file else "-",
                _ratio(summary.per_loc[kind]) if summary.per_loc else "-",
            ]
        )
    out.append("normalized counts:")
    out.append(_align(norm))
    out.append("")

    if findings:
        rows = [["kind", "location", "unit", "message"]]
        for f in findings:
            location = f"{f.path}:{f.start_line}-{f.end_line}"
            rows.append([f.kind.value, location, f.unit_name or "-", f.message])
        out.append("findings:")
        out.append(_align(rows))
        out.append("")
    return "\n".join(out)


def emit(report, summary, findings, format: str, destination: Path | None = None,
         config_echo: dict | None = None):
    """Serialize and write the report.

    destination None writes to stdout. For csv, a destination path is
    treated as a directory receiving findings.csv, buckets.csv, and
    normalized.csv; on stdout the three tables stream sequentially,
    each introduced by a ``# <name>`` comment line. Returns the
    rendered text (csv: dict of the three tables).
    """
    if format == FORMAT_JSON:
        rendered = render_json(report, summary, findings, config_echo or {})
    elif format == FORMAT_CSV:
        rendered = render_csv(report, summary, findings)
    elif format == FORMAT_TEXT:
        rendered = render_text(report, summary, findings)
    else:
        raise ValueError(f"unknown report format: {format!r}")

    if format == FORMAT_CSV:
        if destination is None:
            parts = []
            for name in (CSV_FINDINGS, CSV_BUCKETS, CSV_NORMALIZED):
                parts.append(f"# {name}\n{rendered[name]}")
            sys.stdout.write("".join(parts))
        else:
            destination = Path(destination)
            destination.mkdir(parents=True, exist_ok=True)
            for name, content in rendered.items():
                (destination / name).write_text(content, encoding="utf-8")
    else:
        if destination is None:
            sys.stdout.write(rendered)
        else:
            Path(destination).write_text(rendered, encoding="utf-8")
    return rendered
