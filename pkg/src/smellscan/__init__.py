"""smellscan: rule-based code smell scanner for indentation-structured
source trees."""

__version__ = "0.1.0"

from smellscan.detectors import SmellFinding, SmellKind, run_all_detectors  # noqa: E402,F401
from smellscan.ingest import (  # noqa: E402,F401
    ScanConfig,
    ScanError,
    SourceFile,
    Thresholds,
    discover_files,
    load_and_sanitize,
    strip_comments_and_blanks,
)
from smellscan.linemodel import (  # noqa: E402,F401
    Block,
    FileModel,
    FunctionSignature,
    LineRecord,
    extract_blocks,
    get_function_signature,
    get_lead_spaces,
)
from smellscan.report import (  # noqa: E402,F401
    BucketReport,
    NormalizedSummary,
    bucket_findings,
    emit,
    normalize,
)
