"""The eight smell rules.

Every detector is a pure function from line/block models to findings;
corpus-scope grouping (duplicates, same names) is a deterministic merge
over files in sorted-path order, so repeated runs over an identical
tree always produce the identical finding list.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum

from smellscan import linemodel
from smellscan.ingest import SCOPE_FILE, ScanConfig
from smellscan.linemodel import (
    CLASS,
    CONDITIONAL,
    LOOP,
    METHOD,
    RETURN_STMT,
    Block,
    LineRecord,
    iter_blocks,
)

logger = logging.getLogger("smellscan")


class SmellKind(Enum):
    REPETITIVE_CODE = "RepetitiveCode"
    DEAD_CODE = "DeadCode"
    MULTIPLE_RETURNS = "MultipleReturns"
    LONG_STATEMENT = "LongStatement"
    SAME_FUNCTION_NAME = "SameFunctionName"
    LONG_CLASS_OR_METHOD = "LongClassOrMethod"
    LONG_CONDITIONAL_OR_LOOP = "LongConditionalOrLoop"
    LONG_PARAMETER_LIST = "LongParameterList"


KIND_ORDER = {kind: index for index, kind in enumerate(SmellKind)}

_LONG_BLOCK_KIND = {
    CLASS: SmellKind.LONG_CLASS_OR_METHOD,
    METHOD: SmellKind.LONG_CLASS_OR_METHOD,
    LOOP: SmellKind.LONG_CONDITIONAL_OR_LOOP,
    CONDITIONAL: SmellKind.LONG_CONDITIONAL_OR_LOOP,
}

_LONG_BLOCK_LABEL = {
    CLASS: "Long Class found",
    METHOD: "Long Method found",
    LOOP: "Long Loop found",
    CONDITIONAL: "Long Conditional found",
}


@dataclass
class SmellFinding:
    kind: SmellKind
    path: str
    start_line: int
    end_line: int
    unit_name: str | None
    message: str


def finding_sort_key(finding: SmellFinding):
    return (
        finding.path,
        finding.start_line,
        KIND_ORDER[finding.kind],
        finding.end_line,
        finding.unit_name or "",
        finding.message,
    )


def detect_repetitive_code(file_lines, window: int, scope: str = SCOPE_FILE):
    """Exact duplicates of ``window`` consecutive normalized lines.

    file_lines maps relative path -> effective LineRecords; iteration
    order defines which occurrence is "the original". Each later member
    of a group yields one finding; overlapping windows all count.
    """
    findings = []
    seen = set()
    for path, lines in file_lines.items():
        normalized = [rec.text.strip() for rec in lines]
        last_start = len(normalized) - window
        for start in range(last_start + 1):
            key = "\n".join(normalized[start : start + window])
            if scope == SCOPE_FILE:
                key = (path, key)
            if key in seen:
                start_line = lines[start].physical_line
                end_line = lines[start + window - 1].physical_line
                findings.append(
                    SmellFinding(
                        kind=SmellKind.REPETITIVE_CODE,
                        path=path,
                        start_line=start_line,
                        end_line=end_line,
                        unit_name=None,
                        message=f"Repetitive code in lines {start_line}-{end_line}",
                    )
                )
            else:
                seen.add(key)
    return findings


def _child_spans(block: Block):
    return [
        (child.header_pos, max(child.body_pos_end, child.header_pos))
        for child in block.children
    ]


def detect_dead_code(block: Block, lines, path: str):
    """Statements after a return at the same indentation are dead.

    Only returns sitting directly in the block count; the forward scan
    stops at the first line whose indentation differs, so code after a
    dedent stays live.
    """
    findings = []
    if block.body_effective_lines == 0:
        return findings
    spans = _child_spans(block)
    total = len(lines)
    for pos in range(block.body_pos_start, block.body_pos_end + 1):
        if any(a <= pos <= b for a, b in spans):
            continue
        rec = lines[pos]
        if rec.kind != RETURN_STMT:
            continue
        lead = rec.lead_spaces
        j = pos + 1
        while j < total and lines[j].lead_spaces == lead:
            j += 1
        if j > pos + 1:
            start_line = lines[pos + 1].physical_line
            end_line = lines[j - 1].physical_line
            findings.append(
                SmellFinding(
                    kind=SmellKind.DEAD_CODE,
                    path=path,
                    start_line=start_line,
                    end_line=end_line,
                    unit_name=block.name,
                    message=f"Dead Code in lines {start_line}-{end_line}",
                )
            )
    return findings


def _descendant_method_spans(block: Block):
    spans = []
    for child in iter_blocks(block.children):
        if child.kind == METHOD:
            spans.append((child.header_pos, max(child.body_pos_end, child.header_pos)))
    return spans


def detect_multiple_returns(block: Block, lines, path: str):
    """More than one return inside one function. Returns belonging to
    nested function definitions are the nested function's problem."""
    if block.kind != METHOD or block.body_effective_lines == 0:
        return None
    nested = _descendant_method_spans(block)
    count = 0
    for pos in range(block.body_pos_start, block.body_pos_end + 1):
        if lines[pos].kind != RETURN_STMT:
            continue
        if any(a <= pos <= b for a, b in nested):
            continue
        count += 1
    if count < 2:
        return None
    name = block.name or "?"
    return SmellFinding(
        kind=SmellKind.MULTIPLE_RETURNS,
        path=path,
        start_line=block.header_line,
        end_line=block.body_end,
        unit_name=block.name,
        message=f"Multiple return statements ({count}) in function '{name}'",
    )


def detect_long_statement(line: LineRecord, threshold: int, path: str):
    """A logical line of more than ``threshold`` whitespace-separated
    words (strictly greater). Pass joined logical lines, not raw
    continuation fragments."""
    if line.word_count <= threshold:
        return None
    return SmellFinding(
        kind=SmellKind.LONG_STATEMENT,
        path=path,
        start_line=line.physical_line,
        end_line=line.end_line,
        unit_name=None,
        message="Long statement found",
    )


def detect_same_function_names(functions, scope: str = SCOPE_FILE):
    """Functions that share (name, arity) in scope; later definitions
    are flagged. ``functions`` is an ordered iterable of (path, METHOD
    Block) pairs; order defines which definition is first."""
    findings = []
    seen = set()
    for path, block in functions:
        sig = block.signature
        if sig is None:
            continue
        if sig.malformed:
            logger.warning(
                "malformed signature at %s:%d excluded from same-name check",
                path,
                block.header_line,
            )
            continue
        key = (sig.name, sig.arity)
        if scope == SCOPE_FILE:
            key = (path, sig.name, sig.arity)
        if key in seen:
            findings.append(
                SmellFinding(
                    kind=SmellKind.SAME_FUNCTION_NAME,
                    path=path,
                    start_line=block.header_line,
                    end_line=sig.end_line,
                    unit_name=sig.name,
                    message=(
                        f"Same function name '{sig.name}' with matching "
                        f"parameter count ({sig.arity})"
                    ),
                )
            )
        else:
            seen.add(key)
    return findings


def detect_long_block(block: Block, thresholds, path: str):
    """Block body longer than its kind's limit (strictly greater)."""
    limits = {
        CLASS: thresholds.long_class_lines,
        METHOD: thresholds.long_method_lines,
        LOOP: thresholds.long_loop_lines,
        CONDITIONAL: thresholds.long_conditional_lines,
    }
    if block.body_effective_lines <= limits[block.kind]:
        return None
    label = _LONG_BLOCK_LABEL[block.kind]
    message = f"{label} ({block.body_effective_lines} lines)"
    if block.name:
        message = f"{label}: '{block.name}' ({block.body_effective_lines} lines)"
    return SmellFinding(
        kind=_LONG_BLOCK_KIND[block.kind],
        path=path,
        start_line=block.header_line,
        end_line=block.body_end,
        unit_name=block.name,
        message=message,
    )


def detect_long_parameter_list(block: Block, threshold: int, path: str):
    """Function with more than ``threshold`` parameters (receiver
    included, strictly greater)."""
    sig = block.signature
    if sig is None or sig.arity <= threshold:
        return None
    return SmellFinding(
        kind=SmellKind.LONG_PARAMETER_LIST,
        path=path,
        start_line=block.header_line,
        end_line=sig.end_line,
        unit_name=sig.name,
        message=f"Long parameter list ({sig.arity}) in function '{sig.name}'",
    )


def run_all_detectors(file_models, config: ScanConfig) -> list[SmellFinding]:
    """Apply all eight detectors over modeled files.

    Output is sorted by (path, start line, rule); the result is a pure
    function of the tree snapshot and the configuration.
    """
    thresholds = config.thresholds
    models = sorted(file_models, key=lambda m: m.path)
    findings: list[SmellFinding] = []
    file_lines: dict[str, list[LineRecord]] = {}
    methods: list[tuple[str, Block]] = []

    for model in models:
        lines = model.records
        file_lines[model.path] = lines
        for logical in linemodel.join_logical_lines(lines):
            found = detect_long_statement(
                logical, thresholds.long_statement_words, model.path
            )
            if found:
                findings.append(found)
        for block in iter_blocks(model.blocks):
            if block.kind in (METHOD, LOOP, CONDITIONAL):
                findings.extend(detect_dead_code(block, lines, model.path))
            if block.kind == METHOD:
                methods.append((model.path, block))
                found = detect_multiple_returns(block, lines, model.path)
                if found:
                    findings.append(found)
                found = detect_long_parameter_list(
                    block, thresholds.max_parameters, model.path
                )
                if found:
                    findings.append(found)
            found = detect_long_block(block, thresholds, model.path)
            if found:
                findings.append(found)

    findings.extend(
        detect_repetitive_code(
            file_lines, thresholds.duplicate_window_lines, config.duplicate_scope
        )
    )
    findings.extend(detect_same_function_names(methods, config.duplicate_scope))
    findings.sort(key=finding_sort_key)
    return findings
