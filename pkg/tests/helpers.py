"""Shared builders for the test suite."""

from __future__ import annotations

import random
import textwrap
from pathlib import Path

from smellscan.ingest import ScanConfig, SourceFile, strip_comments_and_blanks
from smellscan.linemodel import FileModel, extract_blocks


def source_from_text(text: str, path: str = "mem.py") -> SourceFile:
    text = textwrap.dedent(text)
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    return SourceFile(path=path, raw_lines=lines)


def records_from_text(text: str, path: str = "mem.py"):
    return strip_comments_and_blanks(source_from_text(text, path))


def model_from_text(text: str, path: str = "mem.py") -> FileModel:
    source = source_from_text(text, path)
    records = strip_comments_and_blanks(source)
    return FileModel(
        path=path, source=source, records=records, blocks=extract_blocks(records)
    )


def config_for(root, **kwargs) -> ScanConfig:
    return ScanConfig(root_path=Path(root), **kwargs)


def brute_force_duplicate_windows(file_norm_lines, window, per_file=True):
    """Independent oracle for the repetitive-code rule.

    All-pairs comparison: a window is a finding iff some earlier window
    (same file under per_file, any file otherwise, in (path, position)
    order) has exactly the same text. No hashing, no grouping - just
    direct text comparison of every pair.
    """
    all_windows = []  # (path, index, joined text)
    for path, norm in file_norm_lines.items():
        for start in range(len(norm) - window + 1):
            all_windows.append((path, start, "\n".join(norm[start : start + window])))
    flagged = []
    for i, (path, start, text) in enumerate(all_windows):
        for j in range(i):
            prev_path, _, prev_text = all_windows[j]
            if per_file and prev_path != path:
                continue
            if prev_text == text:
                flagged.append((path, start))
                break
    return flagged


def write_tree(root: Path, files: dict[str, str]) -> None:
    for rel, content in files.items():
        target = root / rel
        target.parent.mkdir(parents=True, exist_ok=True)
        target.write_text(textwrap.dedent(content), encoding="utf-8")


def random_code_corpus(rng: random.Random, n_files: int) -> dict[str, str]:
    """Deterministic synthetic corpus: a mix of functions, classes,
    comments, docstrings, duplicates, and unicode comments."""
    files = {}
    for f in range(n_files):
        lines = [f'"""module {f}."""', ""]
        for s in range(rng.randint(2, 6)):
            kind = rng.randrange(5)
            tag = f"{f}_{s}"
            if kind == 0:
                params = ", ".join(f"p{i}" for i in range(rng.randint(0, 7)))
                lines.append(f"def fn_{tag}({params}):")
                for b in range(rng.randint(1, 6)):
                    lines.append(f"    v{b} = {b} * {rng.randint(1, 9)}")
                if rng.random() < 0.5:
                    lines.append("    return v0")
                if rng.random() < 0.2:
                    lines.append("    return None")
            elif kind == 1:
                lines.append(f"class C_{tag}:")
                for b in range(rng.randint(1, 8)):
                    lines.append(f"    attr{b} = {b}")
            elif kind == 2:
                lines.append(f"# comment block {tag} ☺")
                lines.append(f"x_{tag} = {rng.randint(0, 100)}")
            elif kind == 3:
                words = " + ".join(str(i) for i in range(rng.randint(3, 14)))
                lines.append(f"total_{tag} = {words}")
            else:
                lines.append("shared_a = 1")
                lines.append("shared_b = 2")
                lines.append("shared_c = 3")
            lines.append("")
        sub = f"pkg{f % 7}"
        files[f"{sub}/mod_{f:03d}.py"] = "\n".join(lines) + "\n"
    return files
