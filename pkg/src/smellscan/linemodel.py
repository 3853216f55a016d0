"""Line classification, indentation-delimited block extraction, and
function-signature parsing.

Everything here is a pure function of the effective lines of one file;
files can therefore be modeled concurrently.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

logger = logging.getLogger("smellscan")

# line kinds
FUNCTION_DEF = "function_def"
CLASS_DEF = "class_def"
CONDITIONAL_HEADER = "conditional_header"
LOOP_HEADER = "loop_header"
RETURN_STMT = "return_stmt"
OTHER = "other"

# block kinds
CLASS = "CLASS"
METHOD = "METHOD"
LOOP = "LOOP"
CONDITIONAL = "CONDITIONAL"

_HEADER_BLOCK_KIND = {
    FUNCTION_DEF: METHOD,
    CLASS_DEF: CLASS,
    LOOP_HEADER: LOOP,
    CONDITIONAL_HEADER: CONDITIONAL,
}


@dataclass
class LineRecord:
    """One effective source line (comments and blanks already removed)."""

    physical_line: int  # 1-based line number in the original file
    text: str  # indentation kept, comment suffix dropped
    lead_spaces: int
    kind: str
    word_count: int
    joins_next: bool = False  # statement continues on the next line
    end_line: int = 0  # last physical line after continuation joining

    def __post_init__(self):
        if self.end_line == 0:
            self.end_line = self.physical_line


@dataclass
class FunctionSignature:
    name: str
    parameter_names: list[str]
    arity: int
    end_line: int = 0  # physical line where the signature closes
    malformed: bool = False  # no "(" found / parentheses never balanced


@dataclass
class Block:
    """An indentation-delimited unit: the body is the maximal run of
    following effective lines indented deeper than the header."""

    kind: str  # CLASS | METHOD | LOOP | CONDITIONAL
    header_line: int
    header_lead: int
    header_pos: int  # index into the file's effective-line list
    body_start: int = 0  # physical span of the body
    body_end: int = 0
    body_effective_lines: int = 0
    children: list["Block"] = field(default_factory=list)
    signature: FunctionSignature | None = None
    name: str | None = None  # class or function name when parseable
    body_pos_start: int = -1  # effective-index span of the body
    body_pos_end: int = -1


def get_lead_spaces(line: str) -> int:
    """Number of leading whitespace characters (tabs weigh 1 each)."""
    return len(line) - len(line.lstrip())


def _leading_identifier(text: str) -> str:
    s = text.lstrip()
    end = 0
    n = len(s)
    while end < n:
        c = s[end]
        if c.isalpha() or c == "_" or (end > 0 and c.isdigit()):
            end += 1
        else:
            break
    return s[:end]


def classify_text(text: str) -> str:
    """Map a line to its kind by the leading keyword."""
    word = _leading_identifier(text)
    if word == "async":
        rest = text.lstrip()[len(word):]
        word = _leading_identifier(rest)
        if word == "def":
            return FUNCTION_DEF
        if word == "for":
            return LOOP_HEADER
        return OTHER
    if word == "def":
        return FUNCTION_DEF
    if word == "class":
        return CLASS_DEF
    if word in ("if", "elif", "else"):
        return CONDITIONAL_HEADER
    if word in ("for", "while"):
        return LOOP_HEADER
    if word == "return":
        return RETURN_STMT
    return OTHER


def classify_line(line: LineRecord) -> str:
    return classify_text(line.text)


def make_line_record(physical_line, text, lead_spaces, word_count, joins_next):
    return LineRecord(
        physical_line=physical_line,
        text=text,
        lead_spaces=lead_spaces,
        kind=classify_text(text),
        word_count=word_count,
        joins_next=joins_next,
    )


def _paren_delta(text: str) -> int:
    """Net count of "(" minus ")" outside string literals."""
    delta = 0
    quote = ""
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if quote:
            if ch == "\\":
                i += 2
                continue
            if ch == quote:
                quote = ""
        elif ch == "'" or ch == '"':
            quote = ch
        elif ch == "(":
            delta += 1
        elif ch == ")":
            delta -= 1
        i += 1
    return delta


def _split_outer_commas(text: str) -> list[str]:
    """Split on commas at bracket depth zero, quote-aware."""
    items = []
    depth = 0
    quote = ""
    start = 0
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if quote:
            if ch == "\\":
                i += 2
                continue
            if ch == quote:
                quote = ""
        elif ch == "'" or ch == '"':
            quote = ch
        elif ch in "([{":
            depth += 1
        elif ch in ")]}":
            depth -= 1
        elif ch == "," and depth == 0:
            items.append(text[start:i])
            start = i + 1
        i += 1
    items.append(text[start:])
    return items


def _matching_paren(text: str, open_idx: int) -> int:
    """Index of the bracket closing the one at open_idx, or -1."""
    depth = 0
    quote = ""
    i = open_idx
    n = len(text)
    while i < n:
        ch = text[i]
        if quote:
            if ch == "\\":
                i += 2
                continue
            if ch == quote:
                quote = ""
        elif ch == "'" or ch == '"':
            quote = ch
        elif ch in "([{":
            depth += 1
        elif ch in ")]}":
            depth -= 1
            if depth == 0:
                return i
        i += 1
    return -1


def _param_name(item: str) -> str | None:
    """Parameter name of one comma-separated item, or None to drop it."""
    cut = len(item)
    for stop in ("=", ":"):
        pos = item.find(stop)
        if pos >= 0 and pos < cut:
            cut = pos
    token = item[:cut].strip().lstrip("*").strip()
    if not token:
        return None
    if not (token[0].isalpha() or token[0] == "_"):
        return None
    return token


def get_function_signature(lines, pos: int) -> FunctionSignature:
    """Parse the signature of the function header at lines[pos].

    A header whose parentheses stay unbalanced absorbs following
    effective lines until they balance, so multi-line signatures are
    handled. The name is the text between the def keyword and the first
    "(" (survives ``def f (x):`` where naive token slicing breaks).
    """
    header = lines[pos]
    joined = header.text.strip()
    end_line = header.physical_line

    if "(" not in joined:
        logger.warning(
            "malformed signature (no parenthesis) at line %d: %s",
            header.physical_line,
            joined,
        )
        tokens = joined.split()
        name = tokens[1] if len(tokens) > 1 else ""
        return FunctionSignature(
            name=name,
            parameter_names=[],
            arity=0,
            end_line=end_line,
            malformed=True,
        )

    balance = _paren_delta(joined)
    j = pos
    while balance > 0 and j + 1 < len(lines):
        j += 1
        part = lines[j].text.strip()
        joined = joined + " " + part
        end_line = lines[j].physical_line
        balance += _paren_delta(part)

    head = joined
    if head.startswith("async"):
        head = head[len("async"):].lstrip()
    if head.startswith("def"):
        head = head[len("def"):]
    lparen_rel = head.find("(")
    name = head[:lparen_rel].strip()

    lparen = len(joined) - len(head) + lparen_rel
    close = _matching_paren(joined, lparen)
    malformed = False
    if close < 0:
        inner = joined[lparen + 1 :]
        malformed = True
    else:
        inner = joined[lparen + 1 : close]

    names = []
    if inner.strip():
        for item in _split_outer_commas(inner):
            token = _param_name(item)
            if token is not None:
                names.append(token)
    return FunctionSignature(
        name=name,
        parameter_names=names,
        arity=len(names),
        end_line=end_line,
        malformed=malformed,
    )


def _class_name(text: str) -> str | None:
    s = text.strip()
    if not s.startswith("class"):
        return None
    s = s[len("class"):].strip()
    end = 0
    while end < len(s) and (s[end].isalpha() or s[end] == "_" or s[end].isdigit()):
        end += 1
    return s[:end] or None


def extract_blocks(lines) -> list[Block]:
    """Build the block forest of one file's effective lines.

    A dedent to (or past) a header's indent closes its block; every
    effective line strictly deeper than the header counts toward the
    body, nested headers included.
    """
    top: list[Block] = []
    stack: list[Block] = []
    for pos, rec in enumerate(lines):
        while stack and rec.lead_spaces <= stack[-1].header_lead:
            stack.pop()
        for open_block in stack:
            open_block.body_effective_lines += 1
            if open_block.body_pos_start < 0:
                open_block.body_pos_start = pos
                open_block.body_start = rec.physical_line
            open_block.body_pos_end = pos
            open_block.body_end = rec.physical_line
        block_kind = _HEADER_BLOCK_KIND.get(rec.kind)
        if block_kind is None:
            continue
        block = Block(
            kind=block_kind,
            header_line=rec.physical_line,
            header_lead=rec.lead_spaces,
            header_pos=pos,
            body_start=rec.physical_line,
            body_end=rec.physical_line,
        )
        if block_kind == METHOD:
            block.signature = get_function_signature(lines, pos)
            block.name = block.signature.name or None
        elif block_kind == CLASS:
            block.name = _class_name(rec.text)
        if stack:
            stack[-1].children.append(block)
        else:
            top.append(block)
        stack.append(block)
    return top


def iter_blocks(blocks):
    """Preorder walk of a block forest."""
    for block in blocks:
        yield block
        yield from iter_blocks(block.children)


def join_logical_lines(lines) -> list[LineRecord]:
    """Merge continuation runs into single logical-line records.

    Fragments join with one space; a trailing continuation backslash is
    dropped first so it never counts as a word. Word counts are
    recomputed on the joined text.
    """
    out = []
    i = 0
    n = len(lines)
    while i < n:
        rec = lines[i]
        if not rec.joins_next or i + 1 == n:
            out.append(rec)
            i += 1
            continue
        parts = [rec.text]
        j = i
        while lines[j].joins_next and j + 1 < n:
            j += 1
            parts.append(lines[j].text.strip())
        cleaned = [p[:-1].rstrip() if p.endswith("\\") else p for p in parts]
        joined = " ".join(cleaned)
        out.append(
            LineRecord(
                physical_line=rec.physical_line,
                text=joined,
                lead_spaces=rec.lead_spaces,
                kind=rec.kind,
                word_count=len(joined.split()),
                joins_next=False,
                end_line=lines[j].physical_line,
            )
        )
        i = j + 1
    return out


@dataclass
class FileModel:
    """Everything downstream detectors need to know about one file."""

    path: str
    source: "SourceFile"  # noqa: F821 - smellscan.ingest.SourceFile
    records: list[LineRecord]
    blocks: list[Block]
