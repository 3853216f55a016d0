"""Pure-Python scanning kernel.

Fallback twin of the compiled extension in ``_kernels.pyx``; both must
produce byte-identical output for identical input (see
tests/test_kernels.py). The compiled module exists only because this
per-character scan dominates runtime on large trees.
"""

from __future__ import annotations

_PREFIX_CHARS = "rRbBuUfF"


def _spans_blank(raw, segs, upto_start, upto_end):
    """True when every retained character so far is whitespace."""
    for a, b in segs:
        if a < b and not raw[a:b].isspace():
            return False
    if upto_start < upto_end and not raw[upto_start:upto_end].isspace():
        return False
    return True


def scan_source(raw_lines):
    """Reduce decoded source lines to effective (code-only) lines.

    Drops blank lines, full-line and trailing ``#`` comments, and
    statement-position multi-line string literals (documentation
    strings). A simple quote-state scanner decides whether a ``#`` or a
    quote is inside a string literal; escape handling covers one-line
    strings only.

    Returns one tuple per surviving line::

        (physical_line, text, lead_spaces, word_count, joins_next)

    ``physical_line`` is 1-based. ``text`` keeps the original
    indentation but loses comment suffixes. ``joins_next`` is True when
    the statement continues on the following physical line (open
    bracket, trailing backslash, or an open multi-line string that is
    part of an expression).
    """
    out = []
    in_triple = False  # inside a multi-line string literal
    triple_quote = ""
    triple_is_doc = False  # the open literal started a statement
    depth = 0  # bracket depth outside string literals
    prev_backslash = False

    for idx, raw in enumerate(raw_lines):
        n = len(raw)
        segs = []  # retained (start, end) character spans
        seg_start = -1 if (in_triple and triple_is_doc) else 0
        i = 0
        while i < n:
            if in_triple:
                j = raw.find(triple_quote, i)
                if j < 0:
                    i = n
                else:
                    i = j + 3
                    in_triple = False
                    if triple_is_doc:
                        seg_start = i
                continue
            ch = raw[i]
            if ch == "#":
                segs.append((seg_start, i))
                seg_start = -1
                break
            if ch == "'" or ch == '"':
                if i + 2 < n and raw[i + 1] == ch and raw[i + 2] == ch:
                    # triple-quoted literal; docstring iff it starts the
                    # statement (string prefix letters allowed)
                    k = i
                    p = 0
                    while k > seg_start and p < 2 and raw[k - 1] in _PREFIX_CHARS:
                        k -= 1
                        p += 1
                    is_doc = (
                        depth == 0
                        and not prev_backslash
                        and _spans_blank(raw, segs, seg_start, k)
                    )
                    if is_doc:
                        segs.append((seg_start, k))
                        seg_start = -1
                    j = raw.find(ch + ch + ch, i + 3)
                    if j >= 0:
                        i = j + 3
                        if is_doc:
                            seg_start = i
                    else:
                        in_triple = True
                        triple_quote = ch + ch + ch
                        triple_is_doc = is_doc
                        i = n
                    continue
                # one-line string: retained verbatim, escapes honoured
                quote = ch
                i += 1
                while i < n:
                    c2 = raw[i]
                    if c2 == "\\":
                        i += 2
                        continue
                    i += 1
                    if c2 == quote:
                        break
                continue
            if ch == "(" or ch == "[" or ch == "{":
                depth += 1
            elif ch == ")" or ch == "]" or ch == "}":
                if depth > 0:
                    depth -= 1
            i += 1

        if seg_start >= 0:
            segs.append((seg_start, n))
        if len(segs) == 1:
            a, b = segs[0]
            text = raw[a:b].rstrip()
        else:
            text = "".join(raw[a:b] for a, b in segs).rstrip()
        if not text:
            prev_backslash = False
            continue
        ends_backslash = (not in_triple) and text.endswith("\\")
        joins_next = (
            ends_backslash or depth > 0 or (in_triple and not triple_is_doc)
        )
        lead_spaces = len(text) - len(text.lstrip())
        word_count = len(text.split())
        out.append((idx + 1, text, lead_spaces, word_count, joins_next))
        prev_backslash = ends_backslash
    return out
