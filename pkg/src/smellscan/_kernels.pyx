# cython: language_level=3
"""Compiled scanning kernel.

Typed twin of ``_kernels_py.scan_source``; the two must produce
byte-identical output for identical input (see tests/test_kernels.py).
"""

from cpython.unicode cimport Py_UNICODE_ISSPACE


cdef inline bint _is_prefix_char(Py_UCS4 ch):
    return (ch == u'r' or ch == u'R' or ch == u'b' or ch == u'B'
            or ch == u'u' or ch == u'U' or ch == u'f' or ch == u'F')


cdef bint _span_blank(str raw, Py_ssize_t a, Py_ssize_t b):
    cdef Py_ssize_t i
    for i in range(a, b):
        if not Py_UNICODE_ISSPACE(<Py_UCS4> raw[i]):
            return False
    return True


cdef bint _spans_blank(str raw, list segs, Py_ssize_t upto_start, Py_ssize_t upto_end):
    cdef Py_ssize_t a, b
    for a, b in segs:
        if not _span_blank(raw, a, b):
            return False
    return _span_blank(raw, upto_start, upto_end)


def scan_source(raw_lines):
    """See ``smellscan._kernels_py.scan_source`` for the contract."""
    cdef list out = []
    cdef bint in_triple = False
    cdef str triple_quote = ""
    cdef bint triple_is_doc = False
    cdef Py_ssize_t depth = 0
    cdef bint prev_backslash = False

    cdef Py_ssize_t idx, n, i, j, k, p, a, b, seg_start
    cdef Py_UCS4 ch, c2, quote
    cdef str raw, text, stripped
    cdef list segs
    cdef bint is_doc, ends_backslash, joins_next
    cdef Py_ssize_t nlines = len(raw_lines)

    for idx in range(nlines):
        raw = <str> raw_lines[idx]
        n = len(raw)
        segs = []
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
            if ch == u'#':
                segs.append((seg_start, i))
                seg_start = -1
                break
            if ch == u"'" or ch == u'"':
                if i + 2 < n and <Py_UCS4> raw[i + 1] == ch and <Py_UCS4> raw[i + 2] == ch:
                    k = i
                    p = 0
                    while k > seg_start and p < 2 and _is_prefix_char(<Py_UCS4> raw[k - 1]):
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
                    triple_quote = raw[i:i + 3]
                    j = raw.find(triple_quote, i + 3)
                    if j >= 0:
                        i = j + 3
                        in_triple = False
                        if is_doc:
                            seg_start = i
                    else:
                        in_triple = True
                        triple_is_doc = is_doc
                        i = n
                    continue
                quote = ch
                i += 1
                while i < n:
                    c2 = raw[i]
                    if c2 == u'\\':
                        i += 2
                        continue
                    i += 1
                    if c2 == quote:
                        break
                continue
            if ch == u'(' or ch == u'[' or ch == u'{':
                depth += 1
            elif ch == u')' or ch == u']' or ch == u'}':
                if depth > 0:
                    depth -= 1
            i += 1

        if seg_start >= 0:
            segs.append((seg_start, n))
        if len(segs) == 1:
            a, b = <tuple> segs[0]
            text = raw[a:b].rstrip()
        else:
            text = "".join([raw[a:b] for a, b in segs]).rstrip()
        if not text:
            prev_backslash = False
            continue
        ends_backslash = (not in_triple) and text.endswith("\\")
        joins_next = (
            ends_backslash or depth > 0 or (in_triple and not triple_is_doc)
        )
        stripped = text.lstrip()
        out.append(
            (idx + 1, text, len(text) - len(stripped), len(text.split()), joins_next)
        )
        prev_backslash = ends_backslash
    return out
