"""Backend parity: the compiled kernel and the pure-Python fallback
must agree byte-for-byte on every input."""

import random

import pytest

from smellscan import _kernels_py, kernels

compiled = pytest.importorskip(
    "smellscan._kernels", reason="compiled kernel not built"
)


STRUCTURED_CASES = [
    [],
    [""],
    ["   "],
    ["x = 1"],
    ["# only a comment"],
    ['"""doc"""'],
    ['"""doc', "body", '"""'],
    ["x = '''", "inner # not comment", "''' + 'tail'"],
    ["x = (", "    1,", ")"],
    ["y = 1 \\", "    + 2"],
    ["def f(a,", "      b):", "    return a"],
    ['s = "es\\"caped"  # strip me'],
    ["\tif x:", "\t\treturn '#'"],
    ['r"""raw doc"""', "b'''bytes doc'''", "x = 1"],
    ["f'{a}' # f-string", 'u"text"'],
    ["empty = ''", 'double = ""', "q = '\\''"],
    ["a = { 'k': [1, (2, 3)] }", "b = }{"],
    ['"""unterminated doc', "never closes"],
    ["x = 'unterminated", "y = 2"],
]


def test_structured_cases_agree():
    for lines in STRUCTURED_CASES:
        assert compiled.scan_source(lines) == _kernels_py.scan_source(lines), lines


def test_randomized_parity():
    rng = random.Random(0xC0DE)
    atoms = [
        "x = 1", "def f(a, b):", "    return a", "# comment",
        '"""', "'''", '"', "'", "\\", "(", ")", "    ", "",
        "if x:", "\tz = '#'", "s = 'a#b'", "w )( ]", "async for i in it:",
        "r'''", 'b"""', "value += [1, 2]  # grow", "☺ = 'smile'",
    ]
    for _ in range(300):
        n = rng.randint(0, 40)
        lines = []
        for _ in range(n):
            parts = [rng.choice(atoms) for _ in range(rng.randint(1, 4))]
            lines.append(" ".join(parts) if rng.random() < 0.7 else "".join(parts))
        rows = compiled.scan_source(lines)
        assert rows == _kernels_py.scan_source(lines), lines
        for _, text, lead, words, _ in rows:
            assert lead == len(text) - len(text.lstrip())
            assert words == len(text.split()) >= 1


def test_selected_backend_exports_scan_source():
    assert kernels.BACKEND in ("cython", "python")
    assert callable(kernels.scan_source)
