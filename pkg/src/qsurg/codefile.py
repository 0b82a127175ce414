"""On-disk formats: the CSS v1 code file and one-line logical vector files.

Code file (UTF-8, LF): ``CSS v1`` / ``n <n>`` / ``PZ <mz>`` / mz rows of n
space-separated bits / ``PX <mx>`` / mx rows. Parsing is whitespace-
tolerant; writing is canonical, so save(load(f)) normalises whitespace and
nothing else.
"""

from __future__ import annotations

from .css import CssCode
from .errors import ParseError
from .gf2 import BitMatrix, BitVector


def dumps_code(code: CssCode) -> str:
    lines = ["CSS v1", f"n {code.n}", f"PZ {code.mz}"]
    for i in range(code.mz):
        lines.append(" ".join(str(code.pz.get(i, j)) for j in range(code.n)))
    lines.append(f"PX {code.mx}")
    for i in range(code.mx):
        lines.append(" ".join(str(code.px.get(i, j)) for j in range(code.n)))
    return "\n".join(lines) + "\n"


def loads_code(text: str) -> CssCode:
    tokens = text.split()
    pos = 0

    def take(expect=None):
        nonlocal pos
        if pos >= len(tokens):
            raise ParseError("unexpected end of code file", pos)
        t = tokens[pos]
        pos += 1
        if expect is not None and t != expect:
            raise ParseError(f"expected {expect!r}, found {t!r}", pos - 1)
        return t

    def take_int():
        t = take()
        try:
            return int(t)
        except ValueError:
            raise ParseError(f"expected an integer, found {t!r}", pos - 1) from None

    take("CSS")
    take("v1")
    take("n")
    n = take_int()
    take("PZ")
    mz = take_int()
    if n < 0 or mz < 0:
        raise ParseError("negative dimensions", pos - 1)
    pz_rows = [[take_int() for _ in range(n)] for _ in range(mz)]
    take("PX")
    mx = take_int()
    px_rows = [[take_int() for _ in range(n)] for _ in range(mx)]
    if pos != len(tokens):
        raise ParseError("trailing content after PX block", pos)
    for rows in (pz_rows, px_rows):
        for r in rows:
            for b in r:
                if b not in (0, 1):
                    raise ParseError("matrix entries must be 0 or 1", pos)
    return CssCode(BitMatrix.from_rows(pz_rows, n), BitMatrix.from_rows(px_rows, n))


def save_code(code: CssCode, path: str):
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(dumps_code(code))


def load_code(path: str) -> CssCode:
    with open(path, encoding="utf-8") as fh:
        return loads_code(fh.read())


def dumps_logical(v: BitVector) -> str:
    return " ".join(str(v.get(i)) for i in range(v.n)) + "\n"


def loads_logical(text: str, n: int | None = None) -> BitVector:
    tokens = text.split()
    bits = []
    for t in tokens:
        if t not in ("0", "1"):
            raise ParseError(f"logical entries must be 0 or 1, found {t!r}")
        bits.append(int(t))
    if n is not None and len(bits) != n:
        raise ParseError(f"logical has {len(bits)} entries, expected {n}")
    return BitVector.from_bits(bits)


def save_logical(v: BitVector, path: str):
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(dumps_logical(v))


def load_logical(path: str, n: int | None = None) -> BitVector:
    with open(path, encoding="utf-8") as fh:
        return loads_logical(fh.read(), n)
