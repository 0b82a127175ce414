"""Constructors for the code families used throughout: small fixtures,
tensor-product codes, and circulant lifted products."""

from __future__ import annotations

from dataclasses import dataclass, field

from .css import CssCode, tensor_code
from .errors import InvalidSpec, ParseError
from .gf2 import BitMatrix, RingPoly, hstack, kernel_basis, lift, vstack

FAMILIES = (
    "repetition",
    "shor",
    "steane",
    "qrm15",
    "surface",
    "rotated_surface",
    "toric",
    "hypergraph_product",
    "lifted_product",
    "lcs",
    "gb",
    "bb",
    "gross",
)


# -- polynomial parsing ------------------------------------------------


def parse_poly(text: str, moduli) -> RingPoly:
    """Parse ``1 + x^3 + y`` style input into a ring element.

    Terms are '+'-separated; a term is '1', a variable, or var^uint with
    variables drawn from {x, y}. Whitespace is ignored. Exponents reduce
    modulo the ring sizes immediately.
    """
    moduli = tuple(int(m) for m in moduli)
    nvars = len(moduli)
    if nvars not in (1, 2):
        raise InvalidSpec("moduli must have one or two entries")
    var_index = {"x": 0}
    if nvars == 2:
        var_index["y"] = 1
    terms = []
    pos = 0
    n = len(text)

    def skip_ws(p):
        while p < n and text[p].isspace():
            p += 1
        return p

    expecting_term = True
    while True:
        pos = skip_ws(pos)
        if pos >= n:
            if expecting_term:
                raise ParseError("expected a term", pos)
            break
        ch = text[pos]
        if not expecting_term:
            if ch != "+":
                raise ParseError(f"expected '+' but found {ch!r}", pos)
            pos += 1
            expecting_term = True
            continue
        if ch == "1":
            terms.append((0,) * nvars)
            pos += 1
        elif ch in var_index:
            idx = var_index[ch]
            pos += 1
            exp = 1
            if pos < n and text[pos] == "^":
                pos += 1
                start = pos
                while pos < n and text[pos].isdigit():
                    pos += 1
                if pos == start:
                    raise ParseError("expected an exponent after '^'", pos)
                exp = int(text[start:pos])
            t = [0] * nvars
            t[idx] = exp
            terms.append(tuple(t))
        elif ch == "y":
            raise ParseError("variable 'y' is not available in a univariate ring", pos)
        else:
            raise ParseError(f"unexpected character {ch!r}", pos)
        expecting_term = False
    return RingPoly(moduli, terms)


# -- ring matrices ------------------------------------------------------


def _ring_zero(moduli):
    return RingPoly.zero(moduli)


def _ring_identity(n, moduli):
    one = RingPoly.one(moduli)
    zero = _ring_zero(moduli)
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def _ring_kron(a, b, moduli):
    ra, ca = len(a), len(a[0]) if a else 0
    rb, cb = len(b), len(b[0]) if b else 0
    out = [[_ring_zero(moduli) for _ in range(ca * cb)] for _ in range(ra * rb)]
    for i in range(ra):
        for j in range(ca):
            for k in range(rb):
                for l in range(cb):
                    out[i * rb + k][j * cb + l] = a[i][j] * b[k][l]
    return out


def _ring_dagger(m, moduli):
    """Transpose with entry-wise reciprocals; lifts to the GF(2) transpose."""
    rows, cols = len(m), len(m[0])
    return [[m[i][j].reciprocal() for i in range(rows)] for j in range(cols)]


def _lift_matrix(entries) -> BitMatrix:
    return vstack([hstack([lift(p) for p in row]) for row in entries])


def lifted_product(moduli, a_ring, b_ring) -> CssCode:
    """Lifted product of two classical codes over a circulant ring.

    ``a_ring`` and ``b_ring`` are the ring check matrices of the two input
    codes; both differentials of the tensor complex are built over the ring,
    lifted entry-by-entry to GF(2), and pz is read off as the transpose of
    the degree-2 differential.
    """
    moduli = tuple(int(m) for m in moduli)
    ra, ca = len(a_ring), len(a_ring[0])
    rb, cb = len(b_ring), len(b_ring[0])
    d2_ring = [
        row
        for row in _ring_kron(a_ring, _ring_identity(cb, moduli), moduli)
    ] + [row for row in _ring_kron(_ring_identity(ca, moduli), b_ring, moduli)]
    d1_ring = [
        left + right
        for left, right in zip(
            _ring_kron(_ring_identity(ra, moduli), b_ring, moduli),
            _ring_kron(a_ring, _ring_identity(rb, moduli), moduli),
        )
    ]
    px = _lift_matrix(d1_ring)
    pz = _lift_matrix(d2_ring).transpose()
    return CssCode(pz, px)


# -- individual families ------------------------------------------------


def repetition(n: int) -> CssCode:
    """Quantum repetition (bit-flip) code on n qubits."""
    if n < 2:
        raise InvalidSpec("repetition requires n >= 2")
    rows = []
    for i in range(1, n):
        row = [0] * n
        row[0] = 1
        row[i] = 1
        rows.append(row)
    return CssCode(BitMatrix.zeros(0, n), BitMatrix.from_rows(rows, n))


def shor() -> CssCode:
    px = BitMatrix.from_rows(
        [
            [1, 1, 1, 1, 1, 1, 0, 0, 0],
            [1, 1, 1, 0, 0, 0, 1, 1, 1],
        ]
    )
    pz = BitMatrix.from_rows(
        [
            [1, 1, 0, 0, 0, 0, 0, 0, 0],
            [1, 0, 1, 0, 0, 0, 0, 0, 0],
            [0, 0, 0, 1, 1, 0, 0, 0, 0],
            [0, 0, 0, 1, 0, 1, 0, 0, 0],
            [0, 0, 0, 0, 0, 0, 1, 1, 0],
            [0, 0, 0, 0, 0, 0, 1, 0, 1],
        ]
    )
    return CssCode(pz, px)


def hamming_matrix() -> BitMatrix:
    return BitMatrix.from_rows(
        [
            [1, 1, 0, 1, 1, 0, 0],
            [1, 0, 1, 1, 0, 1, 0],
            [0, 1, 1, 1, 0, 0, 1],
        ]
    )


def steane() -> CssCode:
    h = hamming_matrix()
    return CssCode(h, h)


def qrm15() -> CssCode:
    """Punctured Reed-Muller construction of the 15-qubit code.

    Columns are labelled by the nonzero points of F_2^4; the X checks are
    the four coordinate functions and the Z checks span the dual of the
    punctured first-order Reed-Muller code.
    """
    px_rows = [[(j >> i) & 1 for j in range(1, 16)] for i in range(4)]
    px = BitMatrix.from_rows(px_rows, 15)
    rm1 = vstack([BitMatrix.from_rows([[1] * 15]), px])
    pz = BitMatrix.from_bitvectors(kernel_basis(rm1), 15)
    return CssCode(pz, px)


def open_path_matrix(d: int) -> BitMatrix:
    """(d-1) x d incidence of the open path: interior vertices by edges."""
    rows = []
    for i in range(d - 1):
        row = [0] * d
        row[i] = 1
        row[i + 1] = 1
        rows.append(row)
    return BitMatrix.from_rows(rows, d)


def cycle_matrix(n: int) -> BitMatrix:
    rows = []
    for i in range(n):
        row = [0] * n
        row[i] ^= 1
        row[(i + 1) % n] ^= 1
        rows.append(row)
    return BitMatrix.from_rows(rows, n)


def surface(d: int) -> CssCode:
    """Unrotated distance-d surface patch as a tensor of open paths."""
    if d < 2:
        raise InvalidSpec("surface requires d >= 2")
    a = open_path_matrix(d)
    return tensor_code(a, a.transpose())


def rotated_surface(d: int) -> CssCode:
    """Standard rotated layout on a d x d grid of qubits, odd d."""
    if d < 3 or d % 2 == 0:
        raise InvalidSpec("rotated_surface requires odd d >= 3")
    z_rows = []
    x_rows = []

    def face(r, c):
        return [d * r + c, d * r + c + 1, d * (r + 1) + c, d * (r + 1) + c + 1]

    for r in range(d - 1):
        for c in range(d - 1):
            target = z_rows if (r + c) % 2 == 0 else x_rows
            target.append(face(r, c))
    for c in range(d - 1):
        if c % 2 == 0:
            x_rows.append([c, c + 1])
        else:
            x_rows.append([d * (d - 1) + c, d * (d - 1) + c + 1])
    for r in range(d - 1):
        if r % 2 == 1:
            z_rows.append([d * r, d * (r + 1)])
        else:
            z_rows.append([d * r + d - 1, d * (r + 1) + d - 1])

    def to_matrix(rows):
        out = []
        for sup in rows:
            row = [0] * (d * d)
            for q in sup:
                row[q] = 1
            out.append(row)
        return BitMatrix.from_rows(out, d * d)

    return CssCode(to_matrix(z_rows), to_matrix(x_rows))


def toric(a: int, b: int | None = None) -> CssCode:
    """Toric code from the tensor of two cyclic repetition codes."""
    if b is None:
        b = a
    if a < 2 or b < 2:
        raise InvalidSpec("toric requires side lengths >= 2")
    return tensor_code(cycle_matrix(a), cycle_matrix(b))


def hypergraph_product(ha: BitMatrix, hb: BitMatrix) -> CssCode:
    """Hypergraph product: tensor code with the second classical code dualised."""
    return tensor_code(ha, hb.transpose())


def lcs(big_l: int, ell: int) -> CssCode:
    """Lift-connected surface code with base length L and circulant size l."""
    if big_l < 1 or ell < 1:
        raise InvalidSpec("lcs requires L >= 1 and l >= 1")
    moduli = (ell,)
    one = RingPoly.one(moduli)
    one_plus_x = one + RingPoly.monomial(moduli, (1,))
    zero = RingPoly.zero(moduli)
    b_ring = [
        [
            one if j == i else (one_plus_x if j == i + 1 else zero)
            for j in range(big_l + 1)
        ]
        for i in range(big_l)
    ]
    a_ring = _ring_dagger(b_ring, moduli)
    return lifted_product(moduli, a_ring, b_ring)


def gb(ell: int, a: RingPoly | str, b: RingPoly | str) -> CssCode:
    """Generalised bicycle code from two univariate circulant polynomials."""
    if ell < 1:
        raise InvalidSpec("gb requires l >= 1")
    if isinstance(a, str):
        a = parse_poly(a, (ell,))
    if isinstance(b, str):
        b = parse_poly(b, (ell,))
    if a.moduli != (ell,) or b.moduli != (ell,):
        raise InvalidSpec("polynomial moduli do not match l")
    la, lb = lift(a), lift(b)
    px = hstack([la, lb])
    pz = hstack([lb.transpose(), la.transpose()])
    return CssCode(pz, px)


def bb(ell: int, m: int, a: RingPoly | str, b: RingPoly | str) -> CssCode:
    """Bivariate bicycle code over F2[x,y]/(x^l - 1, y^m - 1)."""
    if ell < 1 or m < 1:
        raise InvalidSpec("bb requires l >= 1 and m >= 1")
    moduli = (ell, m)
    if isinstance(a, str):
        a = parse_poly(a, moduli)
    if isinstance(b, str):
        b = parse_poly(b, moduli)
    if a.moduli != moduli or b.moduli != moduli:
        raise InvalidSpec("polynomial moduli do not match (l, m)")
    la, lb = lift(a), lift(b)
    px = hstack([la, lb])
    pz = hstack([lb.transpose(), la.transpose()])
    return CssCode(pz, px)


def gross() -> CssCode:
    """The [[144,12,12]] bivariate bicycle code."""
    return bb(12, 6, "x^3 + y + y^2", "y^3 + x + x^2")


def lcs_fixture_15_3_3() -> CssCode:
    """The 15-qubit lift-connected surface code exactly as printed in the
    worked merge example; kept verbatim since its qubit labelling feeds the
    merge along qubits {2, 9, 14}."""
    pz = BitMatrix.from_rows(
        [
            [1, 0, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 1, 0, 0],
            [0, 1, 0, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 1, 0],
            [0, 0, 1, 0, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 1],
            [0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 1, 0, 1, 0, 1],
            [0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 1, 1, 1, 0],
            [0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 1, 0, 1, 1],
        ]
    )
    px = BitMatrix.from_rows(
        [
            [1, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0],
            [0, 1, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 1, 0],
            [0, 0, 1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1],
            [0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 1, 0, 1, 0, 1],
            [0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 1, 1, 1, 0],
            [0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 1, 0, 1, 1],
        ]
    )
    return CssCode(pz, px)


# -- spec dispatch -------------------------------------------------------


@dataclass
class FamilySpec:
    """A family tag plus its parameters, validated at build time."""

    family: str
    params: dict = field(default_factory=dict)


def _matrix_param(value) -> BitMatrix:
    if isinstance(value, BitMatrix):
        return value
    if isinstance(value, str):
        rows = [r.strip() for r in value.split(",") if r.strip()]
        return BitMatrix.from_rows([[int(c) for c in row] for row in rows])
    return BitMatrix.from_rows(value)


def _ring_matrix_param(value, moduli):
    if isinstance(value, str):
        out = []
        for row in value.split(";"):
            entries = []
            for cell in row.split(","):
                cell = cell.strip()
                entries.append(RingPoly.zero(moduli) if cell == "0" else parse_poly(cell, moduli))
            out.append(entries)
        return out
    return value


def build(spec: FamilySpec) -> CssCode:
    """Construct the family member described by ``spec``."""
    fam = spec.family
    p = dict(spec.params)
    try:
        if fam == "repetition":
            return repetition(int(p.pop("n")))
        if fam == "shor":
            return shor()
        if fam == "steane":
            return steane()
        if fam == "qrm15":
            return qrm15()
        if fam == "surface":
            return surface(int(p.pop("d")))
        if fam == "rotated_surface":
            return rotated_surface(int(p.pop("d")))
        if fam == "toric":
            a = int(p.pop("a"))
            b = int(p.pop("b", a))
            return toric(a, b)
        if fam == "hypergraph_product":
            return hypergraph_product(_matrix_param(p.pop("A")), _matrix_param(p.pop("B")))
        if fam == "lifted_product":
            moduli = (int(p.pop("l")),) if "m" not in p else (int(p.pop("l")), int(p.pop("m")))
            return lifted_product(
                moduli,
                _ring_matrix_param(p.pop("A"), moduli),
                _ring_matrix_param(p.pop("B"), moduli),
            )
        if fam == "lcs":
            return lcs(int(p.pop("L")), int(p.pop("l")))
        if fam == "gb":
            return gb(int(p.pop("l")), p.pop("a"), p.pop("b"))
        if fam == "bb":
            return bb(int(p.pop("l")), int(p.pop("m")), p.pop("A"), p.pop("B"))
        if fam == "gross":
            return gross()
    except KeyError as exc:
        raise InvalidSpec(f"family {fam!r} is missing parameter {exc}") from exc
    except (TypeError, ValueError) as exc:
        raise InvalidSpec(f"bad parameter for family {fam!r}: {exc}") from exc
    raise InvalidSpec(f"unknown family {fam!r}; known: {', '.join(FAMILIES)}")
