"""Homology bases, paired logical representatives, irreducibility and
gauge-fixability, and logical operator subcomplexes."""

from __future__ import annotations

from dataclasses import dataclass

from .css import CssCode
from .errors import NotALogical, ShapeError
from .gf2 import BitMatrix, BitVector, SpanReducer, XorBasis, kernel_basis, solve_rowcomb


def _matrices(code: CssCode, basis: str):
    """(checks that must annihilate the operator, checks spanning stabilisers)."""
    if basis == "Z":
        return code.px, code.pz
    if basis == "X":
        return code.pz, code.px
    raise ShapeError(f"basis must be 'Z' or 'X', got {basis!r}")


def is_logical(code: CssCode, v: BitVector, basis: str) -> bool:
    """True iff v is a nontrivial logical operator of the stated basis."""
    annihilator, stabilisers = _matrices(code, basis)
    if v.n != code.n:
        raise ShapeError(f"operator length {v.n} does not match n = {code.n}")
    if annihilator.mul_vec(v).weight() != 0:
        return False
    return not SpanReducer(stabilisers).contains(v)


def _require_logical(code: CssCode, v: BitVector, basis: str):
    if not is_logical(code, v, basis):
        raise NotALogical(f"vector is not a nontrivial {basis} logical")


@dataclass
class LogicalBasis:
    """Dual bases of H_1 and H^1 with pairing z_reps[i] . x_reps[j] = delta_ij."""

    z_reps: list
    x_reps: list

    @property
    def k(self) -> int:
        return len(self.z_reps)


def logical_basis(code: CssCode) -> LogicalBasis:
    """Deterministic coset representatives for the Z classes, with the X
    representatives solved from the duality pairing."""
    z_red = SpanReducer(code.pz)
    z_reps = []
    chosen = XorBasis(code.pz.row_ints())
    for v in kernel_basis(code.px):
        reduced = z_red.reduce_bits(v.bits)
        if reduced and chosen.add(reduced):
            z_reps.append(BitVector(code.n, reduced))
    x_kernel = kernel_basis(code.pz)
    k = len(z_reps)
    x_reps = []
    if k:
        # pairing[i][j] = x_kernel[i] . z_reps[j]
        pairing = BitMatrix.from_rows(
            [[w.dot(z) for z in z_reps] for w in x_kernel], k
        )
        for j in range(k):
            target = BitVector.from_support(k, [j])
            coeffs = solve_rowcomb(pairing, target)
            if coeffs is None:
                raise NotALogical("duality pairing is degenerate; invalid code state")
            bits = 0
            for i in coeffs.support():
                bits ^= x_kernel[i].bits
            x_reps.append(BitVector(code.n, bits))
    return LogicalBasis(z_reps=z_reps, x_reps=x_reps)


@dataclass
class Subcomplex:
    """A logical operator's restricted check matrix with index maps back
    into the parent code: rows are check_indices, columns qubit_indices."""

    boundary: BitMatrix
    qubit_indices: tuple
    check_indices: tuple

    @property
    def n_qubits(self) -> int:
        return len(self.qubit_indices)

    @property
    def n_checks(self) -> int:
        return len(self.check_indices)


def restricted_matrix(code: CssCode, v: BitVector, basis: str = "Z") -> Subcomplex:
    """Restrict the annihilating differential to supp(v), dropping zero rows."""
    _require_logical(code, v, basis)
    annihilator, _ = _matrices(code, basis)
    qubits = v.support()
    kept_rows = []
    row_bits = []
    for i in range(annihilator.rows):
        r = annihilator.row_int(i)
        bits = 0
        for pos, q in enumerate(qubits):
            if (r >> q) & 1:
                bits |= 1 << pos
        if bits:
            kept_rows.append(i)
            row_bits.append(bits)
    boundary = BitMatrix.from_row_ints(row_bits, len(qubits))
    return Subcomplex(boundary=boundary, qubit_indices=qubits, check_indices=tuple(kept_rows))


def is_irreducible(code: CssCode, v: BitVector, basis: str = "Z") -> bool:
    """True iff no other annihilator-kernel vector lies inside supp(v)."""
    sub = restricted_matrix(code, v, basis)
    return len(kernel_basis(sub.boundary)) == 1


def is_gauge_fixable(code: CssCode, v: BitVector, basis: str = "Z") -> bool:
    """Pairwise correctability of the support, via restricted check spans.

    A pair (e_i, e_j) in supp(v) is fixable when e_i + e_j restricted to the
    support lies in the row space of the restricted matrix; chains of
    adjacent pairs compose, so only consecutive support positions are tested.
    """
    sub = restricted_matrix(code, v, basis)
    w = sub.n_qubits
    if w <= 1:
        return True
    reducer = SpanReducer(sub.boundary)
    for pos in range(w - 1):
        pair = (1 << pos) | (1 << (pos + 1))
        if not reducer.contains_bits(pair):
            return False
    return True
