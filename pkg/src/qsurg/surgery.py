"""Colimit constructions: ancilla patches, sandwich codes, direct merges,
depth-r external/internal merges, and single-qubit measurement patches.

All quotients follow the row-XOR / column-OR recipe: gluing qubits XORs
their rows in d2 and ORs their columns in d1; gluing X checks XORs their
rows in d1. Merged codes use a canonical labelling: original elements keep
their indices (first code first), surviving patch elements are appended in
slice-major, subcomplex-index-minor order.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .css import ChainMap2, CssCode, direct_sum, k_of
from .errors import InvalidSpec, NoSpan, NotIrreducible, Overlap, ShapeError
from .gf2 import BitMatrix, BitVector, SpanReducer, XorBasis, kernel_basis
from .logicals import Subcomplex, logical_basis, restricted_matrix
from .spans import MonicSpan, find_monic_span


@dataclass
class AncillaComplex:
    """Path-graph (or truncated path) incidence used as the gluing ancilla."""

    kind: str
    depth: int
    boundary: BitMatrix


def path_complex(r: int) -> AncillaComplex:
    """(r+1) x r path-graph incidence; trivial kernel, all-ones cokernel."""
    if r < 1:
        raise InvalidSpec("depth r must be at least 1")
    rows = [[1 if (j == i or j == i - 1) else 0 for j in range(r)] for i in range(r + 1)]
    return AncillaComplex("path", r, BitMatrix.from_rows(rows, r))


def truncated_path_complex(r: int) -> AncillaComplex:
    """r x r truncated path incidence; kernel and transpose kernel trivial."""
    if r < 1:
        raise InvalidSpec("depth r must be at least 1")
    rows = [[1 if (j == i or j == i - 1) else 0 for j in range(r)] for i in range(r)]
    return AncillaComplex("truncated_path", r, BitMatrix.from_rows(rows, r))


def _require_irreducible(sub: Subcomplex):
    if len(kernel_basis(sub.boundary)) != 1:
        raise NotIrreducible("logical has another kernel vector inside its support")


def _patch_code(bnd: BitMatrix, r: int, truncated: bool) -> CssCode:
    """Tensor of the (truncated) path complex with a restricted matrix.

    Qubit order: copies of the logical's qubits slice by slice, then the
    per-slice fresh qubits (one per adjacent check); Z checks and X checks
    are likewise slice-major.
    """
    nv1 = bnd.cols
    nv0 = bnd.rows
    v1_slices = r if truncated else r + 1
    w0_slices = r if truncated else r + 1
    z_slices = r
    v0q_slices = r
    n = v1_slices * nv1 + v0q_slices * nv0
    dense = bnd.to_dense()

    d2 = np.zeros((n, z_slices * nv1), dtype=np.uint8)
    for s in range(v1_slices):
        for sp in (s - 1, s):
            if 0 <= sp < z_slices:
                rows = np.arange(nv1) + s * nv1
                cols = np.arange(nv1) + sp * nv1
                d2[rows, cols] ^= 1
    for s in range(v0q_slices):
        d2[
            v1_slices * nv1 + s * nv0 : v1_slices * nv1 + (s + 1) * nv0,
            s * nv1 : (s + 1) * nv1,
        ] ^= dense

    d1 = np.zeros((w0_slices * nv0, n), dtype=np.uint8)
    for s in range(w0_slices):
        if s < v1_slices:
            d1[s * nv0 : (s + 1) * nv0, s * nv1 : (s + 1) * nv1] ^= dense
        for sp in (s - 1, s):
            if 0 <= sp < v0q_slices:
                rows = np.arange(nv0) + s * nv0
                cols = v1_slices * nv1 + sp * nv0 + np.arange(nv0)
                d1[rows, cols] ^= 1
    pz = BitMatrix.from_dense(d2.T)
    px = BitMatrix.from_dense(d1)
    return CssCode(pz, px)


def sandwich(v: Subcomplex, r: int) -> CssCode:
    """The tensor code (path x subcomplex) used to bridge two merges."""
    if r < 1:
        raise InvalidSpec("depth r must be at least 1")
    _require_irreducible(v)
    return _patch_code(v.boundary, r, truncated=False)


@dataclass
class MergeResult:
    """A merged code plus everything needed to interpret it."""

    merged: CssCode
    inclusion: BitMatrix
    new_qubits: list
    new_z_checks: list
    new_x_checks: list
    old_z_logicals: list = field(default_factory=list)
    old_x_logicals: list = field(default_factory=list)
    new_z_logicals: list = field(default_factory=list)
    new_x_logicals: list = field(default_factory=list)
    coequaliser: ChainMap2 | None = None
    basis: str = "Z"
    depth: int = 0


def _coequalise(codes, qubit_pairs, xcheck_pairs):
    """Quotient the direct sum of ``codes`` along (keep, drop) index pairs.

    Returns (merged code, qubit index map, x-check index map); Z-check
    labels are never glued by a Z-basis merge so their map is the identity.
    """
    pz_blocks = []
    px_blocks = []
    n_total = sum(c.n for c in codes)
    q_off = 0
    for c in codes:
        pz_pad = np.zeros((c.mz, n_total), dtype=np.uint8)
        pz_pad[:, q_off : q_off + c.n] = c.pz.to_dense()
        px_pad = np.zeros((c.mx, n_total), dtype=np.uint8)
        px_pad[:, q_off : q_off + c.n] = c.px.to_dense()
        pz_blocks.append(pz_pad)
        px_blocks.append(px_pad)
        q_off += c.n
    pz = np.concatenate(pz_blocks, axis=0) if pz_blocks else np.zeros((0, n_total), np.uint8)
    px = np.concatenate(px_blocks, axis=0) if px_blocks else np.zeros((0, n_total), np.uint8)

    for keep, drop in xcheck_pairs:
        px[keep] ^= px[drop]
    for keep, drop in qubit_pairs:
        pz[:, keep] ^= pz[:, drop]
    for keep, drop in qubit_pairs:
        px[:, keep] |= px[:, drop]

    q_drops = sorted(d for _, d in qubit_pairs)
    x_drops = sorted(d for _, d in xcheck_pairs)
    keep_q = [i for i in range(n_total) if i not in set(q_drops)]
    keep_x = [i for i in range(px.shape[0]) if i not in set(x_drops)]
    merged = CssCode(BitMatrix.from_dense(pz[:, keep_q]), BitMatrix.from_dense(px[keep_x][:, keep_q]))

    q_map = {}
    for new, old in enumerate(keep_q):
        q_map[old] = new
    for keep, drop in qubit_pairs:
        q_map[drop] = q_map[keep]
    x_map = {}
    for new, old in enumerate(keep_x):
        x_map[old] = new
    for keep, drop in xcheck_pairs:
        x_map[drop] = x_map[keep]
    return merged, q_map, x_map


def _inclusion_matrix(q_map, n_before, n_after) -> BitMatrix:
    dense = np.zeros((n_after, n_before), dtype=np.uint8)
    for old in range(n_before):
        dense[q_map[old], old] = 1
    return BitMatrix.from_dense(dense)


def _check_map_matrix(x_map, m_before, m_after) -> BitMatrix:
    dense = np.zeros((m_after, m_before), dtype=np.uint8)
    for old in range(m_before):
        dense[x_map[old], old] = 1
    return BitMatrix.from_dense(dense)


def classify_logicals(before: CssCode, result: MergeResult):
    """Split the merged code's logical classes into inherited and new ones.

    Z classes are pushed forward through the inclusion; X classes of the
    merged code are pulled back through its transpose, and combinations
    with a trivial pullback are the new ones.
    """
    merged = result.merged
    inc = result.inclusion

    old_z, new_z = [], []
    tracker = XorBasis(merged.pz.row_ints())
    for z in logical_basis(before).z_reps:
        img = inc.mul_vec(z)
        if tracker.add(img.bits):
            old_z.append(img)
    for v in kernel_basis(merged.px):
        if tracker.add(v.bits):
            new_z.append(v)

    inc_t = inc.transpose()
    before_red = SpanReducer(before.px)
    x_track = XorBasis(merged.px.row_ints())
    old_pb = {}
    old_x, new_x = [], []
    for w in kernel_basis(merged.pz):
        wb = w.bits
        if not x_track.add(wb):
            continue
        pb = before_red.reduce_bits(inc_t.mul_vec(w).bits)
        while pb:
            top = pb.bit_length() - 1
            hit = old_pb.get(top)
            if hit is None:
                break
            pb ^= hit[0]
            wb ^= hit[1]
        if pb:
            old_pb[pb.bit_length() - 1] = (pb, wb)
            old_x.append(BitVector(merged.n, wb))
        else:
            new_x.append(BitVector(merged.n, wb))
    return (old_z, old_x), (new_z, new_x)


def _finish(result: MergeResult, before: CssCode) -> MergeResult:
    (old_z, old_x), (new_z, new_x) = classify_logicals(before, result)
    result.old_z_logicals = old_z
    result.old_x_logicals = old_x
    result.new_z_logicals = new_z
    result.new_x_logicals = new_x
    return result


def _dualise_result(result: MergeResult) -> MergeResult:
    return MergeResult(
        merged=result.merged.dual(),
        inclusion=result.inclusion,
        new_qubits=result.new_qubits,
        new_z_checks=result.new_x_checks,
        new_x_checks=result.new_z_checks,
        old_z_logicals=result.old_x_logicals,
        old_x_logicals=result.old_z_logicals,
        new_z_logicals=result.new_x_logicals,
        new_x_logicals=result.new_z_logicals,
        coequaliser=ChainMap2(
            f2=result.coequaliser.f0, f1=result.coequaliser.f1, f0=result.coequaliser.f2
        ),
        basis="X",
        depth=result.depth,
    )


def direct_merge(c: CssCode, d: CssCode, u: BitVector, v: BitVector, basis: str = "Z") -> MergeResult:
    """Quotient two codes along a shared logical, with no ancilla patch.

    The logicals need not be irreducible, but their restricted matrices
    must be hypergraph-isomorphic.
    """
    if basis == "X":
        return _dualise_result(direct_merge(c.dual(), d.dual(), u, v, "Z"))
    sub_u = restricted_matrix(c, u, "Z")
    sub_v = restricted_matrix(d, v, "Z")
    span = find_monic_span(sub_u, sub_v)
    if span is None:
        raise NoSpan("restricted matrices are not hypergraph-isomorphic")
    qubit_pairs = [
        (sub_u.qubit_indices[j], c.n + sub_v.qubit_indices[span.col_perm[j]])
        for j in range(sub_u.n_qubits)
    ]
    xcheck_pairs = [
        (sub_u.check_indices[i], c.mx + sub_v.check_indices[span.row_perm[i]])
        for i in range(sub_u.n_checks)
    ]
    before = direct_sum(c, d)
    merged, q_map, x_map = _coequalise([c, d], qubit_pairs, xcheck_pairs)
    result = MergeResult(
        merged=merged,
        inclusion=_inclusion_matrix(q_map, before.n, merged.n),
        new_qubits=[],
        new_z_checks=[],
        new_x_checks=[],
        coequaliser=None,
        basis="Z",
        depth=0,
    )
    result.coequaliser = ChainMap2(
        f2=_check_map_matrix({i: i for i in range(before.mz)}, before.mz, merged.mz),
        f1=result.inclusion,
        f0=_check_map_matrix(x_map, before.mx, merged.mx),
    )
    return _finish(result, before)


def _sandwich_merge(codes, subs, r: int, truncated: bool):
    """Shared engine: glue a patch's first slice to subs[0] and, unless
    truncated, its last slice to subs[1] (possibly in another code block).

    ``subs`` entries are (code block index, subcomplex, span onto it); the
    patch is built over the first subcomplex so its span is None.
    """
    base = subs[0][1]
    nv1 = base.n_qubits
    nv0 = base.n_checks
    patch = _patch_code(base.boundary, r, truncated=truncated)
    blocks = list(codes) + [patch]
    q_off = [0]
    x_off = [0]
    z_off = [0]
    for c in blocks:
        q_off.append(q_off[-1] + c.n)
        x_off.append(x_off[-1] + c.mx)
        z_off.append(z_off[-1] + c.mz)
    w_q = q_off[-2]
    w_x = x_off[-2]
    v1_slices = r if truncated else r + 1

    def patch_qubit(slice_idx, i):
        return w_q + slice_idx * nv1 + i

    def patch_fresh_check(slice_idx, k):
        return w_x + slice_idx * nv0 + k

    qubit_pairs = []
    xcheck_pairs = []
    glue_slices = [(0, subs[0])] + ([] if truncated else [(v1_slices - 1, subs[1])])
    for slice_idx, (block, sub, span) in glue_slices:
        for j in range(nv1):
            col = j if span is None else span.col_perm[j]
            qubit_pairs.append((q_off[block] + sub.qubit_indices[col], patch_qubit(slice_idx, j)))
        for i in range(nv0):
            row = i if span is None else span.row_perm[i]
            xcheck_pairs.append(
                (x_off[block] + sub.check_indices[row], patch_fresh_check(slice_idx, i))
            )
    merged, q_map, x_map = _coequalise(blocks, qubit_pairs, xcheck_pairs)
    n_before = q_off[-2]
    new_qubits = [q_map[q] for q in range(w_q, q_off[-1]) if q not in {d for _, d in qubit_pairs}]
    new_z_checks = list(range(z_off[-2], z_off[-1]))
    new_x_checks = [x_map[x] for x in range(w_x, x_off[-1]) if x not in {d for _, d in xcheck_pairs}]
    inclusion = _inclusion_matrix({q: q_map[q] for q in range(n_before)}, n_before, merged.n)
    coeq = ChainMap2(
        f2=_check_map_matrix({i: i for i in range(z_off[-2])}, z_off[-2], merged.mz),
        f1=inclusion,
        f0=_check_map_matrix({i: x_map[i] for i in range(w_x)}, w_x, merged.mx),
    )
    return MergeResult(
        merged=merged,
        inclusion=inclusion,
        new_qubits=sorted(new_qubits),
        new_z_checks=new_z_checks,
        new_x_checks=sorted(new_x_checks),
        coequaliser=coeq,
        basis="Z",
        depth=r,
    )


def external_merge(
    c: CssCode, d: CssCode, u: BitVector, v: BitVector, basis: str = "Z", r: int = 1
) -> MergeResult:
    """Depth-r parity-measurement merge of two code blocks along matching
    irreducible logicals."""
    if r < 1:
        raise InvalidSpec("depth r must be at least 1")
    if basis == "X":
        return _dualise_result(external_merge(c.dual(), d.dual(), u, v, "Z", r))
    sub_u = restricted_matrix(c, u, "Z")
    sub_v = restricted_matrix(d, v, "Z")
    _require_irreducible(sub_u)
    _require_irreducible(sub_v)
    span = find_monic_span(sub_u, sub_v)
    if span is None:
        raise NoSpan("restricted matrices are not hypergraph-isomorphic")
    result = _sandwich_merge(
        [c, d], [(0, sub_u, None), (1, sub_v, span)], r, truncated=False
    )
    return _finish(result, direct_sum(c, d))


def internal_merge(c: CssCode, u: BitVector, v: BitVector, basis: str = "Z", r: int = 1) -> MergeResult:
    """Depth-r merge of two disjoint logicals inside one code block."""
    if r < 1:
        raise InvalidSpec("depth r must be at least 1")
    if basis == "X":
        return _dualise_result(internal_merge(c.dual(), u, v, "Z", r))
    sub_u = restricted_matrix(c, u, "Z")
    sub_v = restricted_matrix(c, v, "Z")
    if set(sub_u.qubit_indices) & set(sub_v.qubit_indices):
        raise Overlap("logicals share data qubits")
    if set(sub_u.check_indices) & set(sub_v.check_indices):
        raise Overlap("logicals share adjacent checks")
    _require_irreducible(sub_u)
    _require_irreducible(sub_v)
    span = find_monic_span(sub_u, sub_v)
    if span is None:
        raise NoSpan("restricted matrices are not hypergraph-isomorphic")
    result = _sandwich_merge([c], [(0, sub_u, None), (0, sub_v, span)], r, truncated=False)
    return _finish(result, c)


def single_qubit_measure(c: CssCode, u: BitVector, basis: str = "Z", r: int = 1) -> MergeResult:
    """Glue a truncated-path patch onto one irreducible logical, sending its
    class to the trivial class (a destructive single-logical measurement)."""
    if r < 1:
        raise InvalidSpec("depth r must be at least 1")
    if basis == "X":
        return _dualise_result(single_qubit_measure(c.dual(), u, "Z", r))
    sub_u = restricted_matrix(c, u, "Z")
    _require_irreducible(sub_u)
    result = _sandwich_merge([c], [(0, sub_u, None)], r, truncated=True)
    return _finish(result, c)
