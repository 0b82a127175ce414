"""Dense GF(2) linear algebra on bit-packed matrices.

Matrices are stored row-major, 64 columns per word. The packing is an
internal detail: all public behaviour is value-level (entries, shapes,
equality). Everything here is immutable after construction and safe to
share between threads.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from .errors import ShapeError

_ONE = np.uint64(1)


def _n_words(cols: int) -> int:
    return max(1, (cols + 63) >> 6)


def _int_to_words(value: int, cols: int) -> np.ndarray:
    nw = _n_words(cols)
    return np.frombuffer(value.to_bytes(nw * 8, "little"), dtype=np.uint64).copy()


def _words_to_int(words: np.ndarray) -> int:
    return int.from_bytes(words.tobytes(), "little")


class BitVector:
    """A length-n vector over GF(2), backed by a Python int bitset."""

    __slots__ = ("n", "bits")

    def __init__(self, n: int, bits: int = 0):
        if n < 0:
            raise ShapeError("vector length must be non-negative")
        self.n = n
        self.bits = bits & ((1 << n) - 1) if n else 0

    @classmethod
    def from_bits(cls, entries: Iterable[int]) -> "BitVector":
        bits = 0
        n = 0
        for e in entries:
            if e & 1:
                bits |= 1 << n
            n += 1
        return cls(n, bits)

    @classmethod
    def from_support(cls, n: int, support: Iterable[int]) -> "BitVector":
        bits = 0
        for i in support:
            if not 0 <= i < n:
                raise ShapeError(f"support index {i} out of range for length {n}")
            bits |= 1 << i
        return cls(n, bits)

    def get(self, i: int) -> int:
        return (self.bits >> i) & 1

    def weight(self) -> int:
        return self.bits.bit_count()

    def support(self) -> tuple:
        return tuple(i for i in range(self.n) if (self.bits >> i) & 1)

    def dot(self, other: "BitVector") -> int:
        if self.n != other.n:
            raise ShapeError("dot product of vectors with different lengths")
        return (self.bits & other.bits).bit_count() & 1

    def to_list(self) -> list:
        return [(self.bits >> i) & 1 for i in range(self.n)]

    def __xor__(self, other: "BitVector") -> "BitVector":
        if self.n != other.n:
            raise ShapeError("xor of vectors with different lengths")
        return BitVector(self.n, self.bits ^ other.bits)

    def __and__(self, other: "BitVector") -> "BitVector":
        if self.n != other.n:
            raise ShapeError("and of vectors with different lengths")
        return BitVector(self.n, self.bits & other.bits)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, BitVector) and self.n == other.n and self.bits == other.bits
        )

    def __hash__(self):
        return hash((self.n, self.bits))

    def __len__(self) -> int:
        return self.n

    def __repr__(self) -> str:
        return "".join(str((self.bits >> i) & 1) for i in range(self.n))


class BitMatrix:
    """A rows x cols matrix over GF(2) with packed row storage."""

    __slots__ = ("rows", "cols", "words")

    def __init__(self, rows: int, cols: int, words: np.ndarray | None = None):
        if rows < 0 or cols < 0:
            raise ShapeError("matrix dimensions must be non-negative")
        self.rows = rows
        self.cols = cols
        if words is None:
            words = np.zeros((rows, _n_words(cols)), dtype=np.uint64)
        self.words = words

    # -- constructors -------------------------------------------------

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "BitMatrix":
        return cls(rows, cols)

    @classmethod
    def identity(cls, n: int) -> "BitMatrix":
        m = cls(n, n)
        for i in range(n):
            m.words[i, i >> 6] = _ONE << np.uint64(i & 63)
        return m

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> "BitMatrix":
        rows = list(rows)
        if cols is None:
            cols = len(rows[0]) if rows else 0
        m = cls(len(rows), cols)
        for i, r in enumerate(rows):
            if len(r) != cols:
                raise ShapeError("ragged row lengths")
            bits = 0
            for j, e in enumerate(r):
                if e & 1:
                    bits |= 1 << j
            m.words[i] = _int_to_words(bits, cols)
        return m

    @classmethod
    def from_dense(cls, arr) -> "BitMatrix":
        arr = np.asarray(arr, dtype=np.uint8) & 1
        if arr.ndim != 2:
            raise ShapeError("expected a 2-d array")
        return cls.from_row_ints(
            [_words_to_int(np.packbits(row, bitorder="little").view(np.uint8)) for row in arr]
            if arr.shape[1]
            else [0] * arr.shape[0],
            arr.shape[1],
        )

    @classmethod
    def from_row_ints(cls, row_bits: Sequence[int], cols: int) -> "BitMatrix":
        m = cls(len(row_bits), cols)
        mask = (1 << cols) - 1 if cols else 0
        for i, bits in enumerate(row_bits):
            m.words[i] = _int_to_words(bits & mask, cols)
        return m

    @classmethod
    def from_bitvectors(cls, vectors: Sequence[BitVector], cols: int | None = None) -> "BitMatrix":
        if cols is None:
            if not vectors:
                raise ShapeError("cannot infer width of an empty stack")
            cols = vectors[0].n
        for v in vectors:
            if v.n != cols:
                raise ShapeError("stacked vectors must share a length")
        return cls.from_row_ints([v.bits for v in vectors], cols)

    # -- element access ------------------------------------------------

    def get(self, i: int, j: int) -> int:
        return int((self.words[i, j >> 6] >> np.uint64(j & 63)) & _ONE)

    def row_int(self, i: int) -> int:
        return _words_to_int(self.words[i])

    def row(self, i: int) -> BitVector:
        return BitVector(self.cols, self.row_int(i))

    def row_ints(self) -> list:
        return [self.row_int(i) for i in range(self.rows)]

    def col_ints(self) -> list:
        """Columns as bitsets over the row index."""
        return self.transpose().row_ints()

    def to_dense(self) -> np.ndarray:
        out = np.zeros((self.rows, self.cols), dtype=np.uint8)
        if self.cols:
            raw = np.unpackbits(self.words.view(np.uint8), axis=1, bitorder="little")
            out[:, :] = raw[:, : self.cols]
        return out

    # -- structure -----------------------------------------------------

    def copy(self) -> "BitMatrix":
        return BitMatrix(self.rows, self.cols, self.words.copy())

    def transpose(self) -> "BitMatrix":
        out = BitMatrix(self.cols, self.rows)
        if self.rows and self.cols:
            dense = self.to_dense().T
            packed = np.packbits(dense, axis=1, bitorder="little")
            pad = out.words.view(np.uint8)
            pad[:, : packed.shape[1]] = packed
        return out

    def submatrix(self, row_idx: Sequence[int] | None, col_idx: Sequence[int] | None) -> "BitMatrix":
        dense = self.to_dense()
        if row_idx is not None:
            dense = dense[list(row_idx), :]
        if col_idx is not None:
            dense = dense[:, list(col_idx)]
        return BitMatrix.from_dense(dense)

    def row_weights(self) -> np.ndarray:
        if self.rows == 0:
            return np.zeros(0, dtype=np.int64)
        return np.bitwise_count(self.words).sum(axis=1).astype(np.int64)

    def col_weights(self) -> np.ndarray:
        if self.cols == 0:
            return np.zeros(0, dtype=np.int64)
        return self.to_dense().sum(axis=0, dtype=np.int64)

    def max_row_weight(self) -> int:
        w = self.row_weights()
        return int(w.max()) if w.size else 0

    def max_col_weight(self) -> int:
        w = self.col_weights()
        return int(w.max()) if w.size else 0

    def is_zero(self) -> bool:
        return not self.words.any()

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other: "BitMatrix") -> "BitMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ShapeError("sum of matrices with different shapes")
        return BitMatrix(self.rows, self.cols, self.words ^ other.words)

    def __matmul__(self, other: "BitMatrix") -> "BitMatrix":
        if self.cols != other.rows:
            raise ShapeError(
                f"product shape mismatch: {self.rows}x{self.cols} @ {other.rows}x{other.cols}"
            )
        bt = other.transpose()
        out = BitMatrix(self.rows, other.cols)
        if self.rows and other.cols and self.cols:
            for i in range(self.rows):
                parities = (np.bitwise_count(bt.words & self.words[i]).sum(axis=1) & 1).astype(
                    np.uint8
                )
                packed = np.packbits(parities, bitorder="little")
                row = out.words[i].view(np.uint8)
                row[: packed.size] = packed
        return out

    def mul_vec(self, v: BitVector) -> BitVector:
        """Matrix-vector product over GF(2)."""
        if v.n != self.cols:
            raise ShapeError("vector length does not match column count")
        vw = _int_to_words(v.bits, self.cols)
        parities = np.bitwise_count(self.words & vw).sum(axis=1) & 1
        bits = 0
        for i in np.nonzero(parities)[0]:
            bits |= 1 << int(i)
        return BitVector(self.rows, bits)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, BitMatrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and bool(np.array_equal(self.words, other.words))
        )

    def __hash__(self):
        return hash((self.rows, self.cols, self.words.tobytes()))

    def __repr__(self) -> str:
        if self.rows * self.cols > 4096:
            return f"BitMatrix({self.rows}x{self.cols})"
        return "\n".join("".join(str(self.get(i, j)) for j in range(self.cols)) for i in range(self.rows))


def hstack(blocks: Sequence[BitMatrix]) -> BitMatrix:
    blocks = [b for b in blocks]
    if not blocks:
        raise ShapeError("hstack of no blocks")
    rows = blocks[0].rows
    if any(b.rows != rows for b in blocks):
        raise ShapeError("hstack blocks must share a row count")
    cols = sum(b.cols for b in blocks)
    out = BitMatrix(rows, cols)
    if rows:
        row_ints = [0] * rows
        shift = 0
        for b in blocks:
            for i in range(rows):
                row_ints[i] |= b.row_int(i) << shift
            shift += b.cols
        for i in range(rows):
            out.words[i] = _int_to_words(row_ints[i], cols)
    return out


def vstack(blocks: Sequence[BitMatrix]) -> BitMatrix:
    blocks = [b for b in blocks]
    if not blocks:
        raise ShapeError("vstack of no blocks")
    cols = blocks[0].cols
    if any(b.cols != cols for b in blocks):
        raise ShapeError("vstack blocks must share a column count")
    ints = []
    for b in blocks:
        ints.extend(b.row_ints())
    return BitMatrix.from_row_ints(ints, cols)


def kron(a: BitMatrix, b: BitMatrix) -> BitMatrix:
    """Kronecker product over GF(2)."""
    dense = np.kron(a.to_dense(), b.to_dense()) & 1
    if dense.size == 0:
        return BitMatrix(a.rows * b.rows, a.cols * b.cols)
    return BitMatrix.from_dense(dense)


# -- elimination ------------------------------------------------------


def _eliminate(words: np.ndarray, cols: int, col_order=None, full: bool = True):
    """In-place Gaussian elimination; returns the pivot column list.

    Columns are processed in ``col_order`` (default left-to-right) and the
    pivot for each column is the first remaining nonzero row, which keeps
    every derived basis deterministic.
    """
    m = words.shape[0]
    r = 0
    pivots = []
    if m == 0 or cols == 0:
        return pivots
    order = range(cols) if col_order is None else col_order
    for c in order:
        w = c >> 6
        bit = np.uint64(c & 63)
        colbits = (words[:, w] >> bit) & _ONE
        nz = np.nonzero(colbits)[0]
        if full:
            targets = nz[nz >= r]
        else:
            targets = nz[nz >= r]
        if targets.size == 0:
            continue
        p = int(targets[0])
        if p != r:
            tmp = words[r].copy()
            words[r] = words[p]
            words[p] = tmp
        if full:
            elim = nz[nz != p]
            elim = np.where(elim == r, p, elim)
        else:
            elim = targets[targets != p]
            elim = np.where(elim == r, p, elim)
        if elim.size:
            words[elim] ^= words[r]
        pivots.append(c)
        r += 1
        if r == m:
            break
    return pivots


def rref(m: BitMatrix):
    """Reduced row echelon form. Returns (matrix, pivot column tuple)."""
    words = m.words.copy()
    pivots = _eliminate(words, m.cols)
    return BitMatrix(m.rows, m.cols, words), tuple(pivots)


def rank(m: BitMatrix) -> int:
    """Dimension of the row space."""
    words = m.words.copy()
    return len(_eliminate(words, m.cols, full=False))


def kernel_basis(m: BitMatrix) -> list:
    """Basis of the right kernel in the standard free-column form.

    Deterministic: RREF is taken with columns left-to-right, and one basis
    vector is emitted per free column, in column order.
    """
    r, pivots = rref(m)
    pivot_set = set(pivots)
    free = [c for c in range(m.cols) if c not in pivot_set]
    basis = []
    for f in free:
        bits = 1 << f
        for i, pc in enumerate(pivots):
            if r.get(i, f):
                bits |= 1 << pc
        basis.append(BitVector(m.cols, bits))
    return basis


class SpanReducer:
    """Reduction of vectors against a fixed row space, for repeated queries."""

    __slots__ = ("cols", "pivot_rows", "_rank")

    def __init__(self, m: BitMatrix):
        self.cols = m.cols
        r, pivots = rref(m)
        self.pivot_rows = [(c, r.row_int(i)) for i, c in enumerate(pivots)]
        self._rank = len(pivots)

    @property
    def rank(self) -> int:
        return self._rank

    def reduce_bits(self, bits: int) -> int:
        for c, row in self.pivot_rows:
            if (bits >> c) & 1:
                bits ^= row
        return bits

    def contains_bits(self, bits: int) -> bool:
        return self.reduce_bits(bits) == 0

    def contains(self, v: BitVector) -> bool:
        if v.n != self.cols:
            raise ShapeError("vector length does not match span width")
        return self.contains_bits(v.bits)


def in_span(v: BitVector, m: BitMatrix) -> bool:
    """True iff v is a GF(2) combination of the rows of m."""
    if v.n != m.cols:
        raise ShapeError(f"vector length {v.n} does not match {m.cols} columns")
    return SpanReducer(m).contains_bits(v.bits)


class XorBasis:
    """Incrementally grown row space, pivoted on highest set bits."""

    __slots__ = ("pivots",)

    def __init__(self, rows: Iterable[int] = ()):
        self.pivots = {}
        for r in rows:
            self.add(r)

    def reduce(self, bits: int) -> int:
        while bits:
            top = bits.bit_length() - 1
            row = self.pivots.get(top)
            if row is None:
                return bits
            bits ^= row
        return 0

    def contains(self, bits: int) -> bool:
        return self.reduce(bits) == 0

    def add(self, bits: int) -> bool:
        """Insert a vector; returns True when it enlarged the span."""
        bits = self.reduce(bits)
        if bits == 0:
            return False
        self.pivots[bits.bit_length() - 1] = bits
        return True

    @property
    def rank(self) -> int:
        return len(self.pivots)


def solve_rowcomb(m: BitMatrix, v: BitVector):
    """Coefficients x with x @ m = v, or None when v is outside the row space."""
    if v.n != m.cols:
        raise ShapeError("target length does not match column count")
    # Augment each row with its coefficient-tracking tail and reduce v.
    tail = 1 << m.cols
    rows = [m.row_int(i) | (tail << i) for i in range(m.rows)]
    width = m.cols + m.rows
    words = BitMatrix.from_row_ints(rows, width).words
    pivots = _eliminate(words, m.cols)
    reduced = BitMatrix(m.rows, width, words)
    bits = v.bits
    coeff = 0
    for i, c in enumerate(pivots):
        if (bits >> c) & 1:
            full = reduced.row_int(i)
            bits ^= full & (tail - 1)
            coeff ^= full >> m.cols
    if bits:
        return None
    return BitVector(m.rows, coeff)


# -- polynomial ring --------------------------------------------------


class RingPoly:
    """Element of F2[x]/(x^l - 1) or F2[x,y]/(x^l - 1, y^m - 1).

    Terms are exponent tuples, reduced eagerly modulo the ring sizes, with
    GF(2) coefficients (duplicate terms cancel).
    """

    __slots__ = ("moduli", "terms")

    def __init__(self, moduli, terms=()):
        moduli = tuple(int(m) for m in moduli)
        if len(moduli) not in (1, 2) or any(m < 1 for m in moduli):
            raise ShapeError("moduli must be (l,) or (l, m) with positive entries")
        self.moduli = moduli
        reduced = set()
        for t in terms:
            t = tuple(int(e) % mod for e, mod in zip(t, moduli))
            if len(t) != len(moduli):
                raise ShapeError("term arity does not match the ring")
            if t in reduced:
                reduced.discard(t)
            else:
                reduced.add(t)
        self.terms = frozenset(reduced)

    @property
    def variables(self) -> int:
        return len(self.moduli)

    @classmethod
    def zero(cls, moduli) -> "RingPoly":
        return cls(moduli)

    @classmethod
    def one(cls, moduli) -> "RingPoly":
        return cls(moduli, [(0,) * len(tuple(moduli))])

    @classmethod
    def monomial(cls, moduli, exponents) -> "RingPoly":
        return cls(moduli, [tuple(exponents)])

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "RingPoly") -> "RingPoly":
        if self.moduli != other.moduli:
            raise ShapeError("sum of polynomials from different rings")
        return RingPoly(self.moduli, self.terms ^ other.terms)

    def __mul__(self, other: "RingPoly") -> "RingPoly":
        if self.moduli != other.moduli:
            raise ShapeError("product of polynomials from different rings")
        acc = set()
        for a in self.terms:
            for b in other.terms:
                t = tuple((x + y) % m for x, y, m in zip(a, b, self.moduli))
                if t in acc:
                    acc.discard(t)
                else:
                    acc.add(t)
        return RingPoly(self.moduli, acc)

    def reciprocal(self) -> "RingPoly":
        """Substitute each variable by its inverse; lift of the transpose."""
        return RingPoly(self.moduli, [tuple(-e % m for e, m in zip(t, self.moduli)) for t in self.terms])

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, RingPoly)
            and self.moduli == other.moduli
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.moduli, self.terms))

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        names = "xy"
        parts = []
        for t in sorted(self.terms):
            factors = [
                names[i] if e == 1 else f"{names[i]}^{e}" for i, e in enumerate(t) if e
            ]
            parts.append("*".join(factors) if factors else "1")
        return " + ".join(parts)


def _shift_matrix(size: int, power: int) -> np.ndarray:
    s = np.zeros((size, size), dtype=np.uint8)
    for i in range(size):
        s[i, (i + power) % size] = 1
    return s


def lift(p: RingPoly) -> BitMatrix:
    """Expand a ring element to its dense GF(2) circulant block.

    Univariate terms map to powers of the right cyclic shift; bivariate
    terms map to Kronecker products shift_l^i (x) shift_m^j.
    """
    if p.variables == 1:
        (l,) = p.moduli
        acc = np.zeros((l, l), dtype=np.uint8)
        for (e,) in p.terms:
            acc ^= _shift_matrix(l, e)
        return BitMatrix.from_dense(acc)
    l, m = p.moduli
    acc = np.zeros((l * m, l * m), dtype=np.uint8)
    for (a, b) in p.terms:
        acc ^= np.kron(_shift_matrix(l, a), _shift_matrix(m, b))
    return BitMatrix.from_dense(acc)


def lift_ring_matrix(entries) -> BitMatrix:
    """Lift a matrix of RingPoly entries block-wise to one GF(2) matrix."""
    rows = [hstack([lift(p) for p in row]) for row in entries]
    return vstack(rows)
