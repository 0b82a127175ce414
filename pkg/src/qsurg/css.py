"""CSS codes as validated length-2 chain complexes over GF(2).

A code is a pair of parity-check matrices (pz, px) on the same qubits,
with px @ pz.T = 0. The associated chain complex has differentials
d2 = pz.T and d1 = px, so k = dim H_1 = n - rank(pz) - rank(px).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CommutationError, ShapeError
from .gf2 import BitMatrix, hstack, kron, rank, vstack


class CssCode:
    """Validated CSS code: Z checks in ``pz`` rows, X checks in ``px`` rows."""

    __slots__ = ("pz", "px")

    def __init__(self, pz: BitMatrix, px: BitMatrix):
        if pz.cols != px.cols:
            raise ShapeError(
                f"pz has {pz.cols} columns but px has {px.cols}; qubit counts differ"
            )
        if not (px @ pz.transpose()).is_zero():
            raise CommutationError("px @ pz.T is nonzero; X and Z checks do not commute")
        self.pz = pz
        self.px = px

    @property
    def n(self) -> int:
        return self.pz.cols

    @property
    def mz(self) -> int:
        return self.pz.rows

    @property
    def mx(self) -> int:
        return self.px.rows

    def dual(self) -> "CssCode":
        """Swap the roles of X and Z (work in the cochain complex)."""
        return CssCode(self.px, self.pz)

    def __eq__(self, other) -> bool:
        return isinstance(other, CssCode) and self.pz == other.pz and self.px == other.px

    def __repr__(self) -> str:
        return f"CssCode(n={self.n}, mz={self.mz}, mx={self.mx})"


def new_css(pz: BitMatrix, px: BitMatrix) -> CssCode:
    """Validate and wrap a pair of parity-check matrices."""
    return CssCode(pz, px)


def k_of(code: CssCode) -> int:
    """Number of logical qubits, by rank-nullity on the chain complex."""
    return code.n - rank(code.pz) - rank(code.px)


@dataclass
class CodeStats:
    n: int
    k: int
    w_z: int
    w_x: int
    q_z: int
    q_x: int
    omega: int
    d_z: int | None = None
    d_x: int | None = None


def stats_of(code: CssCode, with_distance: bool = False, **distance_kwargs) -> CodeStats:
    """Parameters and check weights; distances only on request (they cost).

    ``distance_kwargs`` are forwarded to :func:`qsurg.distance.distance_exact`
    or, with ``method="random_is"``, to
    :func:`qsurg.distance.distance_upper_random`.
    """
    w_z = code.pz.max_row_weight()
    w_x = code.px.max_row_weight()
    q_z = code.pz.max_col_weight()
    q_x = code.px.max_col_weight()
    k = k_of(code)
    stats = CodeStats(
        n=code.n, k=k, w_z=w_z, w_x=w_x, q_z=q_z, q_x=q_x, omega=max(w_z, w_x, q_z, q_x)
    )
    if with_distance and k > 0:
        from . import distance as _distance

        method = distance_kwargs.pop("method", "exact")
        if method == "random_is":
            stats.d_z = _distance.distance_upper_random(code, "Z", **distance_kwargs).value
            stats.d_x = _distance.distance_upper_random(code, "X", **distance_kwargs).value
        else:
            stats.d_z = _distance.distance_exact(code, "Z", **distance_kwargs).value
            stats.d_x = _distance.distance_exact(code, "X", **distance_kwargs).value
    return stats


@dataclass
class ChainMap2:
    """Components of a chain map between two length-2 complexes.

    f2 acts on Z-check labels, f1 on qubits, f0 on X-check labels.
    """

    f2: BitMatrix
    f1: BitMatrix
    f0: BitMatrix


def validate_chain_map(cm: ChainMap2, source: CssCode, target: CssCode) -> bool:
    """Check both commuting squares f1 d2 = d2 f2 and f0 d1 = d1 f1."""
    if cm.f2.cols != source.mz or cm.f2.rows != target.mz:
        raise ShapeError("f2 must map source Z checks to target Z checks")
    if cm.f1.cols != source.n or cm.f1.rows != target.n:
        raise ShapeError("f1 must map source qubits to target qubits")
    if cm.f0.cols != source.mx or cm.f0.rows != target.mx:
        raise ShapeError("f0 must map source X checks to target X checks")
    d2_s = source.pz.transpose()
    d2_t = target.pz.transpose()
    square_one = (cm.f1 @ d2_s) + (d2_t @ cm.f2)
    if not square_one.is_zero():
        return False
    square_two = (cm.f0 @ source.px) + (target.px @ cm.f1)
    return square_two.is_zero()


def tensor_code(a: BitMatrix, b: BitMatrix) -> CssCode:
    """Tensor product of two classical codes with check matrices a and b.

    Qubit blocks are ordered (checks_a x bits_b | bits_a x checks_b).
    """
    if a.rows == 0 and a.cols == 0 or b.rows == 0 and b.cols == 0:
        raise ShapeError("tensor_code requires nonempty classical codes")
    id_a1 = BitMatrix.identity(a.cols)
    id_a0 = BitMatrix.identity(a.rows)
    id_b1 = BitMatrix.identity(b.cols)
    id_b0 = BitMatrix.identity(b.rows)
    pz = hstack([kron(a.transpose(), id_b1), kron(id_a1, b.transpose())])
    px = hstack([kron(id_a0, b), kron(a, id_b0)])
    return CssCode(pz, px)


def direct_sum(c: CssCode, d: CssCode) -> CssCode:
    """Two codes running in parallel on disjoint qubits."""
    pz = vstack(
        [
            hstack([c.pz, BitMatrix.zeros(c.mz, d.n)]),
            hstack([BitMatrix.zeros(d.mz, c.n), d.pz]),
        ]
    )
    px = vstack(
        [
            hstack([c.px, BitMatrix.zeros(c.mx, d.n)]),
            hstack([BitMatrix.zeros(d.mx, c.n), d.px]),
        ]
    )
    return CssCode(pz, px)
