"""GF(2) linear algebra: ranks, kernels, span membership, Kronecker
products, polynomial lifting."""

import random

import numpy as np
import pytest

from conftest import naive_echelon, naive_rank
from qsurg.errors import ShapeError
from qsurg.families import shor
from qsurg.gf2 import (
    BitMatrix,
    BitVector,
    RingPoly,
    hstack,
    in_span,
    kernel_basis,
    kron,
    lift,
    rank,
    rref,
    solve_rowcomb,
    vstack,
)


def rand_matrix(rng, rows, cols):
    return BitMatrix.from_rows([[rng.randint(0, 1) for _ in range(cols)] for _ in range(rows)], cols)


class TestRank:
    def test_shor_px_rank(self):
        assert rank(shor().px) == 2

    def test_zero_matrices(self):
        for r, c in [(0, 0), (3, 5), (7, 1)]:
            assert rank(BitMatrix.zeros(r, c)) == 0

    def test_against_naive_oracle(self):
        rng = random.Random(11)
        for _ in range(50):
            m = rand_matrix(rng, 20, 30)
            assert rank(m) == naive_rank(m)

    def test_rank_of_transpose(self):
        rng = random.Random(5)
        for _ in range(50):
            m = rand_matrix(rng, rng.randint(1, 10), rng.randint(1, 10))
            assert rank(m) == rank(m.transpose())


class TestKernel:
    def test_repetition_parity(self):
        m = BitMatrix.from_rows([[1, 1, 0], [1, 0, 1]])
        assert kernel_basis(m) == [BitVector.from_bits([1, 1, 1])]

    def test_path_complex_kernels(self):
        from qsurg.surgery import path_complex, truncated_path_complex

        for r in range(1, 7):
            assert kernel_basis(path_complex(r).boundary) == []
            t = truncated_path_complex(r).boundary
            assert kernel_basis(t) == []
            assert kernel_basis(t.transpose()) == []

    def test_rank_nullity(self):
        rng = random.Random(3)
        for _ in range(200):
            m = rand_matrix(rng, rng.randint(0, 8), rng.randint(1, 12))
            assert rank(m) + len(kernel_basis(m)) == m.cols

    def test_kernel_vectors_annihilate(self):
        rng = random.Random(4)
        for _ in range(100):
            m = rand_matrix(rng, rng.randint(1, 8), rng.randint(1, 12))
            for v in kernel_basis(m):
                assert m.mul_vec(v).weight() == 0


class TestInSpan:
    def test_own_rows_and_zero(self):
        rng = random.Random(9)
        m = rand_matrix(rng, 5, 8)
        for i in range(5):
            assert in_span(m.row(i), m)
        assert in_span(BitVector(8), m)

    def test_shor_all_ones_not_in_pz(self):
        assert not in_span(BitVector.from_bits([1] * 9), shor().pz)

    def test_dimension_mismatch(self):
        with pytest.raises(ShapeError):
            in_span(BitVector(5), BitMatrix.zeros(2, 4))

    def test_solve_rowcomb(self):
        rng = random.Random(13)
        for _ in range(50):
            m = rand_matrix(rng, 6, 9)
            coeffs = BitVector.from_bits([rng.randint(0, 1) for _ in range(6)])
            target = BitVector(9)
            for i in coeffs.support():
                target = target ^ m.row(i)
            sol = solve_rowcomb(m, target)
            assert sol is not None
            recon = BitVector(9)
            for i in sol.support():
                recon = recon ^ m.row(i)
            assert recon == target


class TestKron:
    def test_identity_blocks(self):
        rng = random.Random(2)
        m = rand_matrix(rng, 3, 4)
        k = kron(BitMatrix.identity(2), m)
        assert k.rows == 6 and k.cols == 8
        d = k.to_dense()
        assert (d[:3, :4] == m.to_dense()).all()
        assert (d[3:, 4:] == m.to_dense()).all()
        assert not d[:3, 4:].any() and not d[3:, :4].any()

    def test_stacked_identities(self):
        col = BitMatrix.from_rows([[1], [1]])
        k = kron(col, BitMatrix.identity(3))
        assert k == vstack([BitMatrix.identity(3), BitMatrix.identity(3)])

    def test_mixed_product_property(self):
        rng = random.Random(8)
        for _ in range(30):
            a = rand_matrix(rng, 2, 3)
            b = rand_matrix(rng, 2, 2)
            c = rand_matrix(rng, 3, 2)
            d = rand_matrix(rng, 2, 3)
            assert kron(a, b) @ kron(c, d) == kron(a @ c, b @ d)

    def test_sandwich_degree2_from_kron_pieces(self):
        # the 8x3 block (path tensor repetition) printed in the worked merge
        dv = BitMatrix.from_rows([[1, 1, 0], [1, 0, 1]])
        dp = BitMatrix.from_rows([[1], [1]])
        d2 = vstack([kron(dp, BitMatrix.identity(3)), kron(BitMatrix.identity(1), dv)])
        expected = BitMatrix.from_rows(
            [
                [1, 0, 0],
                [0, 1, 0],
                [0, 0, 1],
                [1, 0, 0],
                [0, 1, 0],
                [0, 0, 1],
                [1, 1, 0],
                [1, 0, 1],
            ]
        )
        assert d2 == expected


class TestLift:
    def test_constant_is_identity(self):
        assert lift(RingPoly.one((4,))) == BitMatrix.identity(4)

    def test_first_shift(self):
        expected = BitMatrix.from_rows([[0, 1, 0], [0, 0, 1], [1, 0, 0]])
        assert lift(RingPoly.monomial((3,), (1,))) == expected

    def test_bivariate_weight_structure(self):
        # three monomials -> exactly three ones per row and per column
        p = RingPoly((12, 6), [(3, 0), (0, 1), (0, 2)])
        m = lift(p)
        assert m.rows == m.cols == 72
        assert (m.row_weights() == 3).all()
        assert (m.col_weights() == 3).all()

    def test_ring_homomorphism_univariate(self):
        rng = random.Random(21)
        for _ in range(40):
            l = rng.randint(2, 7)
            p = RingPoly((l,), [(rng.randrange(l),) for _ in range(rng.randint(0, 3))])
            q = RingPoly((l,), [(rng.randrange(l),) for _ in range(rng.randint(0, 3))])
            assert lift(p + q) == lift(p) + lift(q)
            assert lift(p * q) == lift(p) @ lift(q)

    def test_ring_homomorphism_bivariate(self):
        rng = random.Random(22)
        for _ in range(25):
            lm = (rng.randint(2, 4), rng.randint(2, 4))
            terms = lambda: [
                (rng.randrange(lm[0]), rng.randrange(lm[1])) for _ in range(rng.randint(0, 3))
            ]
            p, q = RingPoly(lm, terms()), RingPoly(lm, terms())
            assert lift(p + q) == lift(p) + lift(q)
            assert lift(p * q) == lift(p) @ lift(q)

    def test_exponent_reduction(self):
        assert RingPoly((5,), [(7,)]) == RingPoly((5,), [(2,)])
        assert RingPoly((5,), [(3,), (3,)]).is_zero()


class TestStructure:
    def test_double_transpose(self):
        rng = random.Random(6)
        for _ in range(50):
            m = rand_matrix(rng, rng.randint(0, 7), rng.randint(0, 7))
            assert m.transpose().transpose() == m

    def test_rref_involution(self):
        rng = random.Random(7)
        for _ in range(100):
            m = rand_matrix(rng, rng.randint(1, 8), rng.randint(1, 10))
            r1, p1 = rref(m)
            r2, p2 = rref(r1)
            assert r1 == r2 and p1 == p2

    def test_rref_matches_naive(self):
        rng = random.Random(14)
        for _ in range(50):
            m = rand_matrix(rng, 6, 9)
            ours = rref(m)[0].to_dense().tolist()
            naive = naive_echelon(m.to_dense().tolist())[0]
            assert ours == naive

    def test_matmul_matches_numpy(self):
        rng = random.Random(15)
        for _ in range(50):
            a = rand_matrix(rng, rng.randint(1, 6), rng.randint(1, 6))
            b = rand_matrix(rng, a.cols, rng.randint(1, 6))
            expected = (a.to_dense().astype(int) @ b.to_dense().astype(int)) % 2
            assert (a @ b).to_dense().tolist() == expected.tolist()

    def test_hstack_vstack_roundtrip(self):
        rng = random.Random(16)
        a = rand_matrix(rng, 3, 4)
        b = rand_matrix(rng, 3, 2)
        h = hstack([a, b])
        assert h.to_dense().tolist() == np.concatenate(
            [a.to_dense(), b.to_dense()], axis=1
        ).tolist()
