"""CSS code validation, parameters, chain maps, and tensor codes."""

import random

import pytest

from conftest import naive_rank, random_classical, random_css
from qsurg.css import (
    ChainMap2,
    CssCode,
    direct_sum,
    k_of,
    new_css,
    stats_of,
    tensor_code,
    validate_chain_map,
)
from qsurg.errors import CommutationError, ShapeError
from qsurg.families import gross, hamming_matrix, lcs, shor, steane, toric
from qsurg.gf2 import BitMatrix


class TestNewCss:
    def test_shor_valid(self):
        code = shor()
        assert code.n == 9 and code.mz == 6 and code.mx == 2

    def test_zero_checks(self):
        code = new_css(BitMatrix.zeros(0, 4), BitMatrix.zeros(0, 4))
        assert code.n == 4 and k_of(code) == 4

    def test_commutation_error(self):
        # Shor X checks against Steane Z checks (padded to nine qubits)
        # anticommute: the product has a nonzero entry
        from qsurg.gf2 import hstack

        padded = hstack([hamming_matrix(), BitMatrix.zeros(3, 2)])
        assert not (shor().px @ padded.transpose()).is_zero()
        with pytest.raises(CommutationError):
            new_css(padded, shor().px)

    def test_column_mismatch(self):
        with pytest.raises(ShapeError):
            new_css(BitMatrix.zeros(1, 3), BitMatrix.zeros(1, 4))


class TestK:
    def test_shor(self):
        assert k_of(shor()) == 1

    def test_toric(self):
        assert k_of(toric(3, 3)) == 2

    def test_gross(self):
        assert k_of(gross()) == 12


class TestStats:
    def test_gross_weights(self):
        s = stats_of(gross())
        assert (s.w_z, s.w_x, s.q_z, s.q_x) == (6, 6, 3, 3)
        assert s.omega == 6

    def test_zero_check_code(self):
        s = stats_of(new_css(BitMatrix.zeros(0, 4), BitMatrix.zeros(0, 4)))
        assert s.omega == 0 and s.k == 4

    def test_lcs_weights_within_family_bound(self):
        # the family is 6-limited; this member's max weight is 5
        s = stats_of(lcs(1, 3))
        assert s.omega == 5
        assert s.omega <= 6
        assert stats_of(lcs(3, 6)).omega == 6

    def test_distance_fields_optional(self):
        s = stats_of(shor())
        assert s.d_z is None and s.d_x is None
        s = stats_of(shor(), with_distance=True)
        assert (s.d_z, s.d_x) == (3, 3)


class TestChainMap:
    def test_zero_map_valid(self):
        c, d = shor(), steane()
        cm = ChainMap2(
            f2=BitMatrix.zeros(d.mz, c.mz),
            f1=BitMatrix.zeros(d.n, c.n),
            f0=BitMatrix.zeros(d.mx, c.mx),
        )
        assert validate_chain_map(cm, c, d)

    def test_identity_map_valid(self):
        c = shor()
        cm = ChainMap2(
            f2=BitMatrix.identity(c.mz), f1=BitMatrix.identity(c.n), f0=BitMatrix.identity(c.mx)
        )
        assert validate_chain_map(cm, c, c)

    def test_perturbed_bit_breaks_square(self):
        # flip one f1 bit on a qubit inside a check's support
        c = shor()
        f1 = BitMatrix.identity(c.n).to_dense()
        f1[1, 0] ^= 1  # qubit 0 is in Z-check supports
        cm = ChainMap2(
            f2=BitMatrix.identity(c.mz),
            f1=BitMatrix.from_dense(f1),
            f0=BitMatrix.identity(c.mx),
        )
        assert not validate_chain_map(cm, c, c)

    def test_shape_errors(self):
        c = shor()
        cm = ChainMap2(
            f2=BitMatrix.zeros(1, 1), f1=BitMatrix.identity(c.n), f0=BitMatrix.identity(c.mx)
        )
        with pytest.raises(ShapeError):
            validate_chain_map(cm, c, c)


class TestTensorCode:
    def test_toric_from_cycles(self):
        code = toric(3, 3)
        assert code.n == 18 and k_of(code) == 2

    def test_surface_patch(self):
        from qsurg.families import surface

        code = surface(3)
        assert code.n == 13 and k_of(code) == 1
        assert code.mz == 6 and code.mx == 6

    def test_single_entry(self):
        one = BitMatrix.from_rows([[1]])
        code = tensor_code(one, one)
        assert code.n == 2 and k_of(code) == 0

    def test_kunneth_law(self):
        rng = random.Random(42)
        for _ in range(200):
            a = random_classical(rng)
            b = random_classical(rng)
            code = tensor_code(a, b)
            k_a = a.cols - naive_rank(a)
            k_at = a.rows - naive_rank(a)
            k_b = b.cols - naive_rank(b)
            k_bt = b.rows - naive_rank(b)
            assert k_of(code) == k_at * k_b + k_a * k_bt

    def test_direct_sum_additivity(self):
        rng = random.Random(43)
        for _ in range(60):
            c = random_css(rng)
            d = random_css(rng)
            s = direct_sum(c, d)
            assert k_of(s) == k_of(c) + k_of(d)
            sc, sd, ss = stats_of(c), stats_of(d), stats_of(s)
            assert ss.w_z == max(sc.w_z, sd.w_z)
            assert ss.w_x == max(sc.w_x, sd.w_x)
            assert ss.q_z == max(sc.q_z, sd.q_z)
            assert ss.q_x == max(sc.q_x, sd.q_x)

    def test_commutation_reasserted(self):
        rng = random.Random(44)
        for _ in range(100):
            code = random_css(rng)
            assert (code.px @ code.pz.transpose()).is_zero()
