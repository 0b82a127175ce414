"""Family constructors and the polynomial grammar."""

import pytest

from qsurg.css import k_of, stats_of
from qsurg.errors import InvalidSpec, ParseError
from qsurg.families import (
    FamilySpec,
    bb,
    build,
    gb,
    gross,
    hamming_matrix,
    hypergraph_product,
    lcs,
    lcs_fixture_15_3_3,
    parse_poly,
    qrm15,
    repetition,
    rotated_surface,
    shor,
    steane,
    surface,
    toric,
)
from qsurg.gf2 import BitMatrix, RingPoly


GB_A = "1+x+x^14+x^16+x^22"
GB_B = "1+x^3+x^13+x^20+x^42"


class TestFixtures:
    def test_shor_matrices_exact(self):
        code = shor()
        assert code.px == BitMatrix.from_rows(
            [[1, 1, 1, 1, 1, 1, 0, 0, 0], [1, 1, 1, 0, 0, 0, 1, 1, 1]]
        )
        assert code.pz == BitMatrix.from_rows(
            [
                [1, 1, 0, 0, 0, 0, 0, 0, 0],
                [1, 0, 1, 0, 0, 0, 0, 0, 0],
                [0, 0, 0, 1, 1, 0, 0, 0, 0],
                [0, 0, 0, 1, 0, 1, 0, 0, 0],
                [0, 0, 0, 0, 0, 0, 1, 1, 0],
                [0, 0, 0, 0, 0, 0, 1, 0, 1],
            ]
        )
        assert (code.n, k_of(code)) == (9, 1)

    def test_steane_is_hamming_both_ways(self):
        code = steane()
        assert code.pz == hamming_matrix() and code.px == hamming_matrix()
        assert (code.n, k_of(code)) == (7, 1)

    def test_parameters(self):
        for code, n, k in [
            (repetition(3), 3, 1),
            (qrm15(), 15, 1),
            (surface(3), 13, 1),
            (rotated_surface(3), 9, 1),
            (toric(3, 3), 18, 2),
            (lcs(1, 3), 15, 3),
            (lcs(3, 6), 150, 6),
            (lcs_fixture_15_3_3(), 15, 3),
            (gb(63, GB_A, GB_B), 126, 28),
            (gross(), 144, 12),
        ]:
            assert (code.n, k_of(code)) == (n, k)

    def test_gross_equals_bb(self):
        assert gross() == bb(12, 6, "x^3+y+y^2", "y^3+x+x^2")

    def test_lcs_parameter_law(self):
        for big_l in (1, 2, 3):
            for ell in (2, 3, 4):
                code = lcs(big_l, ell)
                assert code.n == ((big_l + 1) ** 2 + big_l**2) * ell
                assert k_of(code) == ell

    def test_qrm15_distances(self):
        from qsurg.distance import distance_exact

        code = qrm15()
        assert distance_exact(code, "Z").value == 3
        assert distance_exact(code, "X").value == 7

    def test_hypergraph_product(self):
        # two repetition-style seeds give a toric-like product
        h = BitMatrix.from_rows([[1, 1, 0], [0, 1, 1], [1, 0, 1]])
        code = hypergraph_product(h, h)
        assert code.n == 18 and k_of(code) == 2


class TestValidation:
    def test_invalid_lcs(self):
        with pytest.raises(InvalidSpec):
            lcs(0, 3)

    def test_invalid_rotated(self):
        with pytest.raises(InvalidSpec):
            rotated_surface(4)

    def test_unknown_family(self):
        with pytest.raises(InvalidSpec):
            build(FamilySpec("nonsense"))

    def test_missing_param(self):
        with pytest.raises(InvalidSpec):
            build(FamilySpec("lcs", {"L": 1}))

    def test_build_dispatch(self):
        assert build(FamilySpec("gross")) == gross()
        assert build(FamilySpec("toric", {"a": 3, "b": 3})) == toric(3, 3)
        assert build(FamilySpec("gb", {"l": 63, "a": GB_A, "b": GB_B})) == gb(63, GB_A, GB_B)


class TestParsePoly:
    def test_gross_polynomial(self):
        p = parse_poly("x^3 + y + y^2", (12, 6))
        assert p.terms == frozenset({(3, 0), (0, 1), (0, 2)})

    def test_constant(self):
        assert parse_poly("1", (5,)) == RingPoly.one((5,))

    def test_exponent_wraps(self):
        assert parse_poly("x^63", (63,)) == RingPoly.one((63,))

    def test_whitespace_insensitive(self):
        assert parse_poly(" x^2+ 1 ", (7,)) == parse_poly("1+x^2", (7,))

    def test_errors_carry_position(self):
        with pytest.raises(ParseError) as err:
            parse_poly("x^", (5,))
        assert err.value.position == 2
        with pytest.raises(ParseError):
            parse_poly("x + + 1", (5,))
        with pytest.raises(ParseError):
            parse_poly("y", (5,))
        with pytest.raises(ParseError):
            parse_poly("z + 1", (5, 5))
        with pytest.raises(ParseError):
            parse_poly("", (5,))
