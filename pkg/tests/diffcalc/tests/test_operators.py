from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from catalog.entries import build_diagonal_disk, build_simplex
from diffcalc.duality import dual_pairing, gradient_pairing
from diffcalc.operators import apply_D, div_n, nabla_n
from moments.closed_form import ball_moments, simplex_moments
from polycore.choices import AxisChoices
from polycore.exceptions import ShapeError
from polycore.matrix import PolyMatrix
from polycore.polynomial import BiPoly, X, Y
from tests.polycore.tests.strategies import polynomials


class TestDifferentialOperators:
    def test_D_includes_the_binomial(self):
        assert apply_D(1, 2, X**2 * Y**2) == 8 * X * Y

    @pytest.mark.parametrize("i, n", [(-1, 2), (3, 2)])
    def test_D_index_out_of_range(self, i, n):
        with pytest.raises(IndexError):
            apply_D(i, n, X)

    def test_D_on_a_matrix(self):
        matrix = PolyMatrix([[X**2, Y], [X * Y, 1]])
        assert apply_D(0, 1, matrix) == PolyMatrix([[2 * X, 0], [Y, 0]])

    def test_nabla_stacks_blocks(self):
        stacked = nabla_n(X**2 * Y, 2)
        assert stacked.shape == (3, 1)
        assert stacked.column_entries(0) == (2 * Y, 4 * X, BiPoly.zero())

    def test_divergence_block_count(self):
        with pytest.raises(ShapeError) as err:
            div_n([PolyMatrix([[X]])], 1)
        assert err.value.code == "shape_mismatch"

    @settings(max_examples=30, deadline=None)
    @given(polynomials, polynomials)
    def test_first_divergence_is_the_usual_one(self, p, q):
        expected = p.partial(AxisChoices.X) + q.partial(AxisChoices.Y)
        assert div_n(PolyMatrix.column([p, q]), 1).entry(0, 0) == expected

    @settings(max_examples=30, deadline=None)
    @given(polynomials, st.integers(0, 3))
    def test_divergence_of_gradient(self, p, n):
        expected = sum(
            (
                comb(n, i) ** 2
                * p.partial(AxisChoices.X, 2 * (n - i)).partial(AxisChoices.Y, 2 * i)
                for i in range(n + 1)
            ),
            BiPoly.zero(),
        )
        assert div_n(nabla_n(p, n), n).entry(0, 0) == expected


class TestDuality:
    def test_order_zero_is_plain_pairing(self, disk_functional):
        block = PolyMatrix([[X, 1], [Y, X * Y]])
        assert dual_pairing(disk_functional, [block], X, 0) == disk_functional.pair(
            block.scale(X)
        )

    def test_first_order_sign(self, disk_functional):
        blocks = [PolyMatrix([[X]]), PolyMatrix([[Y]])]
        # -<u, x * 2x + y * 2y> = -2 (1/4 + 1/4)
        assert dual_pairing(disk_functional, blocks, X**2 + Y**2, 1) == [[-1]]

    @pytest.mark.parametrize("n", [0, 1, 2, 3])
    @pytest.mark.parametrize("p", [X**3 * Y, X * Y**2 - Y, X**2 + 3 * X * Y - 1])
    def test_pairs_against_gradient_terms(self, disk_functional, p, n):
        blocks = [PolyMatrix([[X, Y * Y]]), PolyMatrix([[1, X * Y]]), PolyMatrix([[Y, 0]])]
        blocks += [PolyMatrix([[X * X, Y]])] * (n + 1 - len(blocks))
        blocks = blocks[: n + 1]
        gradient = nabla_n(p, n)
        combined = blocks[0].scale(gradient.entry(0, 0))
        for i in range(1, n + 1):
            combined = combined + blocks[i].scale(gradient.entry(i, 0))
        sign = -1 if n % 2 else 1
        expected = [[sign * value for value in row] for row in disk_functional.pair(combined)]
        assert dual_pairing(disk_functional, blocks, p, n) == expected

    @pytest.mark.parametrize(
        "family, functional",
        [
            (
                build_diagonal_disk(Fraction(1, 2)),
                ball_moments(Fraction(1, 2), 6),
            ),
            (
                build_simplex(Fraction(0), Fraction(0), Fraction(0)),
                simplex_moments(0, 0, 0, 6),
            ),
            (
                build_simplex(Fraction(1), Fraction(0), Fraction(2)),
                simplex_moments(1, 0, 2, 6),
            ),
        ],
    )
    @pytest.mark.parametrize("h, k", [(0, 0), (1, 0), (0, 1), (2, 1), (1, 2), (3, 0)])
    def test_divergence_of_phi_u_is_psi_u(self, family, functional, h, k):
        form, p = family.original, BiPoly.monomial(h, k)
        blocks = [form.phi.row_block(0, 1), form.phi.row_block(1, 1)]
        expected = [[functional.pair_poly(form.d * p), functional.pair_poly(form.e * p)]]
        assert dual_pairing(functional, blocks, p, 1) == expected

    @pytest.mark.parametrize(
        "stack, density",
        [
            ([1, 0], -2 * X),
            ([X * Y**2, X * Y], -2 * X**2 * Y**2 - 2 * X * Y**2),
            ([X, 0], -2 * X**2),
        ],
    )
    def test_gaussian_gradient(self, gaussian_functional, stack, density):
        assert gradient_pairing(gaussian_functional, stack, 1) == gaussian_functional.pair_poly(
            density
        )

    def test_gaussian_second_gradient(self, gaussian_functional):
        stack = [X * X, Y, X * Y]
        density = (4 * X**2 - 2) * X * X + 8 * X * Y * Y + (4 * Y**2 - 2) * X * Y
        assert gradient_pairing(gaussian_functional, stack, 2) == gaussian_functional.pair_poly(
            density
        )

    def test_wrong_stack_length(self, disk_functional):
        with pytest.raises(ShapeError):
            gradient_pairing(disk_functional, [X], 1)
