"""The stored 9x9 matrices, checked against regeneration under the index
shift and scale they actually use. The literal comparisons live in the
acceptance suite."""

from dompoly import fixtures as fx
from dompoly.polynomial import poly


def test_files_parse_to_nine_by_nine():
    for name in (fx.D_PAIR, fx.D_PAIR_INVERSE):
        assert fx.load_matrix(name).shape == (9, 9)


def test_render_parse_round_trip():
    m = fx.generated_d_pair()
    assert fx.parse_matrix(fx.render_matrix(m)) == m


def test_stored_pair_matrix_is_unshifted_path_table():
    assert fx.load_matrix(fx.D_PAIR) == fx.path_product_table(0)


def test_generated_pair_matrix_is_shifted_path_table():
    assert fx.generated_d_pair() == fx.path_product_table(1)


def test_stored_inverse_carries_fourth_power_scale():
    stored = fx.load_matrix(fx.D_PAIR_INVERSE)
    assert fx.first_scaled_difference(fx.generated_d_pair_inverse(), fx.ENTRY_INVERSE_SCALE, stored) is None
    assert stored[8, 8] == poly(1, -1) ** 2


def test_check_reports_first_differences():
    result = dict(fx.check_fixtures())
    r, c, got, want = result[fx.D_PAIR]
    assert (r, c, got, want) == (1, 2, poly(1), poly(0, 1))
    r, c, _, _ = result[fx.D_PAIR_INVERSE]
    assert (r, c) == (1, 1)


def test_first_difference_none_on_equal():
    m = fx.generated_d_pair()
    assert fx.first_difference(m, m) is None
