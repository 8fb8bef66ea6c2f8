import pytest

from hpfold.errors import BudgetExceeded, InputError
from hpfold.lattice import canonical_form, square, tri_ball
from hpfold.search import SearchLimits, ball_vs_square_report, daisy_report, max_internal_edges


def test_two_by_two_square():
    result = max_internal_edges("rect2d", 4)
    assert result.max_internal_edges == 4
    assert result.unique
    assert result.witnesses == [canonical_form("rect2d", square(2))]


def test_three_by_three_square():
    result = max_internal_edges("rect2d", 9)
    assert result.max_internal_edges == 12
    assert result.unique


def test_daisy_on_seven_sites():
    result = max_internal_edges("tri", 7)
    assert result.max_internal_edges == 12
    assert result.witnesses == [canonical_form("tri", tri_ball(1))]


def test_single_site():
    result = max_internal_edges("rect3d", 1)
    assert result.max_internal_edges == 0
    assert result.sets_examined == 1


@pytest.mark.parametrize("kind,n", [("hex", 4), ("rect2d", 13), ("tri", 11), ("rect3d", 0)])
def test_out_of_range(kind, n):
    with pytest.raises(InputError):
        max_internal_edges(kind, n)


def test_budget():
    with pytest.raises(BudgetExceeded):
        max_internal_edges("rect2d", 8, limits=SearchLimits(max_nodes=3))


def test_ball_versus_square():
    report = ball_vs_square_report(3, 5)
    assert (report.ball_sites, report.ball_edges, report.square_edges) == (25, 36, 40)
    assert report.square_wins


def test_daisy_report():
    check = daisy_report(1)
    assert check.formula_edges == check.search_edges == 12
    assert check.ok


@pytest.mark.slow
def test_cube_on_eight_sites():
    result = max_internal_edges("rect3d", 8)
    assert result.max_internal_edges == 12
    assert result.unique
