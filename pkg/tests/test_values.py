import pytest

from csl.values import cubic_interval, f, f3, general_interval


@pytest.mark.parametrize("k, v", [(1, 5), (2, 5), (3, 5), (4, 10), (5, 13), (6, 15), (7, 17), (11, 25)])
def test_f(k, v):
    assert f(k) == v


@pytest.mark.parametrize("k, v", [(3, 5), (4, 10), (5, 10), (6, 15), (7, 15), (8, 19), (9, 20), (10, 23), (11, 25)])
def test_f3(k, v):
    assert f3(k) == v


def test_f_bounds_f3():
    for k in range(1, 40):
        assert k <= f3(k) <= f(k)


def test_intervals():
    assert general_interval(4) == (4, 10)
    assert general_interval(6) == (6, 15)
    assert [cubic_interval(k) for k in (5, 7, 9)] == [(5, 10), (7, 15), (9, 20)]
    with pytest.raises(ValueError):
        cubic_interval(11)
    with pytest.raises(ValueError):
        f(0)
    with pytest.raises(ValueError):
        f3(-1)
