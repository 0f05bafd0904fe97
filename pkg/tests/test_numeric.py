import gmpy2
import numpy as np
import pytest

from bondtools.numeric import (BoundaryError, IntervalReal, ceil_log, ceil_power, ceil_sqrt_expr, floor_real_bound,
                               floor_sqrt_expr, power_at_least, power_greater, rational, refine)


@pytest.mark.parametrize("base, num, den, expected", [
    (1, 7, 10, 1), (6, 7, 10, 4), (0, 7, 10, 0), (2, 3, 5, 2), (6, 3, 5, 3), (32, 1, 5, 2), (33, 1, 5, 3),
])
def test_ceil_power(base, num, den, expected):
    assert ceil_power(base, num, den) == expected


def test_ceil_power_rejects_bad_exponents():
    with pytest.raises(ValueError):
        ceil_power(4, 3, 2)
    with pytest.raises(ValueError):
        ceil_power(4, 2, 4)


def test_ceil_power_against_floats():
    for base in range(1, 200):
        value = base ** 0.7
        if abs(value - round(value)) > 1e-9:
            assert ceil_power(base, 7, 10) == int(np.ceil(value))


@pytest.mark.parametrize("c0, c1, c2, expected", [(3, 49, 2, 5), (3, 9, 2, 3), (3, 225, 2, 9), (3, 17, 2, 4),
                                                  (2, 8, 1, 5), (2, 4, 1, 4)])
def test_ceil_sqrt_expr(c0, c1, c2, expected):
    assert ceil_sqrt_expr(c0, c1, c2) == expected


@pytest.mark.parametrize("c0, c1, c2, expected", [(3, 49, 2, 5), (3, 25, 2, 4), (5, 49, 2, 6), (3, 73, 2, 5)])
def test_floor_sqrt_expr(c0, c1, c2, expected):
    assert floor_sqrt_expr(c0, c1, c2) == expected


def test_sqrt_exprs_against_floats():
    for c1 in range(0, 3000):
        for c0, c2 in ((3, 2), (5, 2), (2, 1)):
            value = (c0 + np.sqrt(c1)) / c2
            if abs(value - round(value)) > 1e-9:
                assert ceil_sqrt_expr(c0, c1, c2) == int(np.ceil(value))
                assert floor_sqrt_expr(c0, c1, c2) == int(np.floor(value))


def test_power_comparisons():
    assert power_at_least(32, 4, 5, 2)
    assert not power_at_least(31, 4, 5, 2)
    assert power_at_least(9, 3, 19, 10)
    assert not power_at_least(8, 3, 19, 10)
    assert power_greater(5, 2, 2, 1)
    assert not power_greater(4, 2, 2, 1)


@pytest.mark.parametrize("x, power, expected", [(1, 1, 0), (1, 2, 0), (3, 1, 2), (10, 2, 6), (12, 2, 7), (5, 1, 2),
                                                (2, 1, 1), (2, 2, 1)])
def test_ceil_log(x, power, expected):
    assert ceil_log(x, power) == expected


@pytest.mark.parametrize("shape, genus, expected", [
    ("constant_orientable", 2, 15), ("constant_orientable", 7, 30), ("constant_orientable", 15, 46),
    ("constant_nonorientable", 3, 13), ("constant_nonorientable", 8, 22), ("constant_nonorientable", 16, 33),
    ("triangle_free_orientable", 2, 9), ("triangle_free_nonorientable", 4, 9),
])
def test_floor_real_bound(shape, genus, expected):
    assert floor_real_bound(shape, genus) == expected


def test_floor_real_bound_unknown_shape():
    with pytest.raises(ValueError):
        floor_real_bound("cubic", 2)


def test_interval_contains_rational_results():
    rng = np.random.default_rng(3)
    for _ in range(200):
        a = rational(int(rng.integers(-1000, 1000)), int(rng.integers(1, 100)))
        b = rational(int(rng.integers(1, 1000)), int(rng.integers(1, 100)))
        x, y = IntervalReal.exact(a), IntervalReal.exact(b)
        assert a + b in x + y
        assert a - b in x - y
        assert a * b in x * y
        assert a / b in x / y


def test_negation_keeps_the_enclosure():
    q = rational(869, 58)
    x = IntervalReal.exact(q)
    assert q in x
    assert -q in -x
    assert 3 - q in 3 - x
    assert -x.upper == (-x).lower
    assert x.width() < rational(1, 2 ** 100)
    assert (3 - x).width() < rational(1, 2 ** 100)


def test_interval_narrows_with_precision():
    q = rational(869, 58)
    coarse = 3 - IntervalReal.exact(q, 64)
    fine = 3 - IntervalReal.exact(q, 512)
    assert 3 - q in coarse and 3 - q in fine
    assert fine.width() < coarse.width()


def test_interval_sqrt_and_log_enclose():
    root = IntervalReal.exact(2).sqrt()
    assert gmpy2.mpq(root.lower) ** 2 <= 2 <= gmpy2.mpq(root.upper) ** 2
    ln = IntervalReal.exact(3).log()
    assert ln.floor() == 1 and ln.ceil() == 2


def test_refine_gives_up_on_integers():
    with pytest.raises(BoundaryError):
        refine(lambda prec: IntervalReal(gmpy2.mpfr(1.5), gmpy2.mpfr(2.5), prec), max_precision=256)


def test_rational_is_exact():
    assert rational(2, 4) == rational(1, 2)
    assert rational(1, 3) * 3 == 1
    with pytest.raises(ZeroDivisionError):
        rational(1, 0)
