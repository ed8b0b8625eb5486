import math
import random

import pytest

from arborcount.series import InexactDivision, NonzeroConstantTerm, PowerSeries

DICE = PowerSeries.from_coeffs([0, 1, 1, 1, 1, 1, 1], 12)


def rand_series(rng, order, zero_constant=False, lo=-9, hi=9):
    coeffs = [rng.randint(lo, hi) for _ in range(order + 1)]
    if zero_constant:
        coeffs[0] = 0
    return PowerSeries(coeffs)


def safe_exp_arg(rng, order):
    # factorial(order) * f makes every division in the exp recurrence exact
    scale = math.factorial(order)
    return PowerSeries([0] + [scale * rng.randint(-3, 3) for _ in range(order)])


def test_add():
    a = PowerSeries([1, 1, 0])
    b = PowerSeries([0, 1, 1])
    assert (a + b).coeffs == (1, 2, 1)
    zero = PowerSeries.zero(2)
    assert a + zero == a
    assert (DICE + DICE).coeffs[1:7] == (2, 2, 2, 2, 2, 2)


def test_add_truncates_to_smaller_order():
    a = PowerSeries([1, 2, 3, 4])
    b = PowerSeries([1, 1])
    assert (a + b).order == 1
    assert (a + b).coeffs == (2, 3)


def test_sub():
    a = PowerSeries([0, 1, 1, 2])
    assert (a - a).is_zero()
    x = PowerSeries.x(2)
    x2 = PowerSeries.monomial(2, 2)
    assert (x - x2).coeffs == (0, 1, -1)


def test_sub_rooted_prefix():
    # r^2 - r(x^2) for r = x + x^2 + 2x^3 + 4x^4: hand expansion gives
    # x^2 coefficient 0, x^3 coefficient 2, x^4 coefficient 2*2 + 1 - 1 = 4
    r = PowerSeries([0, 1, 1, 2, 4])
    d = r * r - r.scale_exponents(2)
    assert d.coeffs == (0, 0, 0, 2, 4)


def test_mul():
    assert (DICE * DICE)[7] == 6  # ordered dice pairs summing to 7
    one = PowerSeries.one(12)
    assert DICE * one == DICE
    x = PowerSeries.x(2)
    assert (x * x).coeffs == (0, 0, 1)
    x1 = PowerSeries.x(1)
    assert (x1 * x1).is_zero()


def test_scale_exponents():
    scaled = DICE.scale_exponents(2)
    assert scaled.coeffs == (0, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1)
    assert DICE.scale_exponents(1) == DICE
    a = PowerSeries([1, 1, 0])
    assert a.scale_exponents(3).coeffs == (1, 0, 0)
    with pytest.raises(ValueError):
        a.scale_exponents(0)


def test_exp_zero():
    assert PowerSeries.zero(5).exp() == PowerSeries.one(5)


def test_exp_rejects_constant_term():
    with pytest.raises(NonzeroConstantTerm):
        PowerSeries([1, 1]).exp()


def test_exp_of_x_is_not_integral():
    # 1/2! already fails: the caller broke exp's integrality contract
    with pytest.raises(InexactDivision):
        PowerSeries.x(4).exp()


def test_substitute_identity():
    x = PowerSeries.x(12)
    assert DICE.substitute(x) == DICE


def test_substitute_square():
    a = PowerSeries.monomial(2, 3)
    b = PowerSeries.from_coeffs([0, 1, 1], 3)
    assert a.substitute(b).coeffs == (0, 0, 1, 2)


def test_substitute_rejects_constant_term():
    with pytest.raises(NonzeroConstantTerm):
        DICE.substitute(PowerSeries.one(3))


def test_div_exact():
    assert PowerSeries([0, 2, 4]).div_exact(2).coeffs == (0, 1, 2)
    with pytest.raises(InexactDivision) as exc:
        PowerSeries([0, 1, 1]).div_exact(2)
    assert exc.value.exponent == 1


def test_mul_commutative_associative():
    rng = random.Random(7)
    for _ in range(30):
        a = rand_series(rng, 8)
        b = rand_series(rng, 8)
        c = rand_series(rng, 8)
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)


def test_exp_is_a_homomorphism():
    rng = random.Random(11)
    for _ in range(10):
        f = safe_exp_arg(rng, 6)
        g = safe_exp_arg(rng, 6)
        assert f.exp() * g.exp() == (f + g).exp()
        assert f.exp() * (-f).exp() == PowerSeries.one(6)


def test_exp_satisfies_derivative_recurrence():
    rng = random.Random(13)
    for _ in range(10):
        f = safe_exp_arg(rng, 7)
        g = f.exp()
        for n in range(f.order):
            lhs = (n + 1) * g[n + 1]
            rhs = sum((k + 1) * f[k + 1] * g[n - k] for k in range(n + 1))
            assert lhs == rhs


def test_substitute_associative():
    rng = random.Random(17)
    for _ in range(15):
        a = rand_series(rng, 7)
        b = rand_series(rng, 7, zero_constant=True)
        c = rand_series(rng, 7, zero_constant=True)
        assert a.substitute(b).substitute(c) == a.substitute(b.substitute(c))


def test_scale_exponents_distributes_over_mul():
    rng = random.Random(19)
    for _ in range(15):
        a = rand_series(rng, 9)
        b = rand_series(rng, 9)
        for k in (2, 3):
            assert (a * b).scale_exponents(k) == a.scale_exponents(
                k
            ) * b.scale_exponents(k)


def test_order_zero_series_are_legal():
    a = PowerSeries([3])
    b = PowerSeries([4])
    assert (a * b).coeffs == (12,)
    assert (a + b).coeffs == (7,)
