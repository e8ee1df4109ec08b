from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from zpspec.errors import NotInvertibleError, NotPrimeError, PrecisionError, PrimeMismatchError, ZpError
from zpspec.padic import (
    INF,
    PadicInt,
    PadicNum,
    abs_p,
    check_prime,
    embed,
    embed_int,
    is_prime,
    render_sequence,
    vp,
    vp_int,
    vp_rat,
)

primes = st.sampled_from([2, 3, 5, 7, 11, 13])


def test_is_prime_small_and_large():
    assert [n for n in range(30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert is_prime(2**61 - 1)
    assert not is_prime(2**61 + 1)
    assert not is_prime(561)  # Carmichael


def test_check_prime_rejects_composites():
    with pytest.raises(NotPrimeError):
        check_prime(9)
    assert check_prime(7) == 7


def test_valuations():
    assert vp_int(200, 5) == 2
    assert vp_int(0, 3) == INF
    assert vp_rat(1, 9, 3) == -2
    assert vp(Fraction(50, 27), 3) == -3
    assert abs_p(-3, 3) == 27
    assert abs_p(INF, 7) == 0
    with pytest.raises(ZeroDivisionError):
        vp_rat(1, 0, 3)


@given(primes, st.integers(-10**6, 10**6).filter(bool), st.integers(-10**6, 10**6).filter(bool))
def test_valuation_is_additive(p, a, b):
    assert vp_int(a * b, p) == vp_int(a, p) + vp_int(b, p)


@given(primes, st.integers(-10**6, 10**6), st.integers(-10**6, 10**6))
def test_ultrametric(p, a, b):
    assert vp_int(a + b, p) >= min(vp_int(a, p), vp_int(b, p))


def test_embed_200():
    a = embed_int(200, 3, 5)
    assert a.truncation_sequence() == [2, 2, 11, 38, 200]
    assert render_sequence(a.truncation_sequence()) == "(2, 2, 11, 38, 200)"
    assert a.digits() == [2, 0, 1, 1, 2]


def test_embed_negative_and_rational():
    assert embed_int(-1, 5, 3).residue == 124
    third = embed(Fraction(1, 3), 2, 6)
    assert (third * 3).residue == 1
    with pytest.raises(ZpError):
        embed(Fraction(1, 2), 2, 4)


def test_arithmetic_takes_min_precision():
    a = PadicInt(5, 4, 7)
    b = PadicInt(5, 2, 3)
    assert (a + b).prec == 2
    assert (a * b).residue == 21 % 25
    with pytest.raises(PrimeMismatchError):
        a + PadicInt(3, 4, 1)


def test_inverse_and_units():
    u = PadicInt(7, 5, 3)
    assert (u * u.inverse()).residue == 1
    with pytest.raises(NotInvertibleError):
        PadicInt(7, 5, 14).inverse()
    n, unit = PadicInt(3, 6, 9 * 5).unit_decompose()
    assert n == 2 and unit.prec == 4 and unit.residue == 5


def test_zero_valuation_is_indeterminate():
    z = PadicInt(3, 4, 0)
    assert z.is_zero()
    with pytest.raises(PrecisionError):
        z.valuation()
    assert z.valuation_bound() == 4


def test_truncate():
    a = embed_int(200, 3, 5)
    assert a.truncate(3) == 11
    assert a.reduce_precision(3).residue == 11
    with pytest.raises(PrecisionError):
        a.truncate(6)


def test_str():
    assert str(embed_int(200, 3, 4)) == "...2011_3 (O(3^4))"


@given(primes, st.integers(1, 6), st.data())
def test_ring_axioms(p, n, data):
    m = p**n
    x, y, z = (PadicInt(p, n, data.draw(st.integers(0, m - 1))) for _ in range(3))
    assert (x * (y + z)).residue == (x * y + x * z).residue
    assert (x - x).is_zero()


def test_padic_num_from_rational():
    q = PadicNum.from_rational(Fraction(5, 12), 2, 6)
    assert q.valuation() == -2
    assert (q * PadicNum.from_rational(Fraction(12, 5), 2, 6)).unit.residue == 1


@given(primes, st.fractions(max_denominator=500).filter(bool))
def test_padic_num_valuation_matches_vp(p, q):
    assert PadicNum.from_rational(q, p, 8).valuation() == vp(q, p)


def test_padic_num_zero_and_division():
    z = PadicNum.from_rational(0, 5, 4)
    assert z.is_zero()
    x = PadicNum.from_rational(Fraction(3, 25), 5, 4)
    y = PadicNum.from_rational(Fraction(3, 5), 5, 4)
    assert (x / y).valuation() == -1
    with pytest.raises(ZeroDivisionError):
        x / z


def test_truncate_to_zero_digits():
    assert embed_int(7, 3, 2).truncate(0) == 0
    with pytest.raises(ValueError):
        embed_int(7, 3, 2).truncate(-1)


@pytest.mark.parametrize("x, p, n, inv", [(2, 5, 3, 63), (1, 7, 4, 1)])
def test_invert_unit_examples(x, p, n, inv):
    assert embed_int(x, p, n).invert_unit().residue == inv == pow(x, -1, p**n)


def test_unit_examples():
    assert embed_int(2, 5, 3).is_unit()
    assert not embed_int(10, 5, 3).is_unit()
    assert not embed_int(0, 3, 2).is_unit()
    with pytest.raises(NotInvertibleError):
        embed_int(3, 3, 2).invert_unit()
    n, t = embed_int(18, 3, 4).unit_decompose()
    assert n == 2 and t.residue == 2
    assert embed_int(27, 3, 4).truncate(3) == 0
