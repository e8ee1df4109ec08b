import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import factor_by_trial_division, is_irreducible, necklaces
from zpspec.errors import DomainMismatchError, ParseError, PrecisionError, PrimeMismatchError, SizeError, ZpError
from zpspec.padic import embed
from zpspec.poly import (
    FpPoly,
    IntPoly,
    ZpPoly,
    discriminant,
    eisenstein,
    eisenstein_int,
    enumerate_irreducibles,
    fp_factor,
    fp_gcd,
    fp_is_irreducible,
    is_primitive,
    necklace_count,
    parse_poly,
    rational_gcd,
    rational_roots,
    reduce_mod_p,
    resultant,
)


@pytest.mark.parametrize(
    "src, coeffs",
    [
        ("T^2-13", (-13, 0, 1)),
        ("2*T^3 + T - 1", (-1, 1, 0, 2)),
        ("-T", (0, -1)),
        ("3T^2+T^2", (0, 0, 4)),
        (" 7 ", (7,)),
        ("T^2 - T^2", ()),
    ],
)
def test_parse(src, coeffs):
    assert parse_poly(src).coeffs == coeffs


@pytest.mark.parametrize("src, pos", [("T^^2", 2), ("T+", 2), ("X^2", 0), ("T^2 3", 4), ("", 0)])
def test_parse_errors_carry_position(src, pos):
    with pytest.raises(ParseError) as err:
        parse_poly(src)
    assert err.value.position == pos


@given(st.lists(st.integers(-50, 50), max_size=6))
def test_render_parse_round_trip(coeffs):
    f = IntPoly(coeffs)
    assert parse_poly(str(f)) == f


def test_render():
    assert str(parse_poly("2*T^2-13")) == "2*T^2-13"
    assert str(IntPoly()) == "0"
    assert str(parse_poly("-T^3+T")) == "-T^3+T"


def test_int_poly_arithmetic():
    f = parse_poly("T+1")
    g = parse_poly("T-1")
    assert f * g == parse_poly("T^2-1")
    assert (f - g) == IntPoly([2])
    assert parse_poly("3T^2+6").content() == 3
    assert parse_poly("T^3").derivative() == parse_poly("3T^2")


def test_fp_poly_checks():
    f = FpPoly(5, [1, 1])
    with pytest.raises(PrimeMismatchError):
        f + FpPoly(7, [1])
    with pytest.raises(DomainMismatchError):
        f(0.5)
    assert f(4) == 0
    assert FpPoly(5, [6, 5, 10]).coeffs == (1,)


def test_fp_divmod():
    f = FpPoly(7, [1, 2, 3, 4])
    g = FpPoly(7, [5, 1])
    q, r = divmod(f, g)
    assert q * g + r == f
    assert r.degree < g.degree


def test_gcd_is_monic():
    a = FpPoly(5, [4, 0, 1])  # T^2 - 1
    b = FpPoly(5, [2, 2])  # 2(T + 1)
    assert fp_gcd(a, b) == FpPoly(5, [1, 1])


@pytest.mark.parametrize(
    "p, coeffs, expected",
    [(2, (1, 1, 1), True), (2, (1, 0, 1), False), (3, (1, 0, 1), True), (5, (1, 0, 1), False), (2, (1, 1, 0, 0, 1), True)],
)
def test_fp_is_irreducible(p, coeffs, expected):
    assert fp_is_irreducible(FpPoly(p, coeffs)) is expected


def test_fp_factor_examples():
    assert str(fp_factor(reduce_mod_p(parse_poly("T^2+1"), 5))) == "(T+2)*(T+3)"
    assert str(fp_factor(reduce_mod_p(parse_poly("T^2+1"), 2))) == "(T+1)^2"
    fac = fp_factor(FpPoly(3, [0, 0, 0, 1, 0, 0, 1]))  # T^6 + T^3 = T^3 (T+1)^3
    assert fac.expand() == FpPoly(3, [0, 0, 0, 1, 0, 0, 1])
    assert [(str(g), m) for g, m in fac.factors] == [("T", 3), ("T+1", 3)]


def test_fp_factor_inseparable_power():
    f = FpPoly(2, [1, 0, 0, 0, 1])  # T^4 + 1 = (T+1)^4 in characteristic 2
    assert [(str(g), m) for g, m in fp_factor(f).factors] == [("T+1", 4)]


@given(st.sampled_from([2, 3, 5, 7]), st.lists(st.integers(0, 6), min_size=2, max_size=7))
def test_fp_factor_matches_trial_division(p, tail):
    coeffs = tuple(c % p for c in tail[:-1]) + (1,)
    fac = fp_factor(FpPoly(p, coeffs))
    assert fac.expand() == FpPoly(p, coeffs)
    assert [(g.coeffs, m) for g, m in fac.factors] == factor_by_trial_division(coeffs, p)


@given(st.sampled_from([2, 3, 5, 7]), st.lists(st.integers(0, 6), min_size=2, max_size=6))
def test_irreducibility_matches_oracle(p, tail):
    coeffs = tuple(c % p for c in tail[:-1]) + (1,)
    assert fp_is_irreducible(FpPoly(p, coeffs)) == is_irreducible(coeffs, p)


@pytest.mark.parametrize("p, d", [(2, 4), (3, 3), (2, 1), (5, 2), (7, 3)])
def test_irreducible_counts(p, d):
    assert len(enumerate_irreducibles(p, d, exact=True)) == necklace_count(p, d) == necklaces(p, d)


def test_enumeration_cap():
    with pytest.raises(SizeError):
        enumerate_irreducibles(7, 8, cap=1000)


def test_resultant_and_discriminant():
    assert discriminant(parse_poly("T^2+1")) == -4
    assert discriminant(parse_poly("T^3-2")) == -108
    assert discriminant(parse_poly("T^2+2T+1")) == 0
    assert resultant(parse_poly("T-2"), parse_poly("T^2+1")) == 5


def test_rational_gcd_and_roots():
    f = parse_poly("T^3+T^2-T-1")  # (T-1)(T+1)^2
    assert rational_gcd(f, f.derivative()) == parse_poly("T+1")
    assert [str(r) for r in rational_roots(parse_poly("2T^2-T"))] == ["0", "1/2"]
    assert rational_roots(parse_poly("T^2+1")) == []


def test_eisenstein():
    assert eisenstein_int(parse_poly("T^2-3"), 3)
    assert eisenstein_int(parse_poly("T^3+2T+2"), 2)
    assert not eisenstein_int(parse_poly("T^2-9"), 3)
    assert not eisenstein_int(parse_poly("9T^2+3"), 3)  # lead not a unit
    zp = ZpPoly.from_int_poly(parse_poly("T^2+5"), 5, 4)
    assert eisenstein(zp)


def test_eisenstein_zero_constant_needs_precision():
    zero_a0 = ZpPoly(3, 1, [embed(0, 3, 1), embed(3, 3, 1), embed(1, 3, 1)])
    with pytest.raises(PrecisionError):
        eisenstein(zero_a0)


def test_is_primitive():
    assert is_primitive(ZpPoly.from_int_poly(parse_poly("3T+1"), 3, 3))
    assert not is_primitive(ZpPoly.from_int_poly(parse_poly("3T+9"), 3, 3))
    with pytest.raises(ZpError):
        is_primitive(ZpPoly(3, 3, []))
