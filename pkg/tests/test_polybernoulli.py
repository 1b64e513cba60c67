"""Route agreement and the integral-transform representations."""
import json
from fractions import Fraction

import pytest

from akzeta.exact import ZPolynomial, bernoulli_numbers, bernoulli_polynomial, binomial
from akzeta.polybernoulli import (
    BarnesParameters,
    PolyBernoulliTable,
    barnes_transform_cube,
    bc_convert,
    bernoulli_barnes,
    poly_bernoulli_series,
    poly_bernoulli_stirling,
    poly_bernoulli_umbral,
    poly_bernoulli_umbral_at,
    simplex_transform,
    stirling_table,
    umbral_numbers,
)
from akzeta.umbral import UmbralExpression, uniform_symbol


def stirling_oracle(n, k):
    """Independent re-derivation of the closed form with raw arithmetic."""
    total = Fraction(0)
    sign = 1
    for m in range(n + 1):
        # m! S(n,m) by inclusion-exclusion: sum_j (-1)^j C(m,j) (m-j)^n
        surj = sum((-1) ** j * binomial(m, j) * (m - j) ** n for j in range(m + 1))
        total += Fraction((-1) ** m * surj, (m + 1) ** k)
        sign = -sign
    return (-1) ** n * total


def test_series_route_examples():
    t = poly_bernoulli_series(4, 2, "B")
    assert t.number(0) == 1
    assert t.number(1) == Fraction(1, 4)
    assert t.number(2) == Fraction(-1, 36)
    t7 = poly_bernoulli_series(0, 7, "B")
    assert t7.number(0) == 1
    # k=1 collapse: B_n^{(1)} = B_n(1)
    t1 = poly_bernoulli_series(12, 1, "B")
    for n in range(13):
        assert t1.number(n) == bernoulli_polynomial(n)(Fraction(1))


def test_stirling_route_examples():
    assert poly_bernoulli_stirling(0, 3) == 1
    assert poly_bernoulli_stirling(1, 2) == Fraction(1, 4)
    for n in range(21):
        assert poly_bernoulli_stirling(n, 1) == bernoulli_polynomial(n)(Fraction(1))
    for n in range(9):
        for k in range(1, 4):
            assert poly_bernoulli_stirling(n, k) == stirling_oracle(n, k)


def test_umbral_route_examples():
    assert poly_bernoulli_umbral(0, 3) == ZPolynomial([1])
    assert poly_bernoulli_umbral(1, 1) == ZPolynomial([Fraction(1, 2), 1])
    for k in range(1, 5):
        ref = poly_bernoulli_series(12, k, "B")
        refc = poly_bernoulli_series(12, k, "C")
        for n in range(13):
            assert poly_bernoulli_umbral(n, k, "B") == ref.value(n)
            assert poly_bernoulli_umbral(n, k, "C") == refc.value(n)


def test_umbral_at_folds_constant():
    for n in range(8):
        for k in (1, 2, 3):
            assert poly_bernoulli_umbral_at(n, k) == poly_bernoulli_umbral(n, k)(
                Fraction(0)
            )
    assert poly_bernoulli_umbral_at(3, 2, "B", Fraction(1, 2)) == poly_bernoulli_umbral(
        3, 2
    )(Fraction(1, 2))


def test_route_agreement_grid():
    for k in range(1, 5):
        series = poly_bernoulli_series(10, k, "B")
        umbral = umbral_numbers(10, k, "B")
        for n in range(11):
            assert series.number(n) == umbral[n] == poly_bernoulli_stirling(n, k)


def test_monic_degree():
    for k in (1, 3):
        for variant in ("B", "C"):
            t = poly_bernoulli_series(10, k, variant)
            for n in range(11):
                assert t.value(n).degree == n
                assert t.value(n).leading_coefficient() == 1


def test_bc_convert():
    tb = poly_bernoulli_series(12, 3, "B")
    tc = bc_convert(tb, "B->C")
    ref = poly_bernoulli_series(12, 3, "C")
    for n in range(13):
        assert tc.value(n) == ref.value(n)
    back = bc_convert(tc, "C->B")
    for n in range(13):
        assert back.value(n) == tb.value(n)
    # k=1: C numbers are the plain Bernoulli numbers (B_1 = -1/2 convention)
    t1 = poly_bernoulli_series(20, 1, "C")
    B = bernoulli_numbers(20)
    for n in range(21):
        assert t1.number(n) == B[n]
    with pytest.raises(ValueError):
        bc_convert(tb, "B->B")
    with pytest.raises(ValueError):
        bc_convert(tc, "B->C")


def test_companion_is_shift():
    for k in range(1, 5):
        tb = poly_bernoulli_series(10, k, "B")
        tc = poly_bernoulli_series(10, k, "C")
        for n in range(11):
            assert tc.value(n) == tb.value(n).shift(-1)


def test_bernoulli_barnes_classical():
    for n in range(8):
        bp = bernoulli_barnes(n, BarnesParameters([Fraction(1)], None))
        assert bp.as_polynomial() == bernoulli_polynomial(n)


def test_bernoulli_barnes_prefactor_only():
    u1 = UmbralExpression.symbol(uniform_symbol(1))
    bp = bernoulli_barnes(0, BarnesParameters([u1, Fraction(1)], Fraction(0)))
    assert bp.numerator == UmbralExpression.constant(1)
    assert bp.denominator == u1


def test_barnes_parameters_validation():
    from akzeta.umbral import bernoulli_symbol

    with pytest.raises(ValueError):
        BarnesParameters([])
    with pytest.raises(ValueError):
        BarnesParameters([Fraction(0)])
    u1 = UmbralExpression.symbol(uniform_symbol(1))
    with pytest.raises(ValueError):
        BarnesParameters([u1 + 1])  # two monomials
    with pytest.raises(ValueError):
        BarnesParameters([UmbralExpression.symbol(bernoulli_symbol(1))])


def test_bernoulli_barnes_two_parameters_matches_series():
    # E[(B_1 + B_2)^n] against the t^n coefficient of (t/(e^t-1))^2
    from akzeta.exact import bernoulli_gf_series

    gf = bernoulli_gf_series(8)
    sq = gf * gf
    for n in range(9):
        bp = bernoulli_barnes(n, BarnesParameters([Fraction(1), Fraction(1)], Fraction(0)))
        assert bp.as_polynomial().coefficient(0) == sq.factorial_coefficient(n)


def test_cube_transform():
    # k=1 is the empty integral: B_n(z+1)
    for n in range(8):
        assert barnes_transform_cube(n, 1) == bernoulli_polynomial(n).shift(1)
    ref2 = poly_bernoulli_series(6, 2, "B")
    assert barnes_transform_cube(3, 2, Fraction(0)) == ref2.number(3)
    ref3 = poly_bernoulli_series(6, 3, "B")
    assert barnes_transform_cube(5, 3, Fraction(1)) == ref3.value(5)(Fraction(1))
    for k in (2, 3):
        ref = poly_bernoulli_series(6, k, "B")
        for n in range(7):
            assert barnes_transform_cube(n, k) == ref.value(n)


def test_simplex_transform():
    assert simplex_transform(0, 2, Fraction(0)) == 1
    ref2 = poly_bernoulli_series(6, 2, "B")
    assert simplex_transform(4, 2, Fraction(0)) == ref2.number(4)
    ref3 = poly_bernoulli_series(6, 3, "B")
    assert simplex_transform(3, 3, Fraction(0)) == ref3.number(3)
    for k in (2, 3):
        ref = poly_bernoulli_series(6, k, "B")
        for n in range(7):
            assert simplex_transform(n, k) == ref.value(n)
    with pytest.raises(ValueError):
        simplex_transform(2, 1)


def test_stirling_table_lift():
    t = stirling_table(8, 2)
    ref = poly_bernoulli_series(8, 2, "B")
    for n in range(9):
        assert t.value(n) == ref.value(n)
    assert t.route == "stirling"


def test_transform_route_tables():
    from akzeta.polybernoulli import cube_table, simplex_table

    ref = poly_bernoulli_series(5, 3, "B")
    ct = cube_table(5, 3)
    st = simplex_table(5, 3)
    assert ct.route == "barnes-cube" and st.route == "barnes-simplex"
    for n in range(6):
        assert ct.value(n) == ref.value(n)
        assert st.value(n) == ref.value(n)


def test_table_serialization():
    t = poly_bernoulli_series(3, 2, "B")
    csv = t.to_csv()
    lines = csv.strip().splitlines()
    assert lines[0] == "n,k,variant,num,den"
    assert lines[2] == "1,2,B,1,4"
    obj = t.to_json()
    assert obj["k"] == 2 and obj["variant"] == "B" and obj["route"] == "series"
    # coefficient arrays are low-to-high
    assert obj["entries"][1] == [
        {"num": "1", "den": "4"},
        {"num": "1", "den": "1"},
    ]
    json.dumps(obj)  # serializable


def test_umbral_route_respects_expansion_cap():
    import akzeta.umbral as umbral

    umbral.set_expansion_cap(50)
    try:
        with pytest.raises(umbral.ExpansionCapError):
            poly_bernoulli_umbral(20, 4)
    finally:
        umbral.set_expansion_cap(umbral.DEFAULT_EXPANSION_CAP)


def test_table_validation():
    with pytest.raises(ValueError):
        PolyBernoulliTable(1, "X", "series")
    with pytest.raises(ValueError):
        PolyBernoulliTable(1, "B", "magic")
    with pytest.raises(ValueError):
        poly_bernoulli_series(-1, 2)
    with pytest.raises(ValueError):
        poly_bernoulli_series(3, 0)
