import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from partition_lab import counting as C
from partition_lab import qseries as Q
from partition_lab.qseries import ONE, ONE_MINUS_Z, W, Z, PolyZW, TruncatedSeries

from oracles import brute_series, divisor_count, mults, naive_mul, pentagonal_p


def as_dict(s):
    return {n: dict(c.terms) for n, c in enumerate(s.coeffs) if c}


def from_dict(d, N):
    return TruncatedSeries.from_terms(N, {n: PolyZW(t) for n, t in d.items()})


poly_st = st.dictionaries(st.tuples(st.integers(0, 2), st.integers(0, 2)),
                          st.integers(-3, 3), max_size=3)
series_st = st.dictionaries(st.integers(0, 8), poly_st, max_size=4)


def test_polyzw_basics():
    p = (ONE - Z) * (ONE + Z)
    assert p == ONE - Z * Z
    assert PolyZW({(0, 0): 0}).terms == {}
    assert (W * W * Z * 3).d_dw() == PolyZW({(1, 1): 6})
    assert (W * W * Z * 3 + W).d_dw_at_1() == PolyZW({(1, 0): 6, (0, 0): 1})
    assert (W * Z + W).at_w1() == Z + 1
    assert ONE_MINUS_Z ** 3 == (ONE - Z) * (ONE - Z) * (ONE - Z)
    assert (W * 2 - W * 2).terms == {}


def test_series_ring_examples():
    N = 5
    a = TruncatedSeries.from_terms(N, {0: 1, 1: 1})
    b = TruncatedSeries.from_terms(N, {0: 1, 1: -1})
    assert a * b == TruncatedSeries.from_terms(N, {0: 1, 2: -1})
    assert a * TruncatedSeries.one(N) == a
    with pytest.raises(ValueError):
        a * TruncatedSeries.one(N + 1)
    with pytest.raises(ValueError):
        a + TruncatedSeries.one(3)


@settings(max_examples=60, deadline=None)
@given(series_st, series_st, series_st)
def test_mul_against_naive_convolution(a, b, c):
    N = 10
    sa, sb, sc = from_dict(a, N), from_dict(b, N), from_dict(c, N)
    assert as_dict(sa * sb) == naive_mul(as_dict(sa), as_dict(sb), N)
    assert (sa * sb) * sc == sa * (sb * sc)
    assert sa * (sb + sc) == sa * sb + sa * sc


@settings(max_examples=60, deadline=None)
@given(series_st, poly_st, st.integers(1, 4))
def test_div_binomial_inverts_mul_binomial(a, x, d):
    N = 12
    s = from_dict(a, N)
    x = PolyZW(x)
    assert s.mul_binomial(x, d).div_binomial(x, d) == s
    assert s.div_binomial(x, d).mul_binomial(x, d) == s


@settings(max_examples=40, deadline=None)
@given(series_st)
def test_inverse(a):
    N = 10
    s = from_dict(a, N)
    s.coeffs[0] = ONE
    assert s * s.inverse() == TruncatedSeries.one(N)


def test_pochhammer_reciprocal_is_partition_numbers():
    N = 40
    inv = Q.pochhammer_reciprocal(ONE, 0, 1, N)
    assert [inv.coefficient(n) for n in range(N + 1)] == [pentagonal_p(n) for n in range(N + 1)]
    assert inv.coefficient(5) == 7
    euler = Q.pochhammer_product(ONE, 0, 1, N)
    assert euler * inv == TruncatedSeries.one(N)
    assert Q.pochhammer_product(PolyZW(), 0, 1, N) == TruncatedSeries.one(N)


def test_pochhammer_with_offset():
    # (q^2; q^3)_inf = (1-q^2)(1-q^5)(1-q^8)... to order 8
    got = Q.pochhammer_product(ONE, 0, 3, 8, offset=2)
    expect = {0: 1, 2: -1, 5: -1, 7: 1, 8: -1}
    assert {n: got.coefficient(n) for n in range(9) if got.coefficient(n)} == expect


def test_geom_tail():
    N = 30
    plain = Q.geom_tail(3, PolyZW(), N)
    assert [plain.coefficient(n) for n in range(N + 1)] == [int(n > 0 and n % 3 == 0) for n in range(N + 1)]
    divisors = Q.geom_tail(1, ONE, N)
    assert divisors.coefficient(6) == 4
    assert [divisors.coefficient(n) for n in range(1, N + 1)] == [divisor_count(n) for n in range(1, N + 1)]


@pytest.mark.parametrize("t, k", [(1, 2), (1, 3), (2, 3), (3, 4), (2, 5)])
def test_geom_tail_interchange(t, k):
    # sum_{i>=0} q^{t+ki}/(1-q^{t+ki}) == sum_{j>=1} q^{tj}/(1-q^{kj})
    N = 60
    lhs = TruncatedSeries(N)
    for base in range(t, N + 1, k):
        lhs = lhs + TruncatedSeries.from_terms(N, {d: 1 for d in range(base, N + 1, base)})
    rhs = TruncatedSeries(N)
    for j in range(1, N // t + 1):
        rhs = rhs + TruncatedSeries.from_terms(N, {t * j + k * j * r: 1 for r in range(N)})
    assert lhs == rhs


def test_gf_O_small_values():
    g = Q.gf_O(2, 1, 10)
    assert g.coefficient(5, 0) == 3
    assert g.coefficient(5, 1) == 4
    assert Q.gf_O(2, 1, 0) == TruncatedSeries.one(0)


@pytest.mark.parametrize("k", [1, 2, 3, 4])
@pytest.mark.parametrize("b", [1, 2, 3])
def test_gf_O_and_gf_D_match_enumeration(k, b):
    N = 35
    gO, gD = Q.gf_O(k, b, N), Q.gf_D(k, b, N)
    assert gO == gD
    for n in range(N + 1):
        for j in range(n // (k * b) + 2):
            assert gO.coefficient(n, j) == C.count_O(j, k, b, n)


@pytest.mark.parametrize("k", [1, 2, 3, 4])
@pytest.mark.parametrize("b", [1, 2, 3])
def test_gf_O_equals_gf_D_at_40(k, b):
    assert Q.gf_O(k, b, 40) == Q.gf_D(k, b, 40)


@pytest.mark.parametrize("k, b", [(2, 1), (2, 2), (3, 1), (3, 2)])
def test_gf_jO(k, b):
    N = 30
    g = Q.gf_jO(k, b, N)
    assert g.coeffs[0] == PolyZW()
    for n in range(N + 1):
        for j in range(n // (k * b) + 1):
            assert g.coefficient(n, j) == (j + 1) * C.count_O(j + 1, k, b, n)
    assert Q.gf_jO(2, 1, 10).coefficient(5, 0) == 4


@pytest.mark.parametrize("k, b", [(1, 1), (2, 1), (2, 2), (3, 1), (3, 2)])
def test_gf_w_against_brute_force(k, b):
    N = 18

    def z_O(parts):
        return len({p for p in parts if p % (k * b) == 0})

    def z_D(parts):
        return sum(1 for p, s in mults(parts).items() if p % b == 0 and s >= k)

    assert as_dict(Q.gf_O_w(k, b, N)) == brute_series(N, z_O, len)
    assert as_dict(Q.gf_D_w(k, b, N)) == brute_series(N, z_D, len)
    assert Q.gf_D_w(k, b, N) == Q.gf_D_w_expanded(k, b, N)
    assert Q.gf_O_w(k, b, N).at_w1() == Q.gf_O(k, b, N)
    assert Q.gf_D_w(k, b, N).at_w1() == Q.gf_D(k, b, N)


@pytest.mark.parametrize("k, b", [(2, 1), (3, 2)])
def test_gf_O_w_matches_counting_by_length(k, b):
    N = 25
    g = Q.gf_O_w(k, b, N)
    h = Q.gf_D_w(k, b, N)
    for n in range(0, N + 1, 3):
        for j in range(n // (k * b) + 1):
            for m in range(n + 1):
                assert g.coefficient(n, j, m) == C.count_O_by_length(j, k, b, m, n)
                assert h.coefficient(n, j, m) == C.count_D_by_length(j, k, b, m, n)


def test_total_parts_via_derivative():
    assert Q.d_dw_at_1(Q.gf_O_w(2, 1, 8)).coefficient(5, 0) == 9
    assert Q.d_dw_at_1(Q.gf_D_w(2, 1, 8)).coefficient(5, 0) == 5
    assert Q.d_dw_at_1(Q.gf_O(3, 1, 8)) == TruncatedSeries(8)


@pytest.mark.parametrize("k, b", [(2, 1), (2, 2), (3, 1), (3, 2)])
def test_class_series_against_brute_force(k, b):
    N = 18
    kb = k * b

    def z_O(parts):
        return len({p for p in parts if p % kb == 0})

    def z_D(parts):
        return sum(1 for p, s in mults(parts).items() if p % b == 0 and s >= k)

    for t in range(1, k):
        assert as_dict(Q.gf_O_class(k, b, t, N)) == brute_series(
            N, z_O, lambda parts: sum(1 for p in parts if p % kb == t * b))
        assert as_dict(Q.gf_D_resmult(k, b, t, N)) == brute_series(
            N, z_D, lambda parts: sum(1 for p, s in mults(parts).items() if p % b == 0 and s % k >= t))
        assert Q.gf_O_class(k, b, t, N).at_w1() == Q.gf_O(k, b, N)
        assert Q.gf_D_resmult(k, b, t, N).at_w1() == Q.gf_D(k, b, N)
    assert as_dict(Q.gf_O_class0(k, b, N)) == brute_series(
        N, z_O, lambda parts: sum(1 for p in parts if p % kb == 0))
    assert Q.gf_O_class0(k, b, N).at_w1() == Q.gf_O(k, b, N)


@pytest.mark.parametrize("k, b", [(2, 1), (3, 2)])
def test_class_series_match_counting(k, b):
    N = 25
    for t in range(1, k):
        g = Q.gf_O_class(k, b, t, N)
        h = Q.gf_D_resmult(k, b, t, N)
        for n in (0, 7, 13, 25):
            for j in range(n // (k * b) + 1):
                for m in range(n + 1):
                    assert g.coefficient(n, j, m) == C.count_O_class(j, k, b, t, m, n)
                    assert h.coefficient(n, j, m) == C.count_D_resmult(j, k, b, t, m, n)


@pytest.mark.parametrize("k, b", [(2, 1), (2, 2), (3, 1), (3, 2)])
def test_dbar(k, b):
    N = 30
    g = Q.gf_Dbar(k, b, N)
    assert g == Q.gf_O_class0(k, b, N)
    assert g.at_w1().at_z1() == Q.pochhammer_reciprocal(ONE, 0, 1, N)
    for n in (0, 5, 12, 20, 25):
        for j in range(n // (k * b) + 1):
            for m in range(n + 1):
                assert g.coefficient(n, j, m) == C.count_Dbar(j, k, b, m, n)


@pytest.mark.parametrize("k, t", [(2, 1), (3, 1), (3, 2), (4, 3)])
def test_resmult_factor_identity(k, t):
    # (1 + x + ... + x^{t-1} + w x^t + ... + w x^{k-1}) (1 - x) == (1 - x^t) + w (x^t - x^k), x = q^{bi}
    N = 40
    for bi in (1, 2, 3):
        left = TruncatedSeries.from_terms(
            N, {r * bi: (ONE if r < t else W) for r in range(k)}).mul_binomial(ONE, bi)
        right = TruncatedSeries.from_terms(N, {0: ONE, t * bi: W - ONE})
        right = right + TruncatedSeries.from_terms(N, {k * bi: -W})
        assert left == right


@pytest.mark.parametrize("k, b", [(2, 1), (2, 2), (3, 1), (3, 2), (4, 1)])
def test_derivative_identity(k, b):
    N = 30
    lhs = Q.d_dw_at_1(Q.gf_O_w(k, b, N)) - Q.d_dw_at_1(Q.gf_D_w(k, b, N))
    assert lhs == Q.gf_jO(k, b, N).scale(ONE_MINUS_Z * (k - 1))


@pytest.mark.parametrize("k, b", [(2, 1), (2, 2), (3, 1), (3, 2), (4, 2)])
def test_refinement_target(k, b):
    N = 30
    target = Q.gf_jO(k, b, N).scale(ONE_MINUS_Z)
    for t in range(1, k):
        diff = Q.gf_O_class(k, b, t, N) - Q.gf_O_class0(k, b, N) - Q.gf_D_resmult(k, b, t, N)
        assert Q.d_dw_at_1(diff) == target


@pytest.mark.parametrize("k, b", [(2, 1), (3, 2)])
def test_leibniz_matches_termwise_on_gf_factors(k, b):
    N = 20
    kb = k * b
    factors = []
    for i in range(1, N + 1):
        f = TruncatedSeries.one(N)
        if kb * i <= N:
            f = f.mul_binomial(ONE_MINUS_Z * W, kb * i)
        factors.append(f.div_binomial(W, i))
    product = TruncatedSeries.one(N)
    for f in factors:
        product = product * f
    assert product == Q.gf_O_w(k, b, N)
    assert Q.d_dw_at_1_product(factors) == Q.d_dw_at_1(product)


def test_leibniz_matches_termwise_on_random_factors():
    rng = random.Random(20240917)
    N = 12
    for _ in range(15):
        factors = []
        for _ in range(rng.randint(1, 4)):
            terms = {0: ONE}
            for _ in range(rng.randint(1, 4)):
                d = rng.randint(1, N)
                terms[d] = PolyZW({(rng.randint(0, 2), rng.randint(0, 3)): rng.randint(-3, 3)})
            factors.append(TruncatedSeries.from_terms(N, terms))
        product = TruncatedSeries.one(N)
        for f in factors:
            product = product * f
        assert Q.d_dw_at_1_product(factors) == Q.d_dw_at_1(product)


def test_degree_bounds_hold_for_all_builders():
    N = 30
    for k, b in [(2, 1), (3, 2), (4, 1)]:
        for s in [Q.gf_O(k, b, N), Q.gf_D(k, b, N), Q.gf_O_w(k, b, N), Q.gf_D_w(k, b, N),
                  Q.gf_O_class0(k, b, N), Q.gf_Dbar(k, b, N), Q.gf_D_resmult(k, b, 1, N),
                  Q.gf_O_class(k, b, 1, N)]:
            Q.check_degree_bounds(s, k * b)
    bad = TruncatedSeries.from_terms(3, {2: W * W * W})
    with pytest.raises(ArithmeticError):
        Q.check_degree_bounds(bad)


def test_t_range_errors():
    with pytest.raises(ValueError):
        Q.gf_O_class(2, 1, 2, 10)
    with pytest.raises(ValueError):
        Q.gf_D_resmult(3, 1, 0, 10)
    with pytest.raises(ValueError):
        Q.gf_Dbar(1, 1, 10)
    with pytest.raises(ValueError):
        Q.build_gf("nope", 2, 1, 10)
    with pytest.raises(ValueError):
        Q.build_gf("O_t", 2, 1, 10)


def test_dump_format():
    text = Q.gf_O(2, 1, 3).dump()
    assert text == "0: [ (0,0,1) ]\n1: [ (0,0,1) ]\n2: [ (0,0,1), (1,0,1) ]\n3: [ (0,0,2), (1,0,1) ]\n"
    assert TruncatedSeries(1).dump() == "0: [ ]\n1: [ ]\n"
    assert Q.gf_O(2, 1, 0).dump() == "0: [ (0,0,1) ]\n"
