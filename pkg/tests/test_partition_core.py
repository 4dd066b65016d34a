import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from partition_lab.partition_core import (
    EMPTY,
    KadicForm,
    ParseError,
    Partition,
    decompose_multiplicity,
    distinct_parts,
    distinct_parts_resmult_at_least,
    enumerate_partitions,
    format_partition,
    iter_partitions,
    kadic_form,
    mult_decomposition,
    parse_partition,
    parts_in_class,
    total_parts,
)

from oracles import flat_partitions, pentagonal_p

WORKED_D = Partition(((4, 5), (6, 1), (12, 7), (18, 8), (24, 9), (36, 1)))
WORKED_O = Partition(((4, 5), (6, 7), (18, 2), (24, 3), (36, 4), (48, 4)))


def test_pentagonal_oracle_small_values():
    # hand-checked: 1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42
    assert [pentagonal_p(n) for n in range(11)] == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]


@pytest.mark.parametrize("text, pairs", [
    ("3+1+1", ((1, 2), (3, 1))),
    ("1 + 3 + 1", ((1, 2), (3, 1))),
    ("4^5 6 12^7 18^8 24^9 36", WORKED_D.pairs),
    ("36 24^9 18^8 12^7 6 4^5", WORKED_D.pairs),
    ("2 2^3 2", ((2, 5),)),
    ("", ()),
    ("   ", ()),
])
def test_parse(text, pairs):
    assert parse_partition(text) == Partition(pairs)


@pytest.mark.parametrize("text, bad", [
    ("0", "0"), ("3^0", "3^0"), ("-2", "-2"), ("2^", "2^"), ("x", "x"),
    ("3+0", "0"), ("3++1", "''"), ("2.5", "2.5"), ("4^2+1", "4^2"),
])
def test_parse_errors_name_token(text, bad):
    with pytest.raises(ParseError) as err:
        parse_partition(text)
    assert bad in str(err.value)


def test_format():
    assert format_partition(WORKED_D) == "4^5 6 12^7 18^8 24^9 36"
    assert format_partition(parse_partition("1 4 8 16"), explicit_ones=True) == "1^1 4^1 8^1 16^1"
    assert format_partition(EMPTY) == ""


def test_partition_invariants_enforced():
    with pytest.raises(ValueError):
        Partition(((2, 1), (1, 1)))
    with pytest.raises(ValueError):
        Partition(((1, 0),))
    with pytest.raises(ValueError):
        Partition(((0, 1),))
    assert Partition.from_parts([3, 1, 1]).pairs == ((1, 2), (3, 1))
    assert WORKED_D.weight == 506
    assert WORKED_O.weight == 506


@pytest.mark.parametrize("n", range(41))
def test_roundtrip_format_parse(n):
    for pi in enumerate_partitions(n):
        assert parse_partition(format_partition(pi)) == pi
        assert parse_partition(format_partition(pi, explicit_ones=True)) == pi


def test_enumeration_small():
    assert enumerate_partitions(0) == (EMPTY,)
    five = [pi.parts() for pi in enumerate_partitions(5)]
    assert five == [[5], [4, 1], [3, 2], [3, 1, 1], [2, 2, 1], [2, 1, 1, 1], [1, 1, 1, 1, 1]]


@pytest.mark.parametrize("n", range(41))
def test_enumeration_count_matches_pentagonal(n):
    assert len(enumerate_partitions(n)) == pentagonal_p(n)


def test_enumeration_n29():
    assert len(enumerate_partitions(29)) == 4565


@pytest.mark.parametrize("n", range(16))
def test_enumeration_is_exact_set_and_ordered(n):
    got = [pi.parts() for pi in iter_partitions(n)]
    ref = sorted((sorted(p, reverse=True) for p in flat_partitions(n)), reverse=True)
    assert got == ref


def test_counts_statistics():
    pi = parse_partition("3+1+1")
    assert total_parts(pi) == 3
    assert distinct_parts(pi) == 2
    assert parts_in_class(pi, 2, 1) == 3
    assert total_parts(parse_partition("1+1+1+1+1")) == 5
    assert distinct_parts(WORKED_D) == 6
    assert total_parts(EMPTY) == distinct_parts(EMPTY) == parts_in_class(EMPTY, 3, 1) == 0
    assert parts_in_class(WORKED_O, 12, 0) == 11
    with pytest.raises(ValueError):
        parts_in_class(pi, 2, 2)


@pytest.mark.parametrize("n", range(26))
def test_parts_in_class_sum_to_length(n):
    for pi in enumerate_partitions(n):
        for m in range(1, 11):
            assert sum(parts_in_class(pi, m, r) for r in range(m)) == total_parts(pi)


def test_mult_decomposition_examples():
    pi = parse_partition("6^2 12^7")
    d = mult_decomposition(pi, 12, 2)
    assert (d.residual, d.quotient, d.base_k_digits) == (1, 3, (1, 1))
    d = decompose_multiplicity(5, 3)
    assert (d.residual, d.quotient) == (2, 1)
    d = mult_decomposition(pi, 5, 3)
    assert (d.residual, d.quotient, d.base_k_digits) == (0, 0, ())
    assert decompose_multiplicity(7, 1).residual == 0


@pytest.mark.parametrize("k", [2, 3, 4, 5])
def test_decomposition_consistency(k):
    for n in range(26):
        for pi in enumerate_partitions(n):
            for part, s in pi.pairs:
                d = mult_decomposition(pi, part, k)
                assert 0 <= d.residual < k
                assert d.residual + k * d.quotient == s
                assert d.residual + sum(u * k ** (e + 1) for e, u in enumerate(d.base_k_digits)) == s
                assert all(0 <= u < k for u in d.base_k_digits)
                assert not d.base_k_digits or d.base_k_digits[-1] != 0


def test_resmult_at_least():
    assert distinct_parts_resmult_at_least(parse_partition("5+4+1"), 1, 2, 1) == 3
    assert distinct_parts_resmult_at_least(parse_partition("4^5"), 2, 2, 1) == 1
    pi = parse_partition("2^2 3 4^3 6^4")
    assert distinct_parts_resmult_at_least(pi, 2, 5, 0) == 3
    with pytest.raises(ValueError):
        distinct_parts_resmult_at_least(pi, 1, 2, 2)


@pytest.mark.parametrize("part, alpha", [(24, 2), (12, 1), (36, 1), (6, 0), (18, 0)])
def test_kadic_worked_example(part, alpha):
    assert kadic_form(part, 6, 2) == KadicForm(alpha, part // (6 * 2 ** alpha))


def test_kadic_rejects_non_multiple():
    with pytest.raises(ValueError):
        kadic_form(10, 6, 2)


@settings(max_examples=200)
@given(core=st.integers(1, 500), alpha=st.integers(0, 6), b=st.integers(1, 12), k=st.integers(2, 6))
def test_kadic_recovers_factorisation(core, alpha, b, k):
    if core % k == 0:
        return
    assert kadic_form(b * k ** alpha * core, b, k) == KadicForm(alpha, core)


@given(st.lists(st.integers(1, 30), max_size=15))
def test_parse_is_order_insensitive(parts):
    text = " + ".join(map(str, parts))
    pi = Partition.from_parts(parts)
    assert (parse_partition(text) if parts else EMPTY) == pi
    assert parse_partition(" ".join(map(str, reversed(parts)))) == pi
