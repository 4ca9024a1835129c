from itertools import product

import pytest
from hypothesis import given, strategies as st

from symwave.errors import AlphabetOverflowError, InvalidInputError, InvalidPatternError
from symwave.partitions import invariant_dimension
from symwave.words import (
    AlternationClass,
    alternation_class,
    enumerate_balanced_words,
    format_word,
    is_balanced,
    is_symplectic_lattice_word,
    lat,
    parse_word,
    pattern,
    word_key,
)

from oracles import all_words, prefix_weights_are_partitions


@pytest.mark.parametrize(
    "w, n, expected",
    [
        ([1, -1], 1, True),
        ([1, 2, -1], 2, False),
        ([], 2, True),
        ([2], 2, False),
        ([1, 3], 2, False),
        ([-1], 1, False),
    ],
)
def test_lattice_predicate_examples(w, n, expected):
    assert is_symplectic_lattice_word(w, n) is expected


@pytest.mark.parametrize("n", [1, 2, 3])
@pytest.mark.parametrize("m", range(0, 6))
def test_lattice_predicate_matches_oracle(m, n):
    for w in all_words(m, n):
        assert is_symplectic_lattice_word(w, n) == prefix_weights_are_partitions(w, n), w


@pytest.mark.parametrize(
    "w, expected",
    [([1, -1], True), ([1, 1, -1], False), ([1, 2, -2, -1], True), ([], True)],
)
def test_is_balanced(w, expected):
    assert is_balanced(w) is expected


def test_enumerate_examples():
    assert enumerate_balanced_words(2, 2) == [(1, -1)]
    assert enumerate_balanced_words(3, 2) == []
    assert len(enumerate_balanced_words(6, 2)) == 14


@pytest.mark.parametrize("n", [1, 2, 3])
@pytest.mark.parametrize("m", range(0, 7))
def test_enumeration_is_complete_and_ordered(m, n):
    words = enumerate_balanced_words(m, n)
    expected = sorted(
        (w for w in all_words(m, n) if prefix_weights_are_partitions(w, n) and is_balanced(w)),
        key=word_key,
    )
    assert words == expected
    assert len(words) == invariant_dimension(m, n)


@pytest.mark.parametrize("m, n", [(10, 2), (10, 3), (12, 2)])
def test_enumeration_count_matches_dp_beyond_brute_force(m, n):
    words = enumerate_balanced_words(m, n)
    assert len(words) == invariant_dimension(m, n)
    assert all(is_symplectic_lattice_word(w, n) and is_balanced(w) for w in words)


def test_letter_order():
    assert sorted([1, -1, 2, -2, 3, -3], key=lambda x: word_key([x])) == [1, 2, 3, -3, -2, -1]


def test_parse_and_format_round_trip():
    assert parse_word("1 2 -2 -1") == (1, 2, -2, -1)
    assert format_word((1, 2, -2, -1)) == "1 2 -2 -1"
    assert parse_word("") == ()
    with pytest.raises(InvalidInputError, match="'x'"):
        parse_word("1 x -1")
    with pytest.raises(InvalidInputError, match="'0'"):
        parse_word("1 0")


@pytest.mark.parametrize(
    "w, expected",
    [((1, 2, -2, -1), (1, 1, -1, -1)), ((1, -1, 1, -1), (1, -1, 1, -1)), ((), ())],
)
def test_pattern(w, expected):
    assert pattern(w) == expected


@pytest.mark.parametrize(
    "delta, n, expected",
    [
        ((1, -1, 1, -1), 1, (1, -1, 1, -1)),
        ((1, 1, -1, -1), 2, (1, 2, -2, -1)),
        ((1, 1, -1, 1, -1, -1), 2, (1, 2, -2, 2, -2, -1)),
        ((), 1, ()),
    ],
)
def test_lat_examples(delta, n, expected):
    assert lat(delta, n) == expected


def test_lat_errors():
    with pytest.raises(AlphabetOverflowError):
        lat((1, 1, -1, -1), 1)
    with pytest.raises(InvalidPatternError):
        lat((-1, 1), 2)
    with pytest.raises(InvalidPatternError):
        lat((1, 1), 2)
    with pytest.raises(InvalidPatternError):
        lat((1, 2, -1), 2)


def dyck_patterns(m):
    for delta in product((1, -1), repeat=m):
        sums = [sum(delta[: k + 1]) for k in range(m)]
        if all(s >= 0 for s in sums) and (not sums or sums[-1] == 0):
            yield delta


@pytest.mark.parametrize("m", [0, 2, 4, 6, 8])
def test_lat_is_smallest_alternating_word_with_its_pattern(m):
    n = m // 2 or 1
    for delta in dyck_patterns(m):
        word = lat(delta, n)
        assert pattern(word) == delta
        assert alternation_class(word) is AlternationClass.IN_M_PLUS
        rivals = [
            w
            for w in product([*range(1, n + 1), *range(-n, 0)], repeat=m)
            if pattern(w) == delta
            and is_balanced(w)
            and alternation_class(w) is AlternationClass.IN_M_PLUS
        ] if m <= 6 else []
        if rivals:
            assert min(rivals, key=word_key) == word


@pytest.mark.parametrize("m", [2, 4, 6, 8])
def test_lat_is_monotone_in_pattern_order(m):
    # +1 precedes -1 in pattern order, mirroring letter order
    pats = sorted(dyck_patterns(m), key=lambda d: [x == -1 for x in d])
    words = [lat(d, m // 2) for d in pats]
    assert [word_key(w) for w in words] == sorted(word_key(w) for w in words)


@pytest.mark.parametrize(
    "w, expected",
    [
        ((1, -1, 1, -1), AlternationClass.IN_M_PLUS),
        ((-1, 1, 1, -1), AlternationClass.IN_M),
        ((-1, 2, -2, 1), AlternationClass.IN_M),
        ((1, 1, -1, -1), AlternationClass.NOT_IN_M),
        ((1, 2, -2, -1), AlternationClass.IN_M_PLUS),
    ],
)
def test_alternation_class(w, expected):
    assert alternation_class(w) is expected


def test_alternation_class_needs_balance():
    with pytest.raises(InvalidInputError):
        alternation_class((1, 1, -1))


@given(st.lists(st.sampled_from([1, -1]), max_size=14))
def test_pattern_of_lat_round_trips(delta):
    delta = tuple(delta)
    sums = [sum(delta[: k + 1]) for k in range(len(delta))]
    if any(s < 0 for s in sums) or (sums and sums[-1] != 0):
        with pytest.raises(InvalidPatternError):
            lat(delta, 7)
        return
    assert pattern(lat(delta, 7)) == delta
