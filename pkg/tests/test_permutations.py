"""Unit tests for parsing, sorting passes, orbits, and suffix bounds."""

import math

import pytest

from stacksimplex import (
    EmptyPermutation,
    MalformedToken,
    NotABijection,
    Permutation,
    TooShort,
    all_permutations,
    fixed_suffix_length,
    identity,
    is_2ln1,
    is_ln1,
    ln1_permutations,
    parse_permutation,
    predicted_sortability_bound,
    sort_orbit,
    sortability_index,
    stack_sort_pass,
    suffix_decompose,
    two_ln1_permutations,
)


def brute_force_pass(entries):
    """Reference one-pass sorter: simulate the stack explicitly."""
    stack, out = [], []
    for x in entries:
        while stack and stack[-1] < x:
            out.append(stack.pop())
        stack.append(x)
    while stack:
        out.append(stack.pop())
    return tuple(out)


class TestParsing:
    def test_space_separated(self):
        assert parse_permutation("3 2 4 1").entries == (3, 2, 4, 1)

    def test_comma_separated(self):
        assert parse_permutation("3,2,4,1").entries == (3, 2, 4, 1)

    def test_digit_string(self):
        assert parse_permutation("3241").entries == (3, 2, 4, 1)

    def test_multidigit_tokens(self):
        p = parse_permutation("2 3 4 5 6 7 8 9 10 1")
        assert p.n == 10 and p.entries[-2:] == (10, 1)

    def test_empty_rejected(self):
        with pytest.raises(EmptyPermutation):
            parse_permutation("   ")

    def test_non_numeric_rejected(self):
        with pytest.raises(MalformedToken):
            parse_permutation("1 2 x")

    def test_zero_rejected(self):
        with pytest.raises(MalformedToken):
            parse_permutation("0 1 2")

    def test_repeat_rejected(self):
        with pytest.raises(NotABijection):
            parse_permutation("1 2 2")

    def test_out_of_range_rejected(self):
        with pytest.raises(NotABijection):
            parse_permutation("1 2 5")

    def test_constructor_validates(self):
        with pytest.raises(NotABijection):
            Permutation((2, 3))
        with pytest.raises(EmptyPermutation):
            Permutation(())

    def test_str_is_space_separated(self):
        assert str(parse_permutation("3241")) == "3 2 4 1"


class TestStackSortPass:
    def test_single_pass_example(self):
        assert stack_sort_pass(parse_permutation("231")).entries == (2, 1, 3)

    def test_identity_is_fixed(self):
        e = identity(5)
        assert stack_sort_pass(e) == e

    def test_matches_reference_simulation_exhaustively(self):
        for n in range(1, 7):
            for p in all_permutations(n):
                assert stack_sort_pass(p).entries == brute_force_pass(p.entries)


class TestOrbits:
    def test_orbit_3241(self):
        chain = [str(q) for q in sort_orbit(parse_permutation("3241")).chain]
        assert chain == ["3 2 4 1", "2 3 1 4", "2 1 3 4", "1 2 3 4"]

    def test_orbit_7541632(self):
        chain = [str(q) for q in sort_orbit(parse_permutation("7541632")).chain]
        assert chain == [
            "7 5 4 1 6 3 2",
            "1 4 5 2 3 6 7",
            "1 4 2 3 5 6 7",
            "1 2 3 4 5 6 7",
        ]

    def test_orbit_31452(self):
        chain = [str(q) for q in sort_orbit(parse_permutation("31452")).chain]
        assert chain == ["3 1 4 5 2", "1 3 4 2 5", "1 3 2 4 5", "1 2 3 4 5"]

    def test_index_is_chain_length_minus_one(self):
        for text in ["231", "3241", "7541632", "12345"]:
            orbit = sort_orbit(parse_permutation(text))
            assert orbit.index == len(orbit.chain) - 1
            assert orbit.index == sortability_index(orbit.chain[0])

    def test_identity_orbit_is_trivial(self):
        orbit = sort_orbit(identity(4))
        assert orbit.index == 0 and len(orbit.chain) == 1

    def test_index_at_most_n_minus_one(self):
        for n in range(1, 7):
            for p in all_permutations(n):
                assert sortability_index(p) <= n - 1


class TestSuffixBounds:
    def test_decomposition_example(self):
        d = suffix_decompose(parse_permutation("2451367"), "ascending")
        assert d.head == (2, 4, 5)
        assert d.tail == (1, 3, 6, 7)
        assert d.exact

    def test_descending_example(self):
        d = suffix_decompose(parse_permutation("2457631"), "descending")
        assert d.head == (2, 4, 5)
        assert d.tail == (7, 6, 3, 1)
        assert d.exact

    def test_identity_bounds(self):
        b = predicted_sortability_bound(identity(5))
        assert b.bound == 0 and b.exact

    def test_bound_holds_and_exactness_certifies(self):
        for n in range(1, 8):
            for p in all_permutations(n):
                b = predicted_sortability_bound(p)
                k = sortability_index(p)
                assert k <= b.bound
                if b.exact:
                    assert k == b.bound

    def test_direction_validated(self):
        with pytest.raises(ValueError):
            suffix_decompose(identity(3), "sideways")


class TestFixedSuffix:
    def test_identity_suffix_is_everything(self):
        assert fixed_suffix_length(identity(6)) == 6

    def test_strict_growth_under_one_pass(self):
        for n in range(2, 8):
            for p in all_permutations(n):
                if p.is_identity:
                    continue
                assert fixed_suffix_length(stack_sort_pass(p)) > fixed_suffix_length(p)


class TestEndsWithLargestThenOne:
    def test_positive_cases(self):
        assert is_ln1(parse_permutation("2341"))
        assert is_ln1(parse_permutation("21"))
        assert is_2ln1(parse_permutation("231"))
        assert is_2ln1(parse_permutation("23451"))

    def test_negative_cases(self):
        assert not is_ln1(parse_permutation("1234"))
        assert not is_2ln1(parse_permutation("3241"))

    def test_too_short_raises(self):
        with pytest.raises(TooShort):
            is_ln1(identity(1))
        with pytest.raises(TooShort):
            is_2ln1(parse_permutation("21"))

    def test_characterizes_maximal_index(self):
        for n in range(2, 8):
            for p in all_permutations(n):
                assert is_ln1(p) == (sortability_index(p) == n - 1)

    def test_generators_match_predicates(self):
        for n in range(2, 7):
            expected = [p for p in all_permutations(n) if is_ln1(p)]
            assert list(ln1_permutations(n)) == expected
            assert len(expected) == math.factorial(n - 2)
        for n in range(3, 7):
            expected = [p for p in all_permutations(n) if is_2ln1(p)]
            assert list(two_ln1_permutations(n)) == expected
            assert len(expected) == math.factorial(n - 3)
