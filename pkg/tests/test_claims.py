"""Unit tests for the verification claim registry."""

import pytest

from stacksimplex import ClaimResult, claim_names, run_claim


EXPECTED_NAMES = (
    "simplex-theorem",
    "ln1-volume",
    "parallelepiped-det",
    "2ln1-hollow",
    "2ln1-hstar",
    "point-bound",
    "fixed-suffix",
    "trailing-zeros",
)


class TestRegistry:
    def test_names_are_fixed(self):
        assert claim_names() == EXPECTED_NAMES

    def test_unknown_name_raises(self):
        with pytest.raises(KeyError):
            run_claim("no-such-claim", 4)

    def test_every_claim_passes_small_n(self):
        for name in claim_names():
            for n in range(2, 6):
                result = run_claim(name, n)
                assert isinstance(result, ClaimResult)
                assert result.passed, (name, n, result.counterexample)
                assert result.counterexample is None
                assert result.name == name and result.n == n

    def test_vacuous_below_minimum_n(self):
        # 2Ln1 permutations need n >= 3; the claims hold vacuously at n = 2
        assert run_claim("2ln1-hollow", 2).passed
        assert run_claim("2ln1-hstar", 2).passed
