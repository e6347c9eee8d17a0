from fractions import Fraction

import pytest

from atiyah.freealg import FreeWordPolynomial
from atiyah.verify import (
    agreement_check,
    identity_sides,
    in_skew_eigenspaces,
    leading_coefficient_check,
    leading_coefficient_law,
    permutation_identity_check,
    skew_eigenspace_dimension,
    transposition_action,
)

x = FreeWordPolynomial.letter


def test_identity_k1():
    a, b = identity_sides(1)
    assert a == b == (x(1) - x(0)) * 2


def test_identity_k2_expanded():
    a, b = identity_sides(2)
    assert a == b
    # every word uses two distinct letters out of x0, x1, x2
    assert all(len(set(w)) == 2 for w in a.terms)
    assert len(a) == 6


@pytest.mark.parametrize("k", [1, 2, 3, 4, 5])
def test_identity(k):
    assert permutation_identity_check(k)


def test_identity_parallel_matches_serial():
    assert identity_sides(4, jobs=2) == identity_sides(4)


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_sides_in_skew_eigenspaces(k):
    a, b = identity_sides(k)
    assert in_skew_eigenspaces(a, k)
    assert in_skew_eigenspaces(b, k)


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_identity_word_coefficient(k):
    # the identity permutation and the k transpositions (0 j) contribute
    a, b = identity_sides(k)
    word = tuple(range(1, k + 1))
    assert a.coefficient(word) == b.coefficient(word) == k + 1


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_skew_eigenspace_dimension(k):
    assert skew_eigenspace_dimension(k) == 1


def test_skew_eigenspace_range():
    with pytest.raises(ValueError):
        skew_eigenspace_dimension(5)


def test_transposition_action():
    p = x(0) * x(1) - x(1) * x(2)
    assert transposition_action(p, 0, 2) == x(2) * x(1) - x(1) * x(0)


def test_agreement_k1_k2_on_the_nose():
    for k in (1, 2):
        r = agreement_check(k)
        assert r.agrees
        assert all(status == "equal" for _, status in r.components)


def test_agreement_k3():
    r = agreement_check(3)
    assert r.agrees
    assert r.components == [(1, "equal"), (2, "equal after Alt"), (3, "equal after Alt")]


def test_leading_coefficients():
    rows = leading_coefficient_check(4)
    assert [r.law for r in rows] == [Fraction(1), Fraction(1, 3), Fraction(1, 10), Fraction(1, 35)]
    assert [r.lift for r in rows] == [Fraction(1), Fraction(1, 3), Fraction(-1, 10), Fraction(-1, 35)]
    assert all(r.ok for r in rows)
    assert all(r.lift == r.simplicial for r in rows)


def test_leading_coefficient_law():
    assert leading_coefficient_law(5) == Fraction(4 * 3 * 2 * 120, 362880)
