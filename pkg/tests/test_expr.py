from fractions import Fraction

import pytest

from atiyah.cech import CechCochain
from atiyah.expr import ParseError, cochain, parse
from atiyah.freealg import FreeWordPolynomial

x = FreeWordPolynomial.letter


def test_parse_products_and_powers():
    assert parse("A^2 B") == x(1) * x(1) * x(2)
    assert parse("(B-A)^2") == (x(2) - x(1)) * (x(2) - x(1))
    assert parse("X") == x(2) - x(1)


def test_parse_coefficients():
    assert parse("13/5 A^5 - A") == x(1) ** 5 * Fraction(13, 5) - x(1)
    assert parse("-1/4 AXAX") == (x(1) * (x(2) - x(1))) ** 2 * Fraction(-1, 4)


def test_parse_errors():
    for bad in ("A +", "Q", "(A", "A^"):
        with pytest.raises(ParseError):
            parse(bad)


def test_cochain_scale():
    assert cochain("A^3", 1, 3, Fraction(1, 3)) == CechCochain.from_words(1, 3, {(1, 1, 1): Fraction(1, 3)})
