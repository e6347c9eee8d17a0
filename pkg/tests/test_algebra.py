from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from atiyah.algebra import (
    B,
    Form,
    TraceForm,
    dt,
    format_poly,
    normalize_trace_word,
    one,
    t,
    theta,
    trace,
)
from atiyah.simplicial import barycentric_curvature, connection_form


def test_dB_is_minus_B_squared():
    assert B(1).d() == -(B(1) * B(1))


def test_dt_anticommutes_with_B():
    assert dt(1) * B(2) == -(B(2) * dt(1))
    assert format_poly(dt(1) * B(1)) == "-B1 dt1"


def test_dt_wedge():
    assert dt(1) * dt(1) == 0
    assert dt(2) * dt(1) == -(dt(1) * dt(2))


def test_t_is_central():
    assert t(1) * B(1) == B(1) * t(1)
    assert t(1) * t(1) == t(1, 2)


def test_dt_of_t():
    assert t(1, 3).d() == dt(1).scale(3) * t(1, 2)


def test_theta_square_zero_and_closed():
    th = theta("dz/z")
    assert th * th == 0
    assert th.d() == 0
    assert th * B(1) == -(B(1) * th)


def test_d_of_t_B_sign():
    # d(t1 B1) = t1 dB1 - B1 dt1
    assert (t(1) * B(1)).d() == t(1) * B(1).d() - B(1) * dt(1)


def test_trace_even_powers_vanish():
    for k in range(1, 6):
        assert trace(B(1) ** (2 * k)) == 0
        assert trace(B(1) ** (2 * k - 1)) != 0


def test_trace_graded_cyclic_two_letters():
    assert trace(B(2) * B(1)) == -trace(B(1) * B(2))


def test_trace_three_letters_cyclic_no_sign():
    assert trace(B(3) * B(1) * B(2)) == trace(B(1) * B(2) * B(3))


def test_normalize_trace_word_examples():
    assert normalize_trace_word(()) == ((), 1)
    assert normalize_trace_word((1, 1)) is None
    assert normalize_trace_word((2, 1, 2, 1)) == ((1, 2, 1, 2), -1)
    assert normalize_trace_word((1, 1, "u")) is None
    assert normalize_trace_word(("u", 1, 1, 1)) == ((1, 1, 1, "u"), -1)
    assert normalize_trace_word((2, 1)) == ((1, 2), -1)


@given(st.lists(st.integers(1, 3), min_size=1, max_size=7))
def test_normalize_trace_word_rotation_invariant(word):
    word = tuple(word)
    m = len(word)
    base = normalize_trace_word(word)
    for r in range(m):
        rotated = word[r:] + word[:r]
        got = normalize_trace_word(rotated)
        if base is None:
            assert got is None
            continue
        sign = -1 if (m - 1) * r % 2 else 1
        assert got == (base.letters, base.sign * sign)


# ---------------------------------------------------------------------------
# random forms

letters = st.one_of(st.integers(1, 3), st.sampled_from(["u", "v"]))
texps = st.dictionaries(st.integers(1, 3), st.integers(1, 2), max_size=2).map(lambda d: tuple(sorted(d.items())))
dts = st.sets(st.integers(1, 3), max_size=2).map(lambda s: tuple(sorted(s)))
words = st.lists(letters, max_size=3).map(tuple)
coeffs = st.fractions(min_value=-3, max_value=3, max_denominator=4)


def _monomial(te, ds, w, c):
    f = one().scale(c)
    for i, e in te:
        f = f * t(i, e)
    for x in w:
        f = f * (B(x) if isinstance(x, int) else theta(x))
    for i in ds:
        f = f * dt(i)
    return f


monomials = st.builds(_monomial, texps, dts, words, coeffs)
forms = st.lists(monomials, max_size=3).map(lambda fs: sum(fs, Form()))


@st.composite
def homogeneous(draw, degree):
    n = draw(st.integers(0, degree))
    w = draw(st.lists(letters, min_size=degree - n, max_size=degree - n).map(tuple))
    ds = draw(st.lists(st.integers(1, 3), min_size=n, max_size=n, unique=True).map(lambda l: tuple(sorted(l))))
    return _monomial(draw(texps), ds, w, draw(coeffs))


@settings(max_examples=60, deadline=None)
@given(forms)
def test_d_squared_zero(f):
    assert f.d().d() == 0


@settings(max_examples=60, deadline=None)
@given(forms, forms, forms)
def test_associative(f, g, h):
    assert (f * g) * h == f * (g * h)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 3), st.integers(0, 3), st.data())
def test_leibniz(a, b, data):
    f = data.draw(homogeneous(a))
    g = data.draw(homogeneous(b))
    sign = -1 if a % 2 else 1
    assert (f * g).d() == f.d() * g + (f * g.d()).scale(sign)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 3), st.integers(0, 3), st.data())
def test_trace_graded_commutator(a, b, data):
    f = data.draw(homogeneous(a))
    g = data.draw(homogeneous(b))
    sign = -1 if (a * b) % 2 else 1
    assert trace(f * g) == trace(g * f).scale(sign)


@settings(max_examples=60, deadline=None)
@given(forms)
def test_d_commutes_with_trace(f):
    assert trace(f.d()) == trace(f).d()


@pytest.mark.parametrize("p", [0, 1, 2, 3, 4])
def test_bianchi(p):
    w = connection_form(p)
    kappa = barycentric_curvature(p)
    assert kappa.d() + w * kappa - kappa * w == 0


def test_curvature_level_one():
    kappa = barycentric_curvature(1)
    expected = (t(1) - t(1, 2)) * B(1).d() - B(1) * dt(1)
    assert kappa == expected


def test_trace_form_from_words():
    f = TraceForm.from_words({(2, 1): Fraction(1, 2), (1, 1): 5})
    assert f == TraceForm.from_words({(1, 2): Fraction(-1, 2)})
    assert format_poly(trace(B(1) ** 3).scale(Fraction(1, 3))) == "1/3 tr(B1^3)"
