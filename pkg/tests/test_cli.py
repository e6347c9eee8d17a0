import io
import json
import subprocess
import sys
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from atiyah import serialize
from atiyah.algebra import B, Form, dt, t, theta, trace
from atiyah.cech import CechCochain
from atiyah.cli import run
from atiyah.lift import LiftTuple, enumerate_trace_basis, lift_exponential_atiyah

GOLDEN = Path(__file__).parent / "golden"


def cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


@pytest.mark.parametrize("k", [1, 2, 3, 4])
@pytest.mark.parametrize("fmt", ["json", "text"])
def test_lift_golden(k, fmt):
    code, out, _ = cli("lift", "--k", str(k), "--format", fmt)
    assert code == 0
    assert out == (GOLDEN / f"lift_k{k}.{'json' if fmt == 'json' else 'txt'}").read_text()


@pytest.mark.parametrize("k", [1, 2, 3])
@pytest.mark.parametrize("fmt", ["json", "text"])
def test_simplicial_golden(k, fmt):
    code, out, _ = cli("simplicial", "--k", str(k), "--format", fmt)
    assert code == 0
    assert out == (GOLDEN / f"simplicial_k{k}.{'json' if fmt == 'json' else 'txt'}").read_text()


def test_lift_k2_verify_text():
    code, out, _ = cli("lift", "--k", "2", "--verify", "--format", "text")
    assert code == 0
    assert "(1, 3): 1/3 tr(B1^3)" in out
    assert "closed: true" in out


def test_lift_json_schema():
    _, out, _ = cli("lift", "--k", "2", "--format", "json")
    assert out.strip() == (
        '{"k":2,"components":[{"p":1,"q":3,"terms":[{"coeff":"1/3","t":[],"dt":[],"word":[1,1,1]}]},'
        '{"p":2,"q":2,"terms":[{"coeff":"1/1","t":[],"dt":[],"word":[1,2]}]}],'
        '"sign_convention":"delta_plus_(-1)^p_d"}'
    )


def test_lift_latex_labels():
    code, out, _ = cli("lift", "--k", "2", "--format", "latex")
    assert code == 0
    assert r"\underbrace{\frac{1}{3} \operatorname{tr}(B_{1}^{3})}_{p=1}" in out
    assert "_{p=0}" in out and "_{p=4}" in out


def test_deterministic_output():
    assert cli("lift", "--k", "3", "--format", "json") == cli("lift", "--k", "3", "--format", "json")


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_golden_round_trip(k):
    text = (GOLDEN / f"lift_k{k}.json").read_text()
    parsed = serialize.parse_lift(text)
    assert parsed == lift_exponential_atiyah(k)
    assert serialize.serialize_lift(parsed) + "\n" == text


@st.composite
def lift_tuples(draw):
    k = draw(st.integers(1, 3))
    comps = []
    for p in range(1, k + 1):
        words = enumerate_trace_basis(p, 2 * k - p).elements
        chosen = draw(st.lists(st.sampled_from(words), max_size=4)) if words else []
        coeffs = {w: draw(st.fractions(min_value=-5, max_value=5, max_denominator=12)) for w in chosen}
        comps.append(CechCochain.from_words(p, 2 * k - p, coeffs))
    return LiftTuple(k, comps)


@settings(max_examples=50, deadline=None)
@given(lift_tuples())
def test_round_trip_property(tup):
    text = serialize.serialize_lift(tup)
    assert serialize.parse_lift(text) == tup
    for comp in json.loads(text)["components"]:
        for term in comp["terms"]:
            assert "/" in term["coeff"]


def test_term_round_trip_with_t_dt_and_abelian():
    f = trace(t(1, 2) * t(2) * B(1) * theta("dz/z") * dt(1) * dt(2)).scale(Fraction(-3, 4))
    terms = serialize.terms_to_json(f)
    assert terms == [{"coeff": "-3/4", "t": [[1, 2], [2, 1]], "dt": [1, 2], "word": [1, "dz/z"]}]
    assert serialize.terms_from_json(terms) == f
    g = t(1) * B(2) + dt(1)
    assert serialize.terms_from_json(serialize.terms_to_json(g), Form) == g


def test_malformed_coefficients():
    for bad in ("2/4", "1", "0.5"):
        with pytest.raises(ValueError):
            serialize.coeff_from_str(bad)


def test_integrate():
    assert cli("integrate", "--p", "2", "--exponents", "1,1")[1] == "1/24\n"
    assert cli("integrate", "--p", "2", "--exponents", "1,0")[1] == "1/6\n"
    assert cli("integrate", "--p", "2", "--exponents", "2,0")[1] == "1/12\n"
    assert cli("integrate", "--p", "0", "--exponents", "")[1] == "1\n"


@pytest.mark.parametrize(
    "argv",
    [
        ["identity", "--k", "7"],
        ["lift", "--k", "9"],
        ["lift", "--k", "0"],
        ["lift", "--k", "two"],
        ["lift", "--k", "2", "--unknown"],
        ["compare", "--k", "4"],
        ["integrate", "--p", "2", "--exponents", "1"],
        ["integrate", "--p", "2", "--exponents", "a,b"],
        ["simplicial", "--k", "2", "--level", "3"],
        ["basis", "--p", "0", "--q", "2"],
        ["nonsense"],
        [],
    ],
)
def test_malformed_input_exit_2(argv):
    code, out, err = cli(*argv)
    assert code == 2
    assert out == ""
    assert len(err.strip().splitlines()) == 1


def test_identity_and_compare():
    code, out, _ = cli("identity", "--k", "3")
    assert code == 0 and "identity A = B: true" in out
    code, out, _ = cli("compare", "--k", "2")
    assert code == 0 and "agreement (top component after skew-symmetrisation): true" in out


def test_max_k_flag_and_env(monkeypatch):
    assert cli("--max-k", "2", "lift", "--k", "3")[0] == 2
    monkeypatch.setenv("ATIYAH_MAX_K", "2")
    assert cli("lift", "--k", "3")[0] == 2
    monkeypatch.setenv("ATIYAH_IDENTITY_MAX_K", "3")
    assert cli("identity", "--k", "4")[0] == 2
    monkeypatch.setenv("ATIYAH_MAX_K", "x")
    assert cli("lift", "--k", "1")[0] == 2


def test_basis_listing():
    code, out, _ = cli("basis", "--p", "2", "--q", "4")
    assert code == 0
    assert out.splitlines()[0] == "(p, q) = (2, 4): 4 classes"


def test_coeffs():
    code, out, _ = cli("coeffs", "--max", "4")
    assert code == 0
    rows = [line.split(" | ") for line in out.splitlines()[1:]]
    assert [r[3] for r in rows] == ["1", "1/3", "1/10", "1/35"]


def test_green_example_cli():
    code, out, _ = cli("green-example")
    assert code == 0
    assert "kappa(nabla^1_1): -dz/z dt1" in out
    assert "total class at^tot(E^1): 1 + dz/z" in out


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "atiyah", "integrate", "--p", "2", "--exponents", "1,1"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout == "1/24\n"
