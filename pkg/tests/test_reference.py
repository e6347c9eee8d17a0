from atiyah.lift import lift_exponential_atiyah
from atiyah.reference import CORRECTED, P26, P35, VERBATIM, reference_lift, staircase_check


def test_repairs_touch_one_coefficient_each():
    assert VERBATIM["P26"] == P26 and VERBATIM["P35"] == P35
    assert CORRECTED["P26"] != P26 and CORRECTED["P35"] != P35
    assert len(CORRECTED["P26"]) == len(P26) - 2
    assert len(CORRECTED["P35"]) == len(P35) - 1


def test_outer_components_match_lift():
    ours = lift_exponential_atiyah(4)
    ref = reference_lift()
    assert ref.component(1) == ours.component(1)
    assert ref.component(4) == ours.component(4)


def test_verbatim_fails_middle_squares():
    check = staircase_check(reference_lift(False))
    assert not check.satisfied
    assert check.equations["delta c_4 = 0"]
    assert check.equations["d c_1 = 0"]
    assert not check.equations["delta c_3 = ±d c_4"]


def test_repaired_closes():
    check = staircase_check(reference_lift(True))
    assert check.satisfied
    assert check.signs == (1, -1, -1)


def test_our_lift_closes_under_its_own_signs():
    check = staircase_check(lift_exponential_atiyah(4))
    assert check.satisfied
    assert check.signs == (-1, 1, -1)
