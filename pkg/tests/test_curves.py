"""Curve models: frozen equations, states, bidegrees, and the map sigma.

Oracle for the split: multiply the factors back and compare with the
unsplit model.  Oracle for sigma: map exact rational points of C and
plug them into D.
"""

from fractions import Fraction

import pytest

from bridgevar.curves import (STATE_CURVE, STATE_EMPTY, STATE_FULL_PLANE,
                              STATE_LINE_UNION, c_model, d_model, d_split,
                              sigma_containment_check, sigma_pull, sigma_push,
                              special_points_check, x_model)
from bridgevar.poly import ExactError


def test_figure_eight_equations_frozen():
    cm = c_model(2, -2)
    assert str(cm.equation) == "-r*y+y+r^2-r+1"
    assert cm.vars == ("r", "y") and cm.state == STATE_CURVE
    dm = d_model(2, -2)
    assert str(dm.equation) == "r*t-t-r"
    assert dm.bidegree == (1, 1)


def test_odd_parameter_swaps_into_place():
    cm = c_model(2, 3)          # k even, l odd: model built for (3, 2)
    assert (cm.k, cm.l) == (3, 2) and cm.swapped
    dm = d_model(2, 3)
    assert (dm.k, dm.l) == (3, 2) and dm.swapped
    assert d_model(3, 2).equation == dm.equation
    assert not d_model(3, 2).swapped


def test_c_model_rejects_two_odd_parameters():
    with pytest.raises(ExactError):
        c_model(3, 5)
    # but D exists there
    assert d_model(3, 5).state == STATE_CURVE


def test_degenerate_states():
    assert d_model(0, 0).state == STATE_FULL_PLANE
    assert d_model(0, 4).state == STATE_LINE_UNION
    assert d_model(1, 6).state == STATE_LINE_UNION
    assert d_model(2, 2).state == STATE_LINE_UNION     # trefoil
    assert d_model(-2, -2).state == STATE_LINE_UNION
    assert c_model(0, 4).state == STATE_EMPTY
    assert d_model(4, 6).state == STATE_CURVE


def test_bidegree_is_floor_halves():
    for k, l in ((4, 6), (5, 4), (-6, 8), (7, -2), (2, -2)):
        dm = d_model(k, l)
        assert dm.bidegree == (abs(dm.k) // 2, abs(dm.l) // 2)


def test_x_model_is_double_cover():
    xm = x_model(2, -2)
    cm = c_model(2, -2)
    # substituting y = x^2 - 2 doubles the y-degree
    assert xm.equation.degree_outer == 2 * cm.equation.degree_outer
    assert xm.vars == ("r", "x")


def test_d_split_reconstructs_product():
    for l in (4, 6, -4, 8):
        d0, d1 = d_split(l)
        base = d_model(l, l)
        prod = (d0.equation * d1.equation).primitive()
        assert prod in (base.equation.primitive(), -base.equation.primitive())
        assert str(d0.equation) in ("t-r", "-t+r")
        assert d1.bidegree == (abs(l) // 2 - 1, abs(l) // 2 - 1)
    with pytest.raises(ExactError):
        d_split(5)
    with pytest.raises(ExactError):
        d_split(0)


def test_sigma_maps_c_points_onto_d():
    # exact rational points of C(2,-2): solve the degree-1 y equation
    cm = c_model(2, -2)
    dm = d_model(2, -2)
    for r0 in (Fraction(3), Fraction(5, 2), Fraction(-1), Fraction(7, 3)):
        fib = cm.equation.eval_inner(r0)       # linear in y
        assert fib.degree == 1
        y0 = -Fraction(fib.c[0], fib.c[1])
        assert cm.equation.eval_point(r0, y0) == 0
        r1, t1 = sigma_push(2, -2, (r0, y0))
        assert r1 == r0
        assert dm.equation.eval_point(r1, t1) == 0
        # pull back where defined
        back = sigma_pull(2, -2, (r1, t1))
        assert back == (r0, y0)


def test_sigma_pull_indeterminate_locus():
    # Psi_2(r) = r - 2 vanishes at r = 2
    with pytest.raises(ExactError):
        sigma_pull(2, -2, (2, 5))


def test_sigma_containment_certificates():
    for k, l in ((2, -2), (2, 4), (3, 4), (-3, 6), (4, 4), (5, -4)):
        assert sigma_containment_check(k, l), (k, l)


def test_special_points_reports():
    rep = special_points_check(2, -2)
    assert rep.ok
    assert rep.c_point == (2, Fraction(2) - Fraction(4, 2 * -2))
    rep = special_points_check(3, 4)        # odd k: no special C point
    assert rep.ok and rep.c_point is None
    with pytest.raises(ExactError):
        special_points_check(0, 4)
    with pytest.raises(ExactError):
        special_points_check(3, 5)


def test_to_dict_round_trip_fields():
    d = d_model(4, 6).to_dict()
    assert d["kind"] == "D" and d["bidegree"] == [2, 3]
    assert d["state"] == "curve" and d["swapped"] is False
    assert isinstance(d["equation"], str) and d["notes"] == []
