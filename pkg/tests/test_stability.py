# -*- coding: utf-8 -*-
#
# Copyright (c) 2026, wallscope developers
# All rights reserved.
#
# Licensed under the BSD 3-Clause License:
# http://opensource.org/licenses/BSD-3-Clause
#


import fractions
import pytest
from conftest import random_char
from wallscope import err
from wallscope import stability
from wallscope.chern import Char3, line_bundle, twist
from wallscope.stability import INF, StabPoint, stab_point

Fraction = fractions.Fraction




def test_stab_point_validation():
    p = stab_point(2, -4)
    assert p.alpha_sq == 4 and p.beta == -4 and p.s == 1
    assert p.alpha == 2
    assert StabPoint.from_alpha_sq(12, 0).alpha is None
    with pytest.raises(err.DomainError):
        stab_point(0, -4)
    with pytest.raises(err.DomainError):
        StabPoint(1, 0, 0)
    with pytest.raises(err.DomainError):
        stab_point(0.5, 0)


def test_tilt_charge_and_slope(v):
    p = stab_point(1, -4)
    z = stability.tilt_charge(v, p)
    assert (z.re, z.im) == (Fraction(-3, 2), 4)
    assert stability.tilt_slope(v, p) == Fraction(3, 8)


def test_tilt_slope_is_infinite_when_ch1_vanishes(v):
    assert stability.tilt_slope(v, stab_point(1, 0)) == INF
    assert stability.tilt_slope(Char3(0, 0, 0, 1), stab_point(1, -3)) == INF


def test_tilt_charge_matches_formula(rng):
    for _ in range(200):
        c = random_char(rng)
        p = StabPoint(Fraction(rng.randint(1, 50), rng.randint(1, 5)), Fraction(rng.randint(-20, 20), rng.randint(1, 5)))
        t = twist(c, p.beta)
        z = stability.tilt_charge(c, p)
        assert z.re == -t.ch2 + p.alpha_sq*t.ch0/2
        assert z.im == t.ch1


def test_bridgeland_charge(v):
    p = StabPoint(1, -4, Fraction(4, 5))
    z = stability.bridgeland_charge(v, p)
    # twisted v = (1, 4, 2, 5/3)
    assert z.re == Fraction(-5, 3) + (Fraction(4, 5) + Fraction(1, 6))*4
    assert z.im == Fraction(3, 2)
    assert stability.bridgeland_slope(v, p) == -z.re/z.im


def test_bridgeland_imaginary_part_does_not_depend_on_s(v):
    for s in (Fraction(1, 10), 1, 7):
        assert stability.bridgeland_charge(v, StabPoint(3, -5, s)).im == stability.bridgeland_charge(v, StabPoint(3, -5)).im


def test_compare_slopes():
    assert stability.compare_slopes(INF, INF) == 0
    assert stability.compare_slopes(Fraction(1, 2), INF) == -1
    assert stability.compare_slopes(INF, -7) == 1
    assert stability.compare_slopes(Fraction(2, 4), Fraction(1, 2)) == 0


def test_compare_tilt_slopes_inside_first_wall(v):
    # O(-2) has larger slope than v inside the wall of center -4, radius 2
    sub = line_bundle(-2)
    assert stability.compare_tilt_slopes(sub, v, stab_point(1, -4)) == 1
    assert stability.compare_tilt_slopes(sub, v, stab_point(4, -4)) == -1


def test_discriminant_and_bmt(v):
    assert stability.bg_discriminant(v) == 12
    assert stability.bg_discriminant(line_bundle(5)) == 0
    assert stability.bmt_quantity(v, stab_point(1, -4)) == -12
    assert not stability.bmt_holds(v, stab_point(1, -4))
    assert stability.bmt_holds(line_bundle(-1), stab_point(1, -4))


def test_tilt_examples(v):
    p = stab_point(2, -4)
    assert stability.tilt_charge(v, p) == stability.ChargeValue(0, 4)
    assert stability.tilt_slope(v, p) == 0
    assert stability.tilt_slope(line_bundle(-2), p) == 0
    assert stability.tilt_charge(Char3(1, 0, 0, 0), stab_point(1, 0)) == stability.ChargeValue(Fraction(1, 2), 0)
    assert stability.tilt_charge(Char3(0, 2, -8, Fraction(49, 3)), stab_point(1, -4)) == stability.ChargeValue(0, 2)


def test_bridgeland_slope_is_infinite_on_hyperbola(v):
    # beta^2 - alpha^2 = 12 at (alpha^2, beta) = (4, -4)
    for s in (Fraction(4, 5), 1, 3):
        p = StabPoint(4, -4, s)
        assert stability.bridgeland_charge(v, p).im == 0
        assert stability.bridgeland_slope(v, p) == INF


def test_bridgeland_charge_of_points():
    for k in range(1, 5):
        z = stability.bridgeland_charge(Char3(0, 0, 0, k), StabPoint(3, Fraction(-7, 2)))
        assert (z.re, z.im) == (-k, 0)


def test_slopes_are_scale_invariant(rng):
    for _ in range(200):
        c = random_char(rng)
        p = StabPoint(Fraction(rng.randint(1, 40), rng.randint(1, 4)), Fraction(rng.randint(-20, 20), rng.randint(1, 4)),
                      Fraction(rng.randint(1, 9), rng.randint(1, 9)))
        k = rng.randint(1, 9)
        assert stability.tilt_slope(k*c, p) == stability.tilt_slope(c, p)
        assert stability.bridgeland_slope(k*c, p) == stability.bridgeland_slope(c, p)


def test_discriminant_is_twist_invariant(rng):
    for _ in range(1000):
        c = random_char(rng)
        beta = Fraction(rng.randint(-30, 30), rng.randint(1, 8))
        assert stability.bg_discriminant(twist(c, beta)) == stability.bg_discriminant(c)
    assert stability.bg_discriminant(Char3(0, 2, -8, 0)) == 4


def test_bmt_vanishes_on_line_bundles(rng):
    for _ in range(200):
        p = StabPoint(Fraction(rng.randint(1, 40), rng.randint(1, 4)), Fraction(rng.randint(-20, 20), rng.randint(1, 4)))
        assert stability.bmt_quantity(line_bundle(rng.randint(-8, 8)), p) == 0
    assert stability.bmt_quantity(Char3(0, 0, 1, -1), stab_point(1, 0)) == 4
