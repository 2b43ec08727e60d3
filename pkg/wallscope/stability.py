# -*- coding: utf-8 -*-
#
# Copyright (c) 2026, wallscope developers
# All rights reserved.
#
# Licensed under the BSD 3-Clause License:
# http://opensource.org/licenses/BSD-3-Clause
#


'''
Tilt and Bridgeland central charges and slopes on P^3, evaluated exactly.

Stability here is purely numerical:  nothing checks that a character lies in
the tilted heart Coh^beta or in the double tilt Coh^{alpha,beta}.  Slopes are
extended rationals, with `INF` (`math.inf`) for objects of infinite slope.
'''


import dataclasses
import fractions
import math
from . import err
from . import util
from .chern import twist

Fraction = fractions.Fraction

INF = math.inf




@dataclasses.dataclass(frozen=True)
class StabPoint(object):
    '''
    A point (alpha, beta, s) of the stability space.  Only alpha^2 enters any
    formula, so it is alpha^2 that is stored; this keeps points with
    irrational alpha, such as wall apexes, exact.
    '''
    alpha_sq: Fraction
    beta: Fraction
    s: Fraction = Fraction(1)

    def __post_init__(self):
        for name in ('alpha_sq', 'beta', 's'):
            object.__setattr__(self, name, util.to_rational(getattr(self, name)))
        if self.alpha_sq <= 0:
            raise err.DomainError('alpha must be positive')
        if self.s <= 0:
            raise err.DomainError('s must be positive')


    @classmethod
    def from_alpha_sq(cls, alpha_sq, beta, s=1):
        return cls(alpha_sq, beta, s)


    @property
    def alpha(self):
        '''
        alpha itself when alpha^2 is the square of a rational, else None.
        '''
        n, d = self.alpha_sq.numerator, self.alpha_sq.denominator
        rn, rd = math.isqrt(n), math.isqrt(d)
        if rn*rn == n and rd*rd == d:
            return Fraction(rn, rd)
        return None


def stab_point(alpha, beta, s=1):
    alpha = util.to_rational(alpha)
    if alpha <= 0:
        raise err.DomainError('alpha must be positive, got {0}'.format(util.format_rational(alpha)))
    return StabPoint(alpha**2, beta, s)




@dataclasses.dataclass(frozen=True)
class ChargeValue(object):
    re: Fraction
    im: Fraction




def tilt_charge(c, p):
    '''
    Z^tilt = -ch2^beta + (alpha^2/2) ch0 + i ch1^beta.
    '''
    t = twist(c, p.beta)
    return ChargeValue(-t.ch2 + p.alpha_sq/2*t.ch0, t.ch1)


def _slope(numerator, denominator):
    if denominator == 0:
        return INF
    return numerator / denominator


def tilt_slope(c, p):
    '''
    nu = (ch2^beta - (alpha^2/2) ch0) / ch1^beta, or `INF` when ch1^beta = 0.
    '''
    z = tilt_charge(c, p)
    return _slope(-z.re, z.im)


def bridgeland_charge(c, p):
    '''
    Z = -ch3^beta + (s + 1/6) alpha^2 ch1^beta + i (ch2^beta - (alpha^2/2) ch0).
    '''
    t = twist(c, p.beta)
    re = -t.ch3 + (p.s + Fraction(1, 6))*p.alpha_sq*t.ch1
    im = t.ch2 - p.alpha_sq/2*t.ch0
    return ChargeValue(re, im)


def bridgeland_slope(c, p):
    z = bridgeland_charge(c, p)
    return _slope(-z.re, z.im)


def compare_slopes(x, y):
    '''
    Three-way comparison of extended slopes.
    '''
    if x == y:
        return 0
    return -1 if x < y else 1


def compare_tilt_slopes(a, b, p):
    return compare_slopes(tilt_slope(a, p), tilt_slope(b, p))




def bg_discriminant(c):
    '''
    Bogomolov-Gieseker discriminant ch1^2 - 2 ch0 ch2.
    '''
    return c.ch1**2 - 2*c.ch0*c.ch2


def bmt_quantity(c, p):
    '''
    alpha^2 [(ch1^beta)^2 - 2 ch0 ch2^beta] + 4 (ch2^beta)^2 - 6 ch1^beta ch3^beta.

    Tilt-semistable objects with nu = 0 at (alpha, beta) have a non-negative
    value.
    '''
    t = twist(c, p.beta)
    return p.alpha_sq*(t.ch1**2 - 2*t.ch0*t.ch2) + 4*t.ch2**2 - 6*t.ch1*t.ch3


def bmt_holds(c, p):
    return bmt_quantity(c, p) >= 0
