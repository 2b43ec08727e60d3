# -*- coding: utf-8 -*-
#
# Copyright (c) 2026, wallscope developers
# All rights reserved.
#
# Licensed under the BSD 3-Clause License:
# http://opensource.org/licenses/BSD-3-Clause
#


'''
Chern characters on P^3 and on a plane P in P^3.

A character on P^3 is stored as the coefficients of 1, H, H^2, H^3 with
H^3 = [point]; a character on the plane as the coefficients of 1, h, [point].
All arithmetic is exact (`fractions.Fraction`).
'''


import collections
import dataclasses
import fractions
from . import err
from . import util

Fraction = fractions.Fraction




@dataclasses.dataclass(frozen=True)
class Char3(object):
    '''
    Chern character (ch0, ch1, ch2, ch3) of an object on P^3.
    '''
    ch0: Fraction
    ch1: Fraction
    ch2: Fraction
    ch3: Fraction

    def __post_init__(self):
        for name in ('ch0', 'ch1', 'ch2', 'ch3'):
            object.__setattr__(self, name, util.to_rational(getattr(self, name)))


    def as_tuple(self):
        return (self.ch0, self.ch1, self.ch2, self.ch3)


    def truncated(self):
        '''
        The triple (ch0, ch1, ch2), which is all that tilt walls depend on.
        '''
        return (self.ch0, self.ch1, self.ch2)


    @property
    def is_lattice(self):
        return (self.ch0.denominator == 1 and self.ch1.denominator == 1 and
                (2*self.ch2).denominator == 1 and (6*self.ch3).denominator == 1)


    def __add__(self, other):
        if not isinstance(other, Char3):
            return NotImplemented
        return Char3(*(x + y for x, y in zip(self.as_tuple(), other.as_tuple())))


    def __sub__(self, other):
        if not isinstance(other, Char3):
            return NotImplemented
        return Char3(*(x - y for x, y in zip(self.as_tuple(), other.as_tuple())))


    def __neg__(self):
        return Char3(*(-x for x in self.as_tuple()))


    def __mul__(self, k):
        if isinstance(k, Char3):
            return NotImplemented
        k = util.to_rational(k)
        return Char3(*(k*x for x in self.as_tuple()))

    __rmul__ = __mul__


    def __str__(self):
        return ','.join(util.format_rational(x) for x in self.as_tuple())


    def to_json(self):
        return [util.format_rational(x) for x in self.as_tuple()]




@dataclasses.dataclass(frozen=True)
class PlaneChar(object):
    '''
    Chern character (r, a, b) of a sheaf on a plane, in the basis 1, h,
    [point].
    '''
    r: Fraction
    a: Fraction
    b: Fraction

    def __post_init__(self):
        for name in ('r', 'a', 'b'):
            object.__setattr__(self, name, util.to_rational(getattr(self, name)))


    def as_tuple(self):
        return (self.r, self.a, self.b)


    @property
    def is_lattice(self):
        return self.r.denominator == 1 and self.a.denominator == 1 and (2*self.b).denominator == 1


    def __add__(self, other):
        if not isinstance(other, PlaneChar):
            return NotImplemented
        return PlaneChar(self.r + other.r, self.a + other.a, self.b + other.b)


    def __sub__(self, other):
        if not isinstance(other, PlaneChar):
            return NotImplemented
        return PlaneChar(self.r - other.r, self.a - other.a, self.b - other.b)


    def __str__(self):
        return ','.join(util.format_rational(x) for x in self.as_tuple())




def make_char(ch0, ch1, ch2, ch3):
    return Char3(ch0, ch1, ch2, ch3)


def parse_char(literal):
    '''
    Parse the character literal grammar `r,c,d,e`, for example `1,0,-6,15`
    or `0,2,-8,49/3`.
    '''
    tokens = literal.split(',')
    if len(tokens) != 4:
        raise err.CharacterParseError('Expected 4 comma-separated entries, found {0}'.format(len(tokens)),
                                      literal)
    return Char3(*(util.parse_rational(t, literal) for t in tokens))


def parse_plane_char(literal):
    tokens = literal.split(',')
    if len(tokens) != 3:
        raise err.CharacterParseError('Expected 3 comma-separated entries, found {0}'.format(len(tokens)),
                                      literal)
    return PlaneChar(*(util.parse_rational(t, literal) for t in tokens))


def _require_integer(n, name):
    if isinstance(n, bool) or not isinstance(n, int):
        try:
            n_frac = util.to_rational(n)
        except err.DomainError:
            raise err.DomainError('{0} must be an integer, got {1!r}'.format(name, n))
        if n_frac.denominator != 1:
            raise err.DomainError('{0} must be an integer, got {1}'.format(name, n_frac))
        n = n_frac.numerator
    return n




def twist(c, beta):
    '''
    Twisted character ch^beta = e^(-beta H) . ch.
    '''
    b = util.to_rational(beta)
    ch0, ch1, ch2, ch3 = c.as_tuple()
    return Char3(ch0,
                 ch1 - b*ch0,
                 ch2 - b*ch1 + b**2/2*ch0,
                 ch3 - b*ch2 + b**2/2*ch1 - b**3/6*ch0)


def tensor_line(c, n):
    '''
    ch(E(n)) = e^(nH) . ch(E).
    '''
    n = _require_integer(n, 'Line bundle twist')
    return twist(c, -n)


def dual3(c):
    return Char3(c.ch0, -c.ch1, c.ch2, -c.ch3)


def dual_plane(p):
    return PlaneChar(p.r, -p.a, p.b)


def plane_tensor_line(p, n):
    '''
    ch(F(n)) = e^(nh) . ch(F) on the plane, where h^2 = [point].
    '''
    n = _require_integer(n, 'Line bundle twist')
    return PlaneChar(p.r, p.a + n*p.r, p.b + n*p.a + Fraction(n**2, 2)*p.r)


def pushforward_plane(p):
    '''
    Character on P^3 of the pushforward of a plane sheaf with character p.

    Grothendieck-Riemann-Roch for a hyperplane gives
    ch(i_* F) = i_*(ch(F) . td(N)^-1) with N = O_P(1) and
    td(N)^-1 = 1 - h/2 + h^2/6, so ch(i_* F) = (0, r, a - r/2, b - a/2 + r/6).
    '''
    return Char3(0, p.r, p.a - p.r/2, p.b - p.a/2 + p.r/6)




def line_bundle(n):
    n = _require_integer(n, 'Line bundle degree')
    return tensor_line(Char3(1, 0, 0, 0), n)


def point_char(length):
    '''
    Character of a zero-dimensional sheaf of the given length.
    '''
    length = _require_integer(length, 'Length')
    return Char3(0, 0, 0, length)


def ideal_points_char(length):
    '''
    Character of the ideal sheaf of a zero-dimensional subscheme of P^3.
    '''
    length = _require_integer(length, 'Length')
    if length < 0:
        raise err.DomainError('Length must be non-negative, got {0}'.format(length))
    return Char3(1, 0, 0, -length)


def plane_line_bundle(n):
    n = _require_integer(n, 'Line bundle degree')
    return plane_tensor_line(PlaneChar(1, 0, 0), n)


def plane_ideal_points(length):
    '''
    Character of I_{Z/P} for a length-l subscheme Z of the plane.
    '''
    length = _require_integer(length, 'Length')
    if length < 0:
        raise err.DomainError('Length must be non-negative, got {0}'.format(length))
    return PlaneChar(1, 0, -length)


def plane_sheaf_char(n):
    '''
    Character of O_P(n) for a plane P.
    '''
    return pushforward_plane(plane_line_bundle(n))


# ch(O_Q) = ch(O) - ch(O(-2)) for a quadric surface Q
QUADRIC_CHAR = Char3(0, 2, -2, Fraction(4, 3))

def quadric_sheaf_char(n):
    return tensor_line(QUADRIC_CHAR, n)




def ideal_sheaf_char(d, g):
    '''
    Character of the ideal sheaf of a Cohen-Macaulay curve of degree d and
    arithmetic genus g, with Hilbert polynomial dt + 1 - g.
    '''
    d = _require_integer(d, 'Degree')
    g = _require_integer(g, 'Genus')
    if d <= 0:
        raise err.DomainError('Degree must be positive, got {0}'.format(d))
    return Char3(1, 0, -d, 2*d - 1 + g)


def curve_sheaf_char(d, g):
    '''
    Character of the structure sheaf O_C of a curve of degree d and arithmetic
    genus g.  For a line this is (0, 0, 1, -1), which is forced by
    chi(O_L(n)) = n + 1.
    '''
    return Char3(1, 0, 0, 0) - ideal_sheaf_char(d, g)




class HilbertPolynomial(collections.namedtuple('HilbertPolynomial', ['degree', 'genus'])):
    '''
    Degree and arithmetic genus of a curve; prints as the Hilbert polynomial
    dt + 1 - g.
    '''
    __slots__ = ()

    def __str__(self):
        constant = 1 - self.genus
        if constant == 0:
            return '{0}t'.format(self.degree)
        return '{0}t{1:+d}'.format(self.degree, constant)


def hilbert_polynomial(c):
    '''
    Inverse of `ideal_sheaf_char()`:  recover (d, g) from the character of an
    ideal sheaf of a curve.
    '''
    if c.ch0 != 1 or c.ch1 != 0:
        raise err.DomainError('Expected a character (1, 0, -d, e), got ({0})'.format(c))
    if c.ch2.denominator != 1 or c.ch2 >= 0:
        raise err.DomainError('Expected ch2 to be a negative integer, got {0}'.format(util.format_rational(c.ch2)))
    if c.ch3.denominator != 1:
        raise err.DomainError('Expected ch3 to be an integer, got {0}'.format(util.format_rational(c.ch3)))
    d = -c.ch2.numerator
    g = c.ch3.numerator - 2*d + 1
    return HilbertPolynomial(d, g)
