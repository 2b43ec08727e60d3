# -*- coding: utf-8 -*-
#
# Copyright (c) 2026, wallscope developers
# All rights reserved.
#
# Licensed under the BSD 3-Clause License:
# http://opensource.org/licenses/BSD-3-Clause
#


'''
Enumeration of destabilizing character splittings v = sub + quot.

The search runs in two stages.  `truncated_wall_candidates()` scans the
truncated characters (r, c, d) of the subobject and keeps those that can give
an actual wall of v.  `refine_ch3()` then fixes ch3 of the subobject by
requiring that the factors be realized by the sheaves the wall table is made
of (twisted ideal sheaves, plane sheaves, quadric sheaves), whose point
lengths must be non-negative integers.
'''


import dataclasses
import enum
import fractions
import logging
import math
from typing import Optional, Tuple
from . import err
from . import util
from .chern import Char3, hilbert_polynomial, quadric_sheaf_char, twist
from .stability import StabPoint, bg_discriminant, bmt_quantity
from .walls import WallLocus, numerical_wall

Fraction = fractions.Fraction


logger = logging.getLogger(__name__)




REGIONS = ('beta_negative', 'beta_positive')


@dataclasses.dataclass(frozen=True)
class EnumBounds(object):
    '''
    Search bounds for `truncated_wall_candidates()`.  `delta_cap=None` means
    the discriminant of the class being destabilized.
    '''
    rank_min: int = 0
    rank_max: int = 1
    delta_cap: Optional[Fraction] = None
    region: str = 'beta_negative'

    def __post_init__(self):
        if self.rank_min > self.rank_max:
            raise err.DomainError('Empty rank range [{0}, {1}]'.format(self.rank_min, self.rank_max))
        if self.delta_cap is not None:
            object.__setattr__(self, 'delta_cap', util.to_rational(self.delta_cap))
            if self.delta_cap < 0:
                raise err.DomainError('delta_cap must be non-negative')
        if self.region not in REGIONS:
            raise err.DomainError('Unknown region "{0}"; expected one of {1}'.format(self.region, ', '.join(REGIONS)))


    @classmethod
    def default(cls):
        enum_defaults = util.defaults('enumeration')
        return cls(rank_min=int(enum_defaults['rank_min']),
                   rank_max=int(enum_defaults['rank_max']),
                   region=enum_defaults['region'])


    @property
    def rank_range(self):
        return range(self.rank_min, self.rank_max + 1)




@dataclasses.dataclass(frozen=True)
class WallCandidate(object):
    sub: Tuple[Fraction, Fraction, Fraction]
    quot: Tuple[Fraction, Fraction, Fraction]
    wall: WallLocus




def _discriminant3(r, c, d):
    return c**2 - 2*r*d


def _d_window(rank, c, cap):
    '''
    Values of ch2 allowed by 0 <= c^2 - 2 rank ch2 <= cap, for rank != 0.
    '''
    lo, hi = (c**2 - cap)/(2*rank), c**2/(2*rank)
    return (lo, hi) if lo <= hi else (hi, lo)


def _stays_in_heart(r, c, wall, sign):
    # sign*(c - r beta) >= 0 on [center - R, center + R], strictly for rank 0
    if r == 0:
        return sign*c > 0
    f_center = sign*(c - r*wall.center)
    return f_center >= 0 and f_center**2 >= r**2*wall.radius_sq


def _canonical(sub, quot):
    if sub[0] == 1 and quot[0] == 1:
        return sub if sub[2] >= quot[2] else quot
    if sub[0] == 1:
        return sub
    if quot[0] == 1:
        return quot
    return min(sub, quot)


def truncated_wall_candidates(v, bounds=None):
    '''
    Candidate walls of v, one per unordered splitting of (r, c, d).

    A triple (r, c, d) for the subobject is kept when

      * it is a lattice point (d - c^2/2 integral), as is the quotient;
      * both Bogomolov discriminants lie in [0, delta_cap];
      * its wall with v is a circle on the requested side of the beta-axis;
      * subobject and quotient both have ch1^beta >= 0 along the whole wall
        (<= 0 in the shifted heart for `beta_positive`);
      * the BMT quantity of v is non-negative at the top of the wall.

    Every wall of v contains beta_0 = ch1(v) -/+ sqrt(Delta(v)), where
    the hyperbola Im Z(v) = 0 meets the beta-axis, so the heart condition at
    beta_0 bounds c; the discriminant bounds d.
    '''
    if v.ch0 != 1:
        raise err.UnsupportedRegimeError('Wall enumeration is implemented for rank one classes, got rank {0}'.format(
            util.format_rational(v.ch0)))
    if not v.is_lattice:
        raise err.DomainError('Expected a lattice character, got ({0})'.format(v))
    if bounds is None:
        bounds = EnumBounds.default()
    delta_v = bg_discriminant(v)
    cap = delta_v if bounds.delta_cap is None else bounds.delta_cap
    sign = 1 if bounds.region == 'beta_negative' else -1
    if delta_v <= 0:
        logger.debug('No walls for a class with discriminant %s', util.format_rational(delta_v))
        return []

    r_v, c_v, d_v = v.truncated()
    root_lo, root_hi = util.sqrt_bracket(delta_v)
    if sign > 0:
        beta_corners = (c_v - root_hi, c_v - root_lo)
    else:
        beta_corners = (c_v + root_lo, c_v + root_hi)

    found = {}
    scanned = 0
    for r in bounds.rank_range:
        c_lo = min(r*b + min(0, c_v - r_v*b) for b in beta_corners)
        c_hi = max(r*b + max(0, c_v - r_v*b) for b in beta_corners)
        for c in range(math.floor(c_lo), math.ceil(c_hi) + 1):
            if r != 0:
                d_lo, d_hi = _d_window(r, c, cap)
            else:
                q_lo, q_hi = _d_window(r_v - r, c_v - c, cap)
                d_lo, d_hi = d_v - q_hi, d_v - q_lo
            half_c_sq = Fraction(c**2, 2)
            for k in range(math.ceil(d_lo - half_c_sq), math.floor(d_hi - half_c_sq) + 1):
                scanned += 1
                sub = (Fraction(r), Fraction(c), half_c_sq + k)
                quot = (r_v - sub[0], c_v - sub[1], d_v - sub[2])
                if not (0 <= _discriminant3(*sub) <= cap and 0 <= _discriminant3(*quot) <= cap):
                    continue
                wall = numerical_wall(v, Char3(sub[0], sub[1], sub[2], 0))
                if not wall.is_circle or sign*wall.center >= 0:
                    continue
                if not (_stays_in_heart(sub[0], sub[1], wall, sign) and
                        _stays_in_heart(quot[0], quot[1], wall, sign)):
                    continue
                if bmt_quantity(v, StabPoint.from_alpha_sq(wall.radius_sq, wall.center)) < 0:
                    continue
                canon = _canonical(sub, quot)
                if canon not in found:
                    found[canon] = WallCandidate(canon, tuple(x - y for x, y in zip(v.truncated(), canon)), wall)
    candidates = sorted(found.values(), key=lambda cand: (cand.wall.radius_sq, cand.sub))
    logger.debug('Scanned %d truncated characters, kept %d wall candidates', scanned, len(candidates))
    return candidates




class FactorKind(enum.Enum):
    LINE_BUNDLE = 'LineBundle'
    IDEAL_OF_POINTS_TWIST = 'IdealOfPointsTwist'
    IDEAL_OF_CURVE_TWIST = 'IdealOfCurveTwist'
    PLANE_SHEAF = 'PlaneSheaf'
    PLANE_POINTS_SHEAF = 'PlanePointsSheaf'
    QUADRIC_SHEAF = 'QuadricSheaf'




_CURVE_SYMBOLS = {1: 'L', 2: 'C_2'}

@dataclasses.dataclass(frozen=True)
class Factor(object):
    '''
    Annotation of one factor of a destabilizing pair:  the sheaf it is read
    as on the left of the hyperbola, and on the right when the same character
    occurs there.
    '''
    kind: FactorKind
    twist: int
    length: int
    degree: int = 0

    @property
    def left(self):
        n, l = self.twist, self.length
        if self.kind is FactorKind.LINE_BUNDLE:
            return 'O({0})'.format(n)
        if self.kind is FactorKind.IDEAL_OF_POINTS_TWIST:
            return 'I_{{Z_{0}}}({1})'.format(l, n)
        if self.kind is FactorKind.IDEAL_OF_CURVE_TWIST:
            symbol = _CURVE_SYMBOLS[self.degree]
            if l == 0:
                return 'I_{{{0}}}({1})'.format(symbol, n)
            return 'I_{{{0},{1}}}({2})'.format(symbol, l, n)
        if self.kind is FactorKind.PLANE_SHEAF:
            return 'O_P({0})'.format(n)
        if self.kind is FactorKind.PLANE_POINTS_SHEAF:
            return "I_{{Z'_{0}/P}}({1})".format(l, n)
        if l == 0:
            return 'O_Q({0})'.format(n)
        return "I_{{Z'_{0}/Q}}({1})".format(l, n)


    @property
    def right(self):
        '''
        Reading on the right of the hyperbola, or None when the character does
        not occur there.
        '''
        n, l = self.twist, self.length
        if self.kind in (FactorKind.LINE_BUNDLE, FactorKind.PLANE_SHEAF):
            return self.left
        if self.kind is FactorKind.IDEAL_OF_POINTS_TWIST:
            return None
        if self.kind is FactorKind.IDEAL_OF_CURVE_TWIST:
            if l == 0:
                return self.left
            if self.degree == 1:
                return '(O({0}) -> O_L({1}))'.format(n, l - 1)
            return '(O({0}) -> F_{{C_2}}), coker length {1}'.format(n, l)
        if self.kind is FactorKind.PLANE_POINTS_SHEAF:
            return "i_*I^v_{{Z'_{0}}}({1})".format(l, n)
        return self.left if l == 0 else None


    def to_json(self):
        return {'kind': self.kind.value, 'twist': self.twist, 'degree': self.degree,
                'length': self.length, 'left': self.left, 'right': self.right}




@dataclasses.dataclass(frozen=True)
class _FactorModel(object):
    # length of the factor with ch3 = e is offset - e
    kind: FactorKind
    twist: int
    degree: int
    offset: Fraction

    def factor(self, length):
        kind = self.kind
        if length == 0 and kind is FactorKind.IDEAL_OF_POINTS_TWIST:
            kind = FactorKind.LINE_BUNDLE
        elif length == 0 and kind is FactorKind.PLANE_POINTS_SHEAF:
            kind = FactorKind.PLANE_SHEAF
        return Factor(kind, self.twist, length, self.degree)


def _factor_model(r, c, d):
    '''
    Length model for a truncated character, or None if no sheaf of the wall
    table has this shape.
    '''
    if r == 1:
        n = c.numerator
        degree = c**2/2 - d
        if degree.denominator != 1 or degree < 0:
            return None
        degree = degree.numerator
        ch3_shift = twist(Char3(1, c, d, 0), c).ch3
        if degree == 0:
            # I_Z(n) with ch(I_Z) = (1, 0, 0, -l)
            return _FactorModel(FactorKind.IDEAL_OF_POINTS_TWIST, n, 0, -ch3_shift)
        if degree in _CURVE_SYMBOLS:
            # ideal of a genus-0 curve of degree D plus l points:  ch3 = 2D - 1 - l
            return _FactorModel(FactorKind.IDEAL_OF_CURVE_TWIST, n, degree, 2*degree - 1 - ch3_shift)
        return None
    if r == 0 and c == 1:
        n = d + Fraction(1, 2)
        if n.denominator != 1:
            return None
        # pushforward of I_{Z/P}(n):  l' = 1/24 + d^2/2 - e
        return _FactorModel(FactorKind.PLANE_POINTS_SHEAF, n.numerator, 0, Fraction(1, 24) + d**2/2)
    if r == 0 and c == 2:
        n = (d + 2)/2
        if n.denominator != 1:
            return None
        return _FactorModel(FactorKind.QUADRIC_SHEAF, n.numerator, 0, quadric_sheaf_char(n.numerator).ch3)
    return None




@dataclasses.dataclass(frozen=True)
class DestabPair(object):
    sub: Char3
    quot: Char3
    wall: WallLocus
    sub_kind: Factor
    quot_kind: Factor
    side_note: str

    def to_json(self):
        return {'sub': self.sub.to_json(),
                'quot': self.quot.to_json(),
                'wall': {'center': util.format_rational(self.wall.center),
                         'radius_sq': util.format_rational(self.wall.radius_sq)},
                'annotations': {'sub': self.sub_kind.to_json(), 'quot': self.quot_kind.to_json()},
                'side_note': self.side_note}


def _side_note(sub_factor, quot_factor):
    if sub_factor.right is not None and quot_factor.right is not None:
        return 'left/right'
    return 'left'


def refine_ch3(v, candidate):
    '''
    Complete a truncated candidate to full destabilizing pairs.

    With ch3(sub) = e, the subobject has length l = a - e and the quotient
    l' = a' - (ch3(v) - e) for offsets a, a' fixed by the factor shapes, so
    the admissible e are exactly a - l for l = 0, ..., a + a' - ch3(v), which
    must be a non-negative integer.
    '''
    sub_model = _factor_model(*candidate.sub)
    quot_model = _factor_model(*candidate.quot)
    if sub_model is None or quot_model is None:
        logger.debug('No length model for the splitting %s + %s; skipped',
                     ','.join(util.format_rational(x) for x in candidate.sub),
                     ','.join(util.format_rational(x) for x in candidate.quot))
        return []
    total = sub_model.offset + quot_model.offset - v.ch3
    if total.denominator != 1 or total < 0:
        return []
    pairs = []
    for length in range(total.numerator + 1):
        e = sub_model.offset - length
        sub = Char3(candidate.sub[0], candidate.sub[1], candidate.sub[2], e)
        quot = v - sub
        sub_factor = sub_model.factor(length)
        quot_factor = quot_model.factor(total.numerator - length)
        pairs.append(DestabPair(sub, quot, candidate.wall, sub_factor, quot_factor,
                                _side_note(sub_factor, quot_factor)))
    pairs.sort(key=lambda p: p.sub.as_tuple())
    return pairs


def enumerate_destab_pairs(v, bounds=None):
    '''
    All destabilizing pairs of v, sorted by wall radius and then by the
    subobject's character.
    '''
    pairs = []
    for candidate in truncated_wall_candidates(v, bounds):
        pairs.extend(refine_ch3(v, candidate))
    pairs.sort(key=lambda p: (p.wall.radius_sq, p.sub.as_tuple()))
    logger.debug('Found %d destabilizing pairs', len(pairs))
    return pairs


def walls_of(v, bounds=None):
    '''
    Walls of v that carry at least one destabilizing pair, by increasing
    radius.
    '''
    walls = []
    for pair in enumerate_destab_pairs(v, bounds):
        if not walls or walls[-1] != pair.wall:
            walls.append(pair.wall)
    return walls




def genus_bound(d, planar_allowed=True):
    '''
    Largest arithmetic genus of a degree-d space curve:  (d-1)(d-2)/2, reached
    by plane curves, or (d-2)(d-3)/2 for curves not contained in a plane.
    '''
    if isinstance(d, bool) or not isinstance(d, int):
        raise err.DomainError('Degree must be an integer, got {0!r}'.format(d))
    if d < 1:
        raise err.DomainError('Degree must be positive, got {0}'.format(d))
    if planar_allowed:
        return (d - 1)*(d - 2)//2
    if d < 3:
        raise err.DomainError('Non-planar curves have degree at least 3, got {0}'.format(d))
    return (d - 2)*(d - 3)//2


@dataclasses.dataclass(frozen=True)
class DtptSplitting(object):
    '''
    v = ch(ideal) - ch(T[-1]) with T a zero-dimensional sheaf of length
    `torsion_length`.
    '''
    ideal: Char3
    torsion_length: int
    genus: int

    def to_json(self):
        return {'ideal': self.ideal.to_json(), 'torsion_length': self.torsion_length, 'genus': self.genus}


def dtpt_splittings(v):
    '''
    Splittings of v at the DT/PT wall into the ideal sheaf of a curve of the
    same degree and larger genus, plus points.
    '''
    if v.ch0 != 1 or v.ch1 != 0 or v.ch2.denominator != 1 or v.ch2 >= 0 or v.ch3.denominator != 1:
        raise err.UnsupportedRegimeError('DT/PT splittings need a class (1, 0, -d, e) with d > 0, got ({0})'.format(v))
    d, g = hilbert_polynomial(v)
    g_max = genus_bound(d, True)
    splittings = [DtptSplitting(v + Char3(0, 0, 0, i), i, g + i) for i in range(1, g_max - g + 1)]
    logger.debug('Degree %d genus %d: %d DT/PT splittings up to genus %d', d, g, len(splittings), g_max)
    return splittings


def new_component_genera(v):
    '''
    Genera of the curves whose ideal sheaves, with floating points attached,
    can give Hilbert scheme components of v beyond the stable pairs ones:
    every genus above that of v allowed for non-planar curves of the same
    degree, plus the plane curve genus.
    '''
    d, g = hilbert_polynomial(v)
    if d < 3:
        raise err.UnsupportedRegimeError('Expected a curve class of degree at least 3, got degree {0}'.format(d))
    genera = list(range(g + 1, genus_bound(d, False) + 1))
    planar = genus_bound(d, True)
    if planar > g and planar not in genera:
        genera.append(planar)
    return genera
