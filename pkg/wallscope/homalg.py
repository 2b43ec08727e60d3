# -*- coding: utf-8 -*-
#
# Copyright (c) 2026, wallscope developers
# All rights reserved.
#
# Licensed under the BSD 3-Clause License:
# http://opensource.org/licenses/BSD-3-Clause
#


'''
Euler pairing on P^3, expected Ext^1 dimensions, cohomology of points in a
plane, and the curated Ext^1 tables of the walls of v = (1, 0, -6, 15).
'''


import collections
import dataclasses
import enum
import fractions
import logging
import math
from . import err
from . import util
from .chern import dual3, parse_char

Fraction = fractions.Fraction


logger = logging.getLogger(__name__)




# td(P^3) = (H/(1 - e^-H))^4 = 1 + 2H + (11/6)H^2 + H^3
TODD_P3 = (Fraction(1), Fraction(2), Fraction(11, 6), Fraction(1))


def _graded_product(x, y):
    return tuple(sum(x[i]*y[k - i] for i in range(k + 1)) for k in range(4))


def euler_pairing(E, F):
    '''
    chi(E, F) = sum (-1)^i dim Ext^i(E, F), computed by Hirzebruch-Riemann-Roch
    as the degree-3 part of ch(E)^v . ch(F) . td(P^3).
    '''
    p = _graded_product(dual3(E).as_tuple(), F.as_tuple())
    return sum(p[k]*TODD_P3[3 - k] for k in range(4))


def expected_ext1(B, A):
    '''
    max(0, -chi(B, A)).  This is dim Ext^1(B, A) exactly when Hom, Ext^2 and
    Ext^3 between B and A vanish, as they do at generic strata; in general it
    is only a lower bound for the Ext^1 dimension minus the other terms.
    '''
    chi = euler_pairing(B, A)
    if chi.denominator != 1:
        raise err.DomainError('Euler pairing of ({0}) and ({1}) is not an integer; '
                              'expected lattice characters'.format(B, A))
    return max(0, -chi.numerator)




class Position(enum.Enum):
    GENERIC = 'generic'
    COLLINEAR = 'collinear'
    ON_SMOOTH_CONIC = 'conic'


@dataclasses.dataclass(frozen=True)
class PointConfig(object):
    n: int
    position: Position = Position.GENERIC

    def __post_init__(self):
        if isinstance(self.n, bool) or not isinstance(self.n, int) or self.n < 1:
            raise err.DomainError('Number of points must be a positive integer, got {0!r}'.format(self.n))
        if not isinstance(self.position, Position):
            try:
                object.__setattr__(self, 'position', Position(self.position))
            except ValueError:
                raise err.DomainError('Unknown point position "{0}"'.format(self.position))


PlaneCohomology = collections.namedtuple('PlaneCohomology', ['h0', 'h1'])


def points_plane_cohomology(cfg, d):
    '''
    h^0 and h^1 of I_Z(d) on P^2 for n reduced points Z in the given position.

    Generic points impose independent conditions.  For points on a line L,
    restricting to L gives 0 -> O(d-1) -> I_Z(d) -> O_L(d-n) -> 0, so
    h^0 = C(d+1, 2) + max(0, d+1-n); for points on a smooth conic C the same
    sequence with O(d-2) and O_C(2d-n) gives C(d, 2) + max(0, 2d+1-n).
    h^1 follows from h^0 - h^1 = C(d+2, 2) - n.
    '''
    if isinstance(d, bool) or not isinstance(d, int) or d < 0:
        raise err.DomainError('Degree must be a non-negative integer, got {0!r}'.format(d))
    n = cfg.n
    expected = math.comb(d + 2, 2) - n
    if cfg.position is Position.GENERIC:
        h0 = max(0, expected)
    elif cfg.position is Position.COLLINEAR:
        h0 = math.comb(d + 1, 2) + max(0, d + 1 - n)
    else:
        h0 = math.comb(d, 2) + max(0, 2*d + 1 - n)
    return PlaneCohomology(h0, h0 - expected)




WALL_IDS = ('green', 'purple1', 'purple2', 'purple3', 'pink')
DIRECTIONS = ('AA', 'BB', 'BA', 'AB')


@dataclasses.dataclass(frozen=True)
class ExtTableEntry(object):
    wall_id: str
    direction: str
    stratum: str
    dim: int

    def to_json(self):
        return {'wall_id': self.wall_id, 'direction': self.direction, 'stratum': self.stratum, 'dim': self.dim}


def _wall_data(wall_id):
    if wall_id not in WALL_IDS:
        raise err.DomainError('Unknown wall "{0}"; expected one of {1}'.format(wall_id, ', '.join(WALL_IDS)))
    try:
        return util.load_data('ext_tables.bespon')['walls'][wall_id]
    except KeyError:
        raise err.DataError('Missing table for wall "{0}"'.format(wall_id), 'ext_tables.bespon')


def ext_dims(wall_id, direction):
    '''
    Stratum -> dimension for one direction, from the most special stratum to
    the generic one.
    '''
    if direction not in DIRECTIONS:
        raise err.DomainError('Unknown direction "{0}"; expected one of {1}'.format(direction, ', '.join(DIRECTIONS)))
    return dict(_wall_data(wall_id)[direction])


def paper_ext_table(wall_id):
    '''
    The full stratified Ext^1 table of a wall.
    '''
    return [ExtTableEntry(wall_id, direction, stratum, dim)
            for direction in DIRECTIONS
            for stratum, dim in ext_dims(wall_id, direction).items()]


def wall_characters(wall_id):
    '''
    Characters (A, B) of the generic subobject and quotient on a wall.
    '''
    data = _wall_data(wall_id)
    return (parse_char(data['sub_char']), parse_char(data['quot_char']))


def _chi_value(direction, A, B):
    if direction == 'AA':
        return 1 - euler_pairing(A, A)
    if direction == 'BB':
        return 1 - euler_pairing(B, B)
    if direction == 'BA':
        return -euler_pairing(B, A)
    return -euler_pairing(A, B)


def check_ext_tables():
    '''
    Check the curated tables against everything that can be computed:  the
    Euler pairing at generic strata, the step-by-one shape of stratified
    entries, and the points-in-a-plane model behind the pink AB entries.
    Returns a list of problems; empty when the tables are consistent.
    '''
    problems = []
    for wall_id in WALL_IDS:
        data = _wall_data(wall_id)
        A, B = wall_characters(wall_id)
        if A + B != parse_char('1,0,-6,15'):
            problems.append('{0}: generic characters do not sum to v'.format(wall_id))
        for direction in data['chi_checked']:
            generic = list(ext_dims(wall_id, direction).values())[-1]
            computed = _chi_value(direction, A, B)
            if computed != generic:
                problems.append('{0} {1}: curated {2}, Euler pairing gives {3}'.format(
                    wall_id, direction, generic, util.format_rational(computed)))
        for direction in ('BA', 'AB'):
            dims = list(ext_dims(wall_id, direction).values())
            if any(x - y != 1 for x, y in zip(dims, dims[1:])):
                problems.append('{0} {1}: strata do not decrease by one toward generic'.format(wall_id, direction))
        for stratum, model in data.get('point_models', {}).items():
            cfg = PointConfig(int(model['n']), Position(model['position']))
            h1 = points_plane_cohomology(cfg, int(model['degree'])).h1
            curated = ext_dims(wall_id, 'AB')[stratum]
            if h1 != curated:
                problems.append('{0} AB {1}: curated {2}, point model gives {3}'.format(wall_id, stratum, curated, h1))
    for problem in problems:
        logger.info(problem)
    return problems




def ghs_bound_check(ext1FF, ext1GG, ext1FG, ext1GF, ext1EE):
    '''
    For a non-split extension 0 -> F -> E -> G -> 0,
    ext^1(E, E) <= ext^1(F, F) + ext^1(G, G) + ext^1(F, G) + ext^1(G, F) - 1.
    '''
    values = (ext1FF, ext1GG, ext1FG, ext1GF, ext1EE)
    if any(isinstance(x, bool) or not isinstance(x, int) or x < 0 for x in values):
        raise err.DomainError('Ext dimensions must be non-negative integers, got {0}'.format(values))
    return ext1EE <= ext1FF + ext1GG + ext1FG + ext1GF - 1
