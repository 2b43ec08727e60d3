# -*- coding: utf-8 -*-
#
# Copyright (c) 2026, wallscope developers
# All rights reserved.
#
# Licensed under the BSD 3-Clause License:
# http://opensource.org/licenses/BSD-3-Clause
#


'''
Dimension bookkeeping for moduli components and destabilizing strata.

Components are records, not spaces:  a P^f-bundle over a base B has
dimension f + dim B, and a stratum of extensions with Ext^1 = C^n over a
family of pairs B is a P^(n-1)-bundle over B.
'''


import dataclasses
import logging
import math
import re
from typing import Optional, Tuple
from . import err
from . import util
from .chern import line_bundle, quadric_sheaf_char
from .homalg import expected_ext1, ext_dims


logger = logging.getLogger(__name__)




# Gr24: lines in P^3; UnivLine: a line with a point on it; UnivLineFiber2: a
# line with two points on it; Flag(l): a plane with l points in it
_FIXED_DIMS = {
    'Gr24': 4,
    'DualP3': 3,
    'DualP2': 2,
    'QuadricsP9': 9,
    'UnivLine': 5,
    'UnivLineFiber2': 6,
    'HilbConics': 8,
    'PlaneQuintics': 20,
    'PlaneSextics': 27,
    'Point': 0,
}

_PARAMETRIC_DIMS = {
    'Flag': lambda l: 3 + 2*l,
    'PointsP3': lambda k: 3*k,
    'Locus': lambda n: n,
}

_atom_re = re.compile(r'([A-Za-z][A-Za-z0-9]*)(?:\(([0-9]+)\))?')


@dataclasses.dataclass(frozen=True)
class BaseSpace(object):
    kind: str
    dim: int
    param: Optional[int] = None
    factors: Tuple['BaseSpace', ...] = ()

    @classmethod
    def atom(cls, kind, param=None):
        if param is None:
            if kind not in _FIXED_DIMS:
                raise err.DomainError('Unknown base space "{0}"'.format(kind))
            return cls(kind, _FIXED_DIMS[kind])
        if kind not in _PARAMETRIC_DIMS:
            raise err.DomainError('Unknown base space "{0}({1})"'.format(kind, param))
        if param < 0:
            raise err.DomainError('Base space parameter must be non-negative, got {0}'.format(param))
        return cls(kind, _PARAMETRIC_DIMS[kind](param), param)


    @classmethod
    def product(cls, *factors):
        if len(factors) == 1:
            return factors[0]
        return cls('Product', sum(f.dim for f in factors), factors=tuple(factors))


    @classmethod
    def parse(cls, text):
        '''
        Parse notation like `Gr24*Flag(2)` or `PointsP3(6)`.
        '''
        factors = []
        for token in text.split('*'):
            match = _atom_re.fullmatch(token.strip())
            if match is None:
                raise err.DomainError('Unknown base space "{0}"'.format(token.strip()))
            kind, param = match.groups()
            factors.append(cls.atom(kind, None if param is None else int(param)))
        return cls.product(*factors)


    def __str__(self):
        if self.factors:
            return '*'.join(str(f) for f in self.factors)
        if self.param is not None:
            return '{0}({1})'.format(self.kind, self.param)
        return self.kind


def _as_base_space(base):
    if isinstance(base, BaseSpace):
        return base
    if isinstance(base, str):
        return BaseSpace.parse(base)
    raise err.DomainError('Expected a base space, got {0!r}'.format(base))


def base_space_dim(kind):
    return _as_base_space(kind).dim


EMPTY_STRATUM = -math.inf

def stratum_dim(ext1_dim, base):
    '''
    Dimension of the P(Ext^1)-bundle over base, or `EMPTY_STRATUM` when there
    are no extensions.
    '''
    if isinstance(ext1_dim, bool) or not isinstance(ext1_dim, int) or ext1_dim < 0:
        raise err.DomainError('Ext^1 dimension must be a non-negative integer, got {0!r}'.format(ext1_dim))
    base = _as_base_space(base)
    if ext1_dim == 0:
        return EMPTY_STRATUM
    return ext1_dim - 1 + base.dim




@dataclasses.dataclass(frozen=True)
class ComponentRecord(object):
    name: str
    fiber_dim: int
    base: Optional[BaseSpace]
    total_dim: int
    side: str
    description: str
    provenance: str
    summands: Tuple[Tuple[str, int], ...] = ()

    @property
    def computed_dim(self):
        '''
        Dimension recomputed from the bundle structure or the summands.
        '''
        if self.fiber_dim >= 0:
            return self.fiber_dim + self.base.dim
        return sum(dim for _, dim in self.summands)


    def to_json(self):
        return {'name': self.name, 'fiber_dim': self.fiber_dim,
                'base': None if self.base is None else str(self.base),
                'base_dim': None if self.base is None else self.base.dim,
                'total_dim': self.total_dim, 'side': self.side,
                'description': self.description, 'provenance': self.provenance,
                'summands': [list(s) for s in self.summands]}


def _components_data(key):
    try:
        return util.load_data('components.bespon')[key]
    except KeyError:
        raise err.DataError('Missing section "{0}"'.format(key), 'components.bespon')


def _records(key, side):
    records = []
    for name, data in _components_data(key).items():
        fiber_dim = int(data['fiber_dim'])
        base = BaseSpace.parse(data['base']) if 'base' in data else None
        if fiber_dim >= 0 and base is None:
            raise err.DataError('Bundle record "{0}" has no base'.format(name), 'components.bespon')
        summands = tuple((label, int(dim)) for label, dim in data.get('summands', {}).items())
        records.append(ComponentRecord(name, fiber_dim, base, int(data['total_dim']), side,
                                       data['description'], data['provenance'], summands))
    return records


def pt_component_table():
    return _records('pt_components', 'PT')


def hilb_component_table():
    return _records('hilb_components', 'Hilb')


def chamber_sequence():
    return [(name, int(count)) for name, count in _components_data('chambers').items()]


def destab_loci_table():
    '''
    (chamber, [ComponentRecord, ...]) for each chamber with a destabilizing
    locus; each stratum is a record with side "destab".
    '''
    table = []
    for chamber, strata in _components_data('destabilizing_loci').items():
        records = []
        for name, data in strata.items():
            records.append(ComponentRecord(name, int(data['fiber_dim']), BaseSpace.parse(data['base']),
                                           int(data['total_dim']), 'destab', data['description'],
                                           'paper_stated'))
        table.append((chamber, records))
    return table




def _blue_wall_ext1():
    # Ext^1(O_Q(-3), O(-2)) on the first wall
    return expected_ext1(quadric_sheaf_char(-3), line_bundle(-2))


def pt_ext_correspondence():
    '''
    PT record name -> (wall, direction, stratum, ext^1), where the record's
    bundle fiber is the projectivized Ext^1.
    '''
    return {name: (row['wall'], row['direction'], row['stratum'], int(row['ext1']))
            for name, row in _components_data('pt_ext_correspondence').items()}


def check_pt_correspondence():
    '''
    Check that every PT component's fiber dimension is one less than the
    Ext^1 dimension it is paired with, and that the paired value is what the
    Ext tables (or, for the first wall, the Euler pairing) give.  Returns a
    list of problems.
    '''
    problems = []
    correspondence = pt_ext_correspondence()
    for record in pt_component_table():
        if record.name not in correspondence:
            problems.append('{0}: no Ext^1 correspondence'.format(record.name))
            continue
        wall, direction, stratum, ext1 = correspondence[record.name]
        if wall == 'blue':
            source = _blue_wall_ext1()
        else:
            source = ext_dims(wall, direction).get(stratum)
        if source != ext1:
            problems.append('{0}: correspondence lists {1}, {2} {3} {4} gives {5}'.format(
                record.name, ext1, wall, direction, stratum, source))
        if record.fiber_dim + 1 != ext1:
            problems.append('{0}: fiber P^{1} does not match Ext^1 = C^{2}'.format(record.name, record.fiber_dim, ext1))
    for problem in problems:
        logger.info(problem)
    return problems


def green_ghs_instance():
    '''
    Numbers behind the Ext^1 inequality on the green wall:  the dims
    (ext1(A,A), ext1(B,B), ext1(A,B), ext1(B,A)) of the wall table, the
    dimension of the first chamber's moduli space, and the dimension of the
    destabilized stratum (a P^12-bundle over conics and planes).
    '''
    dims = tuple(list(ext_dims('green', direction).values())[-1] for direction in ('AA', 'BB', 'AB', 'BA'))
    n1_dim = pt_component_table()[0].total_dim
    stratum = stratum_dim(dims[3], BaseSpace.parse('HilbConics*DualP3'))
    return dims, n1_dim, stratum




def format_table(records):
    '''
    Aligned plain-text rendering of component records.
    '''
    header = ('name', 'fiber', 'base', 'base_dim', 'total', 'provenance', 'description')
    rows = [header]
    for r in records:
        rows.append((r.name,
                     'P^{0}'.format(r.fiber_dim) if r.fiber_dim >= 0 else '-',
                     str(r.base) if r.base is not None else '+'.join('{0}:{1}'.format(*s) for s in r.summands),
                     str(r.base.dim) if r.base is not None else '-',
                     str(r.total_dim), r.provenance, r.description))
    widths = [max(len(row[i]) for row in rows) for i in range(len(header) - 1)]
    lines = []
    for row in rows:
        cells = [cell.ljust(w) for cell, w in zip(row, widths)]
        lines.append('  '.join(cells + [row[-1]]).rstrip())
    return '\n'.join(lines)
