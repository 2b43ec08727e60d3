# -*- coding: utf-8 -*-
#
# Copyright (c) 2026, wallscope developers
# All rights reserved.
#
# Licensed under the BSD 3-Clause License:
# http://opensource.org/licenses/BSD-3-Clause
#


import bespon
import collections
import fractions
import logging
import math
import numbers
import pkgutil
import re
from . import err


logger = logging.getLogger(__name__)




class KeyDefaultDict(collections.defaultdict):
    '''
    Default dict that passes missing keys to the factory function, rather than
    calling the factory function with no arguments.
    '''
    def __missing__(self, key):
        if self.default_factory is None:
            raise KeyError(key)
        else:
            self[key] = self.default_factory(key)
            return self[key]




_rational_re = re.compile(r'-?[0-9]+(?:/[0-9]+)?')

def parse_rational(token, literal=None):
    '''
    Parse a rational literal of the form `p` or `p/q` (decimal digits with an
    optional leading minus) into a Fraction.
    '''
    token_stripped = token.strip()
    if not _rational_re.fullmatch(token_stripped):
        raise err.CharacterParseError('Expected a rational of the form "p" or "p/q"', token, literal)
    if '/' in token_stripped:
        numerator, denominator = token_stripped.split('/')
        if int(denominator) == 0:
            raise err.CharacterParseError('Zero denominator', token, literal)
        return fractions.Fraction(int(numerator), int(denominator))
    return fractions.Fraction(int(token_stripped))


def format_rational(x):
    '''
    Render a rational as `p` or `p/q`.  This is the only form in which
    rationals leave the package.
    '''
    x = fractions.Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return '{0}/{1}'.format(x.numerator, x.denominator)


def to_rational(x):
    '''
    Convert integers, Fractions, and rational literals to Fraction.  Floats
    are rejected, since they cannot carry the exact values computations here
    depend on.
    '''
    if isinstance(x, fractions.Fraction):
        return x
    if isinstance(x, bool) or isinstance(x, float):
        raise err.DomainError('Expected an exact rational, got {0!r}'.format(x))
    if isinstance(x, numbers.Rational):
        return fractions.Fraction(x)
    if isinstance(x, str):
        return parse_rational(x)
    raise err.DomainError('Expected an exact rational, got {0!r}'.format(x))


def sqrt_bracket(x):
    '''
    Integer bounds `(lo, hi)` with `lo <= sqrt(x) <= hi` for a non-negative
    rational x.
    '''
    x = fractions.Fraction(x)
    if x < 0:
        raise err.DomainError('Square root bracket requires a non-negative value')
    lo = math.isqrt(math.floor(x))
    hi = math.isqrt(math.ceil(x))
    if hi * hi < x:
        hi += 1
    return lo, hi




def _load_data(data_name):
    raw_data = pkgutil.get_data('wallscope', 'data/{0}'.format(data_name))
    if raw_data is None:
        raise err.DataError('Failed to find "wallscope/data/{0}"'.format(data_name))
    try:
        data = bespon.loads(raw_data)
    except Exception as e:
        raise err.DataError('Failed to parse BespON:\n  {0}'.format(e), data_name)
    logger.debug('Loaded data file "%s"', data_name)
    return data

_data_cache = KeyDefaultDict(_load_data)

def load_data(data_name):
    '''
    Load one of the BespON files shipped in `wallscope/data/`.  Each file is
    parsed once per process.
    '''
    return _data_cache[data_name]


def defaults(section):
    '''
    Return one section of `data/defaults.bespon`.
    '''
    try:
        return load_data('defaults.bespon')[section]
    except KeyError:
        raise err.DataError('Missing section "{0}"'.format(section), 'defaults.bespon')
