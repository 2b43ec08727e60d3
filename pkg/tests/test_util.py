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
from wallscope import err
from wallscope import util

Fraction = fractions.Fraction




def test_parse_rational_forms():
    assert util.parse_rational('15') == 15
    assert util.parse_rational('-13/2') == Fraction(-13, 2)
    assert util.parse_rational(' 4/6 ') == Fraction(2, 3)


@pytest.mark.parametrize('token', ['', '1.5', '1/', '/2', '--1', '1/-2', 'x'])
def test_parse_rational_rejects_malformed_tokens(token):
    with pytest.raises(err.CharacterParseError) as excinfo:
        util.parse_rational(token, '1,{0},0,0'.format(token))
    assert excinfo.value.token == token


def test_parse_rational_rejects_zero_denominator():
    with pytest.raises(err.CharacterParseError):
        util.parse_rational('3/0')


def test_format_rational():
    assert util.format_rational(Fraction(91, 6)) == '91/6'
    assert util.format_rational(Fraction(-8)) == '-8'
    assert util.format_rational(0) == '0'


def test_to_rational_rejects_floats():
    with pytest.raises(err.DomainError):
        util.to_rational(0.5)
    with pytest.raises(err.DomainError):
        util.to_rational(True)
    assert util.to_rational('7/3') == Fraction(7, 3)


@pytest.mark.parametrize('x', [0, 1, 2, 4, Fraction(9, 4), 12, Fraction(121, 4), 1000])
def test_sqrt_bracket_contains_root(x):
    lo, hi = util.sqrt_bracket(x)
    assert lo*lo <= x <= hi*hi
    assert hi - lo <= 1


def test_key_default_dict_passes_key():
    d = util.KeyDefaultDict(lambda k: k*2)
    assert d[3] == 6
    assert 3 in d


def test_shipped_data_loads():
    assert util.defaults('enumeration')['region'] == 'beta_negative'
    assert util.load_data('ext_tables.bespon') is util.load_data('ext_tables.bespon')


def test_missing_data_section():
    with pytest.raises(err.DataError):
        util.defaults('no_such_section')
