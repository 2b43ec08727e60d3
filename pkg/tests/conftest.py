# -*- coding: utf-8 -*-
#
# Copyright (c) 2026, wallscope developers
# All rights reserved.
#
# Licensed under the BSD 3-Clause License:
# http://opensource.org/licenses/BSD-3-Clause
#


import fractions
import random
import pytest
from wallscope.chern import Char3, line_bundle, parse_char

Fraction = fractions.Fraction




@pytest.fixture
def v():
    '''
    Ideal sheaf of a (2,3)-complete intersection curve.
    '''
    return parse_char('1,0,-6,15')


@pytest.fixture
def rng():
    return random.Random(20261017)


def random_lattice_char(rng, bound=6):
    '''
    Character of a random integral class, an integer combination of O(-3)
    through O(3); these span K(P^3), so every Euler pairing with it is an
    integer.
    '''
    c = Char3(0, 0, 0, 0)
    for n in range(-3, 4):
        c = c + rng.randint(-bound, bound)*line_bundle(n)
    return c


def random_char(rng, bound=20):
    return Char3(*(Fraction(rng.randint(-bound, bound), rng.randint(1, 12)) for _ in range(4)))
