# -*- coding: utf-8 -*-
#
# Copyright (c) 2026, wallscope developers
# All rights reserved.
#
# Licensed under the BSD 3-Clause License:
# http://opensource.org/licenses/BSD-3-Clause
#


import pytest
from wallscope import destab
from wallscope import err
from wallscope import homalg
from wallscope import ledger
from wallscope.ledger import EMPTY_STRATUM, BaseSpace




@pytest.mark.parametrize('text,dim', [
    ('Gr24', 4),
    ('Flag(2)', 7),
    ('Flag(6)', 15),
    ('Gr24*Flag(2)', 11),
    ('UnivLine*Flag(1)', 10),
    ('UnivLineFiber2*DualP3', 9),
    ('HilbConics*DualP3', 11),
    ('PointsP3(6)', 18),
    ('Point', 0),
])
def test_base_space_dim(text, dim):
    assert ledger.base_space_dim(text) == dim
    assert str(BaseSpace.parse(text)) == text


@pytest.mark.parametrize('text', ['Gr25', 'Flag', 'Gr24(2)', 'Flag(2)*', 'Flag(-1)'])
def test_unknown_base_space(text):
    with pytest.raises(err.DomainError):
        BaseSpace.parse(text)


def test_stratum_dim():
    assert ledger.stratum_dim(16, 'QuadricsP9') == 24
    assert ledger.stratum_dim(1, BaseSpace.atom('Flag', 2)) == 7
    assert ledger.stratum_dim(0, 'Gr24') == EMPTY_STRATUM
    assert ledger.stratum_dim(0, 'Gr24') < 0
    with pytest.raises(err.DomainError):
        ledger.stratum_dim(-1, 'Gr24')




def test_pt_components():
    records = ledger.pt_component_table()
    assert [r.name for r in records] == ['pt{0}'.format(n) for n in range(1, 9)]
    assert [r.total_dim for r in records] == [24] + [28]*6 + [36]
    for r in records:
        assert r.computed_dim == r.total_dim
        assert r.side == 'PT'


def test_hilb_components():
    records = {r.name: r for r in ledger.hilb_component_table()}
    assert {name: r.total_dim for name, r in records.items()} == {
        'H_CM': 24, 'H_CM_prime': 28, 'H1': 30, 'H2': 32, 'H6': 48}
    for r in records.values():
        assert r.computed_dim == r.total_dim
    assert records['H2'].provenance == 'paper_expected'
    assert records['H6'].provenance == 'paper_expected'
    assert records['H1'].base is None
    assert dict(records['H1'].summands)['floating_point'] == 3


def test_chamber_sequence():
    assert ledger.chamber_sequence() == [('N0', 0), ('N1', 1), ('N2', 1), ('N3', 2), ('N4', 4), ('N5', 7), ('N6', 8)]


def test_destab_loci():
    table = ledger.destab_loci_table()
    assert [(chamber, [r.total_dim for r in records]) for chamber, records in table] == [
        ('N1', [11]), ('N2', [11, 8]), ('N3', [9, 8]), ('N4', [8, 8]), ('N5', [14, 13, 13])]
    for _, records in table:
        for r in records:
            assert r.computed_dim == r.total_dim
            assert r.side == 'destab'


def test_pt_ext_correspondence():
    assert ledger.check_pt_correspondence() == []
    correspondence = ledger.pt_ext_correspondence()
    assert correspondence['pt1'] == ('blue', 'BA', 'generic', 16)
    assert correspondence['pt8'] == ('pink', 'BA', 'all', 22)


def test_green_ghs_instance():
    dims, n1_dim, stratum = ledger.green_ghs_instance()
    assert dims == (8, 3, 1, 13)
    assert n1_dim == 24
    assert stratum == 23
    assert homalg.ghs_bound_check(*dims, n1_dim)


def test_format_table():
    text = ledger.format_table(ledger.pt_component_table())
    lines = text.splitlines()
    assert len(lines) == 9
    assert lines[0].startswith('name')
    assert 'Gr24*Flag(2)' in lines[2]
    assert 'P^15' in lines[1]


def test_component_json():
    data = ledger.pt_component_table()[1].to_json()
    assert data['base'] == 'Gr24*Flag(2)'
    assert data['base_dim'] == 11
    assert data['fiber_dim'] == 17


def test_new_components_match_floating_points(v):
    # each floating point adds 3 to a component's dimension
    floating = sorted(sum(dim for label, dim in r.summands if label.startswith('floating'))//3
                      for r in ledger.hilb_component_table() if r.summands)
    assert floating == [g - 4 for g in destab.new_component_genera(v)]
