# -*- coding: utf-8 -*-
#
# Copyright (c) 2026, wallscope developers
# All rights reserved.
#
# Licensed under the BSD 3-Clause License:
# http://opensource.org/licenses/BSD-3-Clause
#


import json
import pytest
from wallscope.cmdline import run




def _run_json(capsys, argv):
    assert run(argv) == 0
    return json.loads(capsys.readouterr().out)


def test_walls(capsys):
    data = _run_json(capsys, ['walls', '--char', '1,0,-6,15'])
    assert data == [
        {'kind': 'circle', 'center': '-4', 'radius_sq': '4'},
        {'kind': 'circle', 'center': '-9/2', 'radius_sq': '33/4'},
        {'kind': 'circle', 'center': '-11/2', 'radius_sq': '73/4'},
        {'kind': 'circle', 'center': '-13/2', 'radius_sq': '121/4'},
    ]


def test_destab(capsys):
    data = _run_json(capsys, ['destab', '--char', '1,0,-6,15'])
    assert len(data) == 12
    assert data[1]['sub'] == ['1', '-1', '-3/2', '29/6']


def test_hyperbola(capsys):
    assert run(['hyperbola', '--char', '1,0,-6,15']) == 0
    assert capsys.readouterr().out == 'beta^2 - alpha^2 = 12\n'


def test_euler(capsys):
    assert run(['euler', '--e', '0,1,-9/2,61/6', '--f', '1,-1,-3/2,29/6']) == 0
    assert capsys.readouterr().out == '-13\n'
    assert _run_json(capsys, ['euler', '--json', '--e', '1,-1,-3/2,29/6', '--f', '0,1,-9/2,61/6']) == {'chi': '-1'}


def test_ext(capsys):
    assert _run_json(capsys, ['ext', '--e', '0,2,-8,49/3', '--f', '1,-2,2,-4/3']) == {'expected_ext1': 16}
    entries = _run_json(capsys, ['ext', '--wall', 'pink'])
    assert {(e['direction'], e['stratum']): e['dim'] for e in entries}[('AB', 'six_on_line')] == 3
    assert run(['ext', '--e', '1,0,0,0']) == 1


def test_points(capsys):
    assert run(['points', '--n', '6', '--pos', 'collinear', '--deg', '2']) == 0
    assert capsys.readouterr().out == '{"h0":3,"h1":3}\n'


def test_dtpt(capsys):
    data = _run_json(capsys, ['dtpt', '--char', '1,0,-6,15'])
    assert [s['genus'] for s in data] == [5, 6, 7, 8, 9, 10]


def test_components(capsys):
    data = _run_json(capsys, ['components', '--json', '--side', 'hilb'])
    assert [r['total_dim'] for r in data] == [24, 28, 30, 32, 48]
    assert run(['components']) == 0
    assert 'QuadricsP9' in capsys.readouterr().out


def test_chambers(capsys):
    data = _run_json(capsys, ['chambers', '--json', '--loci'])
    assert [c['components'] for c in data] == [0, 1, 1, 2, 4, 7, 8]
    assert [r['total_dim'] for r in data[5]['destabilizing_loci']] == [14, 13, 13]
    assert run(['chambers', '--loci']) == 0
    assert 'N2  1  destabilizing: 11, 8' in capsys.readouterr().out


def test_genus_bound(capsys):
    assert run(['genus-bound', '--deg', '6']) == 0
    assert capsys.readouterr().out == '10\n'
    assert run(['genus-bound', '--deg', '6', '--nonplanar']) == 0
    assert capsys.readouterr().out == '6\n'


def test_plot_to_file(tmp_path, capsys):
    out = tmp_path / 'walls.svg'
    assert run(['plot', '--out', str(out), '--samples', '20']) == 0
    text = out.read_text(encoding='utf8')
    assert text.count('<path') == 4
    assert text.count('<polyline') == 1
    assert run(['plot', '--out', str(out)]) == 1
    assert 'already exists' in capsys.readouterr().err
    assert run(['plot', '--out', str(out), '--overwrite', '--samples', '20']) == 0
    assert out.read_text(encoding='utf8') == text


def test_plot_to_missing_directory(tmp_path, capsys):
    out = tmp_path / 'no-such-dir' / 'walls.svg'
    assert run(['plot', '--out', str(out), '--samples', '2']) == 1
    assert capsys.readouterr().err.startswith('wallscope: Cannot write')
    assert not out.exists()


def test_plot_to_stdout(capsys):
    assert run(['plot', '--samples', '2']) == 0
    assert capsys.readouterr().out.startswith('<?xml')
    assert run(['plot', '--samples', '1']) == 1
    assert run(['plot', '--beta-min', '0', '--beta-max', '0']) == 1


@pytest.mark.parametrize('argv', [
    [],
    ['walls'],
    ['walls', '--char', '1,0,-6'],
    ['walls', '--char', '1,0,-6,1.5'],
    ['euler', '--e', '1,0,0,0'],
    ['points', '--n', '6', '--pos', 'skew', '--deg', '2'],
    ['no-such-command'],
])
def test_usage_errors(argv):
    assert run(argv) == 2


def test_domain_errors(capsys):
    assert run(['walls', '--char', '2,0,-6,15']) == 1
    assert run(['points', '--n', '0', '--deg', '2']) == 1
    assert run(['dtpt', '--char', '1,1,-6,15']) == 1
    assert capsys.readouterr().err.startswith('wallscope: ')


def test_version(capsys):
    assert run(['--version']) == 0
    assert capsys.readouterr().out.startswith('wallscope ')
