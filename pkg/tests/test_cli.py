# -*- coding: utf-8 -*-
#
#       test_cli.py
#
#       Copyright 2026 The pomlab authors
#
#       This program is free software; you can redistribute it and/or modify
#       it under the terms of the GNU General Public License as published by
#       the Free Software Foundation; either version 2 of the License, or
#       (at your option) any later version.
#
#       This program is distributed in the hope that it will be useful,
#       but WITHOUT ANY WARRANTY; without even the implied warranty of
#       MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
#       GNU General Public License for more details.
#
#       You should have received a copy of the GNU General Public License
#       along with this program; if not, write to the Free Software
#       Foundation, Inc., 51 Franklin Street, Fifth Floor, Boston,
#       MA 02110-1301, USA.


from __future__ import print_function, unicode_literals

import io
import json

import pytest

from pomlab import serialize
from pomlab.__main__ import EXIT_FAILED, EXIT_OK, EXIT_USAGE, run


def _run(*argv):
    out = io.StringIO()
    status = run(list(argv), out = out)
    return status, out.getvalue().splitlines()


def test_help():
    status, lines = _run('-h')
    assert status == EXIT_OK
    assert lines[0].startswith('Usage: pomlab')


@pytest.mark.parametrize('argv', [
    [],
    ['draw'],
    ['check'],
    ['enumerate'],
    ['enumerate', '--n', '0'],
    ['enumerate', '--n', '11'],
    ['enumerate', '--n', '3', '--kind', 'lattice'],
    ['reproduce', 'fig6'],
    ['check', '--bogus'],
])
def test_usage_errors(argv, capsys):
    status, _ = _run(*argv)
    assert status == EXIT_USAGE
    assert 'pomlab: ' in capsys.readouterr().err


def test_malformed_document(tmp_path, capsys):
    path = tmp_path / 'broken.json'
    path.write_text('{"kind": "poset", "size": 2}')
    status, _ = _run('check', str(path))
    assert status == EXIT_USAGE
    assert 'missing' in capsys.readouterr().err


@pytest.mark.parametrize('doc', [
    {'kind': 'poset', 'size': '2', 'inv': [1, 0], 'bottom': 0, 'top': 1, 'hasse': [[0, 1]]},
    {'kind': 'poset', 'size': 2, 'inv': [1, 0], 'bottom': 0, 'top': 1, 'hasse': [0]},
    {'kind': 'poset', 'size': 2, 'inv': None, 'bottom': 0, 'top': 1, 'hasse': [[0, 1]]},
    {'kind': 'poset', 'size': 2, 'inv': [1, 0], 'bottom': 0, 'top': 1, 'le': [[True, 'yes'], [False, True]]},
    {'kind': 'directoid', 'meet': [[0, 'a'], [0, 1]], 'inv': [1, 0], 'zero': 0, 'one': 1},
    {'kind': 'effect_algebra', 'oplus': 3, 'zero': 0, 'one': 1},
    {'kind': 'effect_algebra', 'oplus': [[0, 1], [1, None]], 'zero': 0, 'one': 1, 'labels': 'ab'},
])
def test_mistyped_fields(tmp_path, capsys, doc):
    path = tmp_path / 'mistyped.json'
    path.write_text(json.dumps(doc))
    status, _ = _run('check', str(path))
    assert status == EXIT_USAGE
    assert 'pomlab: Field "' in capsys.readouterr().err


def test_check(fixture_path):
    status, lines = _run('check', fixture_path('fig2'), '--prop', 'paraorthomodular,distributive')
    assert status == EXIT_OK
    assert lines == ['paraorthomodular: holds', 'distributive: holds']

    status, lines = _run('check', fixture_path('fig4'), '--prop=paraorthomodular')
    assert status == EXIT_FAILED
    assert lines[0].startswith('paraorthomodular: fails (')
    assert 'x=a, y=b' in lines[0]


def test_check_json(fixture_path):
    status, lines = _run('check', fixture_path('chain3'), '--prop', 'orthoposet', '--json')
    assert status == EXIT_FAILED
    doc = json.loads(lines[0])
    assert doc['property'] == 'orthoposet' and doc['holds'] is False


def test_check_dot(tmp_path, fixture_path):
    dot = str(tmp_path / 'fig4.dot')
    _run('check', fixture_path('fig4'), '--prop', 'paraorthomodular', '--dot', dot)
    with io.open(dot, encoding = 'utf-8') as f:
        assert f.read().count('fillcolor=lightgrey') == 2


def test_witness(fixture_path):
    status, lines = _run('witness', fixture_path('fig2'))
    assert status == EXIT_OK
    assert lines[0].startswith('no strong subposet')

    status, lines = _run('witness', fixture_path('fig4'))
    assert status == EXIT_FAILED
    assert lines[0].startswith('B6 strong subposet: ')

    status, lines = _run('witness', fixture_path('b6'), '--json')
    assert json.loads(lines[0])['witness'] is not None


def test_enumerate(tmp_path):
    status, lines = _run('enumerate', '--n', '4')
    assert status == EXIT_OK
    assert lines[-1] == '3 structures of size 4'
    assert len(lines) == 4

    path = str(tmp_path / 'posets.jsonl')
    status, lines = _run('enumerate', '--n=5', '--filter', 'paraorthomodular', '--out', path)
    assert status == EXIT_OK
    count = int(lines[-1].split()[0])
    assert len(list(serialize.read_jsonl(path))) == count

    status, lines = _run('enumerate', '--n', '4', '--kind', 'orthoalgebra', '--json')
    assert status == EXIT_OK
    assert [json.loads(line)['kind'] for line in lines] == ['effect_algebra']


def test_enumerate_counts():
    status, lines = _run('enumerate', '--n', '3', '--kind', 'counts', '--prop', 'paraorthomodular', '--json')
    assert status == EXIT_OK
    rows = [json.loads(line) for line in lines]
    assert rows[-1] == {'n': 3, 'class': 'paraorthomodular', 'count': 1}


def test_complete(tmp_path, fixture_path):
    path = str(tmp_path / 'fig2-dm.json')
    status, lines = _run('complete', fixture_path('fig2'), '--out', path)
    assert status == EXIT_OK
    assert lines[0] == 'completion has 7 elements, 1 added'
    assert serialize.load_structure(path).size == 7

    status, lines = _run('complete', fixture_path('b6'))
    assert status == EXIT_FAILED


def test_convert(fixture_path):
    status, lines = _run('convert', fixture_path('diamond'), '--to', 'orthoalgebra')
    assert status == EXIT_OK
    doc = json.loads('\n'.join(lines))
    assert doc['kind'] == 'effect_algebra' and doc['size'] == 4

    status, _ = _run('convert', fixture_path('diamond'), '--to', 'lattice')
    assert status == EXIT_USAGE


def test_eval(tmp_path, fixture_path):
    formulas = tmp_path / 'formulas.txt'
    formulas.write_text("[refl] x <= x\n[self] x <= x'\n")
    status, lines = _run('eval', fixture_path('chain3'), str(formulas))
    assert status == EXIT_FAILED
    assert lines == ['refl: holds', "self: fails (x <= x': x=1)"]


def test_reproduce():
    status, lines = _run('reproduce', 'fig2')
    assert status == EXIT_OK
    assert all(line.startswith('ok ') for line in lines)
