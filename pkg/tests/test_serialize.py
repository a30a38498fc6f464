# -*- coding: utf-8 -*-
#
#       test_serialize.py
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

from pomlab import completion, directoid, effect, enumeration, order, serialize, util
from pomlab.order import StructureError


def test_bundled_fixtures():
    names = util.list_fixtures()
    assert names == ['b6', 'chain2', 'chain3', 'diamond', 'fig1', 'fig2', 'fig3', 'fig4', 'fig5']
    for name in names:
        P = serialize.load_fixture(name)
        assert P.labels[P.bottom] == '0' and P.labels[P.top] == '1'
    assert serialize.load_fixture('fig1.json') == serialize.load_fixture('fig1')


def test_poset_documents(fig3):
    doc = serialize.structure_to_json(fig3)
    assert list(doc)[:2] == ['kind', 'size']
    assert doc['hasse'] == [list(edge) for edge in fig3.covers()]
    assert serialize.structure_from_json(doc) == fig3

    full = serialize.structure_to_json(fig3, hasse = False)
    assert 'hasse' not in full
    assert serialize.structure_from_json(json.loads(json.dumps(full))) == fig3


def test_directoid_and_effect_algebra_documents(fig5, diamond):
    D = next(directoid.assigned_directoids(fig5))
    assert serialize.structure_from_json(serialize.structure_to_json(D)) == D

    A = effect.orthoalgebra_from_orthomodular_poset(diamond)
    doc = json.loads(json.dumps(serialize.structure_to_json(A)))
    assert doc['oplus'][1][1] is None
    B = serialize.structure_from_json(doc)
    assert B == A and B.labels == A.labels


@pytest.mark.parametrize('doc', [
    [1, 2],
    {'kind': 'lattice', 'size': 2},
    {'kind': 'poset', 'size': 2, 'inv': [1, 0]},
    {'kind': 'directoid', 'meet': [[0]]},
    {'kind': 'poset', 'size': 2, 'inv': [1, 0], 'bottom': 0, 'top': 1, 'hasse': [[1, 0]]},
    {'kind': 'poset', 'size': 2.0, 'inv': [1, 0], 'bottom': 0, 'top': 1, 'hasse': [[0, 1]]},
    {'kind': 'poset', 'size': 2, 'inv': [1, 0], 'bottom': True, 'top': 1, 'hasse': [[0, 1]]},
    {'kind': 'directoid', 'meet': 'table', 'inv': [1, 0], 'zero': 0, 'one': 1},
])
def test_invalid_documents(doc):
    with pytest.raises(StructureError):
        serialize.structure_from_json(doc)


def test_malformed_json():
    with pytest.raises(ValueError):
        serialize.load_structure(io.StringIO('{"kind": "poset",'))


def test_files(tmp_path, fig2):
    path = str(tmp_path / 'fig2.json')
    text = serialize.dump_structure(fig2, path)
    assert json.loads(text)['labels'] == list(fig2.labels)
    assert serialize.load_structure(path) == fig2


def test_json_lines(tmp_path):
    posets = list(enumeration.enumerate_posets(5))
    path = str(tmp_path / 'posets.jsonl')
    assert serialize.write_jsonl(posets, path) == len(posets)
    assert list(serialize.read_jsonl(path)) == posets

    stream = io.StringIO()
    serialize.write_jsonl(posets[:2], stream)
    stream = io.StringIO(stream.getvalue().replace('\n', '\n\n'))
    assert list(serialize.read_jsonl(stream)) == posets[:2]


def test_completion_document(fig2):
    C = completion.dm_complete(fig2)
    doc = serialize.completion_to_json(C)
    assert doc['kind'] == 'poset' and doc['size'] == 7
    assert doc['embedding'] == list(C.embedding)
    assert ['0', 'a', 'b'] in doc['closed_sets']
    assert serialize.structure_from_json(doc) == C.as_poset()
    assert json.loads(serialize.dump_completion(C)) == json.loads(json.dumps(doc))


def test_witness_lines(fig4):
    verdict = order.check(fig4, 'paraorthomodular')
    doc = json.loads(serialize.dump_witness(verdict, fig4.labels, property = 'paraorthomodular'))
    assert doc['property'] == 'paraorthomodular'
    assert doc['holds'] is False
    assert doc['labels'] == {'x': 'a', 'y': 'b'}
    assert json.loads(serialize.dump_witness(order.check(fig4, 'orthoposet'))) == {'holds': True}
