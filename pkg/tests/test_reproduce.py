# -*- coding: utf-8 -*-
#
#       test_reproduce.py
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

from pomlab import reproduce


@pytest.mark.parametrize('name', ['fig1', 'fig2', 'fig3', 'fig4', 'fig5'])
def test_figures(name):
    results = reproduce.expectations(name)
    assert results
    failed = [e for e in results if not e.holds]
    assert not failed, failed


def test_small_sweeps():
    assert all(e.holds for e in reproduce.corollary_dm(n_max = 3))
    assert all(e.holds for e in reproduce.roundtrip_oa(n_max = 4))


def test_text_report():
    out = io.StringIO()
    assert reproduce.run('fig1', out = out)
    lines = out.getvalue().splitlines()
    assert lines[0] == 'ok   fig1: paraorthomodular'
    assert all(line.startswith('ok ') for line in lines)


def test_json_report():
    out = io.StringIO()
    assert reproduce.run('fig4', as_json = True, out = out)
    docs = [json.loads(line) for line in out.getvalue().splitlines()]
    assert len(docs) == 2
    assert set(docs[0]) == {'scenario', 'description', 'holds', 'detail'}
    assert all(doc['scenario'] == 'fig4' and doc['holds'] for doc in docs)


def test_unknown_scenario():
    with pytest.raises(KeyError):
        reproduce.expectations('fig6')
