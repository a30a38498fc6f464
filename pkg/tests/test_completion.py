# -*- coding: utf-8 -*-
#
#       test_completion.py
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

import pytest

from pomlab import canonical, completion, enumeration, order
from pomlab.completion import RAW, REDUCED, BudgetExceeded, NotACompleteLattice
from pomlab.order import PosetProperty


def test_fig2_completion(fig2):
    C = completion.dm_complete(fig2)
    assert C.size == 7
    assert C.universe[0] == 1 << fig2.bottom
    assert C.universe[-1] == fig2.full

    added = [i for i in range(C.size) if i not in C.embedding]
    assert len(added) == 1
    assert C.label(added[0]) == '{a,b}'
    assert C.ortho[added[0]] == added[0]

    L = C.as_poset()
    assert order.is_lattice(L)
    assert completion.check_embedding(C)
    assert completion.is_doubly_dense(set(C.embedding), L)
    assert order.check(L, PosetProperty.PARAORTHOMODULAR)


def test_lattice_is_its_own_completion(diamond):
    C = completion.dm_complete(diamond)
    assert C.size == diamond.size
    assert canonical.is_isomorphic(C.as_poset(), diamond)
    a, a_ = C.embedding[diamond.element('a')], C.embedding[diamond.element("a'")]
    assert C.meet(a, a_) == C.embedding[diamond.bottom]
    assert C.join(a, a_) == C.embedding[diamond.top]


def test_fig3_completion(fig3):
    C = completion.dm_complete(fig3)
    assert C.size > fig3.size
    assert completion.check_embedding(C)
    assert completion.is_doubly_dense(set(C.embedding), C.as_poset())


def test_double_density(diamond, fig2):
    bounds = 1 << diamond.bottom | 1 << diamond.top
    verdict = completion.is_doubly_dense(bounds, diamond)
    assert not verdict
    assert verdict.witness['x'] == diamond.element('a')
    assert completion.is_doubly_dense(diamond.full, diamond)

    with pytest.raises(NotACompleteLattice):
        completion.is_doubly_dense(fig2.full, fig2)


@pytest.mark.parametrize('name, holds', [
    ('b6', False),
    ('chain2', True),
    ('chain3', True),
    ('diamond', True),
    ('fig2', True),
])
def test_criteria_on_fixtures(name, holds, request):
    P = request.getfixturevalue(name)
    results = completion.cross_validate(P)
    assert list(results) == ['wdc_raw', 'wdc_reduced', 'flp_raw', 'flp_reduced', 'completion']
    assert set(results.values()) == {holds}


def test_failure_witnesses(b6):
    wdc = completion.is_weakly_d_continuous(b6, RAW)
    assert not wdc and set(wdc.witness) == {'B', 'C'}
    flp = completion.satisfies_flp(b6, REDUCED)
    assert not flp and set(flp.witness) == {'X', 'Y'}
    assert 'X=' in flp.describe(b6.labels)


def test_budgets(fig2, fig3):
    with pytest.raises(BudgetExceeded):
        completion.is_weakly_d_continuous(fig3, RAW)
    with pytest.raises(BudgetExceeded):
        completion.satisfies_flp(fig2, RAW, budget = 4)
    with pytest.raises(ValueError):
        completion.satisfies_flp(fig2, 'fast')
    assert bool(completion.satisfies_flp(fig3, REDUCED)) == bool(completion.completion_is_paraorthomodular(fig3))


def test_threads_agree(fig1):
    assert bool(completion.satisfies_flp(fig1, RAW, threads = 2)) == bool(completion.satisfies_flp(fig1, RAW))
    assert bool(completion.is_weakly_d_continuous(fig1, threads = 3)) == bool(completion.is_weakly_d_continuous(fig1))


@pytest.mark.parametrize('n', range(1, 6))
def test_criteria_agree(n):
    for P in enumeration.enumerate_posets(n):
        assert len(set(completion.cross_validate(P).values())) == 1


@pytest.mark.slow
@pytest.mark.parametrize('n', range(6, 9))
def test_criteria_agree_large(n):
    for P in enumeration.enumerate_posets(n):
        assert len(set(completion.cross_validate(P).values())) == 1
