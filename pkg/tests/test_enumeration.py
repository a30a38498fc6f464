# -*- coding: utf-8 -*-
#
#       test_enumeration.py
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

from pomlab import canonical, directoid, enumeration, order
from pomlab.directoid import DirectoidClass, InvolutiveDirectoid
from pomlab.order import PosetProperty
from pomlab.util import CapExceeded


@pytest.mark.parametrize('n, count', [(1, 1), (2, 1), (3, 1), (4, 3)])
def test_small_counts(n, count):
    assert len(list(enumeration.enumerate_posets(n))) == count


def test_level_shape():
    for n in range(1, 7):
        level = list(enumeration.enumerate_posets(n))
        for P in level:
            assert P.size == n
            assert P.bottom == 0 and P.top == n - 1
            assert canonical.canonical_structure(P) == P
        assert len({canonical.canonical_form(P) for P in level}) == len(level)
        assert level == list(enumeration.enumerate_posets(n))
    assert enumeration.poset_level(5) is enumeration.poset_level(5)


@pytest.mark.parametrize('n', range(1, 6))
def test_naive_oracle(n):
    assert enumeration.naive_poset_count(n) == len(enumeration.poset_level(n))
    assert (enumeration.naive_poset_count(n, ['paraorthomodular'])
            == len(list(enumeration.enumerate_posets(n, ['paraorthomodular']))))


@pytest.mark.slow
def test_naive_oracle_large():
    assert enumeration.naive_poset_count(6) == len(enumeration.poset_level(6))


def test_filters():
    for n in range(1, 7):
        level = enumeration.poset_level(n)
        ortho = list(enumeration.enumerate_posets(n, [PosetProperty.ORTHOPOSET, 'orthomodular']))
        assert ortho == [P for P in level if order.check(P, 'orthoposet') and order.check(P, 'orthomodular')]


def test_size_errors():
    with pytest.raises(ValueError):
        list(enumeration.enumerate_posets(0))
    with pytest.raises(CapExceeded) as info:
        list(enumeration.enumerate_posets(5, cap = 4))
    assert (info.value.what, info.value.value, info.value.cap) == ('n', 5, 4)
    with pytest.raises(CapExceeded):
        list(enumeration.enumerate_effect_algebras(6, cap = 5))
    with pytest.raises(ValueError):
        enumeration.naive_poset_count(enumeration.NAIVE_CAP + 1)


def test_directoids_of_lattices(chain3, diamond, b6):
    for P in (chain3, diamond, b6):
        found = list(enumeration.enumerate_directoids(P))
        assert found == [next(directoid.assigned_directoids(P))]


def test_directoid_enumeration():
    for n in range(1, 5):
        found = list(enumeration.enumerate_involutive_directoids(n))
        assert all(isinstance(D, InvolutiveDirectoid) for D in found)
        assert len({canonical.canonical_form(D) for D in found}) == len(found)
        assert {canonical.canonical_form(directoid.induced_poset(D)) for D in found} == {
            canonical.canonical_form(P) for P in enumeration.poset_level(n)}


def test_ortho_directoids():
    for n in range(1, 6):
        for D in enumeration.enumerate_ortho_directoids(n):
            assert directoid.check_class(D, DirectoidClass.ORTHO_DIRECTOID)
            assert order.check(directoid.induced_poset(D), PosetProperty.ORTHOPOSET)


def test_effect_algebras_on_diamond(diamond):
    found = enumeration.effect_algebras_on(diamond)
    assert len(found) == 1
    assert found[0].oplus[diamond.element('a'), diamond.element("a'")] == diamond.top


def test_counterexample_search():
    chain = enumeration.search_counterexample(['paraorthomodular'], ['orthomodular'], 4)
    assert chain.size == 3
    assert order.check(chain, 'paraorthomodular') and not order.check(chain, 'orthomodular')

    assert enumeration.search_counterexample(['orthomodular'], ['paraorthomodular'], 6) is None
    assert enumeration.search_counterexample(['pseudo_orthomodular'], ['paraorthomodular'], 6) is None
    assert enumeration.search_counterexample(['canonical_image'], ['cond6'], 4) is None

    with pytest.raises(ValueError):
        enumeration.search_counterexample(['orthomodular'], ['qid8'], 4)
    with pytest.raises(CapExceeded):
        enumeration.search_counterexample([], ['orthoposet'], 11)


def test_summary_table():
    rows = enumeration.summary_table(4, ['paraorthomodular', 'orthoposet'])
    assert [tuple(row.values()) for row in rows if row['n'] == 4][0] == (4, 'all', 3)
    assert len(rows) == 4 * 3
    assert list(rows[0]) == ['n', 'class', 'count']
    assert len(enumeration.summary_table(2)) == 2 * (1 + len(PosetProperty))


def test_parse_properties():
    assert enumeration.parse_properties(['Paraorthomodular', 'Sharply-Paraorthomodular']) == (
        'poset', [PosetProperty.PARAORTHOMODULAR, PosetProperty.SHARPLY_PARAORTHOMODULAR])
    assert enumeration.parse_properties(['qid8']) == ('directoid', [DirectoidClass.QID8])
    assert enumeration.parse_properties([]) == (None, [])
    with pytest.raises(ValueError):
        enumeration.parse_properties(['lattice'])
    with pytest.raises(ValueError):
        enumeration.parse_properties(['modular', 'qid8'])
