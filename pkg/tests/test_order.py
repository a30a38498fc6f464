# -*- coding: utf-8 -*-
#
#       test_order.py
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

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from pomlab import enumeration, order, serialize, util
from pomlab.order import (NotAntitone, NotAPartialOrder, NotBounded, NotInvolution, PosetProperty, StructureError,
                          Verdict)


def test_validate_from_hasse(chain3):
    assert chain3.size == 3
    assert chain3.labels == ('0', 'h', '1')
    assert chain3.covers() == [(0, 1), (1, 2)]
    assert chain3.leq(0, 2) and not chain3.leq(2, 1)
    assert chain3.inv == (2, 1, 0)


def test_validate_from_full_order(diamond):
    P = order.validate(4, diamond.inv, 0, 3, le = diamond.le.tolist())
    assert P == diamond
    assert hash(P) == hash(diamond)


@pytest.mark.parametrize('kwargs, error', [
    (dict(size = 2, inv = [1, 0], bottom = 0, top = 1, hasse = [(0, 1), (1, 0)]), NotAPartialOrder),
    (dict(size = 2, inv = [1, 0], bottom = 0, top = 1, le = [[False, True], [False, True]]), NotAPartialOrder),
    (dict(size = 3, inv = [0, 2, 1], bottom = 0, top = 2, le = [[1, 1, 0], [0, 1, 1], [0, 0, 1]]), NotAPartialOrder),
    (dict(size = 3, inv = [2, 1, 0], bottom = 0, top = 2, hasse = [(0, 1)]), NotBounded),
    (dict(size = 2, inv = [0, 1], bottom = 0, top = 1, hasse = [(0, 1)]), NotInvolution),
    (dict(size = 2, inv = [1, 1], bottom = 0, top = 1, hasse = [(0, 1)]), NotInvolution),
    (dict(size = 4, inv = [3, 1, 2, 0], bottom = 0, top = 3, hasse = [(0, 1), (1, 2), (2, 3)]), NotAntitone),
    (dict(size = 2, inv = [1, 0], bottom = 0, top = 1), StructureError),
    (dict(size = 0, inv = [], bottom = 0, top = 0, hasse = []), StructureError),
    (dict(size = 2, inv = [1, 0], bottom = 0, top = 1, hasse = [(0, 5)]), StructureError),
])
def test_validate_rejects(kwargs, error):
    with pytest.raises(error):
        order.validate(**kwargs)


def test_structure_errors_carry_witness():
    with pytest.raises(NotAntitone) as info:
        order.validate(4, [3, 1, 2, 0], 0, 3, hasse = [(0, 1), (1, 2), (2, 3)])
    assert info.value.witness == (1, 2)


@pytest.mark.parametrize('name, prop, holds', [
    ('fig1', PosetProperty.PARAORTHOMODULAR, True),
    ('fig1', PosetProperty.MODULAR, True),
    ('fig1', PosetProperty.DISTRIBUTIVE, False),
    ('fig2', PosetProperty.PARAORTHOMODULAR, True),
    ('fig2', PosetProperty.DISTRIBUTIVE, True),
    ('fig3', PosetProperty.PARAORTHOMODULAR, True),
    ('fig3', PosetProperty.MODULAR, False),
    ('fig4', PosetProperty.PARAORTHOMODULAR, False),
    ('b6', PosetProperty.ORTHOPOSET, True),
    ('b6', PosetProperty.ORTHOMODULAR, False),
    ('diamond', PosetProperty.ORTHOMODULAR, True),
    ('diamond', PosetProperty.PSEUDO_ORTHOMODULAR, True),
    ('diamond', PosetProperty.SHARPLY_PARAORTHOMODULAR, True),
    ('chain3', PosetProperty.PARAORTHOMODULAR, True),
    ('chain3', PosetProperty.ORTHOPOSET, False),
    ('chain2', PosetProperty.DISTRIBUTIVE, True),
])
def test_bundled_properties(name, prop, holds):
    assert bool(order.check(serialize.load_fixture(name), prop)) is holds


def test_fig1_cone(fig1):
    a, b, c = (fig1.element(l) for l in 'abc')
    assert fig1.label_set(fig1.lower(fig1.upper(1 << a | 1 << b) | 1 << c)) == '{0,c}'
    assert order.cone(fig1, [a, b], order.UPPER) == fig1.upper(1 << a | 1 << b)


def test_cones_are_python_ints(diamond):
    for x in range(diamond.size):
        assert type(diamond.down[x]) is int and type(diamond.up[x]) is int
    assert type(util.mask_of(np.flatnonzero(diamond.le[0]))) is int
    assert list(util.bits(np.int64(0b1010))) == [1, 3]
    assert order.check(diamond, PosetProperty.ORTHOMODULAR)
    assert order.check(diamond, PosetProperty.SHARPLY_PARAORTHOMODULAR)


def test_fig3_modular_witness(fig3):
    verdict = order.check(fig3, 'modular')
    assert not verdict
    assert fig3.labels[verdict.witness['x']] == 'a'
    assert fig3.labels[verdict.witness['y']] == "a'"
    assert fig3.labels[verdict.witness['z']] == "c'"


def test_b6_witness_pair(fig4):
    verdict = order.check(fig4, PosetProperty.PARAORTHOMODULAR)
    assert dict(verdict.witness) == {'x': fig4.element('a'), 'y': fig4.element('b')}
    assert 'x=a, y=b' in verdict.describe(fig4.labels)
    assert verdict.to_json(fig4.labels)['labels'] == {'x': 'a', 'y': 'b'}


def test_verdict_shapes():
    assert Verdict.ok() and Verdict.ok().describe() == 'holds'
    failed = Verdict.fail({'B': [0, 2]}, 'reason')
    assert not failed
    assert failed.describe(('0', 'a', 'b')) == 'fails (reason: B={0,b})'
    assert failed.to_json() == {'holds': False, 'reason': 'reason', 'witness': {'B': [0, 2]}}


def test_partial_operations(diamond, fig2):
    a, a_ = diamond.element('a'), diamond.element("a'")
    assert order.partial_meet(diamond, a, a_) == diamond.bottom
    assert order.partial_join(diamond, a, a_) == diamond.top
    assert order.is_lattice(diamond)

    assert not order.is_lattice(fig2)
    assert fig2.join(fig2.element('a'), fig2.element('b')) is None
    assert fig2.meet(fig2.element("b'"), fig2.element("a'")) is None


def test_element_lookup(diamond):
    with pytest.raises(KeyError):
        diamond.element('z')


def test_parse_property_names():
    assert PosetProperty.parse('Pseudo-Orthomodular') is PosetProperty.PSEUDO_ORTHOMODULAR
    with pytest.raises(ValueError):
        PosetProperty.parse('boolean')


@pytest.mark.parametrize('n', range(1, 6))
def test_added_bounds_are_paraorthomodular(n):
    for P in enumeration.enumerate_posets(n):
        Q = order.add_bounds(P)
        assert Q.size == n + 2
        assert order.check(Q, PosetProperty.PARAORTHOMODULAR)


@pytest.mark.parametrize('n', range(1, 7))
def test_meet_form_on_lattices(n):
    for P in enumeration.enumerate_posets(n):
        if order.is_lattice(P):
            assert bool(order.check_p_form(P)) == bool(order.check(P, PosetProperty.PARAORTHOMODULAR))


@pytest.mark.parametrize('n', range(1, 7))
def test_quantum_classes_are_paraorthomodular(n):
    for P in enumeration.enumerate_posets(n):
        if order.check(P, PosetProperty.ORTHOMODULAR) or order.check(P, PosetProperty.PSEUDO_ORTHOMODULAR):
            assert order.check(P, PosetProperty.PARAORTHOMODULAR)
        if order.check(P, PosetProperty.SHARPLY_PARAORTHOMODULAR):
            assert order.check(P, PosetProperty.PARAORTHOMODULAR)


@settings(max_examples = 50, deadline = None)
@given(perm = st.permutations(range(8)))
def test_relabel_preserves_properties(perm):
    P = serialize.load_fixture('fig1')
    Q = order.relabel(P, perm)
    assert Q.labels[perm[P.element('a')]] == 'a'
    for prop in PosetProperty:
        assert bool(order.check(Q, prop)) == bool(order.check(P, prop))
    assert order.relabel(Q, np.argsort(perm)) == P


def test_sublattice_tests(diamond, fig2):
    assert order.is_sublattice(diamond, diamond.full)
    assert order.is_sublattice(diamond, 0b1001)
    assert not order.is_sublattice(diamond, 0b0110)
    assert order.induced_subposet_is_lattice(diamond, diamond.full)
    assert not order.induced_subposet_is_lattice(fig2, fig2.full)
