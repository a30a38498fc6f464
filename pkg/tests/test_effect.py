# -*- coding: utf-8 -*-
#
#       test_effect.py
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

import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from pomlab import directoid, effect, enumeration, order
from pomlab.directoid import DirectoidClass
from pomlab.effect import E1Violation, E2Violation, E3Violation, E4Violation, NotOrthoalgebra, NotOrthoDirectoid
from pomlab.order import PosetProperty


#: 0 < h < 1 with h + h = 1
CHAIN3 = [[0, 1, 2],
          [1, 2, None],
          [2, None, None]]


@pytest.fixture
def chain3_ea():
    return effect.validate_effect_algebra(CHAIN3, 0, 2, ['0', 'h', '1'])


def test_two_element_effect_algebra(chain2):
    A = effect.validate_effect_algebra([[0, 1], [1, None]], 0, 1)
    assert A.inv == (1, 0)
    assert A.defined(0, 1) and not A.defined(1, 1)
    assert A.sum(1, 1) is None
    assert effect.induced_order(A) == chain2
    assert effect.is_orthoalgebra(A)


def test_chain3_effect_algebra(chain3_ea, chain3):
    assert chain3_ea.inv == (2, 1, 0)
    assert effect.induced_order(chain3_ea) == chain3
    assert not effect.is_orthoalgebra(chain3_ea)
    assert effect.ominus(chain3_ea, 2, 1) == 1
    assert effect.ominus(chain3_ea, 1, 0) == 1
    with pytest.raises(ValueError):
        effect.ominus(chain3_ea, 1, 2)
    with pytest.raises(NotOrthoalgebra):
        next(effect.directoids_from_orthoalgebra(chain3_ea))


@pytest.mark.parametrize('oplus, error', [
    ([[0, 1], [None, None]], E1Violation),
    ([[0, 1, 2, 3], [1, 1, 3, None], [2, 3, None, None], [3, None, None, None]], E2Violation),
    ([[0, 1], [1, 1]], E3Violation),
    ([[0, 1], [1, 0]], E4Violation),
    ([[0, 5], [5, None]], order.StructureError),
])
def test_axiom_violations(oplus, error):
    with pytest.raises(error):
        effect.validate_effect_algebra(oplus, 0, len(oplus) - 1)


def test_orthomodular_poset_orthoalgebra(diamond):
    A = effect.orthoalgebra_from_orthomodular_poset(diamond)
    a, a_ = diamond.element('a'), diamond.element("a'")
    assert A.sum(a, a_) == diamond.top
    assert not A.defined(a, a)
    assert effect.induced_order(A) == diamond
    assert effect.is_orthoalgebra(A)
    assert effect.oplus_is_join(A)
    assert effect.check_sum_minimality(A)


def test_non_ortho_directoid_is_rejected(chain3):
    D = next(directoid.assigned_directoids(chain3))
    with pytest.raises(NotOrthoDirectoid):
        effect.orthoalgebra_from_ortho_directoid(D)


def test_counts():
    assert [len(list(enumeration.enumerate_effect_algebras(n))) for n in range(1, 5)] == [1, 1, 1, 3]
    assert [len(list(enumeration.enumerate_orthoalgebras(n))) for n in range(1, 5)] == [1, 1, 0, 1]


@pytest.mark.parametrize('n', range(1, 7))
def test_effect_algebras_induce_paraorthomodular_posets(n):
    for A in enumeration.enumerate_effect_algebras(n):
        P = effect.induced_order(A)
        assert order.check(P, PosetProperty.PARAORTHOMODULAR)
        assert effect.relabel(A, list(range(n))) == A


@pytest.mark.parametrize('n', range(1, 7))
def test_sums_are_defined_on_orthogonal_pairs(n):
    for A in enumeration.enumerate_effect_algebras(n):
        P = effect.induced_order(A)
        for a, b in itertools.product(range(n), repeat = 2):
            assert A.defined(a, b) == P.leq(a, A.inv[b])


@pytest.mark.slow
@pytest.mark.parametrize('n', range(7, 9))
def test_effect_algebras_large(n):
    test_effect_algebras_induce_paraorthomodular_posets(n)
    test_sums_are_defined_on_orthogonal_pairs(n)


@pytest.mark.parametrize('n', range(1, 7))
def test_orthoalgebra_round_trip(n):
    for A in enumeration.enumerate_orthoalgebras(n):
        assert effect.check_sum_minimality(A)
        for D in effect.directoids_from_orthoalgebra(A, directoid.ALL):
            assert directoid.check_class(D, DirectoidClass.ORTHO_DIRECTOID)
            assert effect.orthoalgebra_from_ortho_directoid(D) == A
            assert bool(directoid.check_axioms(D, ('om2',))) == bool(effect.oplus_is_join(A))


@pytest.mark.slow
@pytest.mark.parametrize('n', range(7, 9))
def test_orthoalgebra_round_trip_large(n):
    test_orthoalgebra_round_trip(n)


@pytest.mark.parametrize('n', range(1, 6))
def test_ortho_directoids_give_orthoalgebras(n):
    for D in enumeration.enumerate_ortho_directoids(n):
        laws = directoid.check_derived_laws(D)
        assert all(laws.values()), [name for name, verdict in laws.items() if not verdict]
        assert order.check(directoid.induced_poset(D), PosetProperty.ORTHOPOSET)

        A = effect.orthoalgebra_from_ortho_directoid(D)
        assert effect.is_orthoalgebra(A)
        assert effect.check_sum_minimality(A)


@pytest.mark.slow
def test_ortho_directoids_give_orthoalgebras_large():
    test_ortho_directoids_give_orthoalgebras(6)


@settings(max_examples = 30, deadline = None)
@given(perm = st.permutations(range(4)))
def test_relabel_round_trip(perm, diamond):
    A = effect.orthoalgebra_from_orthomodular_poset(diamond)
    B = effect.relabel(A, perm)
    assert effect.is_orthoalgebra(B)
    assert effect.induced_order(B) == order.relabel(diamond, perm)
    assert effect.relabel(B, np.argsort(perm)) == A
