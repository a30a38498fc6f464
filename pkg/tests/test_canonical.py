# -*- coding: utf-8 -*-
#
#       test_canonical.py
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
from hypothesis import given, settings, strategies as st

from pomlab import canonical, directoid, effect, order, serialize


def test_canonical_structure_puts_bounds_first_and_last(fig1, fig3):
    for P in (fig1, fig3):
        Q = canonical.canonical_structure(P)
        assert Q.bottom == 0 and Q.top == P.size - 1
        assert Q.labels[0] == '0' and Q.labels[-1] == '1'
        assert canonical.is_isomorphic(P, Q)


def test_isomorphism_classes(b6, fig4, fig1, fig3, diamond):
    assert canonical.is_isomorphic(b6, fig4)
    assert not canonical.is_isomorphic(fig1, fig3)
    assert canonical.canonical_form(fig1) != canonical.canonical_form(fig3)

    D = next(directoid.assigned_directoids(diamond))
    assert canonical.canonical_form(D).kind == 'directoid'
    assert canonical.canonical_form(D) != canonical.canonical_form(diamond)


def test_involution_matters():
    # same order, different involutions
    swapped = order.validate(4, [3, 2, 1, 0], 0, 3, hasse = [(0, 1), (0, 2), (1, 3), (2, 3)])
    fixed = order.validate(4, [3, 1, 2, 0], 0, 3, hasse = [(0, 1), (0, 2), (1, 3), (2, 3)])
    assert not canonical.is_isomorphic(swapped, fixed)


def test_canonicalize(fig2):
    form, Q = canonical.canonicalize(fig2)
    assert form == canonical.canonical_form(Q)
    assert form.kind == 'poset' and form.size == 6
    assert canonical.canonical_structure(Q) == Q
    assert sorted(canonical.canonical_labeling(fig2).tolist()) == list(range(6))


def test_unsupported_structure():
    with pytest.raises(TypeError):
        canonical.canonical_form(object())


@settings(max_examples = 50, deadline = None)
@given(name = st.sampled_from(['fig1', 'fig2', 'fig3', 'fig5']), data = st.data())
def test_poset_relabelling_invariance(name, data):
    P = serialize.load_fixture(name)
    perm = data.draw(st.permutations(range(P.size)))
    Q = order.relabel(P, perm)
    assert canonical.canonical_form(Q) == canonical.canonical_form(P)
    assert canonical.canonical_structure(Q) == canonical.canonical_structure(P)
    assert canonical.fingerprint(Q) == canonical.fingerprint(P)


@settings(max_examples = 30, deadline = None)
@given(perm = st.permutations(range(8)))
def test_directoid_relabelling_invariance(perm, fig5):
    D = next(directoid.assigned_directoids(fig5))
    E = directoid.relabel(D, perm)
    assert canonical.canonical_form(E) == canonical.canonical_form(D)
    assert canonical.canonical_structure(E) == canonical.canonical_structure(D)


@settings(max_examples = 30, deadline = None)
@given(perm = st.permutations(range(4)))
def test_effect_algebra_relabelling_invariance(perm, diamond):
    A = effect.orthoalgebra_from_orthomodular_poset(diamond)
    assert canonical.canonical_form(effect.relabel(A, perm)) == canonical.canonical_form(A)
