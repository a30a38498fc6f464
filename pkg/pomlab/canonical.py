# -*- coding: utf-8 -*-
#
#       canonical.py
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

"""
:mod:`pomlab.canonical` -- Canonical forms up to ortho-isomorphism
------------------------------------------------------------------

Two structures are ortho-isomorphic when a bijection maps one onto the other, commuting with the involution and
fixing the constants. The canonical form of a structure is the least encoding of its relabelled copies over the
labellings found by colour refinement and individualisation:

1. elements are coloured by (is not 0, is 1, is a fixed point of '), so that 0 comes first and 1 last,
2. colours are refined by the multiset of (colour of y, relation between x and y) until stable,
3. while some colour class has several members, each member in turn gets a colour of its own, and the search
   recurses; members swapped by an automorphism of the structure are explored once.

Colours are always ranks of sorted signatures, so they never depend on the input labelling.
"""

from __future__ import print_function, unicode_literals

import logging
logger = logging.getLogger(__name__)

from collections import namedtuple

import numpy as np

from pomlab import directoid, effect, order
from pomlab.directoid import InvolutiveDirectoid
from pomlab.effect import EffectAlgebra, UNDEFINED
from pomlab.order import BoundedInvolutivePoset


class CanonicalForm(namedtuple('CanonicalForm', 'kind size code')):
    """ Ortho-isomorphism invariant of a structure: equal iff the structures are ortho-isomorphic.

    Args:
        kind (`str`): 'poset', 'directoid' or 'effect_algebra'
        size (`int`): number of elements
        code (`bytes`): the least encoding
    """
    __slots__ = ()


class _Adapter(object):
    """ Uniform access to the relations of a structure for refinement and encoding.
    """
    def __init__(self, S):
        self.structure = S
        self.size = S.size
        self.inv = np.array(S.inv, dtype = np.int64)

        if isinstance(S, BoundedInvolutivePoset):
            self.kind = 'poset'
            self.constants = (S.bottom, S.top)
            self.relation, self.table = S.le.astype(np.int64), None
        elif isinstance(S, InvolutiveDirectoid):
            self.kind = 'directoid'
            self.constants = (S.zero, S.one)
            self.relation, self.table = None, S.meet
        elif isinstance(S, EffectAlgebra):
            self.kind = 'effect_algebra'
            self.constants = (S.zero, S.one)
            self.relation, self.table = None, S.oplus
        else:
            raise TypeError('No canonical form for {!r}'.format(type(S).__name__))


    def initial_colors(self):
        zero, one = self.constants
        return _ranks([(x != zero, x == one, self.inv[x] == x) for x in range(self.size)])


    def refine(self, colors):
        """ Refine a colouring until the number of colour classes is stable.
        """
        classes = len(set(colors.tolist()))
        while True:
            extended = np.append(colors, -1)
            signatures = []
            for x in range(self.size):
                if self.table is None:
                    row = zip(colors.tolist(), self.relation[x].tolist(), self.relation[:, x].tolist())
                else:
                    row = zip(colors.tolist(), extended[self.table[x]].tolist(), extended[self.table[:, x]].tolist())
                signatures.append((int(colors[x]), int(colors[self.inv[x]]), tuple(sorted(row))))
            refined = _ranks(signatures)
            refined_classes = len(set(refined.tolist()))
            if refined_classes == classes:
                return refined
            colors, classes = refined, refined_classes


    def encode(self, perm):
        """ Encoding of the copy relabelled by perm, where perm[x] is the new index of x.
        """
        back = np.argsort(perm)
        parts = [[self.size], perm[list(self.constants)], perm[self.inv[back]]]
        if self.table is None:
            parts.append(self.relation[np.ix_(back, back)].ravel())
        else:
            parts.append(np.append(perm, UNDEFINED)[self.table[np.ix_(back, back)]].ravel())
        return np.concatenate([np.asarray(p, dtype = np.int16) for p in parts]).tobytes()


    def swaps_are_automorphic(self, u, v):
        """ Whether exchanging u and v is an automorphism.
        """
        perm = np.arange(self.size)
        perm[u], perm[v] = v, u
        return self.encode(perm) == self.encode(np.arange(self.size))


def _ranks(signatures):
    """ Replace each signature by its rank among the distinct signatures.
    """
    order_ = {s: i for i, s in enumerate(sorted(set(signatures)))}
    return np.array([order_[s] for s in signatures], dtype = np.int64)


def _search(adapter, colors):
    """ Least (code, perm) among the discrete colourings reachable from `colors`.
    """
    colors = adapter.refine(colors)
    counts = np.bincount(colors)
    if counts.max() == 1:
        return adapter.encode(colors), colors

    target = int(np.flatnonzero(counts > 1)[0])
    explored = []
    best = None
    for v in np.flatnonzero(colors == target).tolist():
        if any(adapter.swaps_are_automorphic(u, v) for u in explored):
            continue
        explored.append(v)

        individualised = colors * 2 + 1
        individualised[v] = 2 * target
        found = _search(adapter, _ranks(individualised.tolist()))
        if best is None or found[0] < best[0]:
            best = found
    return best


def canonical_labeling(S):
    """ The canonical relabelling of a structure.

    Args:
        S (:class:`~pomlab.order.BoundedInvolutivePoset`, :class:`~pomlab.directoid.InvolutiveDirectoid` or
            :class:`~pomlab.effect.EffectAlgebra`): the structure

    Returns:
        :class:`~numpy.ndarray`: perm, with perm[x] the canonical index of x
    """
    adapter = _Adapter(S)
    return _search(adapter, adapter.initial_colors())[1]


def canonical_form(S):
    """ The canonical form of a structure.

    Returns:
        :class:`~pomlab.canonical.CanonicalForm`: equal for two structures iff they are ortho-isomorphic
    """
    adapter = _Adapter(S)
    code, _ = _search(adapter, adapter.initial_colors())
    return CanonicalForm(adapter.kind, adapter.size, code)


def canonicalize(S):
    """ The canonical form of a structure together with its canonically relabelled copy.

    Returns:
        `tuple`: (:class:`~pomlab.canonical.CanonicalForm`, relabelled structure)
    """
    adapter = _Adapter(S)
    code, perm = _search(adapter, adapter.initial_colors())
    return CanonicalForm(adapter.kind, adapter.size, code), _relabel(S, perm)


def canonical_structure(S):
    """ The canonically relabelled copy of a structure, with labels following the elements.
    """
    perm = canonical_labeling(S)
    return _relabel(S, perm)


def _relabel(S, perm):
    if isinstance(S, BoundedInvolutivePoset):
        return order.relabel(S, perm)
    elif isinstance(S, InvolutiveDirectoid):
        return directoid.relabel(S, perm)
    return effect.relabel(S, perm)


def is_isomorphic(S, T):
    """ Whether two structures of the same kind are ortho-isomorphic.
    """
    return canonical_form(S) == canonical_form(T)


def fingerprint(S):
    """ A cheap isomorphism invariant: the sizes of the stable colour classes, in colour order.

    Returns:
        `tuple`: structures with different fingerprints are not ortho-isomorphic
    """
    adapter = _Adapter(S)
    colors = adapter.refine(adapter.initial_colors())
    return (adapter.kind, adapter.size) + tuple(np.bincount(colors).tolist())
