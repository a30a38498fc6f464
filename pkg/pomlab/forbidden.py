# -*- coding: utf-8 -*-
#
#       forbidden.py
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
:mod:`pomlab.forbidden` -- Strong subsets and the B6 configuration
------------------------------------------------------------------

A bounded poset with antitone involution fails to be paraorthomodular exactly when it contains a strong subposet
ortho-isomorphic to the hexagon B6. The search walks the pairs violating paraorthomodularity rather than all
six-element subsets.
"""

from __future__ import print_function, unicode_literals

import logging
logger = logging.getLogger(__name__)

import itertools
from collections import OrderedDict

from pomlab.order import Verdict
from pomlab.util import bits, mask_of


#: Role names of a B6 witness, in display order
ROLES = ('0', 'a', 'b', "b'", "a'", '1')


class B6Witness(object):
    """ Six elements of a poset forming a strong subposet ortho-isomorphic to B6.

    Args:
        role_map (`dict`): maps each of :data:`ROLES` to an element
    """
    #: :class:`~collections.OrderedDict` mapping roles to elements
    role_map = None

    def __init__(self, role_map):
        self.role_map = OrderedDict((role, role_map[role]) for role in ROLES)


    @property
    def elements(self):
        """ `tuple` of the six elements in role order.
        """
        return tuple(self.role_map.values())


    @property
    def mask(self):
        """ `int` bit vector of the six elements.
        """
        return mask_of(self.elements)


    def __getitem__(self, role):
        return self.role_map[role]


    def __eq__(self, other):
        return isinstance(other, B6Witness) and self.role_map == other.role_map


    def __repr__(self):
        return 'B6Witness({})'.format(', '.join('{}={}'.format(r, e) for r, e in self.role_map.items()))


    def to_json(self):
        """ The serialisable form `{"roles": {"0": i, "a": ..., ...}}`.
        """
        return {'roles': dict(self.role_map)}


    def verify(self, P):
        """ Re-check every defining property of the witness against the ambient poset.

        Args:
            P (:class:`~pomlab.order.BoundedInvolutivePoset`): the ambient poset

        Returns:
            `bool`: whether the six elements are distinct bounds-preserving, involution-closed, ordered exactly like
            B6, and a strong subset of P
        """
        r = self.role_map
        if len(set(r.values())) != 6 or r['0'] != P.bottom or r['1'] != P.top:
            return False
        if P.inv[r['a']] != r["a'"] or P.inv[r['b']] != r["b'"]:
            return False

        expected = {(x, y) for chain in (('0', 'a', 'b', '1'), ('0', "b'", "a'", '1'))
                    for i, x in enumerate(chain) for y in chain[i:]}
        for x, y in itertools.product(ROLES, repeat = 2):
            if P.leq(r[x], r[y]) != ((x, y) in expected or x == y):
                return False

        return bool(is_strong_subset(P, self.mask))


def is_strong_subset(P, A):
    """ Decide whether A is a strong subset of P.

    A must contain 0 and 1 and be closed under the involution, and for all x, y ∈ A the upper cone (in P) of their
    lower cone taken inside A must equal the upper cone of their lower cone taken in P, and dually.

    Args:
        P (:class:`~pomlab.order.BoundedInvolutivePoset`): the ambient poset
        A (`int` or iterable of `int`): the subset

    Returns:
        :class:`~pomlab.order.Verdict`: holds, or fails with the first pair (x, y) or offending element
    """
    mask = A if isinstance(A, int) else mask_of(A)

    for bound in (P.bottom, P.top):
        if not mask >> bound & 1:
            return Verdict.fail((bound,), 'bounds must belong to the subset')
    for x in bits(mask):
        if not mask >> P.inv[x] & 1:
            return Verdict.fail((x,), 'subset is not closed under the involution')

    members = list(bits(mask))
    for x, y in itertools.product(members, repeat = 2):
        lower_p = P.down[x] & P.down[y]
        if P.upper(lower_p & mask) != P.upper(lower_p):
            return Verdict.fail((x, y), 'U_P L_A(x,y) != U_P L_P(x,y)')
        upper_p = P.up[x] & P.up[y]
        if P.lower(upper_p & mask) != P.lower(upper_p):
            return Verdict.fail((x, y), 'L_P U_A(x,y) != L_P U_P(x,y)')

    return Verdict.ok()


def violating_pairs(P):
    """ Iterate the pairs (a, b) with a < b and L(a', b) = {0}, in lexicographic order.
    """
    zero = 1 << P.bottom
    for a, b in itertools.product(range(P.size), repeat = 2):
        if a != b and P.le[a, b] and P.down[P.inv[a]] & P.down[b] == zero:
            yield a, b


def find_b6_witness(P):
    """ Find a strong subposet ortho-isomorphic to B6, if any.

    Each violating pair (a, b) of paraorthomodularity gives the candidate set {0, a, b, a', b', 1}. Candidates with
    fewer than six distinct elements are logged and skipped.

    Args:
        P (:class:`~pomlab.order.BoundedInvolutivePoset`): the poset

    Returns:
        :class:`~pomlab.forbidden.B6Witness`: the first witness in lexicographic order of (a, b), or `None`
    """
    for a, b in violating_pairs(P):
        witness = B6Witness({'0': P.bottom, 'a': a, 'b': b, "b'": P.inv[b], "a'": P.inv[a], '1': P.top})
        if len(set(witness.elements)) < 6:
            logger.warning('Degenerate B6 candidate for a={}, b={}: {}'.format(
                P.labels[a], P.labels[b], [P.labels[e] for e in witness.elements]))
            continue

        if witness.verify(P):
            return witness

        logger.warning('Violating pair a={}, b={} does not yield a B6 strong subposet'.format(P.labels[a], P.labels[b]))

    return None
