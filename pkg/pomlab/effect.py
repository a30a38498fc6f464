# -*- coding: utf-8 -*-
#
#       effect.py
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
:mod:`pomlab.effect` -- Effect algebras and orthoalgebras
---------------------------------------------------------

Finite effect algebras stored as partial operation tables, where :data:`UNDEFINED` marks the pairs without a sum,
and the conversions between orthoalgebras and ortho-directoids.
"""

from __future__ import print_function, unicode_literals

import logging
logger = logging.getLogger(__name__)

import itertools

import numpy as np

from pomlab import directoid, order
from pomlab.directoid import InvolutiveDirectoid, DirectoidClass, LEAST
from pomlab.order import StructureError, InconsistentStructure, PosetProperty, Verdict
from pomlab.util import bits


#: Table entry of an undefined sum
UNDEFINED = -1


class E1Violation(StructureError):
    """ x ⊕ y and y ⊕ x differ, in definedness or value. """
    pass


class E2Violation(StructureError):
    """ (x ⊕ y) ⊕ z and x ⊕ (y ⊕ z) differ, in definedness or value. """
    pass


class E3Violation(StructureError):
    """ x has no supplement, or more than one. """
    pass


class E4Violation(StructureError):
    """ x ⊕ 1 is defined for some x ≠ 0. """
    pass


class NotOrthoDirectoid(StructureError):
    pass


class NotOrthoalgebra(StructureError):
    pass


class EffectAlgebra(object):
    """ A validated finite effect algebra. Build instances with :func:`validate_effect_algebra`.

    Args:
        oplus (n×n array-like of `int`): the partial sum, :data:`UNDEFINED` where it does not exist
        inv (sequence of `int`): the supplement x' of each element
        zero (`int`): the constant 0
        one (`int`): the constant 1
        labels (sequence of `str`): display names of the elements
    """
    #: `int` number of elements
    size = 0
    #: :class:`~numpy.ndarray` read-only partial operation table
    oplus = None
    #: `tuple` of `int`, the supplements
    inv = ()
    #: `int` the constant 0
    zero = 0
    #: `int` the constant 1
    one = 0
    #: `tuple` of `str` display names
    labels = ()

    def __init__(self, oplus, inv, zero, one, labels = None):
        oplus = np.array(oplus, dtype = np.int64)
        oplus.setflags(write = False)
        self.oplus = oplus
        self.size = oplus.shape[0]
        self.inv = tuple(int(i) for i in inv)
        self.zero = int(zero)
        self.one = int(one)
        self.labels = tuple(labels) if labels is not None else tuple(str(x) for x in range(self.size))


    def __eq__(self, other):
        if not isinstance(other, EffectAlgebra):
            return NotImplemented
        return (self.size == other.size and self.zero == other.zero and self.one == other.one
                and np.array_equal(self.oplus, other.oplus))


    def __ne__(self, other):
        equal = self.__eq__(other)
        return equal if equal is NotImplemented else not equal


    def __hash__(self):
        return hash((self.size, self.zero, self.one, self.oplus.tobytes()))


    def __repr__(self):
        return '<EffectAlgebra n={} oplus={}>'.format(self.size, self.oplus.tolist())


    def defined(self, x, y):
        """ Whether x ⊕ y exists.
        """
        return self.oplus[x, y] != UNDEFINED


    def sum(self, x, y):
        """ x ⊕ y, or `None` when undefined.
        """
        s = int(self.oplus[x, y])
        return None if s == UNDEFINED else s


def validate_effect_algebra(oplus, zero, one, labels = None):
    """ Validate a raw partial table as an effect algebra, and derive the supplements.

    Axioms are checked exhaustively, in order:

    - (E1) x ⊕ y is defined iff y ⊕ x is, and then they are equal,
    - (E2) (x ⊕ y) ⊕ z is defined iff x ⊕ (y ⊕ z) is, and then they are equal,
    - (E3) every x has exactly one x' with x ⊕ x' = 1,
    - (E4) x ⊕ 1 defined implies x = 0.

    Args:
        oplus (n×n array-like of `int` or `None`): the partial sum, `None` or :data:`UNDEFINED` where undefined
        zero (`int`): the constant 0
        one (`int`): the constant 1
        labels (sequence of `str`): display names

    Returns:
        :class:`~pomlab.effect.EffectAlgebra`: the validated effect algebra

    Raises:
        `E1Violation`, `E2Violation`, `E3Violation`, `E4Violation`, or `StructureError` for malformed input
    """
    table = np.array([[UNDEFINED if v is None else v for v in row] for row in oplus], dtype = np.int64)
    if table.ndim != 2 or table.shape[0] != table.shape[1] or table.shape[0] < 1:
        raise StructureError('Operation table must be a non-empty square matrix, got shape {}'.format(table.shape))
    n = table.shape[0]
    if table.min() < UNDEFINED or table.max() >= n:
        raise StructureError('Operation table entries must be elements of [0, {}) or undefined'.format(n))
    if not (0 <= zero < n and 0 <= one < n):
        raise StructureError('Constants out of range', (zero, one))
    if labels is not None and len(labels) != n:
        raise StructureError('Expected {} labels, got {}'.format(n, len(labels)))

    asymmetric = np.argwhere(table != table.T)
    if len(asymmetric):
        raise E1Violation('x + y != y + x', tuple(int(v) for v in asymmetric[0]))

    elements = np.arange(n)
    x, y, z = elements[:, None, None], elements[None, :, None], elements[None, None, :]
    xy, yz = table[x, y], table[y, z]
    left = np.where(xy != UNDEFINED, table[np.maximum(xy, 0), z], UNDEFINED)
    right = np.where(yz != UNDEFINED, table[x, np.maximum(yz, 0)], UNDEFINED)
    non_associative = np.argwhere(left != right)
    if len(non_associative):
        raise E2Violation('(x + y) + z != x + (y + z)', tuple(int(v) for v in non_associative[0]))

    inv = []
    for e in range(n):
        supplements = np.flatnonzero(table[e] == one)
        if len(supplements) != 1:
            raise E3Violation('x has {} supplements instead of exactly one'.format(len(supplements)), (e,))
        inv.append(int(supplements[0]))

    with_one = [e for e in np.flatnonzero(table[:, one] != UNDEFINED) if e != zero]
    if with_one:
        raise E4Violation('x + 1 is defined but x != 0', (int(with_one[0]),))

    return EffectAlgebra(table, inv, zero, one, labels)


def induced_order(A):
    """ The bounded poset with involution of an effect algebra: a ≤ b iff a ⊕ c = b for some c.

    Args:
        A (:class:`~pomlab.effect.EffectAlgebra`): the effect algebra

    Returns:
        :class:`~pomlab.order.BoundedInvolutivePoset`: the induced poset, with the supplement as involution
    """
    le = np.zeros((A.size, A.size), dtype = bool)
    a, c = np.nonzero(A.oplus != UNDEFINED)
    le[a, A.oplus[a, c]] = True
    return order.validate(A.size, A.inv, A.zero, A.one, le = le, labels = A.labels)


def ominus(A, b, a):
    """ The difference b ⊖ a = (a ⊕ b')', the unique c with a ⊕ c = b.

    Raises:
        `ValueError`: unless a ≤ b
    """
    s = A.sum(a, A.inv[b])
    if s is None:
        raise ValueError('{} is not below {}'.format(A.labels[a], A.labels[b]))
    return A.inv[s]


def is_orthoalgebra(A):
    """ Whether the induced poset of an effect algebra is an orthoposet.

    Returns:
        `bool`: whether x' is a complement of x for every x
    """
    return bool(order.check(induced_order(A), PosetProperty.ORTHOPOSET))


def check_sum_minimality(A):
    """ In an orthoalgebra x ⊕ y is a minimal upper bound of orthogonal x, y, though not necessarily their join.

    Returns:
        :class:`~pomlab.order.Verdict`: holds, or fails with the first pair (x, y) whose sum is not a minimal upper
        bound
    """
    P = induced_order(A)
    for x, y in itertools.product(range(A.size), repeat = 2):
        s = A.sum(x, y)
        if s is None:
            continue
        bounds = P.up[x] & P.up[y]
        if not bounds >> s & 1:
            return Verdict.fail((x, y), 'x + y is not an upper bound')
        if P.down[s] & bounds != 1 << s:
            return Verdict.fail((x, y), 'x + y is not minimal among the upper bounds')
    return Verdict.ok()


def oplus_is_join(A):
    """ Whether x ⊕ y = x ∨ y for every orthogonal pair, which characterises orthomodular posets among
    orthoalgebras.

    Returns:
        :class:`~pomlab.order.Verdict`: holds, or fails with the first orthogonal pair (x, y)
    """
    P = induced_order(A)
    for x, y in itertools.product(range(A.size), repeat = 2):
        s = A.sum(x, y)
        if s is not None and P.join(x, y) != s:
            return Verdict.fail((x, y), 'x + y is not the join of x and y')
    return Verdict.ok()


def orthoalgebra_from_ortho_directoid(D):
    """ The orthoalgebra of an ortho-directoid: x ⊕ y = x ⊔ y when x ≤ y', undefined otherwise.

    Args:
        D (:class:`~pomlab.directoid.InvolutiveDirectoid`): an ortho-directoid

    Returns:
        :class:`~pomlab.effect.EffectAlgebra`: the orthoalgebra

    Raises:
        `NotOrthoDirectoid`: if D does not satisfy the ortho-directoid identities
    """
    verdict = directoid.check_class(D, DirectoidClass.ORTHO_DIRECTOID)
    if not verdict:
        raise NotOrthoDirectoid('Not an ortho-directoid, {}'.format(verdict.reason), dict(verdict.witness))

    orthogonal = D.meet[:, D.inv_array] == np.arange(D.size)[:, None]
    oplus = np.where(orthogonal, D.join, UNDEFINED)
    return validate_effect_algebra(oplus, D.zero, D.one, D.labels)


def directoids_from_orthoalgebra(A, chooser = LEAST, fanout_cap = None):
    """ The ortho-directoids assigned to an orthoalgebra.

    x ⊔ y is x ⊕ y when x ≤ y', the maximum of x and y when they are comparable, and otherwise an element of
    U(x, y); then x ⊓ y = (x' ⊔ y')'.

    Args:
        A (:class:`~pomlab.effect.EffectAlgebra`): an orthoalgebra
        chooser (`str`): :data:`~pomlab.directoid.LEAST` for one directoid, :data:`~pomlab.directoid.ALL` for
            every choice of upper bounds
        fanout_cap (`int`): cap on the number of directoids, `None` for the configured value

    Yields:
        :class:`~pomlab.directoid.InvolutiveDirectoid`: the ortho-directoids

    Raises:
        `NotOrthoalgebra`: if the induced poset of A is not an orthoposet
    """
    P = induced_order(A)
    verdict = order.check(P, PosetProperty.ORTHOPOSET)
    if not verdict:
        raise NotOrthoalgebra('Not an orthoalgebra, {}'.format(verdict.reason), dict(verdict.witness))

    choices = {}
    for x, y in itertools.combinations_with_replacement(range(A.size), 2):
        if A.defined(x, y):
            choices[x, y] = [A.sum(x, y)]
        elif P.le[x, y] or P.le[y, x]:
            choices[x, y] = [y if P.le[x, y] else x]
        else:
            choices[x, y] = list(bits(P.up[x] & P.up[y]))

    inv = P.inv_array
    for join in directoid.symmetric_tables(A.size, choices, chooser, fanout_cap, 'orthoalgebra assignments'):
        yield InvolutiveDirectoid(inv[join[np.ix_(inv, inv)]], A.inv, A.zero, A.one, A.labels)


def orthoalgebra_from_orthomodular_poset(P):
    """ The orthoalgebra of an orthomodular poset, x ⊕ y = x ∨ y for orthogonal x, y.

    Args:
        P (:class:`~pomlab.order.BoundedInvolutivePoset`): an orthomodular poset

    Returns:
        :class:`~pomlab.effect.EffectAlgebra`: the orthoalgebra

    Raises:
        `InconsistentStructure`: if some orthogonal pair has no join
    """
    oplus = np.full((P.size, P.size), UNDEFINED, dtype = np.int64)
    for x, y in itertools.product(range(P.size), repeat = 2):
        if P.le[x, P.inv[y]]:
            j = P.join(x, y)
            if j is None:
                raise InconsistentStructure("x <= y' but x v y does not exist", (x, y))
            oplus[x, y] = j
    return validate_effect_algebra(oplus, P.bottom, P.top, P.labels)


def relabel(A, perm):
    """ The isomorphic copy of A where element x is renamed perm[x].
    """
    perm = np.asarray(perm, dtype = np.int64)
    back = np.argsort(perm)
    lookup = np.append(perm, UNDEFINED)
    return EffectAlgebra(lookup[A.oplus[np.ix_(back, back)]], [int(perm[A.inv[x]]) for x in back],
                         perm[A.zero], perm[A.one], [A.labels[x] for x in back])
