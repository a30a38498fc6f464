# -*- coding: utf-8 -*-
#
#       directoid.py
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
:mod:`pomlab.directoid` -- Involutive commutative directoids
------------------------------------------------------------

A commutative directoid is an idempotent, commutative, weakly associative groupoid (D, ⊓); x ⊓ y is a common lower
bound of x and y for the order x ≤ y iff x ⊓ y = x. With an involution and two constants it becomes the total
algebra assigned to a bounded poset with antitone involution, by picking x ⊓ y in the lower cone L(x, y) for every
pair of incomparable elements.

This module converts between the two views, and decides the identities and quasi-identities that carve out the
directoid classes, by evaluation of the formulas of the bundled catalog (see :mod:`pomlab.terms`).
"""

from __future__ import print_function, unicode_literals

import logging
logger = logging.getLogger(__name__)

import enum
import functools
import itertools
from collections import OrderedDict

import numpy as np

from pomlab import config, order, terms
from pomlab.order import StructureError, NotInvolution, Verdict
from pomlab.util import CapExceeded, bits, mask_of


class NotIdempotent(StructureError):
    """ x ⊓ x ≠ x for the witness x. """
    pass


class NotCommutative(StructureError):
    """ x ⊓ y ≠ y ⊓ x for the witness (x, y). """
    pass


class NotWeaklyAssociative(StructureError):
    """ (x ⊓ (y ⊓ z)) ⊓ z ≠ x ⊓ (y ⊓ z) for the witness (x, y, z). """
    pass


class InducedOrderUnbounded(StructureError):
    """ The constants are not the bounds of the induced order. """
    pass


class NotACongruence(StructureError):
    """ An equivalence relation is not compatible with the operations. """
    pass


class InvolutiveDirectoid(object):
    """ A finite commutative directoid with involution and two constants. Build instances with
    :func:`validate_directoid` or one of the constructions of this module.

    Args:
        meet (n×n array-like of `int`): the operation table of ⊓
        inv (sequence of `int`): the involution
        zero (`int`): the constant 0
        one (`int`): the constant 1
        labels (sequence of `str`): display names of the elements
    """
    #: `int` number of elements
    size = 0
    #: :class:`~numpy.ndarray` read-only operation table of ⊓
    meet = None
    #: `tuple` of `int`, the involution
    inv = ()
    #: `int` the constant 0
    zero = 0
    #: `int` the constant 1
    one = 0
    #: `tuple` of `str` display names
    labels = ()

    def __init__(self, meet, inv, zero, one, labels = None):
        meet = np.array(meet, dtype = np.int64)
        meet.setflags(write = False)
        self.meet = meet
        self.size = meet.shape[0]
        self.inv = tuple(int(i) for i in inv)
        self.zero = int(zero)
        self.one = int(one)
        self.labels = tuple(labels) if labels is not None else tuple(str(x) for x in range(self.size))


    def __eq__(self, other):
        if not isinstance(other, InvolutiveDirectoid):
            return NotImplemented
        return (self.size == other.size and self.inv == other.inv and self.zero == other.zero
                and self.one == other.one and np.array_equal(self.meet, other.meet))


    def __ne__(self, other):
        equal = self.__eq__(other)
        return equal if equal is NotImplemented else not equal


    def __hash__(self):
        return hash((self.size, self.inv, self.zero, self.one, self.meet.tobytes()))


    def __repr__(self):
        return '<InvolutiveDirectoid n={} meet={}>'.format(self.size, self.meet.tolist())


    @functools.cached_property
    def inv_array(self):
        """ :class:`~numpy.ndarray` of the involution.
        """
        inv = np.array(self.inv, dtype = np.int64)
        inv.setflags(write = False)
        return inv


    @functools.cached_property
    def join(self):
        """ :class:`~numpy.ndarray` operation table of the derived join x ⊔ y = (x' ⊓ y')'.
        """
        inv = self.inv_array
        join = inv[self.meet[np.ix_(inv, inv)]]
        join.setflags(write = False)
        return join


    def leq(self, x, y):
        """ Whether x ≤ y in the induced order, i.e. x ⊓ y = x.
        """
        return bool(self.meet[x, y] == x)


    def element(self, label):
        """ Find an element by its label.
        """
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError('No element labelled {!r}'.format(label))


def validate_directoid(meet, inv, zero, one, labels = None):
    """ Validate a raw operation table as an involutive commutative directoid.

    Only the identities are checked: idempotence, commutativity, weak associativity, and that the involution squares
    to the identity. Whether the constants are bounds is left to :func:`induced_poset`.

    Args:
        meet (n×n array-like of `int`): the table of ⊓
        inv (sequence of `int`): the involution
        zero (`int`): the constant 0
        one (`int`): the constant 1
        labels (sequence of `str`): display names

    Returns:
        :class:`~pomlab.directoid.InvolutiveDirectoid`: the validated directoid

    Raises:
        `NotIdempotent`, `NotCommutative`, `NotWeaklyAssociative`, `NotInvolution`, or `StructureError` for
        malformed input
    """
    table = np.array(meet, dtype = np.int64)
    if table.ndim != 2 or table.shape[0] != table.shape[1] or table.shape[0] < 1:
        raise StructureError('Operation table must be a non-empty square matrix, got shape {}'.format(table.shape))
    n = table.shape[0]
    if table.min() < 0 or table.max() >= n:
        raise StructureError('Operation table entries must be elements of [0, {})'.format(n))
    if not (0 <= zero < n and 0 <= one < n):
        raise StructureError('Constants out of range', (zero, one))
    if labels is not None and len(labels) != n:
        raise StructureError('Expected {} labels, got {}'.format(n, len(labels)))

    elements = np.arange(n)
    not_idempotent = np.flatnonzero(table[elements, elements] != elements)
    if len(not_idempotent):
        raise NotIdempotent('x ^ x != x', (int(not_idempotent[0]),))

    not_commutative = np.argwhere(table != table.T)
    if len(not_commutative):
        raise NotCommutative('x ^ y != y ^ x', tuple(int(v) for v in not_commutative[0]))

    x, y, z = elements[:, None, None], elements[None, :, None], elements[None, None, :]
    inner = table[x, table[y, z]]
    not_weakly_associative = np.argwhere(table[inner, z] != inner)
    if len(not_weakly_associative):
        raise NotWeaklyAssociative('(x ^ (y ^ z)) ^ z != x ^ (y ^ z)',
                                   tuple(int(v) for v in not_weakly_associative[0]))

    inv = tuple(int(i) for i in inv)
    if len(inv) != n or sorted(inv) != list(range(n)):
        raise NotInvolution('The involution must be a permutation of the {} elements'.format(n), inv)
    for e in range(n):
        if inv[inv[e]] != e:
            raise NotInvolution("The map does not square to the identity", (e, inv[e]))

    return InvolutiveDirectoid(table, inv, zero, one, labels)


def induced_poset(D):
    """ The bounded poset with involution induced by a directoid: x ≤ y iff x ⊓ y = x.

    Args:
        D (:class:`~pomlab.directoid.InvolutiveDirectoid`): the directoid

    Returns:
        :class:`~pomlab.order.BoundedInvolutivePoset`: the induced poset

    Raises:
        `InducedOrderUnbounded`: if the constants are not the bounds of the induced order
        `NotAntitone`, `NotInvolution`: if the involution is not an antitone involution of the induced order
    """
    le = D.meet == np.arange(D.size)[:, None]

    below = np.flatnonzero(~le[D.zero, :])
    if len(below):
        raise InducedOrderUnbounded('0 is not below every element', (D.zero, int(below[0])))
    above = np.flatnonzero(~le[:, D.one])
    if len(above):
        raise InducedOrderUnbounded('1 is not above every element', (int(above[0]), D.one))

    return order.validate(D.size, D.inv, D.zero, D.one, le = le, labels = D.labels)


def derived_join(D, a, b):
    """ The derived join a ⊔ b = (a' ⊓ b')'.
    """
    return int(D.join[a, b])


@enum.unique
class AssignmentMode(enum.Enum):
    """ How x ⊓ y is chosen for a pair of incomparable elements.
    """
    #: any element of L(x,y)
    ARBITRARY = 'arbitrary'
    #: an element of L(x,y) ∖ {0} when x' < y and L(x,y) ≠ {0}, any element of L(x,y) otherwise
    CANONICAL = 'canonical'


#: Chooser picking the least candidate element
LEAST = 'least'
#: Chooser enumerating every candidate
ALL = 'all'


class AssignmentPolicy(object):
    """ The rule turning a bounded poset with antitone involution into directoid tables.

    Comparable pairs always get their minimum. For incomparable pairs the mode gives the candidate elements, and
    the chooser either takes the least candidate (one deterministic table) or all of them (every table).

    Args:
        mode (:class:`~pomlab.directoid.AssignmentMode` or `str`): arbitrary or canonical
        chooser (`str`): :data:`LEAST` or :data:`ALL`
        honour_meets (`bool`): whether an existing meet x ∧ y is always the only candidate
        fanout_cap (`int`): most tables generated per poset with the :data:`ALL` chooser, `None` for the configured
            value
    """
    #: :class:`~pomlab.directoid.AssignmentMode`
    mode = AssignmentMode.ARBITRARY
    #: `str` the chooser
    chooser = LEAST
    #: `bool` whether existing meets are kept
    honour_meets = True
    #: `int` cap on the number of tables, or `None`
    fanout_cap = None

    def __init__(self, mode = AssignmentMode.ARBITRARY, chooser = LEAST, honour_meets = True, fanout_cap = None):
        self.mode = AssignmentMode(mode)
        if chooser not in (LEAST, ALL):
            raise ValueError('Unknown chooser {!r}, expected {!r} or {!r}'.format(chooser, LEAST, ALL))
        self.chooser = chooser
        self.honour_meets = honour_meets
        self.fanout_cap = fanout_cap


    @classmethod
    def from_config(cls, conf = None, **overrides):
        """ Build the policy configured in the [assignment] section.

        Args:
            conf (:class:`~pomlab.config.Config`): the configuration, or `None` for the shared one
            overrides: keyword arguments of the constructor taking precedence over the configuration
        """
        conf = config.load_config() if conf is None else conf
        kwargs = {
            'mode': conf.get('assignment', 'policy'),
            'chooser': conf.get('assignment', 'chooser'),
            'fanout_cap': conf.getint('enumerate', 'directoid_fanout'),
        }
        kwargs.update((k, v) for k, v in overrides.items() if v is not None)
        return cls(**kwargs)


    def __repr__(self):
        return 'AssignmentPolicy({}, {}, honour_meets={})'.format(self.mode.value, self.chooser, self.honour_meets)


    def candidates(self, P, x, y):
        """ The admissible values of x ⊓ y.

        Args:
            P (:class:`~pomlab.order.BoundedInvolutivePoset`): the poset
            x (`int`): an element
            y (`int`): an element

        Returns:
            `list` of `int`: the candidates, in increasing order
        """
        if P.le[x, y]:
            return [x]
        elif P.le[y, x]:
            return [y]

        if self.honour_meets:
            m = P.meet(x, y)
            if m is not None:
                return [m]

        common = P.down[x] & P.down[y]
        zero = 1 << P.bottom
        if self.mode is AssignmentMode.CANONICAL and common != zero and P.inv[x] != y and P.le[P.inv[x], y]:
            common &= ~zero
        return list(bits(common))


    def is_admissible(self, D, P):
        """ Whether every entry of the table of D is a candidate for P under this policy.

        Returns:
            :class:`~pomlab.order.Verdict`: holds, or fails with the first pair (x, y) whose entry is not admissible
        """
        if D.size != P.size or D.inv != P.inv or (D.zero, D.one) != (P.bottom, P.top):
            return Verdict.fail({}, 'universe, involution or constants differ')
        for x, y in itertools.product(range(P.size), repeat = 2):
            if int(D.meet[x, y]) not in self.candidates(P, x, y):
                return Verdict.fail((x, y), 'x ^ y is not an admissible choice')
        return Verdict.ok()


def symmetric_tables(n, choices, chooser, fanout_cap, what):
    """ Build symmetric tables from per-pair candidate lists, diagonal included.

    Args:
        n (`int`): size of the tables
        choices (`dict`): (x, y) with x ≤ y to the `list` of candidate values
        chooser (`str`): :data:`LEAST` or :data:`ALL`
        fanout_cap (`int`): cap on the number of tables for :data:`ALL`, `None` for the configured value
        what (`str`): name of the tables, for messages
    """
    pairs = sorted(choices)
    xs = np.array([p[0] for p in pairs], dtype = np.int64)
    ys = np.array([p[1] for p in pairs], dtype = np.int64)
    table = np.zeros((n, n), dtype = np.int64)

    if chooser == LEAST:
        values = np.array([choices[p][0] for p in pairs], dtype = np.int64)
        table[xs, ys] = table[ys, xs] = values
        yield table
        return

    fanout = 1
    for p in pairs:
        fanout *= len(choices[p])
    cap = config.default('enumerate', 'directoid_fanout', fanout_cap)
    if fanout > cap:
        raise CapExceeded('{} fan-out'.format(what), fanout, cap)
    logger.debug('Generating {} {}'.format(fanout, what))

    for combination in itertools.product(*(choices[p] for p in pairs)):
        values = np.array(combination, dtype = np.int64)
        table[xs, ys] = table[ys, xs] = values
        yield table.copy()


def assigned_directoids(P, policy = None):
    """ The directoids assigned to a bounded poset with antitone involution.

    Args:
        P (:class:`~pomlab.order.BoundedInvolutivePoset`): the poset
        policy (:class:`~pomlab.directoid.AssignmentPolicy`): the assignment rule, `None` for the configured one

    Yields:
        :class:`~pomlab.directoid.InvolutiveDirectoid`: one table with the least chooser, every table consistent
        with the policy otherwise, in lexicographic order of the choices

    Raises:
        :class:`~pomlab.util.CapExceeded`: if enumerating all tables would go over the fan-out cap
    """
    policy = AssignmentPolicy.from_config() if policy is None else policy
    choices = {(x, y): policy.candidates(P, x, y) for x, y in itertools.combinations_with_replacement(range(P.size), 2)}
    for table in symmetric_tables(P.size, choices, policy.chooser, policy.fanout_cap, 'directoid assignments'):
        yield InvolutiveDirectoid(table, P.inv, P.bottom, P.top, P.labels)


def is_canonical_assignment(D, P):
    """ Whether D is one of the canonical assignments of P, every incomparable pair being free to take any element
    of L(x,y) outside the case restricted away from 0.

    Returns:
        :class:`~pomlab.order.Verdict`: holds, or fails with the first offending pair
    """
    return AssignmentPolicy(AssignmentMode.CANONICAL, ALL, honour_meets = False).is_admissible(D, P)


@enum.unique
class DirectoidClass(enum.Enum):
    """ The classes of involutive directoids decided by :func:`check_class`.
    """
    #: q4 and q5: x'' = x and (x ^ y)' ^ y' = y'
    INVOLUTIVE45 = 'involutive45'
    #: q6, paraorthomodularity of the induced poset
    COND6 = 'cond6'
    #: q8: (x ^ y)' ^ y = 0 implies x ^ y = y
    QID8 = 'qid8'
    #: q9: ((x ^ y)' ^ y) v (y' ^ (x ^ y)) = 0 implies x ^ y = y
    QID9 = 'qid9'
    #: i14, orthogonal joins exist in the induced poset
    ID14 = 'id14'
    #: i14 and q8
    SHARPLY_PARAORTHOMODULAR_DIRECTOID = 'sharply_paraorthomodular_directoid'
    #: bounded, antitone involution, and the three orthomodular identities
    ORTHOMODULAR_DIRECTOID = 'orthomodular_directoid'
    #: the six ortho-directoid identities
    ORTHO_DIRECTOID = 'ortho_directoid'
    #: q4, q5 and q9
    LARGEST_QUASIVARIETY = 'largest_quasivariety'
    #: q4, q5 and q8
    CANONICAL_IMAGE = 'canonical_image'

    @classmethod
    def parse(cls, name):
        """ Get a class from its tag, accepting dashes and any case.
        """
        if isinstance(name, cls):
            return name
        return cls(name.strip().lower().replace('-', '_'))


#: Catalog formulas defining each class, checked in order
CLASS_AXIOMS = {
    DirectoidClass.INVOLUTIVE45: ('q4', 'q5'),
    DirectoidClass.COND6: ('q6',),
    DirectoidClass.QID8: ('q8',),
    DirectoidClass.QID9: ('q9',),
    DirectoidClass.ID14: ('i14',),
    DirectoidClass.SHARPLY_PARAORTHOMODULAR_DIRECTOID: ('i14', 'q8'),
    DirectoidClass.ORTHOMODULAR_DIRECTOID: ('bot', 'top', 'q4', 'q5', 'om1', 'om2', 'om3'),
    DirectoidClass.ORTHO_DIRECTOID: ('od1', 'od2', 'od3', 'od4', 'od5', 'od6'),
    DirectoidClass.LARGEST_QUASIVARIETY: ('q4', 'q5', 'q9'),
    DirectoidClass.CANONICAL_IMAGE: ('q4', 'q5', 'q8'),
}

#: Catalog formulas derived in every ortho-directoid
DERIVED_LAWS = ('aux1', 'aux2', 'aux3', 'aux4a', 'aux4b', 'aux4c', 'aux4d', 'aux4e', 'aux4f',
                'aux5', 'aux6', 'aux7', 'aux8', 'x15', 'x16')


def check_axioms(D, names):
    """ Evaluate catalog formulas in order, stopping at the first failure.

    Args:
        D (:class:`~pomlab.directoid.InvolutiveDirectoid`): the directoid
        names (iterable of `str`): catalog formula names

    Returns:
        :class:`~pomlab.order.Verdict`: holds, or fails with the reason naming the failed formula
    """
    formulas = terms.catalog()
    for name in names:
        verdict = terms.evaluate(D, formulas[name])
        if not verdict:
            return Verdict.fail(verdict.witness, '{}: {}'.format(name, verdict.reason))
    return Verdict.ok()


def check_class(D, c):
    """ Decide membership of a directoid in a class, by exhaustive evaluation of its defining formulas.

    Args:
        D (:class:`~pomlab.directoid.InvolutiveDirectoid`): the directoid
        c (:class:`~pomlab.directoid.DirectoidClass` or `str`): the class

    Returns:
        :class:`~pomlab.order.Verdict`: holds, or fails with the first failing assignment of the first failing formula
    """
    return check_axioms(D, CLASS_AXIOMS[DirectoidClass.parse(c)])


def check_derived_laws(D):
    """ Evaluate every law derived in ortho-directoids.

    Returns:
        :class:`~collections.OrderedDict`: formula name to :class:`~pomlab.order.Verdict`
    """
    formulas = terms.catalog()
    return OrderedDict((name, terms.evaluate(D, formulas[name])) for name in DERIVED_LAWS)


def is_lattice_directoid(D):
    """ Whether ⊓ is associative, i.e. the directoid is the meet operation of a lattice.
    """
    return check_axioms(D, ('ass',))


def para_directoid_weak(D):
    """ Whether D is a bounded directoid with antitone involution whose induced poset is paraorthomodular.

    Returns:
        :class:`~pomlab.order.Verdict`: fails with the structural witness when the induced poset is not a bounded
        poset with antitone involution
    """
    try:
        P = induced_poset(D)
    except StructureError as err:
        return Verdict.fail(err.witness if err.witness is not None else {}, str(err))
    return order.check(P, order.PosetProperty.PARAORTHOMODULAR)


def para_directoid_sharp(D):
    """ Whether D is a bounded directoid with antitone involution satisfying i14 and q8, the quasivariety of
    directoids assigned to sharply paraorthomodular posets.
    """
    try:
        induced_poset(D)
    except StructureError as err:
        return Verdict.fail(err.witness if err.witness is not None else {}, str(err))
    return check_class(D, DirectoidClass.SHARPLY_PARAORTHOMODULAR_DIRECTOID)


def cone_via_directoid(D, a, b):
    """ The lower cone L(a, b) computed inside the directoid as {(x ⊓ a) ⊓ (x ⊓ b) | x ∈ D}.

    Returns:
        `int`: the cone as bit vector
    """
    return mask_of(np.unique(D.meet[D.meet[:, a], D.meet[:, b]]).tolist())


def subuniverse(D, generators):
    """ Closure of a set of elements under ⊓, ', 0 and 1.

    Args:
        D (:class:`~pomlab.directoid.InvolutiveDirectoid`): the directoid
        generators (iterable of `int`): the generators

    Returns:
        `int`: the generated subuniverse as bit vector
    """
    members = set(generators) | {D.zero, D.one}
    while True:
        current = sorted(members)
        members.update(D.inv[x] for x in current)
        members.update(D.meet[np.ix_(current, current)].ravel().tolist())
        if len(members) == len(current):
            return mask_of(members)


def restrict(D, subset):
    """ The subdirectoid on a subuniverse, elements renumbered in increasing order.

    Args:
        D (:class:`~pomlab.directoid.InvolutiveDirectoid`): the directoid
        subset (`int` or iterable of `int`): the subuniverse

    Returns:
        :class:`~pomlab.directoid.InvolutiveDirectoid`: the induced subalgebra

    Raises:
        `StructureError`: if the subset is not closed under the operations
    """
    mask = subset if isinstance(subset, int) else mask_of(subset)
    members = list(bits(mask))
    index = {x: i for i, x in enumerate(members)}

    for x in (D.zero, D.one):
        if x not in index:
            raise StructureError('Constants must belong to the subset', (x,))
    for x in members:
        if D.inv[x] not in index:
            raise StructureError('Subset is not closed under the involution', (x,))

    sub = D.meet[np.ix_(members, members)]
    outside = np.argwhere(~np.isin(sub, members))
    if len(outside):
        i, j = outside[0]
        raise StructureError('Subset is not closed under the meet', (members[i], members[j]))

    lookup = np.zeros(D.size, dtype = np.int64)
    lookup[members] = np.arange(len(members))
    return InvolutiveDirectoid(lookup[sub], [index[D.inv[x]] for x in members], index[D.zero], index[D.one],
                               [D.labels[x] for x in members])


def generated_subdirectoid(D, generators):
    """ The subdirectoid generated by a set of elements.

    Args:
        D (:class:`~pomlab.directoid.InvolutiveDirectoid`): the directoid
        generators (iterable of `int`): the generators

    Returns:
        :class:`~pomlab.directoid.InvolutiveDirectoid`: the generated subdirectoid, elements in increasing order
    """
    return restrict(D, subuniverse(D, generators))


def relabel(D, perm):
    """ The isomorphic copy of D where element x is renamed perm[x].
    """
    perm = np.asarray(perm, dtype = np.int64)
    back = np.argsort(perm)
    return InvolutiveDirectoid(perm[D.meet[np.ix_(back, back)]], [int(perm[D.inv[x]]) for x in back],
                               perm[D.zero], perm[D.one], [D.labels[x] for x in back])


def extend_with_pair(D):
    """ Embed a bounded directoid with antitone involution into a larger one satisfying q8.

    Two fresh elements a (index n) and a' (index n + 1) are added, swapped by the involution, and

    - x ⊓ y = 0 if 0 ∈ {x, y},
    - x ⊓ y is kept for x, y ∈ D when it is not 0, and becomes a otherwise,
    - x ⊓ y = a if a ∈ {x, y},
    - x ⊓ a' = x for x ≠ 1, and 1 ⊓ a' = a'.

    Returns:
        :class:`~pomlab.directoid.InvolutiveDirectoid`: the extension, with a ⊓ y = 0 only for y = 0
    """
    n = D.size
    a, a_ = n, n + 1
    meet = np.empty((n + 2, n + 2), dtype = np.int64)

    meet[:n, :n] = np.where(D.meet == D.zero, a, D.meet)
    meet[a, :] = meet[:, a] = a
    meet[a_, :n] = meet[:n, a_] = np.arange(n)
    meet[a_, a_] = a_
    meet[a_, D.one] = meet[D.one, a_] = a_
    meet[D.zero, :] = meet[:, D.zero] = D.zero

    inv = list(D.inv) + [a_, a]
    return InvolutiveDirectoid(meet, inv, D.zero, D.one, D.labels + ('a*', "a*'"))


def quotient_theta(M, pair = None):
    """ Collapse a pair of elements onto the constants: a with 0 and a' with 1.

    Args:
        M (:class:`~pomlab.directoid.InvolutiveDirectoid`): the directoid
        pair (`tuple` of `int`): the elements (a, a'), by default the last two elements, as added by
            :func:`extend_with_pair`

    Returns:
        :class:`~pomlab.directoid.InvolutiveDirectoid`: the quotient, on the remaining elements in increasing order

    Raises:
        `NotACongruence`: if the equivalence is not compatible with ⊓ and '
    """
    a, a_ = pair if pair is not None else (M.size - 2, M.size - 1)
    if M.inv[a] != a_ or len({a, a_, M.zero, M.one}) != 4:
        raise NotACongruence("The collapsed elements must be distinct from the constants and swapped by '", (a, a_))

    cls = np.arange(M.size)
    cls[a], cls[a_] = M.zero, M.one

    inv = M.inv_array
    bad_inv = np.flatnonzero(cls[inv] != cls[inv[cls]])
    if len(bad_inv):
        raise NotACongruence("Equivalence is not compatible with '", (int(bad_inv[0]),))
    bad_meet = np.argwhere(cls[M.meet] != cls[M.meet[np.ix_(cls, cls)]])
    if len(bad_meet):
        raise NotACongruence('Equivalence is not compatible with ^', tuple(int(v) for v in bad_meet[0]))

    kept = [x for x in range(M.size) if x not in (a, a_)]
    lookup = np.zeros(M.size, dtype = np.int64)
    lookup[kept] = np.arange(len(kept))
    lookup[a], lookup[a_] = lookup[M.zero], lookup[M.one]

    meet = lookup[M.meet[np.ix_(kept, kept)]]
    return InvolutiveDirectoid(meet, [int(lookup[M.inv[x]]) for x in kept], lookup[M.zero], lookup[M.one],
                               [M.labels[x] for x in kept])


def join_assigned_directoids(P, chooser = LEAST, fanout_cap = None):
    """ Directoids of a bounded poset with antitone involution built from a join assignment.

    x ⊔ y is the maximum of comparable elements, the join x ∨ y when it exists, and otherwise an element of U(x,y);
    then x ⊓ y = (x' ⊔ y')'. On an orthomodular poset every result is an orthomodular directoid inducing P.

    Args:
        P (:class:`~pomlab.order.BoundedInvolutivePoset`): the poset
        chooser (`str`): :data:`LEAST` for one table, :data:`ALL` for every choice of upper bounds
        fanout_cap (`int`): cap on the number of tables, `None` for the configured value

    Yields:
        :class:`~pomlab.directoid.InvolutiveDirectoid`: the directoids
    """
    choices = {}
    for x, y in itertools.combinations_with_replacement(range(P.size), 2):
        if P.le[x, y] or P.le[y, x]:
            choices[x, y] = [y if P.le[x, y] else x]
        elif P.join(x, y) is not None:
            choices[x, y] = [P.join(x, y)]
        else:
            choices[x, y] = list(bits(P.up[x] & P.up[y]))

    inv = P.inv_array
    for join in symmetric_tables(P.size, choices, chooser, fanout_cap, 'join assignments'):
        yield InvolutiveDirectoid(inv[join[np.ix_(inv, inv)]], P.inv, P.bottom, P.top, P.labels)


##
# Local Variables:
# mode: python
# indent-tabs-mode: nil
# py-indent-offset: 4
# fill-column: 80
# end:
