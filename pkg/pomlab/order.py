# -*- coding: utf-8 -*-
#
#       order.py
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
:mod:`pomlab.order` -- Bounded posets with antitone involution
--------------------------------------------------------------

Finite bounded posets :math:`(P, \\leq, ', 0, 1)` where :math:`'` is an antitone involution, their lower and upper
cones, partial meets and joins, and the poset-level properties (distributive, modular, paraorthomodular, ...).

Elements are the integers `0..n-1`. Subsets are python integers used as bit vectors (see :mod:`pomlab.util`), so
that cones are intersections of precomputed principal cones.
"""

from __future__ import print_function, unicode_literals

import logging
logger = logging.getLogger(__name__)

import enum
import functools
import itertools
from collections import OrderedDict

import numpy as np

from pomlab.util import bits, mask_of


#: Direction of a lower cone L(A)
LOWER = 'lower'
#: Direction of an upper cone U(A)
UPPER = 'upper'


class StructureError(ValueError):
    """ Base class for every invalid finite structure.

    Args:
        message (`str`): which invariant is violated
        witness (`tuple` or `dict`): elements exhibiting the violation
    """
    def __init__(self, message, witness = None):
        super(StructureError, self).__init__(message if witness is None else '{}: {}'.format(message, witness))
        #: the elements exhibiting the violation
        self.witness = witness


class NotAPartialOrder(StructureError):
    """ The relation is not reflexive, antisymmetric and transitive.
    """
    pass


class NotBounded(StructureError):
    """ The designated bottom or top is not a bound of every element.
    """
    pass


class NotInvolution(StructureError):
    """ The unary map does not square to the identity, or does not swap bottom and top.
    """
    pass


class NotAntitone(StructureError):
    """ The involution does not reverse the order.
    """
    pass


class InconsistentStructure(StructureError):
    """ A meet or join guaranteed by already verified conditions is missing, which means the structure is corrupt.
    """
    pass


@enum.unique
class PosetProperty(enum.Enum):
    """ The properties decided by :func:`check`.
    """
    #: L(U(x,y),z) = LU(L(x,z),L(y,z))
    DISTRIBUTIVE = 'distributive'
    #: L(U(x,y),z) = LU(x,L(y,z)) whenever x ≤ z
    MODULAR = 'modular'
    #: x ≤ y and L(x',y) = {0} imply x = y
    PARAORTHOMODULAR = 'paraorthomodular'
    #: ' is a complementation: L(x,x') = {0} and U(x,x') = {1}
    ORTHOPOSET = 'orthoposet'
    #: orthoposet with orthogonal joins and the orthomodular law
    ORTHOMODULAR = 'orthomodular'
    #: complementation and L(U(L(x,y),y'),y) = L(x,y)
    PSEUDO_ORTHOMODULAR = 'pseudo_orthomodular'
    #: orthogonal joins exist, and x ≤ y with x' ∧ y = 0 imply x = y
    SHARPLY_PARAORTHOMODULAR = 'sharply_paraorthomodular'
    #: x ≤ y' implies that x ∨ y exists
    COND12 = 'cond12'
    #: x ≤ y implies that x' ∧ y exists
    COND13 = 'cond13'

    @classmethod
    def parse(cls, name):
        """ Get a property from its tag, accepting dashes and any case.

        Args:
            name (`str` or :class:`~PosetProperty`): the tag

        Returns:
            :class:`~PosetProperty`: the property
        """
        if isinstance(name, cls):
            return name
        return cls(name.strip().lower().replace('-', '_'))


class Verdict(object):
    """ Outcome of an exhaustive check: truthy iff the property holds, otherwise carrying the first failing assignment.

    Args:
        holds (`bool`): whether the property holds
        witness (`dict` or `tuple`): the first failing assignment, mapping variable names to elements
        reason (`str`): which condition failed
    """
    #: `bool` outcome
    holds = True
    #: :class:`~collections.OrderedDict` of the failing assignment, `None` when the property holds
    witness = None
    #: `str` naming the failed condition, `None` when the property holds
    reason = None

    def __init__(self, holds, witness = None, reason = None):
        self.holds = bool(holds)
        if isinstance(witness, tuple):
            witness = OrderedDict(zip('xyzuvw', witness))
        self.witness = witness
        self.reason = reason


    @classmethod
    def ok(cls):
        """ A verdict for a property that holds.
        """
        return cls(True)


    @classmethod
    def fail(cls, witness, reason = None):
        """ A verdict for a failed property.

        Args:
            witness (`tuple` or `dict`): the failing assignment, tuples are named x, y, z in order
            reason (`str`): which condition failed
        """
        return cls(False, witness, reason)


    def __bool__(self):
        return self.holds

    __nonzero__ = __bool__


    def __repr__(self):
        if self.holds:
            return 'Verdict(holds)'
        return 'Verdict(fails, witness={}, reason={!r})'.format(dict(self.witness or {}), self.reason)


    def describe(self, labels = None):
        """ Human-readable one-line description.

        Args:
            labels (`tuple` of `str`): element labels to use in the witness

        Returns:
            `str`: "holds" or "fails" with the witness
        """
        if self.holds:
            return 'holds'
        name = (lambda e: labels[e]) if labels is not None else str
        assignment = ', '.join('{}={}'.format(var, _describe_value(value, name)) for var, value in self.witness.items())
        return 'fails ({}{})'.format(self.reason + ': ' if self.reason else '', assignment)


    def to_json(self, labels = None):
        """ Machine-readable form.

        Args:
            labels (`tuple` of `str`): element labels, added next to the indices when given

        Returns:
            `dict`: with "holds", and "witness"/"reason" on failure
        """
        if self.holds:
            return {'holds': True}
        out = {'holds': False, 'reason': self.reason, 'witness': dict(self.witness)}
        if labels is not None:
            out['labels'] = {var: _describe_value(value, lambda e: labels[e]) for var, value in self.witness.items()}
        return out


def _describe_value(value, name):
    """ Format a witness value: an element, or a list of elements.
    """
    if isinstance(value, (list, tuple)):
        return '{' + ','.join(name(e) for e in value) + '}'
    return name(value)


class BoundedInvolutivePoset(object):
    """ A validated finite bounded poset with antitone involution. Build instances with :func:`validate`.

    Instances are immutable: the order matrix is a read-only numpy array.

    Args:
        le (:class:`~numpy.ndarray`): n×n boolean matrix, le[x, y] iff x ≤ y
        inv (`tuple` of `int`): the involution
        bottom (`int`): the least element
        top (`int`): the greatest element
        labels (`tuple` of `str`): display names of the elements
    """
    #: `int` number of elements
    size = 0
    #: :class:`~numpy.ndarray` read-only boolean order matrix
    le = None
    #: `tuple` of `int`, the antitone involution x ↦ x'
    inv = ()
    #: `int` index of 0
    bottom = 0
    #: `int` index of 1
    top = 0
    #: `tuple` of `str` display names
    labels = ()
    #: `tuple` of `int` bit vectors, down[x] = L(x)
    down = ()
    #: `tuple` of `int` bit vectors, up[x] = U(x)
    up = ()

    def __init__(self, le, inv, bottom, top, labels = None):
        le = np.array(le, dtype = bool)
        le.setflags(write = False)
        self.le = le
        self.size = le.shape[0]
        self.inv = tuple(int(i) for i in inv)
        self.bottom = int(bottom)
        self.top = int(top)
        self.labels = tuple(labels) if labels is not None else tuple(str(x) for x in range(self.size))
        self.down = tuple(mask_of(np.flatnonzero(le[:, x])) for x in range(self.size))
        self.up = tuple(mask_of(np.flatnonzero(le[x, :])) for x in range(self.size))


    def __eq__(self, other):
        if not isinstance(other, BoundedInvolutivePoset):
            return NotImplemented
        return (self.size == other.size and self.inv == other.inv and self.bottom == other.bottom
                and self.top == other.top and np.array_equal(self.le, other.le))


    def __ne__(self, other):
        equal = self.__eq__(other)
        return equal if equal is NotImplemented else not equal


    def __hash__(self):
        return hash((self.size, self.inv, self.bottom, self.top, self.le.tobytes()))


    def __repr__(self):
        return '<BoundedInvolutivePoset n={} covers={}>'.format(self.size, [
            (self.labels[x], self.labels[y]) for x, y in self.covers()
        ])


    @property
    def full(self):
        """ `int`: bit vector of the whole universe
        """
        return (1 << self.size) - 1


    def leq(self, x, y):
        """ Whether x ≤ y.
        """
        return bool(self.le[x, y])


    def lower(self, mask):
        """ Lower cone L(A) of a subset given as bit vector.

        Args:
            mask (`int`): the subset A

        Returns:
            `int`: L(A), the whole universe when A is empty
        """
        cone = self.full
        for a in bits(mask):
            cone &= self.down[a]
        return cone


    def upper(self, mask):
        """ Upper cone U(A) of a subset given as bit vector.

        Args:
            mask (`int`): the subset A

        Returns:
            `int`: U(A), the whole universe when A is empty
        """
        cone = self.full
        for a in bits(mask):
            cone &= self.up[a]
        return cone


    def image(self, mask):
        """ The subset A' = {a' | a ∈ A}.
        """
        return mask_of(self.inv[a] for a in bits(mask))


    def meet(self, a, b):
        """ Partial meet: the maximum of L(a,b) if it exists, otherwise `None`.
        """
        m = int(self.meet_table[a, b])
        return None if m < 0 else m


    def join(self, a, b):
        """ Partial join: the minimum of U(a,b) if it exists, otherwise `None`.
        """
        j = int(self.join_table[a, b])
        return None if j < 0 else j


    @functools.cached_property
    def meet_table(self):
        """ :class:`~numpy.ndarray` of meets, -1 where the meet does not exist.
        """
        return self._extremum_table(self.down)


    @functools.cached_property
    def join_table(self):
        """ :class:`~numpy.ndarray` of joins, -1 where the join does not exist.
        """
        return self._extremum_table(self.up)


    def _extremum_table(self, cones):
        table = np.full((self.size, self.size), -1, dtype = np.int64)
        for a, b in itertools.combinations_with_replacement(range(self.size), 2):
            common = cones[a] & cones[b]
            for m in bits(common):
                if cones[m] == common:
                    table[a, b] = table[b, a] = m
                    break
        table.setflags(write = False)
        return table


    @functools.cached_property
    def inv_array(self):
        """ :class:`~numpy.ndarray` of the involution, for vectorised evaluation.
        """
        inv = np.array(self.inv, dtype = np.int64)
        inv.setflags(write = False)
        return inv


    def covers(self):
        """ The covering pairs (x, y) with x < y and nothing strictly in between, in lexicographic order.

        Returns:
            `list` of `tuple`: the Hasse diagram edges
        """
        strict = self.le & ~np.eye(self.size, dtype = bool)
        two_steps = (strict.astype(np.int64) @ strict.astype(np.int64)) > 0
        return [(int(x), int(y)) for x, y in zip(*np.nonzero(strict & ~two_steps))]


    def label_set(self, mask):
        """ Display a subset by its labels, e.g. `{0,c}`.
        """
        return '{' + ','.join(self.labels[x] for x in bits(mask)) + '}'


    def element(self, label):
        """ Find an element by its label.

        Args:
            label (`str`): the display name

        Returns:
            `int`: the element index
        """
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError('No element labelled {!r}'.format(label))


def transitive_closure(rel):
    """ Reflexive-transitive closure of a boolean relation matrix.

    Args:
        rel (:class:`~numpy.ndarray`): n×n boolean matrix

    Returns:
        :class:`~numpy.ndarray`: the closed relation
    """
    closed = np.array(rel, dtype = bool) | np.eye(len(rel), dtype = bool)
    for k in range(len(closed)):
        closed |= np.outer(closed[:, k], closed[k, :])
    return closed


def validate(size, inv, bottom, top, le = None, hasse = None, labels = None):
    """ Validate a candidate bounded poset with antitone involution.

    Exactly one of `le` (a full order relation) or `hasse` (covering pairs, closed reflexively and transitively
    here) must be given.

    Args:
        size (`int`): number of elements, at least 1
        inv (sequence of `int`): the involution as a permutation
        bottom (`int`): the claimed least element
        top (`int`): the claimed greatest element
        le (n×n array-like of `bool`): the order relation
        hasse (iterable of pairs of `int`): covering pairs (x, y) meaning x < y
        labels (sequence of `str`): display names

    Returns:
        :class:`~pomlab.order.BoundedInvolutivePoset`: the validated structure

    Raises:
        `NotAPartialOrder`, `NotBounded`, `NotInvolution`, `NotAntitone`, or `StructureError` for malformed input
    """
    if size < 1:
        raise StructureError('A structure needs at least one element, got size {}'.format(size))
    if (le is None) == (hasse is None):
        raise StructureError('Exactly one of the order relation or the Hasse diagram must be given')
    if labels is not None and len(labels) != size:
        raise StructureError('Expected {} labels, got {}'.format(size, len(labels)))
    if not (0 <= bottom < size and 0 <= top < size):
        raise StructureError('Bounds out of range', (bottom, top))

    inv = tuple(int(i) for i in inv)
    if len(inv) != size or sorted(inv) != list(range(size)):
        raise NotInvolution('The involution must be a permutation of the {} elements'.format(size), inv)

    if hasse is not None:
        rel = np.zeros((size, size), dtype = bool)
        for x, y in hasse:
            if not (0 <= x < size and 0 <= y < size):
                raise StructureError('Hasse edge out of range', (x, y))
            rel[x, y] = True
        rel = transitive_closure(rel)
    else:
        rel = np.array(le, dtype = bool)
        if rel.shape != (size, size):
            raise StructureError('Order relation must be {0}×{0}, got shape {1}'.format(size, rel.shape))

        not_reflexive = np.flatnonzero(~np.diagonal(rel))
        if len(not_reflexive):
            x = int(not_reflexive[0])
            raise NotAPartialOrder('Order relation is not reflexive', (x, x))

        ints = rel.astype(np.int64)
        not_transitive = np.argwhere(((ints @ ints) > 0) & ~rel)
        if len(not_transitive):
            x, z = (int(v) for v in not_transitive[0])
            raise NotAPartialOrder('Order relation is not transitive', (x, z))

    cycles = np.argwhere(rel & rel.T & ~np.eye(size, dtype = bool))
    if len(cycles):
        x, y = (int(v) for v in cycles[0])
        raise NotAPartialOrder('Order relation is not antisymmetric', (x, y))

    for x in range(size):
        if not rel[bottom, x]:
            raise NotBounded('Bottom is not below every element', (bottom, x))
        if not rel[x, top]:
            raise NotBounded('Top is not above every element', (x, top))

    if inv[bottom] != top:
        raise NotInvolution("The involution must map bottom to top", (bottom, inv[bottom]))
    for x in range(size):
        if inv[inv[x]] != x:
            raise NotInvolution("The map does not square to the identity", (x, inv[x]))

    # antitone[x, y] iff y' ≤ x'
    perm = np.array(inv)
    antitone = rel[np.ix_(perm, perm)].T
    not_antitone = np.argwhere(rel & ~antitone)
    if len(not_antitone):
        x, y = (int(v) for v in not_antitone[0])
        raise NotAntitone('x ≤ y but not y\' ≤ x\'', (x, y))

    return BoundedInvolutivePoset(rel, inv, bottom, top, labels)


def cone(P, A, direction = LOWER):
    """ Lower or upper cone of a subset.

    Args:
        P (:class:`~pomlab.order.BoundedInvolutivePoset`): the poset
        A (`int` or iterable of `int`): the subset, as bit vector or as elements
        direction (`str`): :data:`LOWER` or :data:`UPPER`

    Returns:
        `int`: the cone as bit vector
    """
    mask = A if isinstance(A, int) else mask_of(A)
    if direction == LOWER:
        return P.lower(mask)
    elif direction == UPPER:
        return P.upper(mask)
    raise ValueError('Unknown cone direction {!r}'.format(direction))


def partial_meet(P, a, b):
    """ The greatest lower bound of a and b, or `None` if L(a,b) has no maximum.
    """
    return P.meet(a, b)


def partial_join(P, a, b):
    """ The least upper bound of a and b, or `None` if U(a,b) has no minimum.
    """
    return P.join(a, b)


def is_lattice(P):
    """ Whether every pair of elements has a meet and a join.
    """
    return bool((P.meet_table >= 0).all() and (P.join_table >= 0).all())


def _pairs(P):
    return itertools.product(range(P.size), repeat = 2)


def _triples(P):
    return itertools.product(range(P.size), repeat = 3)


def _check_distributive(P):
    for x, y, z in _triples(P):
        lhs = P.lower(P.upper(1 << x | 1 << y) | 1 << z)
        rhs = P.lower(P.upper(P.down[x] & P.down[z] | P.down[y] & P.down[z]))
        if lhs != rhs:
            return Verdict.fail((x, y, z), 'L(U(x,y),z) != LU(L(x,z),L(y,z))')
    return Verdict.ok()


def _check_modular(P):
    for x, y, z in _triples(P):
        if not P.le[x, z]:
            continue
        lhs = P.lower(P.upper(1 << x | 1 << y) | 1 << z)
        rhs = P.lower(P.upper(1 << x | P.down[y] & P.down[z]))
        if lhs != rhs:
            return Verdict.fail((x, y, z), 'L(U(x,y),z) != LU(x,L(y,z)) with x <= z')
    return Verdict.ok()


def _check_paraorthomodular(P):
    zero = 1 << P.bottom
    for x, y in _pairs(P):
        if x != y and P.le[x, y] and P.down[P.inv[x]] & P.down[y] == zero:
            return Verdict.fail((x, y), "x <= y and L(x',y) = {0} but x != y")
    return Verdict.ok()


def _check_complementation(P):
    for x in range(P.size):
        x_ = P.inv[x]
        if P.down[x] & P.down[x_] != 1 << P.bottom or P.up[x] & P.up[x_] != 1 << P.top:
            return Verdict.fail((x,), "' is not a complement of x")
    return Verdict.ok()


def _check_orthogonal_joins(P, reason = "x <= y' but x v y does not exist"):
    for x, y in _pairs(P):
        if P.le[x, P.inv[y]] and P.join(x, y) is None:
            return Verdict.fail((x, y), reason)
    return Verdict.ok()


def _check_orthomodular(P):
    verdict = _check_complementation(P)
    if not verdict:
        return verdict
    verdict = _check_orthogonal_joins(P)
    if not verdict:
        return verdict

    for x, y in _pairs(P):
        if not P.le[x, y]:
            continue
        m = P.meet(y, P.inv[x])
        j = None if m is None else P.join(x, m)
        if j is None:
            raise InconsistentStructure("y ∧ x' or x ∨ (y ∧ x') missing although orthogonal joins exist", (x, y))
        if j != y:
            return Verdict.fail((x, y), "orthomodular law: x <= y but x v (y ^ x') != y")
    return Verdict.ok()


def _check_pseudo_orthomodular(P):
    verdict = _check_complementation(P)
    if not verdict:
        return verdict

    for x, y in _pairs(P):
        lxy = P.down[x] & P.down[y]
        if P.lower(P.upper(lxy | 1 << P.inv[y]) | 1 << y) != lxy:
            return Verdict.fail((x, y), "L(U(L(x,y),y'),y) != L(x,y)")
    return Verdict.ok()


def _check_sharply_paraorthomodular(P):
    verdict = _check_orthogonal_joins(P, "orthogonal join: x <= y' but x v y does not exist")
    if not verdict:
        return verdict

    for x, y in _pairs(P):
        if x != y and P.le[x, y] and P.meet(P.inv[x], y) == P.bottom:
            return Verdict.fail((x, y), "x <= y and x' ^ y = 0 but x != y")
    return Verdict.ok()


def _check_cond13(P):
    for x, y in _pairs(P):
        if P.le[x, y] and P.meet(P.inv[x], y) is None:
            return Verdict.fail((x, y), "x <= y but x' ^ y does not exist")
    return Verdict.ok()


_CHECKS = {
    PosetProperty.DISTRIBUTIVE: _check_distributive,
    PosetProperty.MODULAR: _check_modular,
    PosetProperty.PARAORTHOMODULAR: _check_paraorthomodular,
    PosetProperty.ORTHOPOSET: _check_complementation,
    PosetProperty.ORTHOMODULAR: _check_orthomodular,
    PosetProperty.PSEUDO_ORTHOMODULAR: _check_pseudo_orthomodular,
    PosetProperty.SHARPLY_PARAORTHOMODULAR: _check_sharply_paraorthomodular,
    PosetProperty.COND12: _check_orthogonal_joins,
    PosetProperty.COND13: _check_cond13,
}


def check(P, prop):
    """ Decide a poset property by exhaustive evaluation over all tuples of elements.

    Args:
        P (:class:`~pomlab.order.BoundedInvolutivePoset`): the poset
        prop (:class:`~pomlab.order.PosetProperty` or `str`): the property

    Returns:
        :class:`~pomlab.order.Verdict`: holds, or fails with the first witness in lexicographic order
    """
    prop = PosetProperty.parse(prop)
    return _CHECKS[prop](P)


def check_p_form(P):
    """ Paraorthomodularity in its meet form: x ≤ y and x' ∧ y = 0 imply x = y.

    Pairs where x' ∧ y does not exist satisfy the condition vacuously, so on non-lattices this is weaker than
    :attr:`PosetProperty.PARAORTHOMODULAR`.

    Returns:
        :class:`~pomlab.order.Verdict`: holds, or fails with the first pair (x, y)
    """
    for x, y in _pairs(P):
        if x != y and P.le[x, y] and P.meet(P.inv[x], y) == P.bottom:
            return Verdict.fail((x, y), "x <= y and x' ^ y = 0 but x != y")
    return Verdict.ok()


def add_bounds(P):
    """ Add a fresh bottom and a fresh top, swapped by the involution.

    The old elements are shifted by one: old x becomes x + 1, the new bottom is 0 and the new top is n + 1.

    Returns:
        :class:`~pomlab.order.BoundedInvolutivePoset`: the extended poset
    """
    n = P.size
    le = np.zeros((n + 2, n + 2), dtype = bool)
    le[1:n + 1, 1:n + 1] = P.le
    le[0, :] = True
    le[:, n + 1] = True
    inv = [n + 1] + [P.inv[x] + 1 for x in range(n)] + [0]
    return validate(n + 2, inv, 0, n + 1, le = le, labels = ('0+',) + P.labels + ('1+',))


def relabel(P, perm):
    """ The isomorphic copy of P where element x is renamed perm[x].

    Args:
        P (:class:`~pomlab.order.BoundedInvolutivePoset`): the poset
        perm (sequence of `int`): a permutation of the elements

    Returns:
        :class:`~pomlab.order.BoundedInvolutivePoset`: the relabelled poset
    """
    perm = np.asarray(perm)
    back = np.argsort(perm)
    labels = [P.labels[x] for x in back]
    inv = [int(perm[P.inv[x]]) for x in back]
    return BoundedInvolutivePoset(P.le[np.ix_(back, back)], inv, perm[P.bottom], perm[P.top], labels)


def induced_subposet_is_lattice(P, mask):
    """ Whether the subset, with the induced order, is a lattice.

    Args:
        P (:class:`~pomlab.order.BoundedInvolutivePoset`): the ambient poset
        mask (`int`): the subset

    Returns:
        `bool`: whether all pairs of the subset have a greatest lower and a least upper bound inside it
    """
    for a, b in itertools.combinations(list(bits(mask)), 2):
        for cones in (P.down, P.up):
            common = cones[a] & cones[b] & mask
            if not any(cones[m] & common == common for m in bits(common)):
                return False
    return True


def is_sublattice(P, mask):
    """ Whether every pair of the subset has a meet and a join in P, both belonging to the subset.
    """
    for a, b in itertools.combinations(list(bits(mask)), 2):
        m, j = P.meet(a, b), P.join(a, b)
        if m is None or j is None or not (mask >> m & 1 and mask >> j & 1):
            return False
    return True


##
# Local Variables:
# mode: python
# indent-tabs-mode: nil
# py-indent-offset: 4
# fill-column: 80
# end:
