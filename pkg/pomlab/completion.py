# -*- coding: utf-8 -*-
#
#       completion.py
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
:mod:`pomlab.completion` -- Dedekind-MacNeille completions
----------------------------------------------------------

The completion of a bounded poset with antitone involution is the lattice of its cone-closed subsets
X = L(U(X)) ordered by inclusion, with orthocomplement X ↦ L(X'). The closed sets are exactly the intersections of
principal lower cones, which is how they are generated here.

Weak D-continuity and (FLP) are decided either literally, over all pairs of subsets (``raw`` mode, exponential in
both quantifiers), or over pairs of closed sets (``reduced`` mode). Both modes are kept so they can be compared with
:func:`cross_validate`.
"""

from __future__ import print_function, unicode_literals

import logging
logger = logging.getLogger(__name__)

import functools
import itertools
from collections import OrderedDict, deque

import numpy as np

from pomlab import config, order, util
from pomlab.order import StructureError, PosetProperty, Verdict
from pomlab.util import CapExceeded, bits, popcount, submasks


#: Quantification over all subsets
RAW = 'raw'
#: Quantification over cone-closed subsets
REDUCED = 'reduced'


class BudgetExceeded(CapExceeded):
    """ Raised when a quantification over subsets is asked for a poset larger than the configured budget.
    """
    pass


class NotACompleteLattice(StructureError):
    pass


class DMCompletion(object):
    """ The Dedekind-MacNeille completion of a poset, built by :func:`dm_complete`.

    Elements of the completion are indices into :attr:`universe`.

    Args:
        source (:class:`~pomlab.order.BoundedInvolutivePoset`): the completed poset
        universe (sequence of `int`): the closed sets, as bit vectors over the source
    """
    #: :class:`~pomlab.order.BoundedInvolutivePoset` the completed poset
    source = None
    #: `tuple` of `int` closed sets, by increasing size then value
    universe = ()
    #: `dict` closed set to its index
    index = {}
    #: `tuple` of `int`, index of L(X') for each closed X
    ortho = ()
    #: `tuple` of `int`, index of L(x) for each element x of the source
    embedding = ()

    def __init__(self, source, universe):
        self.source = source
        self.universe = tuple(sorted(universe, key = lambda m: (popcount(m), m)))
        self.index = {m: i for i, m in enumerate(self.universe)}
        self.ortho = tuple(self.index[source.lower(source.image(m))] for m in self.universe)
        self.embedding = tuple(self.index[source.down[x]] for x in range(source.size))


    @property
    def size(self):
        """ `int` number of elements of the completion.
        """
        return len(self.universe)


    def closure(self, mask):
        """ L(U(X)), the least closed set containing X.
        """
        return self.source.lower(self.source.upper(mask))


    def meet(self, i, j):
        """ Index of the intersection of two closed sets.
        """
        return self.index[self.universe[i] & self.universe[j]]


    def join(self, i, j):
        """ Index of the closure of the union of two closed sets.
        """
        return self.index[self.closure(self.universe[i] | self.universe[j])]


    def label(self, i):
        """ Display name: the source label for embedded elements, the maximal source elements otherwise.
        """
        P, mask = self.source, self.universe[i]
        for x in range(P.size):
            if P.down[x] == mask:
                return P.labels[x]
        return P.label_set(sum(1 << m for m in bits(mask) if P.up[m] & mask == 1 << m))


    @functools.cached_property
    def poset(self):
        """ :class:`~pomlab.order.BoundedInvolutivePoset` the completion, ordered by inclusion with ⊥ as involution.
        """
        le = np.array([[a & b == a for b in self.universe] for a in self.universe], dtype = bool)
        return order.validate(self.size, self.ortho, self.index[1 << self.source.bottom],
                              self.index[self.source.full], le = le, labels = [self.label(i) for i in range(self.size)])


    def as_poset(self):
        """ The completion as a bounded poset with antitone involution.
        """
        return self.poset


def dm_complete(P):
    """ Compute the Dedekind-MacNeille completion.

    Args:
        P (:class:`~pomlab.order.BoundedInvolutivePoset`): the poset

    Returns:
        :class:`~pomlab.completion.DMCompletion`: the completion, closed sets being the intersections of principal
        lower cones
    """
    closed = set(P.down)
    frontier = deque(closed)
    while frontier:
        mask = frontier.popleft()
        for cone in P.down:
            meet = mask & cone
            if meet not in closed:
                closed.add(meet)
                frontier.append(meet)

    completion = DMCompletion(P, closed)
    logger.debug('Completion of a {}-element poset has {} elements'.format(P.size, completion.size))
    return completion


def check_embedding(C):
    """ Whether x ↦ L(x) is an order embedding commuting with the involution and preserving existing meets and
    joins of pairs.

    Args:
        C (:class:`~pomlab.completion.DMCompletion`): the completion

    Returns:
        :class:`~pomlab.order.Verdict`: holds, or fails with the first pair (x, y) of the source
    """
    P, e = C.source, C.embedding
    for x, y in itertools.product(range(P.size), repeat = 2):
        if P.le[x, y] != (C.universe[e[x]] & C.universe[e[y]] == C.universe[e[x]]):
            return Verdict.fail((x, y), 'the embedding does not reflect the order')
        m, j = P.meet(x, y), P.join(x, y)
        if m is not None and C.meet(e[x], e[y]) != e[m]:
            return Verdict.fail((x, y), 'the meet of x and y is not preserved')
        if j is not None and C.join(e[x], e[y]) != e[j]:
            return Verdict.fail((x, y), 'the join of x and y is not preserved')
    for x in range(P.size):
        if C.ortho[e[x]] != e[P.inv[x]]:
            return Verdict.fail((x,), 'the involution is not preserved')
    return Verdict.ok()


def _least(L, cone):
    """ The least element of a cone of a lattice, or `None`.
    """
    for m in bits(cone):
        if L.up[m] & cone == cone:
            return m
    return None


def _greatest(L, cone):
    for m in bits(cone):
        if L.down[m] & cone == cone:
            return m
    return None


def is_doubly_dense(X, L):
    """ Whether a subset is involution-closed and doubly dense in a complete lattice: it contains the bounds, it is
    closed under the involution, and every element is the join of the members below it and the meet of the members
    above it.

    Args:
        X (`int` or iterable of `int`): the subset
        L (:class:`~pomlab.order.BoundedInvolutivePoset`): a finite lattice

    Returns:
        :class:`~pomlab.order.Verdict`: holds, or fails with the offending element

    Raises:
        `NotACompleteLattice`: if L is not a lattice
    """
    if not order.is_lattice(L):
        raise NotACompleteLattice('Double density is only defined inside a complete lattice')

    mask = X if isinstance(X, int) else util.mask_of(X)
    for bound in (L.bottom, L.top):
        if not mask >> bound & 1:
            return Verdict.fail((bound,), 'bounds must belong to the subset')
    for x in bits(mask):
        if not mask >> L.inv[x] & 1:
            return Verdict.fail((x,), 'subset is not closed under the involution')
    for a in range(L.size):
        if _least(L, L.upper(L.down[a] & mask)) != a:
            return Verdict.fail((a,), 'a is not the join of the subset elements below it')
        if _greatest(L, L.lower(L.up[a] & mask)) != a:
            return Verdict.fail((a,), 'a is not the meet of the subset elements above it')
    return Verdict.ok()


def _check_budget(P, mode, budget):
    if mode not in (RAW, REDUCED):
        raise ValueError('Unknown quantification mode {!r}, expected {!r} or {!r}'.format(mode, RAW, REDUCED))
    cap = config.default('completion', 'raw_cap' if mode == RAW else 'reduced_cap', budget)
    if P.size > cap:
        raise BudgetExceeded('poset size for {} quantification'.format(mode), P.size, cap)


def _first_witness(func, items, threads):
    """ The first non-`None` result of func over items, in item order.
    """
    threads = config.default('enumerate', 'threads', threads)
    if threads <= 1:
        for item in items:
            found = func(item)
            if found is not None:
                return found
        return None
    return next((found for found in util.ordered_map(func, items, threads) if found is not None), None)


def _members(mask):
    return list(bits(mask))


def _closed_pairs_failure(P, closed):
    """ First closed X ⊊ Y with Y ∩ L(X') = {0}, as a function of X.
    """
    zero = 1 << P.bottom

    def failure(x):
        perp = P.lower(P.image(x))
        for y in closed:
            if y != x and y & x == x and y & perp == zero:
                return x, y
        return None
    return failure


def is_weakly_d_continuous(P, mode = REDUCED, budget = None, threads = None):
    """ Decide weak D-continuity: for all B ≤ C, L(C ∪ B') = {0} implies L(C) ≤ U(B).

    Args:
        P (:class:`~pomlab.order.BoundedInvolutivePoset`): the poset
        mode (`str`): :data:`RAW` to quantify over all subsets B and C ⊆ U(B), :data:`REDUCED` to quantify over the
            closed sets X = LU(B) ⊆ Y = L(C)
        budget (`int`): largest poset size accepted, `None` for the configured value of the mode
        threads (`int`): worker threads over the outer quantifier, `None` for the configured value

    Returns:
        :class:`~pomlab.order.Verdict`: holds, or fails with the subsets B and C

    Raises:
        `BudgetExceeded`: if P is larger than the budget
    """
    _check_budget(P, mode, budget)
    zero = 1 << P.bottom

    if mode == RAW:
        def failure(b):
            ub = P.upper(b)
            join_b = P.lower(ub)
            perp = P.lower(P.image(b))
            for c in submasks(ub):
                meet_c = P.lower(c)
                if meet_c & perp == zero and meet_c & ~join_b:
                    return {'B': _members(b), 'C': _members(c)}
            return None
        found = _first_witness(failure, range(1 << P.size), threads)
    else:
        closed = dm_complete(P).universe
        pair = _first_witness(_closed_pairs_failure(P, closed), closed, threads)
        found = None if pair is None else {'B': _members(pair[0]), 'C': _members(P.upper(pair[1]))}

    if found is None:
        return Verdict.ok()
    return Verdict.fail(found, "B <= C and L(C u B') = {0} but not L(C) <= U(B)")


def satisfies_flp(P, mode = REDUCED, budget = None, threads = None):
    """ Decide (FLP): L(X) ⊊ L(Y) implies L(Y) ∩ LU(X') ≠ {0}.

    In reduced mode X and Y range over closed sets A ⊊ B, and LU(X') is replaced by L(A'), which is equal since
    L(X)' = U(X').

    Args:
        P (:class:`~pomlab.order.BoundedInvolutivePoset`): the poset
        mode (`str`): :data:`RAW` or :data:`REDUCED`
        budget (`int`): largest poset size accepted, `None` for the configured value of the mode
        threads (`int`): worker threads over the outer quantifier, `None` for the configured value

    Returns:
        :class:`~pomlab.order.Verdict`: holds, or fails with the subsets X and Y

    Raises:
        `BudgetExceeded`: if P is larger than the budget
    """
    _check_budget(P, mode, budget)
    zero = 1 << P.bottom

    if mode == RAW:
        lowers = [P.lower(m) for m in range(1 << P.size)]

        def failure(x):
            lx = lowers[x]
            target = P.lower(P.upper(P.image(x)))
            for y, ly in enumerate(lowers):
                if ly != lx and ly & lx == lx and ly & target == zero:
                    return {'X': _members(x), 'Y': _members(y)}
            return None
        found = _first_witness(failure, range(1 << P.size), threads)
    else:
        closed = dm_complete(P).universe
        pair = _first_witness(_closed_pairs_failure(P, closed), closed, threads)
        found = None if pair is None else {'X': _members(pair[0]), 'Y': _members(pair[1])}

    if found is None:
        return Verdict.ok()
    return Verdict.fail(found, "L(X) < L(Y) but L(Y) n LU(X') = {0}")


def completion_is_paraorthomodular(P):
    """ Whether the Dedekind-MacNeille completion of P is paraorthomodular.
    """
    return order.check(dm_complete(P).as_poset(), PosetProperty.PARAORTHOMODULAR)


def cross_validate(P, threads = None):
    """ Decide (WDC) and (FLP) in both modes, and paraorthomodularity of the completion, which must all agree.

    Args:
        P (:class:`~pomlab.order.BoundedInvolutivePoset`): a poset within the raw budget

    Returns:
        :class:`~collections.OrderedDict`: name of each decision to its `bool` outcome
    """
    results = OrderedDict([
        ('wdc_raw', bool(is_weakly_d_continuous(P, RAW, threads = threads))),
        ('wdc_reduced', bool(is_weakly_d_continuous(P, REDUCED, threads = threads))),
        ('flp_raw', bool(satisfies_flp(P, RAW, threads = threads))),
        ('flp_reduced', bool(satisfies_flp(P, REDUCED, threads = threads))),
        ('completion', bool(completion_is_paraorthomodular(P))),
    ])
    if len(set(results.values())) != 1:
        logger.warning('Completion criteria disagree on {!r}: {}'.format(P, dict(results)))
    return results
