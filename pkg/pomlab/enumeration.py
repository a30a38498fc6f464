# -*- coding: utf-8 -*-
#
#       enumeration.py
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
:mod:`pomlab.enumeration` -- Exhaustive generation up to ortho-isomorphism
--------------------------------------------------------------------------

Bounded posets with antitone involution of size n are grown from smaller ones. Removing a pair {p, p'} of
non-fixed elements other than 0 and 1 leaves a bounded poset with antitone involution of size n - 2, and removing a
fixed point leaves one of size n - 1, so every structure of size n extends some structure of a smaller level:

- a pair p, p' is added below an up-closed set U and above a down-closed set D of the old elements, with p' placed
  accordingly below D' and above U', and p, p' either incomparable or comparable one way,
- a fixed point q is added above a down-closed set D and below D'.

Candidates are closed transitively, kept when antisymmetric, antitone and leaving the old order untouched, and
deduplicated by canonical form. Each level is sorted by canonical code, which makes every stream deterministic.
"""

from __future__ import print_function, unicode_literals

import logging
logger = logging.getLogger(__name__)

import itertools
from collections import OrderedDict
import threading

import numpy as np

from pomlab import canonical, config, directoid, effect, order, util
from pomlab.directoid import AssignmentMode, AssignmentPolicy, DirectoidClass, ALL
from pomlab.effect import UNDEFINED
from pomlab.order import BoundedInvolutivePoset, PosetProperty, StructureError
from pomlab.util import CapExceeded, bits, submasks


#: Largest size accepted by the labelled brute-force oracle
NAIVE_CAP = 6

#: Marker of an orthogonal pair whose sum is not chosen yet
_UNSET = -2

#: Enumerated levels of posets, by size
_levels = {}
_levels_lock = threading.Lock()


def _default_labels(n):
    """ Labels 0 and 1 for the bounds and letters for the other elements of a canonical structure.
    """
    if n == 1:
        return ('0',)
    return ('0',) + tuple('abcdefghijklmnopqrstuvwxyz'[i] for i in range(n - 2)) + ('1',)


def _trivial():
    return BoundedInvolutivePoset([[True]], [0], 0, 0, ('0',))


def _closed_sets(Q, inner, direction):
    """ The down-closed (or up-closed) subsets of the inner elements of Q, as bit vectors.
    """
    cones = Q.down if direction == order.LOWER else Q.up
    return [s for s in submasks(inner) if all(cones[x] & inner & ~s == 0 for x in bits(s))]


def _accept(Q, rel, inv):
    """ Close a candidate relation, and return the poset if it extends Q with an antitone involution.
    """
    m = Q.size
    closed = order.transitive_closure(rel)
    if not np.array_equal(closed[:m, :m], Q.le):
        return None
    if (closed & closed.T).sum() != len(closed):
        return None
    perm = np.array(inv)
    if not np.array_equal(closed, closed[np.ix_(perm, perm)].T):
        return None
    return BoundedInvolutivePoset(closed, inv, Q.bottom, Q.top)


def _base_relation(Q, extra):
    n = Q.size + extra
    rel = np.zeros((n, n), dtype = bool)
    rel[:Q.size, :Q.size] = Q.le
    rel[Q.bottom, :] = True
    rel[:, Q.top] = True
    return rel


def _extend_with_pair(Q):
    """ Every extension of Q by a pair p, p' of new elements.
    """
    m = Q.size
    p, q = m, m + 1
    inner = Q.full & ~(1 << Q.bottom) & ~(1 << Q.top)
    inv = list(Q.inv) + [q, p]
    downs, ups = _closed_sets(Q, inner, order.LOWER), _closed_sets(Q, inner, order.UPPER)

    found = []
    for d in downs:
        above_all = inner
        for x in bits(d):
            above_all &= Q.up[x]
        for u in ups:
            if u & d or u & ~above_all:
                continue
            for relation in (None, (p, q), (q, p)):
                rel = _base_relation(Q, 2)
                for x in bits(d):
                    rel[x, p] = rel[q, Q.inv[x]] = True
                for x in bits(u):
                    rel[p, x] = rel[Q.inv[x], q] = True
                if relation is not None:
                    rel[relation] = True
                candidate = _accept(Q, rel, inv)
                if candidate is not None:
                    found.append(candidate)
    return found


def _extend_with_fixed_point(Q):
    """ Every extension of Q by a new element q with q' = q.
    """
    m = Q.size
    inner = Q.full & ~(1 << Q.bottom) & ~(1 << Q.top)
    inv = list(Q.inv) + [m]

    found = []
    for d in _closed_sets(Q, inner, order.LOWER):
        u = Q.image(d)
        rel = _base_relation(Q, 1)
        for x in bits(d):
            rel[x, m] = True
        for x in bits(u):
            rel[m, x] = True
        candidate = _accept(Q, rel, inv)
        if candidate is not None:
            found.append(candidate)
    return found


def _extensions(item):
    Q, step = item
    return _extend_with_pair(Q) if step == 2 else _extend_with_fixed_point(Q)


def _build_level(n, threads):
    if n == 1:
        return (_trivial(),)
    elif n == 2:
        return (BoundedInvolutivePoset([[True, True], [False, True]], (1, 0), 0, 1, _default_labels(2)),)

    items = []
    if n - 2 >= 2:
        items.extend((Q, 2) for Q in poset_level(n - 2, threads))
    items.extend((Q, 1) for Q in poset_level(n - 1, threads))

    candidates = 0
    classes = {}
    for batch in _ordered_map(_extensions, items, threads):
        for P in batch:
            candidates += 1
            form, relabelled = canonical.canonicalize(P)
            if form not in classes:
                classes[form] = BoundedInvolutivePoset(relabelled.le, relabelled.inv, relabelled.bottom,
                                                       relabelled.top, _default_labels(n))

    logger.debug('Level {}: {} candidates, {} classes'.format(n, candidates, len(classes)))
    return tuple(classes[form] for form in sorted(classes, key = lambda f: f.code))


def _ordered_map(func, items, threads):
    return util.ordered_map(func, items, config.default('enumerate', 'threads', threads))


def poset_level(n, threads = None):
    """ All bounded posets with antitone involution of size n, one per ortho-isomorphism class, unfiltered.

    Levels are computed once and kept for the lifetime of the process.

    Args:
        n (`int`): the size
        threads (`int`): worker threads over the structures of the previous levels, `None` for the configured value

    Returns:
        `tuple` of :class:`~pomlab.order.BoundedInvolutivePoset`: the canonical representatives, in canonical order
    """
    with _levels_lock:
        if n in _levels:
            return _levels[n]
    level = _build_level(n, threads)
    with _levels_lock:
        return _levels.setdefault(n, level)


def _check_size(n, cap, option):
    cap = config.default('enumerate', option, cap)
    if n < 1:
        raise ValueError('Structures have at least one element, got n = {}'.format(n))
    if n > cap:
        raise CapExceeded('n', n, cap)


def enumerate_posets(n, filters = (), cap = None, threads = None):
    """ Bounded posets with antitone involution of size n, up to ortho-isomorphism.

    Args:
        n (`int`): the size
        filters (iterable of :class:`~pomlab.order.PosetProperty` or `str`): properties every result satisfies
        cap (`int`): largest accepted size, `None` for the configured value
        threads (`int`): worker threads, `None` for the configured value

    Yields:
        :class:`~pomlab.order.BoundedInvolutivePoset`: one representative per class, in canonical order, with 0 first
        and 1 last

    Raises:
        :class:`~pomlab.util.CapExceeded`: if n is over the cap
    """
    _check_size(n, cap, 'poset_cap')
    filters = [PosetProperty.parse(f) for f in filters]
    for P in poset_level(n, threads):
        if all(order.check(P, f) for f in filters):
            yield P


def _naive_involutions(elements):
    if not elements:
        yield {}
        return
    first, rest = elements[0], elements[1:]
    for partner in elements:
        remaining = [x for x in rest if x != partner]
        for inv in _naive_involutions(remaining):
            inv = dict(inv)
            inv[first], inv[partner] = partner, first
            yield inv


def _naive_code(le, inv, perm):
    back = np.argsort(perm)
    return (np.asarray(perm)[np.asarray(inv)[back]].tobytes(), le[np.ix_(back, back)].tobytes())


def naive_poset_count(n, filters = ()):
    """ Count bounded posets with antitone involution by brute force over labelled structures.

    0 and 1 are the elements 0 and n - 1; every involution of the others and every relation among them is tried,
    and isomorphism classes are told apart by their least encoding over all permutations of the inner elements.
    This shares no code with the canonical forms, and serves as an independent oracle for small sizes.

    Args:
        n (`int`): the size, at most :data:`NAIVE_CAP`
        filters (iterable of :class:`~pomlab.order.PosetProperty` or `str`): properties to count

    Returns:
        `int`: the number of classes satisfying every filter
    """
    if not 1 <= n <= NAIVE_CAP:
        raise ValueError('The brute-force oracle handles sizes 1 to {}, got {}'.format(NAIVE_CAP, n))
    filters = [PosetProperty.parse(f) for f in filters]
    if n == 1:
        return int(all(order.check(_trivial(), f) for f in filters))

    inner = list(range(1, n - 1))
    pairs = list(itertools.permutations(inner, 2))
    perms = [[0] + list(p) + [n - 1] for p in itertools.permutations(inner)]
    classes = {}

    for partial in _naive_involutions(inner):
        inv = [n - 1] + [partial[x] for x in inner] + [0]
        for chosen in itertools.product((False, True), repeat = len(pairs)):
            le = np.eye(n, dtype = bool)
            le[0, :] = le[:, n - 1] = True
            for (x, y), on in zip(pairs, chosen):
                le[x, y] = on
            ints = le.astype(np.int64)
            if ((ints @ ints > 0) & ~le).any() or (le & le.T).sum() != n:
                continue
            if not np.array_equal(le, le[np.ix_(inv, inv)].T):
                continue
            code = min(_naive_code(le, inv, perm) for perm in perms)
            if code not in classes:
                classes[code] = BoundedInvolutivePoset(le, inv, 0, n - 1)

    return sum(1 for P in classes.values() if all(order.check(P, f) for f in filters))


def enumerate_directoids(P, policy = None):
    """ The directoids assigned to P under a policy, one per ortho-isomorphism class.

    Args:
        P (:class:`~pomlab.order.BoundedInvolutivePoset`): the poset
        policy (:class:`~pomlab.directoid.AssignmentPolicy`): the assignment rule, `None` for every arbitrary
            assignment honouring existing meets

    Yields:
        :class:`~pomlab.directoid.InvolutiveDirectoid`: the directoids, in order of first assignment

    Raises:
        :class:`~pomlab.util.CapExceeded`: if the fan-out is over the cap
    """
    policy = AssignmentPolicy(AssignmentMode.ARBITRARY, ALL) if policy is None else policy
    seen = set()
    for D in directoid.assigned_directoids(P, policy):
        form = canonical.canonical_form(D)
        if form not in seen:
            seen.add(form)
            yield D


def enumerate_involutive_directoids(n, policy = None, filters = (), cap = None, threads = None):
    """ Bounded commutative directoids with antitone involution of size n, up to ortho-isomorphism.

    Every such directoid is an assignment of its induced poset choosing x ⊓ y anywhere in L(x, y), so the default
    policy ranges over all of them.

    Args:
        n (`int`): the size
        policy (:class:`~pomlab.directoid.AssignmentPolicy`): the assignment rule, `None` for every assignment
        filters (iterable of :class:`~pomlab.order.PosetProperty` or `str`): properties of the induced posets
        cap (`int`): largest accepted size, `None` for the configured value
        threads (`int`): worker threads, `None` for the configured value

    Yields:
        :class:`~pomlab.directoid.InvolutiveDirectoid`: the directoids, grouped by induced poset
    """
    policy = AssignmentPolicy(AssignmentMode.ARBITRARY, ALL, honour_meets = False) if policy is None else policy
    for P in enumerate_posets(n, filters, cap, threads):
        for D in enumerate_directoids(P, policy):
            yield D


def enumerate_ortho_directoids(n, cap = None, threads = None):
    """ Ortho-directoids of size n, up to ortho-isomorphism.

    Ortho-directoids induce orthoposets, so only orthoposets are assigned.
    """
    for D in enumerate_involutive_directoids(n, filters = (PosetProperty.ORTHOPOSET,), cap = cap, threads = threads):
        if directoid.check_class(D, DirectoidClass.ORTHO_DIRECTOID):
            yield D


def _orthogonal_domains(P):
    """ Admissible sums of each orthogonal pair (a, b), a ≤ b as indices.
    """
    domains = {}
    for a, b in itertools.combinations_with_replacement(range(P.size), 2):
        if not P.le[a, P.inv[b]]:
            continue
        if a == P.bottom:
            domains[a, b] = {b}
        elif b == P.bottom:
            domains[a, b] = {a}
        elif b == P.inv[a]:
            domains[a, b] = {P.top}
        else:
            domains[a, b] = set(bits(P.up[a] & P.up[b])) - {P.top, a, b}
    return domains


def _assign(table, domains, inv, a, b, c):
    """ Set a ⊕ b = c and every sum it forces, or return `False` on a contradiction.

    a ⊕ b = c forces a ⊕ c' = b' and b ⊕ c' = a'.
    """
    stack = [(a, b, c)]
    while stack:
        a, b, c = stack.pop()
        current = table[a, b]
        if current == c:
            continue
        if current != _UNSET or c not in domains.get((min(a, b), max(a, b)), ()):
            return False
        table[a, b] = table[b, a] = c
        stack.append((a, inv[c], inv[b]))
        stack.append((b, inv[c], inv[a]))
    return True


def _complete_tables(table, domains, inv):
    open_pairs = [(len(values), pair) for pair, values in domains.items() if table[pair] == _UNSET]
    if not open_pairs:
        yield table
        return

    _, (a, b) = min(open_pairs)
    for c in sorted(domains[a, b]):
        attempt = table.copy()
        if _assign(attempt, domains, inv, a, b, c):
            for complete in _complete_tables(attempt, domains, inv):
                yield complete


def effect_algebras_on(P):
    """ The effect algebras whose induced poset with supplement is P, one per ortho-isomorphism class.

    x ⊕ y is defined exactly when x ≤ y', and lies strictly above both summands and below 1 unless one of them is
    0 or they are supplements. Partial tables are completed by backtracking with propagation of forced sums; each
    complete table is validated against the axioms and against P.

    Args:
        P (:class:`~pomlab.order.BoundedInvolutivePoset`): the poset

    Returns:
        `list` of :class:`~pomlab.effect.EffectAlgebra`: the effect algebras, in canonical order
    """
    domains = _orthogonal_domains(P)
    table = np.full((P.size, P.size), UNDEFINED, dtype = np.int64)
    for a, b in domains:
        table[a, b] = table[b, a] = _UNSET

    for (a, b), values in sorted(domains.items()):
        if len(values) == 1 and not _assign(table, domains, P.inv, a, b, next(iter(values))):
            return []

    found = {}
    for complete in _complete_tables(table, domains, P.inv):
        try:
            A = effect.validate_effect_algebra(complete, P.bottom, P.top, P.labels)
        except StructureError:
            continue
        induced = effect.induced_order(A)
        if induced.inv != P.inv or not np.array_equal(induced.le, P.le):
            continue
        found.setdefault(canonical.canonical_form(A), A)
    return [found[form] for form in sorted(found, key = lambda f: f.code)]


def enumerate_effect_algebras(n, cap = None, threads = None):
    """ Effect algebras of size n, up to ortho-isomorphism.

    Every effect algebra induces a paraorthomodular poset, so only those are searched.

    Args:
        n (`int`): the size
        cap (`int`): largest accepted size, `None` for the configured value
        threads (`int`): worker threads, `None` for the configured value

    Yields:
        :class:`~pomlab.effect.EffectAlgebra`: the effect algebras, grouped by induced poset

    Raises:
        :class:`~pomlab.util.CapExceeded`: if n is over the cap
    """
    _check_size(n, cap, 'effect_algebra_cap')
    posets = list(enumerate_posets(n, (PosetProperty.PARAORTHOMODULAR,), max(n, 1), threads))
    for batch in _ordered_map(effect_algebras_on, posets, threads):
        for A in batch:
            yield A


def enumerate_orthoalgebras(n, cap = None, threads = None):
    """ Orthoalgebras of size n, up to ortho-isomorphism: the effect algebras on orthoposets.
    """
    _check_size(n, cap, 'effect_algebra_cap')
    posets = list(enumerate_posets(n, (PosetProperty.ORTHOPOSET, PosetProperty.PARAORTHOMODULAR), max(n, 1), threads))
    for batch in _ordered_map(effect_algebras_on, posets, threads):
        for A in batch:
            yield A


def parse_properties(names):
    """ Parse a mixed list of poset properties and directoid classes.

    Returns:
        `tuple`: ('poset' or 'directoid' or `None`, `list` of parsed properties)

    Raises:
        `ValueError`: on an unknown name, or when poset properties and directoid classes are mixed
    """
    kinds, parsed = set(), []
    for name in names:
        try:
            parsed.append(PosetProperty.parse(name))
            kinds.add('poset')
        except ValueError:
            try:
                parsed.append(DirectoidClass.parse(name))
                kinds.add('directoid')
            except ValueError:
                raise ValueError('Unknown property or class {!r}'.format(name))
    if len(kinds) > 1:
        raise ValueError('Poset properties and directoid classes can not be mixed')
    return (kinds.pop() if kinds else None), parsed


def search_counterexample(antecedent, consequent, n_max, cap = None, policy = None, threads = None):
    """ The smallest structure satisfying every antecedent property but not every consequent property.

    Poset properties range over :func:`enumerate_posets`, directoid classes over
    :func:`enumerate_involutive_directoids` with the given policy.

    Args:
        antecedent (iterable of `str` or properties): what the counterexample satisfies
        consequent (iterable of `str` or properties): what it fails
        n_max (`int`): largest size searched
        cap (`int`): largest accepted size, `None` for the configured value
        policy (:class:`~pomlab.directoid.AssignmentPolicy`): assignments searched for directoid classes
        threads (`int`): worker threads, `None` for the configured value

    Returns:
        :class:`~pomlab.order.BoundedInvolutivePoset` or :class:`~pomlab.directoid.InvolutiveDirectoid`: the first
        counterexample in order of size then canonical order, or `None`

    Raises:
        :class:`~pomlab.util.CapExceeded`: if n_max is over the cap
    """
    antecedent_kind, antecedent = parse_properties(antecedent)
    consequent_kind, consequent = parse_properties(consequent)
    if None not in (antecedent_kind, consequent_kind) and antecedent_kind != consequent_kind:
        raise ValueError('Poset properties and directoid classes can not be mixed')
    kind = antecedent_kind or consequent_kind or 'poset'
    _check_size(n_max, cap, 'poset_cap')

    for n in range(1, n_max + 1):
        if kind == 'poset':
            candidates = enumerate_posets(n, antecedent, n_max, threads)
            holds = order.check
        else:
            candidates = (D for D in enumerate_involutive_directoids(n, policy, (), n_max, threads)
                          if all(directoid.check_class(D, c) for c in antecedent))
            holds = directoid.check_class

        for S in candidates:
            if not all(holds(S, c) for c in consequent):
                logger.info('Counterexample of size {} found'.format(n))
                return S
    return None


def summary_table(n_max, properties = (), cap = None, threads = None):
    """ Count the posets of each size, in total and satisfying each property.

    Args:
        n_max (`int`): largest size counted
        properties (iterable of :class:`~pomlab.order.PosetProperty` or `str`): the properties, `()` for all of them

    Returns:
        `list` of :class:`~collections.OrderedDict`: rows with keys n, class and count
    """
    properties = [PosetProperty.parse(p) for p in properties] or list(PosetProperty)
    _check_size(n_max, cap, 'poset_cap')
    rows = []
    for n in range(1, n_max + 1):
        level = list(enumerate_posets(n, (), n_max, threads))
        rows.append(OrderedDict([('n', n), ('class', 'all'), ('count', len(level))]))
        for prop in properties:
            count = sum(1 for P in level if order.check(P, prop))
            rows.append(OrderedDict([('n', n), ('class', prop.value), ('count', count)]))
    logger.info('Counted posets up to size {}'.format(n_max))
    return rows
