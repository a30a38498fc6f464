# -*- coding: utf-8 -*-
#
#       reproduce.py
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
:mod:`pomlab.reproduce` -- End-to-end scenarios on the bundled fixtures
-----------------------------------------------------------------------

Each scenario checks a list of expectations about the bundled structures and prints one line per expectation. A
scenario succeeds when every expectation is met.
"""

from __future__ import print_function, unicode_literals

import logging
logger = logging.getLogger(__name__)

import json
import sys
from collections import namedtuple, OrderedDict

from pomlab import canonical, completion, config, directoid, effect, enumeration, forbidden, order, serialize
from pomlab.directoid import AssignmentMode, AssignmentPolicy, DirectoidClass, LEAST
from pomlab.order import PosetProperty


#: The bundled posets checked by the completion scenario
FIXTURE_POSETS = ('b6', 'chain2', 'chain3', 'diamond', 'fig1', 'fig2', 'fig3', 'fig4', 'fig5')

#: One checked statement of a scenario
Expectation = namedtuple('Expectation', 'scenario description holds detail')


def _expect(scenario, description, holds, detail = ''):
    return Expectation(scenario, description, bool(holds), detail)


def _witness_labels(P, verdict):
    return tuple(P.labels[e] for e in verdict.witness.values()) if not verdict else ()


def fig1():
    P = serialize.load_fixture('fig1')
    a, b, c = (P.element(l) for l in 'abc')
    cone = P.lower(P.upper(1 << a | 1 << b) | 1 << c)
    distributive = order.check(P, PosetProperty.DISTRIBUTIVE)
    return [
        _expect('fig1', 'paraorthomodular', order.check(P, PosetProperty.PARAORTHOMODULAR)),
        _expect('fig1', 'modular', order.check(P, PosetProperty.MODULAR)),
        _expect('fig1', 'not distributive', not distributive, distributive.describe(P.labels)),
        _expect('fig1', 'L(U(a,b),c) = {0,c}', P.label_set(cone) == '{0,c}', P.label_set(cone)),
    ]


def fig2():
    P = serialize.load_fixture('fig2')
    return [
        _expect('fig2', 'paraorthomodular', order.check(P, PosetProperty.PARAORTHOMODULAR)),
        _expect('fig2', 'distributive', order.check(P, PosetProperty.DISTRIBUTIVE)),
        _expect('fig2', 'no B6 strong subposet', forbidden.find_b6_witness(P) is None),
        _expect('fig2', '(FLP) holds', completion.satisfies_flp(P)),
    ]


def fig3():
    P = serialize.load_fixture('fig3')
    modular = order.check(P, PosetProperty.MODULAR)
    witness = modular.witness or {}
    completed = completion.dm_complete(P)
    return [
        _expect('fig3', 'paraorthomodular', order.check(P, PosetProperty.PARAORTHOMODULAR)),
        _expect('fig3', "not modular, with x=a and z=c'",
                not modular and P.labels[witness['x']] == 'a' and P.labels[witness['z']] == "c'",
                modular.describe(P.labels)),
        _expect('fig3', 'completion has more than 10 elements', completed.size > 10, str(completed.size)),
    ]


def fig4():
    P = serialize.load_fixture('fig4')
    para = order.check(P, PosetProperty.PARAORTHOMODULAR)
    witness = forbidden.find_b6_witness(P)
    return [
        _expect('fig4', 'not paraorthomodular, with witness (a,b)',
                not para and _witness_labels(P, para) == ('a', 'b'), para.describe(P.labels)),
        _expect('fig4', 'B6 witness with identity role map',
                witness is not None and all(P.labels[witness[r]] == r for r in forbidden.ROLES), repr(witness)),
    ]


def fig5():
    P = serialize.load_fixture('fig5')
    policy = AssignmentPolicy(AssignmentMode.ARBITRARY, LEAST, honour_meets = False)
    D = next(directoid.assigned_directoids(P, policy))
    sub = directoid.generated_subdirectoid(D, [P.element('a'), P.element('b')])
    sub_weak = directoid.para_directoid_weak(sub)
    b6 = serialize.load_fixture('b6')
    return [
        _expect('fig5', 'the assigned directoid induces the poset', directoid.induced_poset(D) == P),
        _expect('fig5', 'parent satisfies q4, q5 and q6',
                directoid.check_class(D, DirectoidClass.INVOLUTIVE45) and directoid.check_class(D, DirectoidClass.COND6)),
        _expect('fig5', 'parent is a paraorthomodular directoid', directoid.para_directoid_weak(D)),
        _expect('fig5', 'subdirectoid generated by a, b is not', not sub_weak, sub_weak.describe(sub.labels)),
        _expect('fig5', 'subdirectoid induces B6',
                canonical.is_isomorphic(directoid.induced_poset(sub), b6), ' '.join(sub.labels)),
    ]


def corollary_dm(n_max = 5):
    """ Completion paraorthomodular, (WDC) and (FLP) agree on every fixture and every poset of size up to n_max.
    """
    raw_cap = config.default('completion', 'raw_cap')
    found = []
    for name in FIXTURE_POSETS:
        P = serialize.load_fixture(name)
        if P.size <= raw_cap:
            results = completion.cross_validate(P)
        else:
            results = OrderedDict([
                ('wdc_reduced', bool(completion.is_weakly_d_continuous(P))),
                ('flp_reduced', bool(completion.satisfies_flp(P))),
                ('completion', bool(completion.completion_is_paraorthomodular(P))),
            ])
        found.append(_expect('corollary-dm', '{}: criteria agree'.format(name), len(set(results.values())) == 1,
                             ', '.join('{}={}'.format(k, v) for k, v in results.items())))

    for n in range(1, n_max + 1):
        disagreements = [P for P in enumeration.enumerate_posets(n) if len(set(completion.cross_validate(P).values())) > 1]
        found.append(_expect('corollary-dm', 'size {}: criteria agree on every poset'.format(n), not disagreements,
                             repr(disagreements[:1])))
    return found


def roundtrip_oa(n_max = 6):
    """ Every orthoalgebra of size up to n_max is recovered from its assigned ortho-directoid.
    """
    found = []
    for n in range(1, n_max + 1):
        count, failures = 0, []
        for A in enumeration.enumerate_orthoalgebras(n):
            count += 1
            D = next(effect.directoids_from_orthoalgebra(A))
            if not directoid.check_class(D, DirectoidClass.ORTHO_DIRECTOID):
                failures.append('not an ortho-directoid')
            elif effect.orthoalgebra_from_ortho_directoid(D) != A:
                failures.append('round trip changes the sums')
            elif bool(directoid.check_axioms(D, ('om2',))) != bool(effect.oplus_is_join(A)):
                failures.append('axiom 2 does not match orthomodularity')
        found.append(_expect('roundtrip-oa', 'size {}: {} orthoalgebras round-trip'.format(n, count), not failures,
                             '; '.join(failures)))
    return found


#: Scenario names to the functions building their expectations
SCENARIOS = OrderedDict([
    ('fig1', fig1),
    ('fig2', fig2),
    ('fig3', fig3),
    ('fig4', fig4),
    ('fig5', fig5),
    ('corollary-dm', corollary_dm),
    ('roundtrip-oa', roundtrip_oa),
])


def expectations(name):
    """ Evaluate the expectations of a scenario, or of every scenario for "all".

    Returns:
        `list` of :class:`Expectation`

    Raises:
        `KeyError`: for an unknown scenario
    """
    if name == 'all':
        return [e for scenario in SCENARIOS.values() for e in scenario()]
    if name not in SCENARIOS:
        raise KeyError('Unknown scenario {!r}, expected one of {}, all'.format(name, ', '.join(SCENARIOS)))
    return SCENARIOS[name]()


def run(name, as_json = False, out = None):
    """ Run a scenario and report each expectation.

    Args:
        name (`str`): a scenario name, or "all"
        as_json (`bool`): print one JSON object per expectation instead of text
        out (file object): where to print, standard output by default

    Returns:
        `bool`: whether every expectation holds
    """
    out = sys.stdout if out is None else out
    results = expectations(name)
    for e in results:
        if as_json:
            print(json.dumps(e._asdict()), file = out)
        else:
            print('{:4} {}: {}{}'.format('ok' if e.holds else 'FAIL', e.scenario, e.description,
                                         ' ({})'.format(e.detail) if e.detail and not e.holds else ''), file = out)

    success = all(e.holds for e in results)
    logger.info('Scenario {}: {} of {} expectations met'.format(name, sum(e.holds for e in results), len(results)))
    return success
