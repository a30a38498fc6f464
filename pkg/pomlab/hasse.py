# -*- coding: utf-8 -*-
#
#       hasse.py
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
:mod:`pomlab.hasse` -- Hasse diagrams in DOT
--------------------------------------------

Diagrams are drawn bottom-up: covering pairs are solid edges, and each pair {x, x'} with x ≠ x' is joined by a
dashed, undirected edge which does not take part in the ranking.
"""

from __future__ import print_function, unicode_literals

import logging
logger = logging.getLogger(__name__)

import io

from graphviz import Digraph

from pomlab import directoid
from pomlab.directoid import InvolutiveDirectoid
from pomlab.effect import EffectAlgebra, induced_order


def as_poset(S):
    """ The poset underlying a structure: the induced order of a directoid or effect algebra, a poset itself.

    Args:
        S: a poset, directoid or effect algebra

    Returns:
        :class:`~pomlab.order.BoundedInvolutivePoset`: the poset to draw or check
    """
    if isinstance(S, InvolutiveDirectoid):
        return directoid.induced_poset(S)
    elif isinstance(S, EffectAlgebra):
        return induced_order(S)
    return S


def to_dot(S, name = 'hasse', involution = True, highlight = ()):
    """ Draw the Hasse diagram of a structure, or of the poset it induces.

    Args:
        S: a poset, directoid or effect algebra
        name (`str`): the graph name
        involution (`bool`): whether to draw the involution edges
        highlight (iterable of `int`): elements drawn filled, e.g. a witness

    Returns:
        :class:`~graphviz.Digraph`: the diagram
    """
    P = as_poset(S)
    highlight = set(highlight)

    dot = Digraph(name = name, graph_attr = {'rankdir': 'BT'}, node_attr = {'shape': 'circle', 'fontsize': '10'})
    for x in range(P.size):
        if x in highlight:
            dot.node(str(x), P.labels[x], style = 'filled', fillcolor = 'lightgrey')
        else:
            dot.node(str(x), P.labels[x])

    for x, y in P.covers():
        dot.edge(str(x), str(y))

    if involution:
        for x in range(P.size):
            if x < P.inv[x]:
                dot.edge(str(x), str(P.inv[x]), style = 'dashed', dir = 'none', constraint = 'false')

    return dot


def write_dot(S, path, **kwargs):
    """ Write the DOT source of a diagram, see :func:`to_dot` for the arguments.
    """
    with io.open(path, 'w', encoding = 'utf-8') as f:
        f.write(to_dot(S, **kwargs).source)
    logger.debug('Hasse diagram written to {}'.format(path))
