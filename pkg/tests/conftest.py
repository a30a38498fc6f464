# -*- coding: utf-8 -*-
#
#       conftest.py
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

from pomlab import serialize, util


def _bundled(name):
    @pytest.fixture(scope = 'session', name = name)
    def loader():
        return serialize.load_fixture(name)
    return loader


b6 = _bundled('b6')
chain2 = _bundled('chain2')
chain3 = _bundled('chain3')
diamond = _bundled('diamond')
fig1 = _bundled('fig1')
fig2 = _bundled('fig2')
fig3 = _bundled('fig3')
fig4 = _bundled('fig4')
fig5 = _bundled('fig5')


@pytest.fixture
def fixture_path():
    """ Path of a bundled structure document, by name.
    """
    return util.get_fixture_path
