# -*- coding: utf-8 -*-
#
#       __init__.py
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

''' A finite-model laboratory for paraorthomodular posets, involutive directoids, effect algebras
and Dedekind-MacNeille completions.
'''

#
# DON'T IMPORT ANYTHING HERE (OR YOU WILL BREAK setup.py)
#

__version__ = '0.3.0'
__author__ = '''2026 The pomlab authors
'''

__all__ = ['canonical', 'completion', 'config', 'directoid', 'effect', 'enumeration', 'forbidden', 'hasse', 'order',
           'reproduce', 'serialize', 'terms', 'util']
