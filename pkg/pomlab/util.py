# -*- coding: utf-8 -*-
#
#       util.py
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
:mod:`pomlab.util` -- various utility functions
-----------------------------------------------

Resource and user paths, the bit-vector helpers used for subsets of a finite universe,
and the order-preserving thread map used by the exhaustive sweeps.
"""

from __future__ import print_function, unicode_literals

import logging
logger = logging.getLogger(__name__)

import importlib
import os, sys
from concurrent.futures import ThreadPoolExecutor

try:
    from importlib import metadata as importlib_metadata
    from importlib import resources as importlib_resources
except ImportError:
    importlib_metadata = None
    importlib_resources = None


IS_MAC_OS = sys.platform == 'darwin'
IS_WINDOWS = os.name == 'nt'


class CapExceeded(RuntimeError):
    """ Raised when an enumeration size or an assignment fan-out goes over its configured cap.

    Args:
        what (`str`): what is being capped
        value (`int`): the requested value
        cap (`int`): the configured cap
    """
    def __init__(self, what, value, cap):
        super(CapExceeded, self).__init__('{} = {} exceeds the configured cap of {}'.format(what, value, cap))
        #: `str` naming the capped quantity
        self.what = what
        #: `int` requested value
        self.value = value
        #: `int` configured cap
        self.cap = cap


def get_pomlab_meta():
    """ Get metadata (version, etc) from pomlab's __init__.py, with the installed distribution's version if any.
    """
    module = importlib.import_module('pomlab.__init__')
    if importlib_metadata is None:
        return module

    try:
        module.__version__ = importlib_metadata.version('pomlab')
    except importlib_metadata.PackageNotFoundError:
        pass

    return module


def __get_resource_path(*path_parts):
    """ Return the resource path based on whether its frozen or not.
    Paths parts given should be relative to the pomlab package dir.

    Args:
        name (`tuple` of `str`): The directories and filename that constitute the path
        to the resource, relative to the pomlab distribution

    Returns:
        `str`: The path to the resource
    """
    if getattr(sys, 'frozen', False):
        return os.path.join(os.path.dirname(sys.executable), *path_parts)
    elif importlib_resources is not None and hasattr(importlib_resources, 'files'):
        return str(importlib_resources.files('pomlab').joinpath(*path_parts))
    else:
        return os.path.join(os.path.dirname(os.path.abspath(__file__)), *path_parts)


def __get_resource_list(*path_parts):
    """ Return the list of elements in a resource directory.

    Args:
        name (`tuple` of `str`): The directories that constitute the path to the resource,
        relative to the pomlab distribution

    Returns:
        `list` of `str`: The names of the entries in the directory, sorted
    """
    return sorted(os.listdir(__get_resource_path(*path_parts)))


def get_default_config():
    """ Returns the path to the configuration file containing the defaults.

    Returns:
        `str`: The path to the bundled defaults.
    """
    return __get_resource_path('share', 'defaults.conf')


def get_axiom_catalog():
    """ Returns the path to the bundled catalog of named identities and quasi-identities.

    Returns:
        `str`: The path to the catalog file
    """
    return __get_resource_path('share', 'axioms.txt')


def get_fixture_path(name):
    """ Returns the path of a bundled structure fixture.

    Args:
        name (`str`): The fixture name, with or without its `.json` extension

    Returns:
        `str`: The full path to the fixture
    """
    if not name.endswith('.json'):
        name += '.json'
    return __get_resource_path('share', 'fixtures', name)


def list_fixtures():
    """ List the bundled structure fixtures.

    Returns:
        `list` of `str`: The fixture names, without extension
    """
    return [os.path.splitext(f)[0] for f in __get_resource_list('share', 'fixtures') if f.endswith('.json')]


def get_user_config():
    """ Returns the path to the configuration file in the user config directory.

    Returns:
        `str`: path to the user configuration file.
    """
    if IS_WINDOWS:
        base_dir = os.getenv('APPDATA')
    elif IS_MAC_OS:
        base_dir = os.path.expanduser('~/Library/Preferences')
    else:
        base_dir = os.getenv('XDG_CONFIG_HOME', os.path.expanduser('~/.config'))

    return os.path.join(base_dir, 'pomlab' + ('.ini' if IS_WINDOWS else ''))


def get_log_path():
    """ Returns the appropriate path to the log file in the user app dirs.

    Returns:
        `str`: path to the log file.
    """
    if IS_WINDOWS:
        base_dir = os.getenv('LOCALAPPDATA', os.getenv('APPDATA'))
    elif IS_MAC_OS:
        base_dir = os.path.expanduser('~/Library/Logs')
    else:
        base_dir = os.getenv('XDG_CACHE_HOME', os.path.expanduser('~/.cache'))
        if not os.path.isdir(base_dir):
            os.makedirs(base_dir)

    return os.path.join(base_dir, 'pomlab.log')


# Subsets of a universe [0, n) are python integers used as bit vectors: bit i set iff element i belongs.

def mask_of(elements):
    """ Build the bit vector of an iterable of element indices.

    Args:
        elements (iterable of `int`): the members

    Returns:
        `int`: the bit vector
    """
    mask = 0
    for x in elements:
        mask |= 1 << int(x)
    return mask


def bits(mask):
    """ Iterate the members of a bit vector in increasing order.

    Args:
        mask (`int`): the bit vector

    Yields:
        `int`: the members
    """
    mask = int(mask)
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask):
    """ Number of members of a bit vector.
    """
    return bin(mask).count('1')


def submasks(mask):
    """ Iterate every subset of a bit vector, in increasing numeric order (the empty set first).

    Args:
        mask (`int`): the bit vector

    Yields:
        `int`: every sub-bit-vector
    """
    members = list(bits(mask))
    for k in range(1 << len(members)):
        yield mask_of(members[i] for i in range(len(members)) if k >> i & 1)


def ordered_map(func, items, threads = 1):
    """ Map `func` over `items`, in worker threads if asked to, returning results in input order.

    Args:
        func (`function`): the function to apply
        items (iterable): the inputs
        threads (`int`): number of worker threads, 1 or less meaning no thread pool

    Returns:
        `list`: the results, in the order of `items`
    """
    items = list(items)
    if threads is None or threads <= 1 or len(items) <= 1:
        return [func(item) for item in items]

    with ThreadPoolExecutor(max_workers = threads) as pool:
        return list(pool.map(func, items))


##
# Local Variables:
# mode: python
# indent-tabs-mode: nil
# py-indent-offset: 4
# fill-column: 80
# end:
