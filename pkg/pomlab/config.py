# -*- coding: utf-8 -*-
#
#       config.py
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
:mod:`pomlab.config` -- Configuration
-------------------------------------

Enumeration caps, completion budgets and assignment defaults, read from the bundled defaults then from the
user's configuration file, with the ``POMLAB_CAP`` environment variable applied last.
"""

from __future__ import print_function, unicode_literals

import logging
logger = logging.getLogger(__name__)

import os
import functools
import configparser

from pomlab import util


#: Name of the environment variable overriding enumeration caps
CAP_ENV_VAR = 'POMLAB_CAP'


class Config(configparser.ConfigParser):
    """ Manage configuration: get the values from the defaults file, then from the user file.

    Args:
        path (`str`): a configuration file to read instead of the user configuration file, or `None`
        environ (`dict`): the environment to read overrides from, defaults to `os.environ`
    """
    #: `dict` of the integer options that must be strictly positive, per section
    positive_options = {
        'enumerate': ['poset_cap', 'directoid_fanout', 'effect_algebra_cap', 'threads'],
        'completion': ['raw_cap', 'reduced_cap'],
    }

    #: `dict` of the options with a closed set of accepted values
    choice_options = {
        ('assignment', 'policy'): ('arbitrary', 'canonical'),
        ('assignment', 'chooser'): ('least', 'all'),
    }

    #: `list` of (section, option) overridden by the :data:`CAP_ENV_VAR` environment variable
    env_capped = [('enumerate', 'poset_cap'), ('enumerate', 'effect_algebra_cap')]


    @staticmethod
    def path_to_config():
        """ Return the path to the user configuration file.
        """
        return util.get_user_config()


    def __init__(config, path = None, environ = None):
        super(Config, config).__init__()

        # populate values first from the default config file, then from the proper one
        config.read(util.get_default_config())
        defaults = {(s, o): config.get(s, o) for s in config.sections() for o in config.options(s)}

        try:
            config.read(path if path is not None else config.path_to_config())
        except configparser.Error:
            logger.exception('Invalid configuration file, using defaults')

        for (section, option), default in defaults.items():
            try:
                config.validate(section, option)
            except ValueError:
                logger.exception('Invalid value for {}.{}, reverting to default {}'.format(section, option, default))
                config.set(section, option, default)

        config.apply_environment(os.environ if environ is None else environ)


    def validate(self, section, option):
        """ Check a single value against its expected type and range.

        Args:
            section (`str`): the section of the option
            option (`str`): the option name

        Raises:
            `ValueError`: if the value is malformed or out of range
        """
        if option in self.positive_options.get(section, []):
            if self.getint(section, option) < 1:
                raise ValueError('{}.{} must be a positive integer'.format(section, option))

        choices = self.choice_options.get((section, option))
        if choices is not None and self.get(section, option) not in choices:
            raise ValueError('{}.{} must be one of {}'.format(section, option, ', '.join(choices)))

        if section == 'output':
            self.getboolean(section, option)


    def apply_environment(self, environ):
        """ Apply the :data:`CAP_ENV_VAR` override, if set to a positive integer.

        Args:
            environ (`dict`): the environment variables
        """
        value = environ.get(CAP_ENV_VAR)
        if value is None:
            return

        try:
            cap = int(value)
            if cap < 1:
                raise ValueError(value)
        except ValueError:
            logger.warning('Ignoring {}={!r}: not a positive integer'.format(CAP_ENV_VAR, value))
            return

        for section, option in self.env_capped:
            self.set(section, option, str(cap))


@functools.lru_cache(maxsize = None)
def load_config():
    """ Build the shared configuration, once.

    Returns:
        :class:`~pomlab.config.Config`: the configuration
    """
    return Config()


def default(section, option, value = None):
    """ Return `value` if it is given, otherwise the integer configured for section.option.

    Args:
        section (`str`): the section of the option
        option (`str`): the option name
        value (`int`): an explicit value, or `None`

    Returns:
        `int`: the value to use
    """
    if value is not None:
        return value
    return load_config().getint(section, option)
