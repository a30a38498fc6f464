# -*- coding: utf-8 -*-
#
#       serialize.py
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
:mod:`pomlab.serialize` -- JSON structure documents
---------------------------------------------------

Structures are stored as JSON objects with a "kind" key, elements being referred to by their index:

- ``poset``: "size", "inv", "bottom", "top", optional "labels", and either "hasse" (covering pairs) or "le"
  (the full boolean matrix),
- ``directoid``: "meet" (the full table), "inv", "zero", "one", optional "labels",
- ``effect_algebra``: "oplus" (the table, ``null`` where undefined), "zero", "one", optional "labels".

Any other key, such as "provenance", is ignored on load. Streams are written as JSON lines, one document per line.
"""

from __future__ import print_function, unicode_literals

import logging
logger = logging.getLogger(__name__)

import io
import json
from collections import OrderedDict

from pomlab import directoid, effect, order, util
from pomlab.directoid import InvolutiveDirectoid
from pomlab.effect import EffectAlgebra, UNDEFINED
from pomlab.order import BoundedInvolutivePoset, StructureError
from pomlab.util import bits


#: The structure kinds, by JSON "kind" tag
KINDS = ('poset', 'directoid', 'effect_algebra')


def _require(doc, *keys):
    missing = [k for k in keys if k not in doc]
    if missing:
        raise StructureError('{} document is missing {}'.format(doc.get('kind', 'structure'), ', '.join(missing)))


def _is_int(value):
    return isinstance(value, int) and not isinstance(value, bool)


def _check_fields(doc, integers = (), vectors = (), matrices = (), nullable = False):
    """ Check the JSON types of the fields of a document, before any validation looks at their values.

    Args:
        doc (`dict`): the document
        integers (`tuple` of `str`): keys holding an integer
        vectors (`tuple` of `str`): keys holding a list of integers
        matrices (`tuple` of `str`): keys holding a list of lists of integers (or booleans for "le")
        nullable (`bool`): whether matrix entries may be `null`
    """
    def bad(key, expected):
        return StructureError('Field "{}" of a {} document must be {}, got {!r}'.format(
            key, doc.get('kind', 'poset'), expected, doc[key]))

    for key in integers:
        if not _is_int(doc[key]):
            raise bad(key, 'an integer')
    for key in vectors:
        if not isinstance(doc[key], list) or not all(_is_int(v) for v in doc[key]):
            raise bad(key, 'a list of integers')
    def entry(key, v):
        if key == 'le':
            return isinstance(v, bool) or _is_int(v) and v in (0, 1)
        return _is_int(v) or nullable and v is None

    for key in matrices:
        rows = doc[key]
        if not isinstance(rows, list) or not all(isinstance(row, list) and all(entry(key, v) for v in row)
                                                 for row in rows):
            raise bad(key, 'a matrix of booleans' if key == 'le' else 'a matrix of integers')

    if 'hasse' in doc and doc['hasse'] is not None:
        edges = doc['hasse']
        if not isinstance(edges, list) or not all(
                isinstance(e, list) and len(e) == 2 and all(_is_int(v) for v in e) for e in edges):
            raise bad('hasse', 'a list of [x, y] pairs')
    labels = doc.get('labels')
    if labels is not None and (not isinstance(labels, list) or not all(isinstance(l, str) for l in labels)):
        raise bad('labels', 'a list of strings')


def structure_from_json(doc):
    """ Validate a structure document.

    Args:
        doc (`dict`): the parsed JSON object

    Returns:
        :class:`~pomlab.order.BoundedInvolutivePoset`, :class:`~pomlab.directoid.InvolutiveDirectoid` or
        :class:`~pomlab.effect.EffectAlgebra`: the validated structure

    Raises:
        `StructureError`: for an unknown kind, missing keys, or a structure failing validation
    """
    if not isinstance(doc, dict):
        raise StructureError('A structure document must be a JSON object')
    kind = doc.get('kind', 'poset')
    labels = doc.get('labels')

    if kind == 'poset':
        _require(doc, 'size', 'inv', 'bottom', 'top')
        _check_fields(doc, integers = ('size', 'bottom', 'top'), vectors = ('inv',),
                      matrices = ('le',) if doc.get('le') is not None else ())
        return order.validate(doc['size'], doc['inv'], doc['bottom'], doc['top'], le = doc.get('le'),
                              hasse = doc.get('hasse'), labels = labels)
    elif kind == 'directoid':
        _require(doc, 'meet', 'inv', 'zero', 'one')
        _check_fields(doc, integers = ('zero', 'one'), vectors = ('inv',), matrices = ('meet',))
        return directoid.validate_directoid(doc['meet'], doc['inv'], doc['zero'], doc['one'], labels)
    elif kind == 'effect_algebra':
        _require(doc, 'oplus', 'zero', 'one')
        _check_fields(doc, integers = ('zero', 'one'), matrices = ('oplus',), nullable = True)
        return effect.validate_effect_algebra(doc['oplus'], doc['zero'], doc['one'], labels)

    raise StructureError('Unknown structure kind {!r}, expected one of {}'.format(kind, ', '.join(KINDS)))


def structure_to_json(S, hasse = True):
    """ The document of a structure.

    Args:
        S: a poset, directoid or effect algebra
        hasse (`bool`): for posets, whether to store the covering pairs rather than the full order

    Returns:
        :class:`~collections.OrderedDict`: the JSON-ready document
    """
    doc = OrderedDict()
    if isinstance(S, BoundedInvolutivePoset):
        doc['kind'] = 'poset'
        doc['size'] = S.size
        doc['labels'] = list(S.labels)
        doc['inv'] = list(S.inv)
        doc['bottom'] = S.bottom
        doc['top'] = S.top
        if hasse:
            doc['hasse'] = [list(edge) for edge in S.covers()]
        else:
            doc['le'] = S.le.tolist()
    elif isinstance(S, InvolutiveDirectoid):
        doc['kind'] = 'directoid'
        doc['size'] = S.size
        doc['labels'] = list(S.labels)
        doc['meet'] = S.meet.tolist()
        doc['inv'] = list(S.inv)
        doc['zero'] = S.zero
        doc['one'] = S.one
    elif isinstance(S, EffectAlgebra):
        doc['kind'] = 'effect_algebra'
        doc['size'] = S.size
        doc['labels'] = list(S.labels)
        doc['oplus'] = [[None if v == UNDEFINED else int(v) for v in row] for row in S.oplus]
        doc['zero'] = S.zero
        doc['one'] = S.one
    else:
        raise TypeError('Can not serialize {!r}'.format(type(S).__name__))
    return doc


def load_structure(source):
    """ Load and validate a structure document.

    Args:
        source (`str` or file object): a path, or an open text file

    Returns:
        the validated structure

    Raises:
        `ValueError`: on malformed JSON, `StructureError` on an invalid structure
    """
    if hasattr(source, 'read'):
        return structure_from_json(json.load(source))
    with io.open(source, encoding = 'utf-8') as f:
        return structure_from_json(json.load(f))


def dump_structure(S, target = None, hasse = True):
    """ Serialize a structure as indented JSON.

    Args:
        S: the structure
        target (`str` or file object): where to write, `None` to only return the text
        hasse (`bool`): for posets, whether to store the covering pairs

    Returns:
        `str`: the JSON text
    """
    text = json.dumps(structure_to_json(S, hasse), indent = 2)
    _write(text + '\n', target)
    return text


def completion_to_json(C):
    """ The document of a Dedekind-MacNeille completion: the completion as a poset, the embedding of the source,
    and the closed set behind each element.
    """
    doc = structure_to_json(C.as_poset())
    doc['kind'] = 'poset'
    doc['embedding'] = list(C.embedding)
    doc['closed_sets'] = [[C.source.labels[x] for x in bits(m)] for m in C.universe]
    return doc


def dump_completion(C, target = None):
    """ Serialize a completion, which loads back as its poset.

    Returns:
        `str`: the JSON text
    """
    text = json.dumps(completion_to_json(C), indent = 2)
    _write(text + '\n', target)
    return text


def dump_witness(verdict, labels = None, **extra):
    """ One JSON line describing a verdict.

    Args:
        verdict (:class:`~pomlab.order.Verdict`): the verdict
        labels (`tuple` of `str`): element labels
        extra: further keys of the document, e.g. the property name

    Returns:
        `str`: the JSON text
    """
    doc = OrderedDict(extra)
    doc.update(verdict.to_json(labels))
    return json.dumps(doc)


def write_jsonl(structures, target):
    """ Write structures as JSON lines.

    Args:
        structures (iterable): the structures
        target (`str` or file object): a path, or an open text file

    Returns:
        `int`: the number of documents written
    """
    if not hasattr(target, 'write'):
        with io.open(target, 'w', encoding = 'utf-8') as f:
            return write_jsonl(structures, f)

    count = 0
    for S in structures:
        target.write(json.dumps(structure_to_json(S)) + '\n')
        count += 1
    logger.debug('Wrote {} documents'.format(count))
    return count


def read_jsonl(source):
    """ Load every structure of a JSON lines file, skipping blank lines.

    Yields:
        the validated structures, in file order
    """
    if not hasattr(source, 'read'):
        with io.open(source, encoding = 'utf-8') as f:
            for S in read_jsonl(f):
                yield S
        return

    for line in source:
        if line.strip():
            yield structure_from_json(json.loads(line))


def _write(text, target):
    if target is None:
        return
    elif hasattr(target, 'write'):
        target.write(text)
    else:
        with io.open(target, 'w', encoding = 'utf-8') as f:
            f.write(text)


def load_fixture(name):
    """ Load one of the bundled structures, see :func:`~pomlab.util.list_fixtures`.

    Args:
        name (`str`): the fixture name, e.g. "fig1" or "b6"
    """
    return load_structure(util.get_fixture_path(name))
