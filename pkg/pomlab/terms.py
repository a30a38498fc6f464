# -*- coding: utf-8 -*-
#
#       terms.py
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
:mod:`pomlab.terms` -- Terms, identities and quasi-identities
-------------------------------------------------------------

A small language for terms over the signature (⊓, ⊔, ', 0, 1) and universally quantified formulas over the
literals ``s <= t`` and ``s = t``. The concrete syntax, from the loosest to the tightest binding::

    ->                  single implication
    forall x, y:        prefix on the antecedent (or consequent)
    |  &  ~             disjunction, conjunction, negation
    <=  =               comparisons
    ^  v                meet and join, left associative, same precedence
    '                   postfix involution

Variables match ``[a-z][a-z0-9]*`` except the reserved words ``v`` and ``forall``; constants are ``0`` and ``1``.

Evaluation is exhaustive and vectorised: every variable gets an axis of a numpy grid of shape (n, ..., n), terms
become arrays of elements computed by fancy indexing into the operation tables, and inner universal quantifiers
reduce over their own axes.
"""

from __future__ import print_function, unicode_literals

import logging
logger = logging.getLogger(__name__)

import functools
import io
import re
from collections import namedtuple, OrderedDict

import numpy as np

from pomlab import util
from pomlab.order import BoundedInvolutivePoset, Verdict


class FormulaSyntaxError(ValueError):
    """ Raised for text outside the formula grammar.

    Args:
        message (`str`): what went wrong
        text (`str`): the text being parsed
        position (`int`): offset of the offending character in the text
    """
    def __init__(self, message, text, position):
        super(FormulaSyntaxError, self).__init__('{} at position {}: {!r}'.format(message, position, text))
        #: `str` the text being parsed
        self.text = text
        #: `int` offset of the error
        self.position = position


class SignatureMismatch(ValueError):
    """ Raised when a formula uses operations the structure does not have, e.g. a meet against a bare poset.
    """
    pass


class _Node(object):
    """ Equality and hashing aware of the node type, so that e.g. a meet and a join of the same terms differ.
    """
    __slots__ = ()

    def __eq__(self, other):
        return type(self) is type(other) and tuple.__eq__(self, other)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((type(self).__name__, tuple(self)))


class Var(_Node, namedtuple('Var', 'name')):
    """ A variable. """
    __slots__ = ()

class Const(_Node, namedtuple('Const', 'value')):
    """ The constant 0 or 1. """
    __slots__ = ()

class Prime(_Node, namedtuple('Prime', 'arg')):
    """ The involution x'. """
    __slots__ = ()

class Meet(_Node, namedtuple('Meet', 'left right')):
    """ The directoid operation x ⊓ y. """
    __slots__ = ()

class Join(_Node, namedtuple('Join', 'left right')):
    """ The derived operation x ⊔ y = (x' ⊓ y')'. """
    __slots__ = ()

class Le(_Node, namedtuple('Le', 'left right')):
    """ The order literal s ≤ t. """
    __slots__ = ()

class Eq(_Node, namedtuple('Eq', 'left right')):
    """ The equation s = t. """
    __slots__ = ()

class Not(_Node, namedtuple('Not', 'arg')):
    __slots__ = ()

class And(_Node, namedtuple('And', 'left right')):
    __slots__ = ()

class Or(_Node, namedtuple('Or', 'left right')):
    __slots__ = ()

class Implies(_Node, namedtuple('Implies', 'left right')):
    __slots__ = ()

class Forall(_Node, namedtuple('Forall', 'names body')):
    """ Universal quantification of the variables `names` (a `tuple` of `str`) over `body`. """
    __slots__ = ()


#: Term node types
TERMS = (Var, Const, Prime, Meet, Join)
#: Literal node types
LITERALS = (Le, Eq)


class Lexer(object):
    """ Split formula text into (kind, lexeme, position) tokens.

    Args:
        text (`str`): the text to tokenise
    """
    #: `list` of (token kind, regular expression), tried in order
    token_specs = [
        ('SPACE',   r'\s+'),
        ('IMPLIES', r'->|⇒'),
        ('LE',      r'<=|≤'),
        ('EQ',      r'=|≈'),
        ('PRIME',   r"'|′"),
        ('MEET',    r'\^|⊓'),
        ('JOIN',    r'⊔'),
        ('NOT',     r'~|¬'),
        ('AND',     r'&'),
        ('OR',      r'\|'),
        ('LPAREN',  r'\('),
        ('RPAREN',  r'\)'),
        ('COLON',   r':'),
        ('COMMA',   r','),
        ('CONST',   r'[01](?![0-9a-z])'),
        ('NAME',    r'[a-z][a-z0-9]*'),
    ]

    #: Compiled alternation of all token patterns
    regex = re.compile('|'.join('(?P<{}>{})'.format(kind, pattern) for kind, pattern in token_specs))

    #: Reserved names and the token kind they stand for
    keywords = {'v': 'JOIN', 'forall': 'FORALL'}

    def __init__(self, text):
        self.text = text


    def tokens(self):
        """ Tokenise the whole text.

        Returns:
            `list` of `tuple`: (kind, lexeme, position) triples, ended by an ('END', '', len(text)) token
        """
        out = []
        position = 0
        while position < len(self.text):
            match = self.regex.match(self.text, position)
            if match is None:
                raise FormulaSyntaxError('Unexpected character {!r}'.format(self.text[position]), self.text, position)
            kind = match.lastgroup
            lexeme = match.group()
            if kind == 'NAME':
                kind = self.keywords.get(lexeme, kind)
            if kind != 'SPACE':
                out.append((kind, lexeme, position))
            position = match.end()
        out.append(('END', '', len(self.text)))
        return out


class Parser(object):
    """ Recursive descent parser for formulas and terms.

    Args:
        text (`str`): the text to parse
    """
    def __init__(self, text):
        self.text = text
        self.tokens = Lexer(text).tokens()
        self.index = 0


    def peek(self, *kinds):
        return self.tokens[self.index][0] in kinds


    def accept(self, kind):
        if self.peek(kind):
            self.index += 1
            return True
        return False


    def expect(self, kind):
        if not self.accept(kind):
            self.error('Expected {}'.format(kind.lower()))
        return self.tokens[self.index - 1]


    def error(self, message):
        kind, lexeme, position = self.tokens[self.index]
        found = 'end of input' if kind == 'END' else repr(lexeme)
        raise FormulaSyntaxError('{}, found {}'.format(message, found), self.text, position)


    def parse_formula(self):
        formula = self._formula()
        if not self.peek('END'):
            self.error('Unexpected trailing input')
        return formula


    def parse_term(self):
        term = self._term()
        if not self.peek('END'):
            self.error('Unexpected trailing input')
        return term


    # <FORMULA> -> <QUANTIFIED> [ '->' <QUANTIFIED> ]
    def _formula(self):
        antecedent = self._quantified()
        if self.accept('IMPLIES'):
            return Implies(antecedent, self._quantified())
        return antecedent


    # <QUANTIFIED> -> 'forall' NAME { ',' NAME } ':' <DISJUNCTION> | <DISJUNCTION>
    def _quantified(self):
        if not self.accept('FORALL'):
            return self._disjunction()

        names = [self.expect('NAME')[1]]
        while self.accept('COMMA'):
            names.append(self.expect('NAME')[1])
        self.expect('COLON')
        return Forall(tuple(names), self._disjunction())


    # <DISJUNCTION> -> <CONJUNCTION> { '|' <CONJUNCTION> }
    def _disjunction(self):
        formula = self._conjunction()
        while self.accept('OR'):
            formula = Or(formula, self._conjunction())
        return formula


    # <CONJUNCTION> -> <NEGATION> { '&' <NEGATION> }
    def _conjunction(self):
        formula = self._negation()
        while self.accept('AND'):
            formula = And(formula, self._negation())
        return formula


    # <NEGATION> -> '~' <NEGATION> | <ATOM>
    def _negation(self):
        if self.accept('NOT'):
            return Not(self._negation())
        return self._atom()


    # <ATOM> -> '(' <FORMULA> ')' | <TERM> ( '<=' | '=' ) <TERM>
    def _atom(self):
        if self.peek('LPAREN'):
            marker = self.index
            try:
                self.index += 1
                formula = self._formula()
                self.expect('RPAREN')
                if not self.peek('PRIME', 'MEET', 'JOIN', 'LE', 'EQ'):
                    return formula
            except FormulaSyntaxError:
                pass
            self.index = marker

        left = self._term()
        if self.accept('LE'):
            return Le(left, self._term())
        elif self.accept('EQ'):
            return Eq(left, self._term())
        self.error("Expected '<=' or '='")


    # <TERM> -> <POSTFIX> { ( '^' | 'v' ) <POSTFIX> }
    def _term(self):
        term = self._postfix()
        while self.peek('MEET', 'JOIN'):
            node = Meet if self.accept('MEET') else (self.expect('JOIN') and Join)
            term = node(term, self._postfix())
        return term


    # <POSTFIX> -> <PRIMARY> { "'" }
    def _postfix(self):
        term = self._primary()
        while self.accept('PRIME'):
            term = Prime(term)
        return term


    # <PRIMARY> -> NAME | '0' | '1' | '(' <TERM> ')'
    def _primary(self):
        if self.peek('NAME'):
            return Var(self.expect('NAME')[1])
        elif self.peek('CONST'):
            return Const(int(self.expect('CONST')[1]))
        elif self.accept('LPAREN'):
            term = self._term()
            self.expect('RPAREN')
            return term
        self.error('Expected a variable, a constant or a parenthesised term')


def parse(text):
    """ Parse a formula.

    Args:
        text (`str`): the formula, e.g. ``"(x ^ y)' ^ y = 0 -> x ^ y = y"``

    Returns:
        the formula AST

    Raises:
        :class:`~pomlab.terms.FormulaSyntaxError`: with the position of the first offending token
    """
    return Parser(text).parse_formula()


def parse_term(text):
    """ Parse a single term, e.g. ``"(x' ^ y')'"``.
    """
    return Parser(text).parse_term()


def format_term(term):
    """ Print a term in normalised form, with the fewest parentheses the grammar allows.
    """
    if isinstance(term, Var):
        return term.name
    elif isinstance(term, Const):
        return str(term.value)
    elif isinstance(term, Prime):
        inner = format_term(term.arg)
        return ('(' + inner + ')' if isinstance(term.arg, (Meet, Join)) else inner) + "'"
    elif isinstance(term, (Meet, Join)):
        right = format_term(term.right)
        if isinstance(term.right, (Meet, Join)):
            right = '(' + right + ')'
        return '{} {} {}'.format(format_term(term.left), '^' if isinstance(term, Meet) else 'v', right)
    raise TypeError('Not a term: {!r}'.format(term))


# binding strength of formula nodes, loosest first
_LEVEL = {Implies: 0, Forall: 1, Or: 2, And: 3, Not: 4, Le: 5, Eq: 5}


def _format_operand(formula, level):
    text = format_formula(formula)
    return '(' + text + ')' if _LEVEL[type(formula)] < level else text


def format_formula(formula):
    """ Print a formula in normalised form: parsing the output gives back an equal AST.
    """
    if isinstance(formula, Le):
        return '{} <= {}'.format(format_term(formula.left), format_term(formula.right))
    elif isinstance(formula, Eq):
        return '{} = {}'.format(format_term(formula.left), format_term(formula.right))
    elif isinstance(formula, Not):
        return '~(' + format_formula(formula.arg) + ')'
    elif isinstance(formula, And):
        return _format_operand(formula.left, 3) + ' & ' + _format_operand(formula.right, 4)
    elif isinstance(formula, Or):
        return _format_operand(formula.left, 2) + ' | ' + _format_operand(formula.right, 3)
    elif isinstance(formula, Forall):
        return 'forall {}: {}'.format(', '.join(formula.names), _format_operand(formula.body, 2))
    elif isinstance(formula, Implies):
        return _format_operand(formula.left, 1) + ' -> ' + _format_operand(formula.right, 1)
    raise TypeError('Not a formula: {!r}'.format(formula))


def _children(node):
    if isinstance(node, (Var, Const)):
        return ()
    elif isinstance(node, Forall):
        return (node.body,)
    return tuple(node)


def free_variables(node):
    """ The variables of a term or formula not bound by an inner `forall`.

    Returns:
        `set` of `str`
    """
    if isinstance(node, Var):
        return {node.name}
    elif isinstance(node, Forall):
        return free_variables(node.body) - set(node.names)
    return set().union(*(free_variables(child) for child in _children(node)))


def operations(node):
    """ The set of node types used anywhere in a term or formula.
    """
    return {type(node)}.union(*(operations(child) for child in _children(node)))


def _map(node, func):
    """ Rebuild a formula bottom-up, applying func to every literal.
    """
    if isinstance(node, LITERALS):
        return func(node)
    elif isinstance(node, Not):
        return Not(_map(node.arg, func))
    elif isinstance(node, Forall):
        return Forall(node.names, _map(node.body, func))
    return type(node)(_map(node.left, func), _map(node.right, func))


def translate(formula):
    """ Translate an order-language formula into the directoid language.

    Every literal s ≤ t becomes s ⊓ t = s; equations, connectives and quantifiers are kept as they are, so that
    the shape of the formula (in particular a disjunctive normal form) is preserved.

    Args:
        formula: a formula over (≤, ', 0, 1)

    Returns:
        the translated formula over (⊓, ', 0, 1)

    Raises:
        :class:`~pomlab.terms.SignatureMismatch`: if the formula already uses ⊓ or ⊔
    """
    if operations(formula) & {Meet, Join}:
        raise SignatureMismatch('Only order-language formulas can be translated: {}'.format(format_formula(formula)))

    def literal(lit):
        if isinstance(lit, Le):
            return Eq(Meet(lit.left, lit.right), lit.left)
        return lit

    return _map(formula, literal)


def expand_term(term):
    """ Replace every join by its definition (x' ⊓ y')'.
    """
    if isinstance(term, Join):
        return Prime(Meet(Prime(expand_term(term.left)), Prime(expand_term(term.right))))
    elif isinstance(term, Prime):
        return Prime(expand_term(term.arg))
    elif isinstance(term, Meet):
        return Meet(expand_term(term.left), expand_term(term.right))
    return term


def expand_joins(formula):
    """ Replace every join of a formula by its definition in terms of meet and involution.
    """
    return _map(formula, lambda lit: type(lit)(expand_term(lit.left), expand_term(lit.right)))


def _nnf(formula, positive = True):
    if isinstance(formula, LITERALS):
        return formula if positive else Not(formula)
    elif isinstance(formula, Not):
        return _nnf(formula.arg, not positive)
    elif isinstance(formula, Implies):
        return _nnf(Or(Not(formula.left), formula.right), positive)
    elif isinstance(formula, Forall):
        raise ValueError('Quantified formulas have no quantifier-free normal form')
    elif isinstance(formula, And):
        node = And if positive else Or
    else:
        node = Or if positive else And
    return node(_nnf(formula.left, positive), _nnf(formula.right, positive))


def _dnf_clauses(formula):
    if isinstance(formula, Or):
        return _dnf_clauses(formula.left) + _dnf_clauses(formula.right)
    elif isinstance(formula, And):
        return [l + r for l in _dnf_clauses(formula.left) for r in _dnf_clauses(formula.right)]
    return [[formula]]


def to_dnf(formula):
    """ Disjunctive normal form of a quantifier-free formula.

    Returns:
        `list` of `list`: clauses, each a list of literals or negated literals
    """
    return _dnf_clauses(_nnf(formula))


def from_dnf(clauses):
    """ Build the formula of a disjunctive normal form given as clauses of literals.
    """
    if not clauses or not all(clauses):
        raise ValueError('Empty clauses have no formula')
    return functools.reduce(Or, [functools.reduce(And, clause) for clause in clauses])


class _Algebra(object):
    """ Operation tables of a structure, for vectorised evaluation.

    Posets provide the order and the involution; directoids the meet table and the involution, with the order and
    the join derived from them.
    """
    def __init__(self, structure):
        self.size = structure.size
        if isinstance(structure, BoundedInvolutivePoset):
            self.le = structure.le
            self.meet = None
            self.zero, self.one = structure.bottom, structure.top
        else:
            self.le = None
            self.meet = np.asarray(structure.meet)
            self.zero, self.one = structure.zero, structure.one
        self.inv = np.asarray(structure.inv, dtype = np.int64)


    def term(self, term, env):
        if isinstance(term, Var):
            try:
                return env[term.name]
            except KeyError:
                raise SignatureMismatch('Unbound variable {}'.format(term.name))
        elif isinstance(term, Const):
            return env[None][self.zero if term.value == 0 else self.one]
        elif isinstance(term, Prime):
            return self.inv[self.term(term.arg, env)]

        if self.meet is None:
            raise SignatureMismatch('{} cannot be evaluated on a poset: {}'.format(
                type(term).__name__.lower(), format_term(term)))

        left, right = self.term(term.left, env), self.term(term.right, env)
        if isinstance(term, Meet):
            return self.meet[left, right]
        return self.inv[self.meet[self.inv[left], self.inv[right]]]


    def literal(self, literal, env):
        left, right = self.term(literal.left, env), self.term(literal.right, env)
        if isinstance(literal, Eq):
            return left == right
        elif self.le is not None:
            return self.le[left, right]
        return self.meet[left, right] == left


def _count_bound(formula):
    if isinstance(formula, Forall):
        return len(formula.names) + _count_bound(formula.body)
    elif isinstance(formula, (LITERALS + TERMS)):
        return 0
    return sum(_count_bound(child) for child in _children(formula))


def evaluate(structure, formula):
    """ Decide whether a structure satisfies a formula, all free variables being universally quantified.

    Args:
        structure (:class:`~pomlab.order.BoundedInvolutivePoset` or :class:`~pomlab.directoid.InvolutiveDirectoid`):
            a poset, for formulas over (≤, ', 0, 1), or a directoid, for which ≤ is its induced order
        formula: a parsed formula, or its text

    Returns:
        :class:`~pomlab.order.Verdict`: holds, or fails with the first failing assignment of the free variables in
        lexicographic order (variables sorted by name)

    Raises:
        :class:`~pomlab.terms.SignatureMismatch`: if the formula uses ⊓ or ⊔ against a poset
    """
    if not isinstance(formula, _Node):
        formula = parse(formula)

    algebra = _Algebra(structure)
    n = algebra.size
    free = sorted(free_variables(formula))
    ndim = len(free) + _count_bound(formula)
    next_axis = [len(free)]

    def axis_array(axis):
        shape = [1] * ndim
        shape[axis] = n
        return np.arange(n).reshape(shape)

    env = {name: axis_array(axis) for axis, name in enumerate(free)}
    # constants, shaped like every other array
    env[None] = [np.full([1] * ndim, e, dtype = np.int64) for e in range(n)]

    def truth(f, env):
        if isinstance(f, LITERALS):
            return algebra.literal(f, env)
        elif isinstance(f, Not):
            return ~truth(f.arg, env)
        elif isinstance(f, And):
            return truth(f.left, env) & truth(f.right, env)
        elif isinstance(f, Or):
            return truth(f.left, env) | truth(f.right, env)
        elif isinstance(f, Implies):
            return ~truth(f.left, env) | truth(f.right, env)
        elif isinstance(f, Forall):
            inner = dict(env)
            axes = []
            for name in f.names:
                axes.append(next_axis[0])
                inner[name] = axis_array(next_axis[0])
                next_axis[0] += 1
            body = truth(f.body, inner)
            shape = np.broadcast_shapes(np.shape(body), tuple(n if a in axes else 1 for a in range(ndim)))
            return np.broadcast_to(body, shape).all(axis = tuple(axes), keepdims = True)
        raise TypeError('Not a formula: {!r}'.format(f))

    result = np.broadcast_to(truth(formula, env), [n] * len(free) + [1] * (ndim - len(free)))
    failures = np.argwhere(~result)
    if not len(failures):
        return Verdict.ok()

    first = failures[0]
    return Verdict.fail(OrderedDict((name, int(first[axis])) for axis, name in enumerate(free)),
                        format_formula(formula))


def load_formulas(source):
    """ Read named formulas, one per line.

    Lines may start with a ``[name]`` tag; everything after a ``#`` is a comment. Untagged formulas are named after
    their line number.

    Args:
        source (`str` or file): a path, or an open text file

    Returns:
        :class:`~collections.OrderedDict`: formula name to parsed formula
    """
    if isinstance(source, str):
        with io.open(source, encoding = 'utf-8') as f:
            return load_formulas(f)

    formulas = OrderedDict()
    for lineno, line in enumerate(source, 1):
        line = line.split('#', 1)[0].strip()
        if not line:
            continue
        match = re.match(r'\[([^\]]+)\]\s*', line)
        name = match.group(1).strip() if match else 'line{}'.format(lineno)
        if name in formulas:
            raise ValueError('Duplicate formula name {!r} on line {}'.format(name, lineno))
        formulas[name] = parse(line[match.end():] if match else line)
    return formulas


@functools.lru_cache(maxsize = None)
def catalog():
    """ The bundled catalog of named identities and quasi-identities.

    Returns:
        :class:`~collections.OrderedDict`: formula name to parsed formula
    """
    formulas = load_formulas(util.get_axiom_catalog())
    logger.debug('Loaded {} catalog formulas'.format(len(formulas)))
    return formulas
