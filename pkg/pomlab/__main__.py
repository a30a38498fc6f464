# -*- coding: utf-8 -*-
#
#!/usr/bin/env python
#
#       pomlab
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

import logging
import sys
import getopt
import json
import platform

from pomlab import util


# Setup logging, and catch all uncaught exceptions in the log file.
logger = logging.getLogger(__name__)
logging.basicConfig(filename=util.get_log_path(), level=logging.DEBUG)


def uncaught_handler(*exc_info):
    logger.critical('Uncaught exception:\n{}'.format(logging.Formatter().formatException(exc_info)))
    sys.__excepthook__(*exc_info)

sys.excepthook = uncaught_handler


import numpy as np

from pomlab import (completion, config, directoid, effect, enumeration, forbidden, hasse, order, reproduce,
                    serialize, terms)
from pomlab.directoid import AssignmentPolicy, DirectoidClass, InvolutiveDirectoid
from pomlab.effect import EffectAlgebra
from pomlab.order import BoundedInvolutivePoset, PosetProperty, StructureError


#: Exit status when every check holds
EXIT_OK = 0
#: Exit status when a check fails
EXIT_FAILED = 1
#: Exit status for usage and input format errors
EXIT_USAGE = 2

VERBS = ('check', 'witness', 'enumerate', 'complete', 'convert', 'eval', 'reproduce')


class UsageError(Exception):
    pass


def usage(out = None):
    out = sys.stdout if out is None else out
    lines = [
        "Usage: pomlab <command> [options] [arguments]",
        "",
        "Commands:",
        "    check FILE --prop P[,P...]        Decide poset properties or directoid classes, printing witnesses",
        "    witness FILE                      Look for a strong subposet ortho-isomorphic to B6",
        "    enumerate --n N [--filter P...]   Generate structures up to ortho-isomorphism",
        "              [--kind K]              K: poset, directoid, effect-algebra, orthoalgebra or counts",
        "    complete FILE [--out FILE]        Dedekind-MacNeille completion, with (WDC) and (FLP) diagnosis",
        "    convert FILE --to KIND            KIND: poset, directoid, effect-algebra or orthoalgebra",
        "    eval FILE FORMULAFILE             Evaluate every formula of a file on a structure",
        "    reproduce NAME                    NAME: {}, or all".format(', '.join(reproduce.SCENARIOS)),
        "",
        "Options:",
        "    -h, --help                        This help",
        "    --prop=P, --filter=P              Properties, repeatable or comma-separated",
        "    --policy=arbitrary|canonical      Directoid assignment policy",
        "    --chooser=least|all               One assigned directoid, or all of them",
        "    --n=N                             Structure size for enumerate",
        "    --cap=N                           Largest size accepted by the enumerators",
        "    --threads=K                       Worker threads for enumeration and completion sweeps",
        "    --json                            Machine-readable output",
        "    --dot=FILE                        Write the Hasse diagram in DOT format",
        "    --out=FILE                        Write the resulting structures to FILE",
        "    --log=level                       Set level of verbosity in log file:",
        "                                        {}, {}, {}, {}, or {}".format("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"),
        "",
        "Exit status: 0 when every check holds, 1 when a check fails, 2 on usage or format errors.",
    ]
    print('\n'.join(lines), file = out)


class Options(object):
    """ Parsed command line options.
    """
    #: `list` of property names, from --prop and --filter
    props = []
    #: `str` assignment mode, or `None` for the configured one
    policy = None
    #: `str` chooser, or `None` for the configured one
    chooser = None
    #: `int` size for enumerate
    n = None
    #: `int` enumeration cap, or `None` for the configured one
    cap = None
    #: `int` worker threads, or `None` for the configured value
    threads = None
    #: `bool` machine-readable output
    json = False
    #: `str` DOT output path
    dot = None
    #: `str` target kind for convert
    to = None
    #: `str` structure kind for enumerate
    kind = 'poset'
    #: `str` output path
    out = None

    def __init__(self):
        self.props = []
        self.json = config.load_config().getboolean('output', 'json')


    def policy_for(self, default = None):
        """ The assignment policy given by --policy and --chooser, or `default` when neither is given.
        """
        if self.policy is None and self.chooser is None:
            return default
        return AssignmentPolicy.from_config(mode = self.policy, chooser = self.chooser)


def _positive(opt, arg):
    try:
        value = int(arg)
    except ValueError:
        value = 0
    if value < 1:
        raise UsageError('{} expects a positive integer, got "{}"'.format(opt, arg))
    return value


def parse_args(argv):
    """ Parse the command line.

    Returns:
        `tuple`: (:class:`Options`, `list` of positional arguments), or `None` if help was requested

    Raises:
        `UsageError`: on invalid options
    """
    try:
        opts, args = getopt.gnu_getopt(argv, "h", ["help", "prop=", "filter=", "policy=", "chooser=", "n=", "cap=",
                                                   "json", "dot=", "threads=", "to=", "kind=", "out=", "log="])
    except getopt.GetoptError as err:
        raise UsageError(str(err))

    options = Options()
    log_level = logging.ERROR

    for opt, arg in opts:
        if opt in ("-h", "--help"):
            return None
        elif opt in ("--prop", "--filter"):
            options.props.extend(p.strip() for p in arg.split(',') if p.strip())
        elif opt == "--policy":
            options.policy = arg
        elif opt == "--chooser":
            options.chooser = arg
        elif opt == "--n":
            options.n = _positive(opt, arg)
        elif opt == "--cap":
            options.cap = _positive(opt, arg)
        elif opt == "--threads":
            options.threads = _positive(opt, arg)
        elif opt == "--json":
            options.json = True
        elif opt == "--dot":
            options.dot = arg
        elif opt == "--to":
            options.to = arg.replace('_', '-')
        elif opt == "--kind":
            options.kind = arg.replace('_', '-')
        elif opt == "--out":
            options.out = arg
        elif opt == "--log":
            numeric_level = getattr(logging, arg.upper(), None)
            if isinstance(numeric_level, int):
                log_level = numeric_level
            else:
                print("Invalid log level \"{}\", try one of {}".format(arg, "DEBUG, INFO, WARNING, ERROR, CRITICAL"),
                      file = sys.stderr)

    logging.getLogger('pomlab').setLevel(log_level)
    return options, args


def _print_verdict(out, options, name, verdict, labels):
    if options.json:
        print(serialize.dump_witness(verdict, labels, property = name), file = out)
    else:
        print('{}: {}'.format(name, verdict.describe(labels)), file = out)


def _write_dot(options, S, verdicts = ()):
    if options.dot is None:
        return
    failed = next((v for v in verdicts if not v), None)
    highlight = [e for e in failed.witness.values() if isinstance(e, int)] if failed is not None else []
    hasse.write_dot(S, options.dot, highlight = highlight)


def cmd_check(options, args, out):
    S = _load(args, 1)[0]
    if isinstance(S, InvolutiveDirectoid):
        kind, props = enumeration.parse_properties(options.props or [c.value for c in DirectoidClass])
        if kind == 'poset':
            target, decide = directoid.induced_poset(S), order.check
        else:
            target, decide = S, directoid.check_class
    else:
        kind, props = enumeration.parse_properties(options.props or [p.value for p in PosetProperty])
        if kind == 'directoid':
            raise UsageError('Directoid classes only apply to directoid documents')
        target, decide = hasse.as_poset(S), order.check

    verdicts = []
    for prop in props:
        verdict = decide(target, prop)
        verdicts.append(verdict)
        _print_verdict(out, options, prop.value, verdict, target.labels)

    _write_dot(options, S, verdicts)
    return EXIT_OK if all(verdicts) else EXIT_FAILED


def cmd_witness(options, args, out):
    P = hasse.as_poset(_load(args, 1)[0])
    witness = forbidden.find_b6_witness(P)
    if options.json:
        print(json.dumps({'witness': None if witness is None else witness.to_json()}), file = out)
    elif witness is None:
        print('no strong subposet ortho-isomorphic to B6: paraorthomodular', file = out)
    else:
        roles = ', '.join('{}={}'.format(role, P.labels[e]) for role, e in witness.role_map.items())
        print('B6 strong subposet: {}'.format(roles), file = out)

    if options.dot is not None:
        hasse.write_dot(P, options.dot, highlight = witness.elements if witness is not None else ())
    return EXIT_OK if witness is None else EXIT_FAILED


def _describe(S):
    if isinstance(S, BoundedInvolutivePoset):
        covers = ' '.join('{}<{}'.format(S.labels[x], S.labels[y]) for x, y in S.covers())
        swaps = ' '.join("{}'={}".format(S.labels[x], S.labels[S.inv[x]]) for x in range(S.size))
        return '{} | {}'.format(covers, swaps)
    elif isinstance(S, InvolutiveDirectoid):
        return 'meet={} inv={}'.format(S.meet.tolist(), list(S.inv))
    oplus = [[None if v == effect.UNDEFINED else int(v) for v in row] for row in S.oplus]
    return 'oplus={}'.format(oplus)


def cmd_enumerate(options, args, out):
    if options.n is None:
        raise UsageError('enumerate needs --n')
    n, kind = options.n, options.kind

    if kind == 'counts':
        for row in enumeration.summary_table(n, options.props, options.cap, options.threads):
            print(json.dumps(row) if options.json else '{n:>3} {class:<28} {count}'.format(**row), file = out)
        return EXIT_OK

    if kind == 'poset':
        structures = enumeration.enumerate_posets(n, options.props, options.cap, options.threads)
    elif kind == 'directoid':
        prop_kind, props = enumeration.parse_properties(options.props)
        filters = props if prop_kind == 'poset' else ()
        classes = props if prop_kind == 'directoid' else ()
        structures = (D for D in enumeration.enumerate_involutive_directoids(n, options.policy_for(), filters, options.cap,
                                                                             options.threads)
                      if all(directoid.check_class(D, c) for c in classes))
    elif kind == 'effect-algebra':
        structures = enumeration.enumerate_effect_algebras(n, options.cap, options.threads)
    elif kind == 'orthoalgebra':
        structures = enumeration.enumerate_orthoalgebras(n, options.cap, options.threads)
    else:
        raise UsageError('Unknown kind "{}"'.format(kind))

    if options.out is not None:
        count = serialize.write_jsonl(structures, options.out)
    else:
        count = 0
        for S in structures:
            count += 1
            if options.json:
                print(json.dumps(serialize.structure_to_json(S)), file = out)
            else:
                print('{:>4}  {}'.format(count, _describe(S)), file = out)

    if not options.json:
        print('{} structures of size {}'.format(count, n), file = out)
    logger.info('Enumerated {} structures of kind {} and size {}'.format(count, kind, n))
    return EXIT_OK


def cmd_complete(options, args, out):
    P = hasse.as_poset(_load(args, 1)[0])
    C = completion.dm_complete(P)
    if options.out is not None:
        serialize.dump_completion(C, options.out)
    elif options.json:
        print(serialize.dump_completion(C), file = out)

    diagnosis = [
        ('embedding', completion.check_embedding(C)),
        ('completion paraorthomodular', completion.completion_is_paraorthomodular(P)),
        ('weakly D-continuous', completion.is_weakly_d_continuous(P, threads = options.threads)),
        ('FLP', completion.satisfies_flp(P, threads = options.threads)),
    ]
    if not options.json:
        print('completion has {} elements, {} added'.format(C.size, C.size - P.size), file = out)
        for name, verdict in diagnosis:
            print('{}: {}'.format(name, verdict.describe(P.labels if name != 'completion paraorthomodular'
                                                         else C.as_poset().labels)), file = out)

    if options.dot is not None:
        hasse.write_dot(C.as_poset(), options.dot)
    return EXIT_OK if all(v for _, v in diagnosis) else EXIT_FAILED


def _convert(S, to, options):
    if to == 'poset':
        return hasse.as_poset(S)
    elif to == 'directoid':
        if isinstance(S, BoundedInvolutivePoset):
            return next(directoid.assigned_directoids(S, options.policy_for()))
        elif isinstance(S, EffectAlgebra):
            return next(effect.directoids_from_orthoalgebra(S))
        return S
    elif to in ('effect-algebra', 'orthoalgebra'):
        if isinstance(S, BoundedInvolutivePoset):
            return effect.orthoalgebra_from_orthomodular_poset(S)
        elif isinstance(S, InvolutiveDirectoid):
            return effect.orthoalgebra_from_ortho_directoid(S)
        if to == 'orthoalgebra' and not effect.is_orthoalgebra(S):
            raise effect.NotOrthoalgebra('The induced poset is not an orthoposet')
        return S
    raise UsageError('Unknown target "{}"'.format(to))


def cmd_convert(options, args, out):
    if options.to is None:
        raise UsageError('convert needs --to')
    converted = _convert(_load(args, 1)[0], options.to, options)
    text = serialize.dump_structure(converted, options.out)
    if options.out is None:
        print(text, file = out)
    _write_dot(options, converted)
    return EXIT_OK


def cmd_eval(options, args, out):
    S = _load(args, 2)[0]
    if isinstance(S, EffectAlgebra):
        S = effect.induced_order(S)
    formulas = terms.load_formulas(args[1])

    verdicts = []
    for name, formula in formulas.items():
        verdict = terms.evaluate(S, formula)
        verdicts.append(verdict)
        if options.json:
            print(serialize.dump_witness(verdict, S.labels, formula = name), file = out)
        else:
            print('{}: {}'.format(name, verdict.describe(S.labels)), file = out)
    return EXIT_OK if all(verdicts) else EXIT_FAILED


def cmd_reproduce(options, args, out):
    if len(args) != 1:
        raise UsageError('reproduce needs exactly one scenario name')
    return EXIT_OK if reproduce.run(args[0], options.json, out) else EXIT_FAILED


def _load(args, count):
    if len(args) != count:
        raise UsageError('Expected {} file argument{}, got {}'.format(count, 's' if count > 1 else '', len(args)))
    return [serialize.load_structure(args[0])] + args[1:]


COMMANDS = {
    'check': cmd_check,
    'witness': cmd_witness,
    'enumerate': cmd_enumerate,
    'complete': cmd_complete,
    'convert': cmd_convert,
    'eval': cmd_eval,
    'reproduce': cmd_reproduce,
}


def run(argv, out = None):
    """ Run one command.

    Args:
        argv (`list` of `str`): the arguments, without the program name
        out (file object): where to print results, standard output by default

    Returns:
        `int`: the exit status
    """
    out = sys.stdout if out is None else out
    try:
        parsed = parse_args(argv)
        if parsed is None:
            usage(out)
            return EXIT_OK
        options, args = parsed
        if not args or args[0] not in COMMANDS:
            raise UsageError('Expected a command among {}'.format(', '.join(VERBS)))

        logger.info(' '.join(['pomlab:', util.get_pomlab_meta().__version__, '; Python:', platform.python_version(),
                              '; numpy:', np.__version__, '; command:', args[0]]))
        return COMMANDS[args[0]](options, args[1:], out)

    except UsageError as err:
        print('pomlab: {}'.format(err), file = sys.stderr)
        usage(sys.stderr)
        return EXIT_USAGE
    except (StructureError, terms.FormulaSyntaxError, terms.SignatureMismatch, util.CapExceeded,
            ValueError, KeyError, IOError) as err:
        logger.info('Command failed', exc_info = True)
        print('pomlab: {}'.format(err), file = sys.stderr)
        return EXIT_USAGE


def main(argv = sys.argv[1:]):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()

##
# Local Variables:
# mode: python
# indent-tabs-mode: nil
# py-indent-offset: 4
# fill-column: 80
# end:
