"""
Command line front end.

Every subcommand prints a JSON report (or writes it to ``--out``) and
exits with 0 on success, 1 if a verification failed and 2 on a usage or
payload error.
"""


import argparse
import logging
import sys
from typing import Callable, List, Optional, Tuple

from realforms import __version__
from realforms import io, sampling
from realforms.study import classifier, family, orbits, p1, toric


logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

_LEVELS = (logging.WARNING, logging.INFO, logging.DEBUG)


def cmd_verify(args) -> Tuple[dict, bool]:
    """ Identities and geometry checks of the family ``(n, m)``. """
    spec = family.FamilySpec(args.n, args.m)
    checks = family.process(spec)
    if args.mutate:
        checks.update(family.verify_identities(spec, mutate=True))
    passed = bool(checks.all())
    logger.info('verify %s: %s', spec.name, 'pass' if passed else 'FAIL')
    return ({'n': args.n, 'm': args.m,
             'identity': 'pass' if passed else 'fail',
             'checks': {key: bool(value) for key, value in checks.items()},
             'passed': passed}, passed)


def _witnesses(n: int, points: list, classes: List[List[int]]) -> dict:
    found = {}
    for members in classes:
        first = members[0]
        if not classifier.moduli_invariant(n, points[first]).support:
            continue
        for other in members[1:]:
            key = '{},{}'.format(first, other)
            found[key] = classifier.witness_e(n, points[first],
                                              points[other])
    return found


def cmd_classify(args) -> Tuple[dict, bool]:
    """ Pairwise isomorphism of the fibres listed in ``--points``. """
    points = io.parse_points(io.load_payload(args.points))
    report = {'n': args.n, 'points': [list(p) for p in points]}
    if not points:
        report.update(matrix=[], classes=[], invariants=[], witnesses={})
        return report, True
    matrix, table = classifier.pairwise_matrix(args.n, points)
    classes = classifier.classes(table)
    invariants = []
    for point, label in zip(points, table[classifier.Columns.CLASS]):
        invariant = classifier.moduli_invariant(args.n, point)
        invariants.append({
            'support': list(invariant.support),
            'anchor': invariant.anchor,
            'ratios': {str(j): str(rho) for j, rho in invariant.ratios},
            'class': int(label),
        })
    report.update(
        matrix=matrix.tolist(),
        classes=classes,
        invariants=invariants,
        witnesses=_witnesses(args.n, points, classes),
    )
    logger.info('classify n=%d: %d points, %d classes',
                args.n, len(points), len(classes))
    return report, True


def cmd_resolve(args) -> Tuple[dict, bool]:
    """ Minimal resolution of :math:`Y_n` and its chain. """
    if args.n < 0:
        raise ValueError('Surface index must be nonnegative.')
    series = toric.process(args.n)
    report = {'n': args.n}
    report.update({key: value for key, value in series.items()})
    return report, bool(series[toric.Columns.VERIFIED])


def cmd_p1(args) -> Tuple[dict, bool]:
    """ Orbit and fibre of a point, or the Lorentz matrix of an element
    of :math:`\\mathrm{SL}_2`. """
    if args.point is not None:
        series = p1.process(io.parse_point(args.point))
        return {key: value for key, value in series.items()}, True
    series = p1.lorentz_report(io.parse_matrix(args.matrix))
    passed = bool(series[p1.Columns.PRESERVES_Q0]
                  and series[p1.Columns.DET_ONE])
    return {key: value for key, value in series.items()}, passed


def cmd_orbit_sample(args) -> Tuple[dict, bool]:
    """ Random cocycles, twisted conjugations and coboundaries. """
    seed = sampling.DEFAULT_SEED if args.seed is None else args.seed
    table = orbits.orbit_sample(args.n, args.count, seed)
    report = {'n': args.n, 'seed': seed}
    report.update(orbits.summary(table))
    return report, report['passed']


def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('-v', '--verbose', action='count', default=0,
                        help='more logging, repeat for debug output')
    common.add_argument('--out', metavar='PATH',
                        help='write the JSON report here')

    parser = argparse.ArgumentParser(
        prog='realforms',
        description='Exact checks of relative real forms of toric '
                    'surfaces.')
    parser.add_argument('--version', action='version',
                        version='%(prog)s ' + __version__)
    commands = parser.add_subparsers(dest='command', metavar='COMMAND')
    commands.required = True

    verify = commands.add_parser('verify', parents=[common],
                                 help='check the family identities')
    verify.add_argument('--n', type=int, required=True)
    verify.add_argument('--m', type=int, required=True)
    verify.add_argument('--mutate', action='store_true',
                        help=argparse.SUPPRESS)
    verify.set_defaults(handler=cmd_verify)

    classify = commands.add_parser('classify', parents=[common],
                                   help='classify fibres up to isomorphism')
    classify.add_argument('--n', type=int, required=True)
    classify.add_argument('--points', required=True,
                          help='inline JSON or path of a JSON file')
    classify.set_defaults(handler=cmd_classify)

    resolve = commands.add_parser('resolve', parents=[common],
                                  help='resolve the toric model of Y_n')
    resolve.add_argument('--n', type=int, required=True)
    resolve.set_defaults(handler=cmd_resolve)

    p1_parser = commands.add_parser('p1', parents=[common],
                                    help='real forms of the projective line')
    source = p1_parser.add_mutually_exclusive_group(required=True)
    source.add_argument('--point', help='x,y,z,t or a JSON array')
    source.add_argument('--matrix', help='"id", inline JSON or a path')
    p1_parser.set_defaults(handler=cmd_p1)

    sample = commands.add_parser('orbit-sample', parents=[common],
                                 help='sample cocycles and coboundaries')
    sample.add_argument('--n', type=int, required=True)
    sample.add_argument('--count', type=int, default=20)
    sample.add_argument('--seed', type=int, default=None)
    sample.set_defaults(handler=cmd_orbit_sample)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """ Entry point of the ``realforms`` command.

    :param argv: Arguments, defaults to :data:`sys.argv`
    :type argv: list[str], optional
    :return: Exit code
    :rtype: int
    """
    try:
        args = _parser().parse_args(argv)
    except SystemExit as exit_:
        return exit_.code
    logging.basicConfig(
        level=_LEVELS[min(args.verbose, len(_LEVELS) - 1)],
        format='%(levelname)s %(name)s: %(message)s', force=True)

    handler: Callable = args.handler
    try:
        report, passed = handler(args)
    except ValueError as error:  # SchemaError included
        logger.error('%s', error)
        return EXIT_USAGE
    text = io.write_report(report, args.out)
    if args.out is None:
        print(text)
    if not passed:
        logger.warning('%s: verification failed.', args.command)
        return EXIT_FAILED
    return EXIT_OK


if __name__ == '__main__':
    sys.exit(main())
